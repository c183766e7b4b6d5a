#pragma once

#include <initializer_list>
#include <vector>

#include "qlrc/gf.hpp"

namespace qlrc {

// Dense matrix over one Field, row-major raw element storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    Matrix(const Field& f, int rows, int cols, std::vector<uint32_t> entries);

    static Matrix identity(const Field& f, int n);

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const uint32_t* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }
    uint32_t* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }

    Matrix mul(const Matrix& other) const;
    Matrix transpose() const;
    // Entry-wise x -> x^q on a tower field.
    Matrix frobenius_map() const;
    Matrix stack(const Matrix& below) const;
    Matrix select_columns(const std::vector<int>& idx) const;
    Matrix drop_columns(const std::vector<int>& idx) const;

    // In-place reduced row echelon form; pivot ties break to the leftmost
    // column / topmost row. Returns rank; zero rows are removed when
    // drop_zero_rows is set.
    int rref(std::vector<int>* pivots = nullptr, bool drop_zero_rows = true);
    int rank() const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const {
        return f_ == other.f_ && rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

    // Right kernel, one basis row per free column, in free-column order.
    Matrix nullspace() const;

private:
    const Field* f_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

// y += c * x over the field, n entries.
void row_axpy(const Field& f, uint32_t c, const uint32_t* x, uint32_t* y, int n);

// True if every row of sub lies in the row space of sup (same length).
bool row_space_contains(const Matrix& sup, const Matrix& sub);

}  // namespace qlrc
