#include "qlrc/matrix.hpp"

#include <algorithm>

namespace qlrc {

Matrix::Matrix(const Field& f, int rows, int cols, std::vector<uint32_t> entries)
    : f_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw ParameterError("matrix entry count does not match dimensions");
    for (uint32_t v : a_)
        if (v >= f.size()) throw ParameterError("matrix entry out of field range");
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void row_axpy(const Field& f, uint32_t c, const uint32_t* x, uint32_t* y, int n) {
    if (c == 0) return;
    if (c == 1) {
        for (int j = 0; j < n; ++j) y[j] ^= x[j];
        return;
    }
    for (int j = 0; j < n; ++j) y[j] ^= f.mul(c, x[j]);
}

Matrix Matrix::mul(const Matrix& other) const {
    if (f_ != other.f_) throw FieldMismatch("matrix product across fields");
    if (cols_ != other.rows_) throw ParameterError("matrix product dimension mismatch");
    Matrix out(*f_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l)
            row_axpy(*f_, at(i, l), other.row(l), out.row(i), other.cols_);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(*f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::frobenius_map() const {
    Matrix out = *this;
    for (auto& v : out.a_) v = f_->frobenius(v);
    return out;
}

Matrix Matrix::stack(const Matrix& below) const {
    if (f_ != below.f_ || cols_ != below.cols_)
        throw ParameterError("stack needs matching fields and widths");
    Matrix out(*f_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + a_.size());
    return out;
}

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
    Matrix out(*f_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return out;
}

Matrix Matrix::drop_columns(const std::vector<int>& idx) const {
    std::vector<char> drop(cols_, 0);
    for (int j : idx) drop[j] = 1;
    std::vector<int> keep;
    for (int j = 0; j < cols_; ++j)
        if (!drop[j]) keep.push_back(j);
    return select_columns(keep);
}

int Matrix::rref(std::vector<int>* pivots, bool drop_zero_rows) {
    if (pivots) pivots->clear();
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            std::swap_ranges(row(piv), row(piv) + cols_, row(r));
        uint32_t s = f_->inv(at(r, col));
        if (s != 1)
            for (int j = col; j < cols_; ++j) at(r, j) = f_->mul(s, at(r, j));
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t c = at(i, col);
            if (c) row_axpy(*f_, c, row(r), row(i), cols_);
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    if (drop_zero_rows && r < rows_) {
        a_.resize(static_cast<size_t>(r) * cols_);
        rows_ = r;
    }
    return r;
}

int Matrix::rank() const {
    Matrix tmp = *this;
    return tmp.rref();
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

Matrix Matrix::nullspace() const {
    Matrix red = *this;
    std::vector<int> pivots;
    int r = red.rref(&pivots);
    std::vector<char> is_pivot(cols_, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix ker(*f_, static_cast<int>(free_cols.size()), cols_);
    for (size_t fj = 0; fj < free_cols.size(); ++fj) {
        int fc = free_cols[fj];
        ker.at(static_cast<int>(fj), fc) = 1;
        // char 2: the negation of the reduced column is itself
        for (int i = 0; i < r; ++i) ker.at(static_cast<int>(fj), pivots[i]) = red.at(i, fc);
    }
    return ker;
}

bool row_space_contains(const Matrix& sup, const Matrix& sub) {
    if (sup.cols() != sub.cols()) throw ParameterError("row_space_contains width mismatch");
    int rs = sup.rank();
    return sup.stack(sub).rank() == rs;
}

}  // namespace qlrc
