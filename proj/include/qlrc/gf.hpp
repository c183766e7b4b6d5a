#pragma once

#include <cstdint>
#include <vector>

#include "qlrc/errors.hpp"

namespace qlrc {

// GF(2^e) for 1 <= e <= 16, elements packed in the low e bits of a uint32_t
// (polynomial basis). Even-degree fields carry the quadratic tower mark
// GF(2^m) < GF(2^{2m}) with m = e/2, which enables frobenius/norm.
//
// Instances are immutable and interned: Field::gf() returns a reference that
// stays valid for the lifetime of the process, so codes and matrices can hold
// plain pointers.
class Field {
public:
    static const Field& gf(int degree);                    // shipped default modulus
    static const Field& gf(int degree, uint32_t modulus);  // explicit modulus
    static uint32_t default_modulus(int degree);

    int degree() const { return e_; }
    uint32_t modulus() const { return mod_; }
    uint32_t size() const { return size_; }    // 2^e
    uint32_t order() const { return order_; }  // 2^e - 1
    bool has_tower() const { return base_degree_ > 0; }
    int base_degree() const { return base_degree_; }  // m with e = 2m, or 0
    uint32_t generator() const { return gen_; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= order_) s -= order_;
        return exp_[s];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : order_ - l];
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    uint32_t pow(uint32_t a, uint64_t n) const;

    // Discrete log w.r.t. generator(); a must be nonzero.
    uint32_t log(uint32_t a) const {
        if (a == 0) throw DivisionByZero("log of zero");
        return log_[a];
    }
    uint32_t exp(uint64_t i) const { return exp_[i % order_]; }

    // x -> x^{2^m}, the order-2 automorphism of the tower.
    uint32_t frobenius(uint32_t x) const {
        require_tower();
        if (x == 0) return 0;
        return exp_[(static_cast<uint64_t>(log_[x]) << base_degree_) % order_];
    }

    // x -> x^{q+1} with q = 2^m; lands in the embedded subfield.
    uint32_t norm(uint32_t x) const {
        require_tower();
        if (x == 0) return 0;
        uint64_t q = 1u << base_degree_;
        return exp_[(static_cast<uint64_t>(log_[x]) * (q + 1)) % order_];
    }

    bool in_subfield(uint32_t x) const { return x == 0 || frobenius(x) == x; }

    // Smallest-bit-pattern v with norm(v) = z; z must be a nonzero subfield
    // element. There are exactly q+1 preimages.
    uint32_t norm_preimage_min(uint32_t z) const;

    // The 2^m elements fixed by frobenius, ascending by bit pattern.
    std::vector<uint32_t> frobenius_fixed_points() const;

private:
    Field(int e, uint32_t modulus);
    void require_tower() const {
        if (!has_tower()) throw NonTowerField("field has no tower mark");
    }

    int e_;
    uint32_t mod_, size_, order_, gen_;
    int base_degree_;
    std::vector<uint32_t> log_, exp_;
};

// One element with its field, for call sites where the pairing matters.
struct Felt {
    uint32_t v = 0;
    const Field* f = nullptr;

    Felt() = default;
    Felt(uint32_t value, const Field& field) : v(value), f(&field) {
        if (value >= field.size()) throw ParameterError("element out of field range");
    }

    friend Felt operator+(Felt a, Felt b) { return {a.check(b).add(a.v, b.v), *a.f}; }
    friend Felt operator*(Felt a, Felt b) { return {a.check(b).mul(a.v, b.v), *a.f}; }
    Felt inverse() const { return {f->inv(v), *f}; }
    friend bool operator==(Felt a, Felt b) { return a.f == b.f && a.v == b.v; }

    const Field& check(Felt other) const {
        if (f != other.f) throw FieldMismatch("elements from different fields");
        return *f;
    }
};

// Bijection between a standalone GF(2^m) and the fixed field of frobenius
// inside the tower field GF(2^{2m}).
struct SubfieldEmbedding {
    const Field* tower = nullptr;
    const Field* base = nullptr;
    std::vector<uint32_t> image;       // ascending by bit pattern
    std::vector<uint32_t> to_tower;    // indexed by base element
    std::vector<int32_t> from_tower;   // indexed by tower element, -1 off image

    uint32_t embed(uint32_t b) const { return to_tower[b]; }
    uint32_t project(uint32_t t) const {
        if (from_tower[t] < 0) throw ParameterError("element not in embedded subfield");
        return static_cast<uint32_t>(from_tower[t]);
    }
};

// Requires a tower mark and m <= 8.
SubfieldEmbedding subfield_image(const Field& tower);

}  // namespace qlrc
