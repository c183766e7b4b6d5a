#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlrc/exact.hpp"
#include "qlrc/matrix.hpp"

namespace qlrc {

// Enumeration budget: cap bounds the number of codeword evaluations a brute
// force is allowed; threads > 1 parallelizes enumeration with results
// identical to the sequential run.
struct Budget {
    uint64_t cap = 1ull << 24;
    int threads = 1;
};

// Construction data carried by codes built from evaluation points. It is what
// lets min-weight structure be derived combinatorially instead of enumerated.
struct Provenance {
    enum class Family { hz, grs };
    enum class SetKind { additive_subgroup, subfield_star, custom };

    Family family = Family::hz;
    std::vector<uint32_t> points;
    std::vector<uint32_t> mult;
    int k = 0;                // HZ k / GRS dimension
    bool dual_side = false;   // code is the dual of the constructed one
    bool conjugated = false;  // coordinatewise x -> x^q applied on top
    SetKind kind = SetKind::custom;
    int m1 = 0;  // when kind == additive_subgroup
    int m2 = 0;  // when kind == subfield_star
};

struct WeightDistribution {
    std::vector<BigInt> counts;  // A_0..A_n

    int n() const { return static_cast<int>(counts.size()) - 1; }
    BigInt total() const;
    int min_weight() const;  // smallest i > 0 with A_i > 0; throws if none
};

class LinearCode {
public:
    LinearCode(const Field& f, Matrix generator);  // rows reduced to unique RREF

    static LinearCode zero_code(const Field& f, int n);
    static LinearCode full_space(const Field& f, int n);
    static LinearCode repetition(const Field& f, int n);

    const Field& field() const { return *f_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const Matrix& generator() const { return gen_; }

    LinearCode dual() const;
    LinearCode hermitian_dual() const;

    bool contains_code(const LinearCode& sub) const;
    bool contains_word(const std::vector<uint32_t>& w) const;
    bool is_hermitian_self_orthogonal() const;

    int min_distance(const Budget& budget = {}) const;
    WeightDistribution weight_distribution(const Budget& budget = {}) const;
    bool is_nmds(const Budget& budget = {}) const;

    std::optional<Provenance> provenance;

private:
    struct DistanceCache;

    const Field* f_;
    Matrix gen_;
    int n_, k_;
    std::shared_ptr<DistanceCache> cache_;  // copies of one code share it
};

// MacWilliams transform: weight distribution of the dual of a code with the
// given distribution, dimension dim(C) = k over GF(q), length n.
WeightDistribution macwilliams_transform(const WeightDistribution& w, int n, int k, uint64_t q);

// Closed-form distributions of an [n,k,n-k]_q NMDS code and its dual from the
// minimum-weight count A_min = A_{n-k} = A^perp_k. Throws ParameterError on a
// negative intermediate count.
std::pair<WeightDistribution, WeightDistribution> nmds_weight_distribution(
    int n, int k, uint64_t q, const BigInt& A_min);

// One minimum-weight codeword per scalar class.
struct MinWeightWord {
    std::vector<int> support;    // ascending, 0-based coordinates
    std::vector<uint32_t> word;  // full-length representative, first nonzero = 1
};

// Minimum-weight codeword classes of the dual of an HZ code, derived from its
// construction data: supports are exactly the k-subsets of coordinates whose
// evaluation points sum to zero. Requires primal-side HZ provenance.
std::vector<MinWeightWord> min_weight_dual_codewords(const LinearCode& hz);

// Minimum-weight codeword classes of the code itself, via provenance when
// available (either side of an HZ construction), else by enumeration.
std::vector<MinWeightWord> min_weight_classes(const LinearCode& c, const Budget& budget = {});

// Enumerates one codeword per scalar class (first nonzero message symbol
// fixed to 1); visit receives the codeword buffer and its Hamming weight.
void enumerate_projective(const Matrix& gen,
                          const std::function<void(const uint32_t*, int)>& visit);

// Histogram of codeword weights over projective classes, scaled back up by
// q-1 and with A_0 = 1 added; parallelizes per budget.threads.
WeightDistribution enumerate_weight_distribution(const Matrix& gen, const Budget& budget);

}  // namespace qlrc
