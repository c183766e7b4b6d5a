#pragma once

#include <cstdint>
#include <vector>

#include "qlrc/lincode.hpp"

namespace qlrc {

// Ordered evaluation-point set; the order fixes coordinate labels, so every
// certificate that names coordinates is reproducible byte for byte.
struct EvaluationSet {
    const Field* field = nullptr;
    std::vector<uint32_t> points;
    Provenance::SetKind kind = Provenance::SetKind::custom;
    int m1 = 0;  // additive subgroup: |points| = 2^{m1}
    int m2 = 0;  // subfield star: |points| = 2^{m2} - 1

    int n() const { return static_cast<int>(points.size()); }
};

// GF(2)-span of an independent basis, ordered lexicographically by the bit
// pattern of the GF(2) coordinate vector.
EvaluationSet additive_subgroup(const Field& f, const std::vector<uint32_t>& basis);

// Nonzero elements of the embedded GF(2^{m2}), ordered by generator powers.
// m2 must divide the base degree of a tower field (or the full degree of a
// plain field).
EvaluationSet subfield_star(const Field& f, int m2);

EvaluationSet custom_set(const Field& f, std::vector<uint32_t> points);

struct MultiplierVector {
    std::vector<uint32_t> values;  // all nonzero

    static MultiplierVector ones(int n) { return {std::vector<uint32_t>(n, 1u)}; }
};

// HZ_k(S, v): monomial rows of degrees 0..k-2 and k (degree k-1 skipped),
// columns scaled by v. Returned in RREF with provenance attached.
LinearCode hz_generator(const EvaluationSet& s, const MultiplierVector& v, int k);

// GRS_dim(S, v): monomial rows of degrees 0..dim-1 scaled by v.
LinearCode grs_generator(const EvaluationSet& s, const MultiplierVector& v, int dim);

struct SolverResult {
    MultiplierVector v;
    std::vector<uint32_t> norms;  // z_i = v_i^{q+1}, the solved unknowns
    uint64_t seed = 0;
    bool exhaustive = false;
    uint64_t trials = 0;  // randomized draws used (0 when exhaustive)
};

// Finds v making GRS_dim(S, v) Hermitian self-orthogonal: solves the moment
// system over the norms z_i = v_i^{q+1} in the embedded subfield, searches the
// solution space for an all-nonzero vector, lifts through norm preimages, and
// verifies the result before returning.
SolverResult solve_hermitian_multipliers(const EvaluationSet& s, int dim, uint64_t seed = 0,
                                         uint64_t max_trials = 1'000'000);

}  // namespace qlrc
