#pragma once

#include <functional>
#include <vector>

#include "qlrc/exact.hpp"
#include "qlrc/gf.hpp"

namespace qlrc {

// N(ell, b, F): the number of ell-element subsets of F summing to b. The
// brute-force routines are the ground truth the closed formulas are tested
// against; the closed formulas are what large instances run on.

struct SubsetSumQuery {
    int ell = 0;
    uint32_t b = 0;
    std::vector<uint32_t> elements;  // pairwise distinct
    const Field* field = nullptr;
};

// Exact count by revolving-door subset enumeration with incremental sums.
// Requires C(|F|, ell) <= 1e8.
BigInt count_bruteforce(const SubsetSumQuery& q);

// Visits every ell-subset of {0..|points|-1} whose point sum is zero, in
// revolving-door order; subsets are reported sorted ascending.
void enumerate_zero_sum_subsets(const std::vector<uint32_t>& points, int ell, const Field& f,
                                const std::function<void(const std::vector<int>&)>& visit);

enum class EvalSetKind { additive_subgroup, subfield_star, custom };

// Recognizes additive subgroups and full subfield star sets by closure tests.
EvalSetKind classify_eval_set(const std::vector<uint32_t>& points, const Field& f);

// Does some k-subset of points sum to zero? Closed formulas for recognized
// point sets, enumeration with early exit otherwise.
bool subset_sum_zero_exists(const std::vector<uint32_t>& points, int k, const Field& f);

// N(ell, b, A) for an additive subgroup A of a binary field (closed form).
// The count depends only on |A| and whether b = 0.
BigInt count_additive_subgroup_size(int ell, bool b_zero, uint64_t n);
// Checked wrapper: validates closure and b in A.
BigInt count_additive_subgroup(int ell, uint32_t b, const std::vector<uint32_t>& subgroup,
                               const Field& f);

// N(ell, b, GF(q)*), char 2, with the correction binomial C(q/2 - 1, floor(ell/2)).
// The as-printed variant C(q/2, floor(ell/2)) disagrees with brute force (it
// is not even integral on q=8, ell=3, b=0); see count_multiplicative_printed.
BigInt count_multiplicative(int ell, bool b_zero, uint64_t q);
// The uncorrected textbook form, returned as a rational so its failure to be
// an integer can be observed. Kept for the arbitration test only.
BigRat count_multiplicative_printed(int ell, bool b_zero, uint64_t q);

// Triple alternating sum reducing N(k-3, x1+x2+x3, A \ {x1,x2,x3}) to counts
// over the full subgroup A. Anchors must be distinct elements of A.
BigInt inclusion_exclusion3(int k, uint32_t x1, uint32_t x2, uint32_t x3,
                            const std::vector<uint32_t>& subgroup, const Field& f);

// Parity case of one (i,j,z) term for even k, following the eight-row case
// table: e counts the even indices, and the target collapses in char 2.
enum class TargetKind { zero, x1, x2, x3, x1_x2, x1_x3, x2_x3, x1_x2_x3 };
struct ParityCase {
    int e;                 // number of even values among i,j,z
    bool ijz_sum_odd;      // parity of i+j+z
    bool remainder_odd;    // parity of k-3-i-j-z
    TargetKind target;     // (z+1)x1 + (j+1)x2 + (i+1)x3 reduced mod 2
    bool target_nonzero;   // known nonzero for distinct anchors
};
ParityCase parity_case(int k, int i, int j, int z);

// One term of the 3-design coefficient sum, as an exact rational with
// denominator dividing 2^{m1}.
BigRat delta1_term(int k, int i, int j, int z, uint64_t n);
// One term of the 2-design coefficient sum, denominator dividing 2^{m2}.
BigRat delta2_term(int k, int i, int j, uint64_t q);

// Design coefficients: lambda of the 3-design supported by the dual of an HZ
// code on a size-2^{m1} additive subgroup (even k), and of the 2-design on
// GF(2^{m2})^* (any k in range). Exact; throws if the sum is not an integer.
BigInt lambda1_perp(int m, int m1, int k);
BigInt lambda2_perp(int m, int m2, int k);

}  // namespace qlrc
