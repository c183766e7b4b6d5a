#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlrc/constructions.hpp"
#include "qlrc/designs.hpp"
#include "qlrc/lrc_bounds.hpp"

namespace qlrc {

// delta is reported as an exact value only when purity was established; the
// construction otherwise guarantees delta >= d(C).
enum class Purity { pure, unknown };

struct PurityResult {
    Purity status = Purity::unknown;
    int delta = 0;       // valid when pure
    bool fast_path = false;  // d(C) < d(C^{perp_H}) sufficed
};

struct QlrcParams {
    int n = 0;
    int kappa = 0;
    int delta_lower = 0;  // d(C)
    uint64_t q = 0;       // base alphabet (code lives over GF(q^2))
    int r = 0;
    PurityResult purity;
};

struct QBoundValue {
    bool applicable = true;
    BigInt rhs = 0;
    bool met = false;
    bool holds = true;
};

struct QBoundReport {
    QBoundValue griesmer;        // n + kappa >= rhs, needs r < kappa
    QBoundValue cm;              // kappa <= rhs (relaxed k_opt)
    bool cm_relaxed = true;
    QBoundValue singleton;       // 2*delta <= rhs
    QBoundValue plotkin;         // 2*delta <= rhs (floor), needs r < kappa
    BigRat plotkin_exact = 0;
    QBoundValue pure_singleton;  // 2*delta <= rhs, applicable when pure
};

QBoundReport qlrc_bounds(int n, int kappa, int delta, uint64_t q, int r, bool pure);

// Hermitian construction: C over GF(q^2) with C^{perp_H} contained in C and
// d(C^{perp_H}) >= 2 gives an [[n, 2k-n, >= d(C)]]_q qLRC with C's locality.
QlrcParams hermitian_construct(const LinearCode& c, const Budget& budget = {});

PurityResult purity_probe(const LinearCode& c, const Budget& budget = {});

// Asymptotic rate bounds as exact rationals of the relative distance.
BigRat curve_griesmer(uint64_t q, int t, const BigRat& delta);
BigRat curve_cm(uint64_t q, int r, const BigRat& delta);
BigRat curve_singleton(int r, const BigRat& delta);
BigRat curve_plotkin(uint64_t q, int r, const BigRat& delta);

struct CurveSeries {
    std::string which;  // griesmer | cm | singleton | plotkin
    std::vector<std::pair<BigRat, BigRat>> samples;  // (delta, rate clipped at 0)
};

std::vector<CurveSeries> asymptotic_curves(uint64_t q, int r, int t,
                                           const std::vector<BigRat>& grid);

struct CrossoverReport {
    // Where the Griesmer-like and Singleton-like lines intersect.
    BigRat griesmer_vs_singleton = 0;
    // Griesmer vs Plotkin: either Plotkin dominates everywhere or the lines
    // cross at the reported threshold.
    bool plotkin_always_tighter = false;
    std::optional<BigRat> griesmer_vs_plotkin;
    // CM vs Griesmer: dominance holds wherever the CM line is nonnegative.
    bool cm_always_tighter = false;
    std::optional<BigRat> cm_vs_griesmer;
};

CrossoverReport crossover_report(uint64_t q, int r, int t);

struct FamilyInstance {
    FamilyInstance(LinearCode hz_code, LinearCode classical_code)
        : hz(std::move(hz_code)), classical(std::move(classical_code)) {}

    int family = 0;
    int m = 0, m1 = 0, m2 = 0, k = 0;
    QlrcParams params;
    QBoundReport bounds;
    LinearCode hz;         // HZ_k(S, v)
    LinearCode classical;  // C = HZ^{perp_H}
    SolverResult solver;
    DesignCertificate dual_design;  // 3-design (families 1-2) or 2-design (family 3)
    DesignCertificate one_design;   // induced 1-design backing the locality claim
    LocalityCertificate locality;
    bool singleton_optimal = false;       // equality in the Singleton-like bound
    bool pure_singleton_optimal = false;  // equality in the pure Singleton-like bound
};

// End-to-end pipeline for the three qLRC families. family 1: S an additive
// subgroup of GF(2^{2m}); family 2: S an additive subgroup of the embedded
// GF(2^m); family 3: S = GF(2^{m2})^*. m12 is m1 for families 1-2, m2 for 3.
FamilyInstance family_qlrc(int family, int m, int m12, int k, uint64_t seed = 0,
                           const Budget& budget = {});

// Explicit construction of the punctured code C'' behind the qLRC bounds:
// extend a basis of C^{perp_H} to C, keep the extension rows, delete the
// C^{perp_H} pivot columns. Structure is always checked; distance and
// locality checks run when the budget allows (exhaustively or by sampling).
struct ChainCheck {
    int length = 0, dim = 0;
    bool structure_ok = false;
    std::optional<bool> distance_ok;  // d'' >= delta
    std::optional<bool> locality_ok;  // r'' <= r
    uint64_t sampled_words = 0;       // nonzero C'' words spot-checked
};

ChainCheck theorem1_chain_check(const LinearCode& c, int delta_lower, int r,
                                const Budget& budget = {});

}  // namespace qlrc
