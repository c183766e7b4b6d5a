#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlrc/designs.hpp"
#include "qlrc/lincode.hpp"

namespace qlrc {

struct LocalityWitness {
    int coordinate = 0;
    std::vector<int> support;
    std::vector<uint32_t> word;  // a dual codeword covering the coordinate
};

struct LocalityCertificate {
    std::optional<int> r;  // empty: some coordinate lies in no dual support
    std::vector<LocalityWitness> witnesses;
    int lower_bound = 0;  // d(C^perp) - 1
    bool exact = true;
};

// Smallest r such that every coordinate lies in the support of a dual codeword
// of weight <= r+1, with one witness per coordinate. Uses the construction's
// minimum-weight structure when it covers everything, full dual enumeration
// otherwise.
LocalityCertificate locality_exact(const LinearCode& c, const Budget& budget = {});

// min(Singleton, Griesmer) upper bound on the largest dimension of a q-ary
// [n, k, >= d] linear code.
int kopt_upper(int n, int d, uint64_t q);

struct BoundValue {
    bool vacuous = false;
    BigInt rhs = 0;
    bool met = false;    // parameters achieve equality
    BigInt slack = 0;    // distance from equality, >= 0 when the bound holds
    bool holds = true;
};

struct ClrcBoundReport {
    BoundValue griesmer;   // n >= rhs
    BoundValue cm;         // k <= rhs, rhs computed with kopt_upper
    bool cm_relaxed = true;
    BoundValue singleton;  // d <= rhs
    BoundValue plotkin;    // d <= rhs (floor of the exact minimum)
    BigRat plotkin_exact = 0;

    bool all_met() const {
        return (griesmer.vacuous || griesmer.met) && cm.met && singleton.met &&
               (plotkin.vacuous || plotkin.met);
    }
};

ClrcBoundReport clrc_bounds(int n, int k, int d, uint64_t q, int r);

struct OptimalClrcCertificate {
    int n = 0, k = 0, d = 0;
    uint64_t q = 0;
    int r = 0;
    bool nmds = false;
    bool one_design_ok = false;
    bool locality_matches = false;  // r == k-1
    ClrcBoundReport bounds;
    DesignCertificate one_design;
    LocalityCertificate locality;
    std::vector<std::string> failures;

    bool certified() const { return failures.empty(); }
};

// Certifies the optimal-cLRC claim for an NMDS code whose dual minimum-weight
// supports form a 1-design: locality k-1 and equality in all four bounds.
OptimalClrcCertificate certify_optimal_clrc(const LinearCode& c, const Budget& budget = {});

}  // namespace qlrc
