#pragma once

#include <vector>

#include "qlrc/lincode.hpp"

namespace qlrc {

// Uniform-size block multiset over points {0..n_points-1}. Blocks are sorted
// index lists and the list itself is sorted, so two runs produce identical
// certificates.
struct BlockSystem {
    int n_points = 0;
    int w = 0;  // block size
    std::vector<std::vector<int>> blocks;
    bool multiplicity_ok = true;  // each support arose q-1 times among codewords
};

struct DesignCertificate {
    int t = 0, n = 0, w = 0;
    BigInt lambda = 0;
    BigInt b = 0;  // block count
    bool verified = false;
    bool multiplicity_check = true;
};

// Supports of minimum-weight codewords with multiplicities divided by q-1.
BlockSystem blocks_from_min_weight(const LinearCode& c, const Budget& budget = {});

// Exhaustive coverage count of every t-subset; verified iff all counts agree.
// Requires C(n_points, t) <= 1e8.
DesignCertificate verify_t_design(const BlockSystem& b, int t);

// Parameters of the complement system: t-(n, n-w, lambda * C(n-t,w)/C(n-t,w-t)).
DesignCertificate complementary_design(const DesignCertificate& cert);

// The complement system itself, for direct re-verification.
BlockSystem complement_blocks(const BlockSystem& b);

// lambda = A_w * C(w,t) / ((q-1) * C(n,t)), exact.
BigRat predicted_lambda(const BigInt& A_w, int n, int w, int t, uint64_t q);

// lambda_s of the s-design a t-design induces, s <= t.
BigRat lambda_downward(const BigRat& lambda_t, int t, int s, int n, int w);

}  // namespace qlrc
