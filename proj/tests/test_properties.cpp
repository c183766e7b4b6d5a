#include <doctest.h>

#include <random>

#include "qlrc/constructions.hpp"
#include "qlrc/designs.hpp"
#include "qlrc/subset_sum.hpp"

using namespace qlrc;

// Randomized cross-cutting invariants: 200 HZ instances over random subgroup
// evaluation sets with random multiplier vectors.
TEST_CASE("randomized HZ instances: duals, nesting, MacWilliams, A_{n-k} = A-perp_k") {
    std::mt19937_64 rng(20250810);
    int instances = 0;
    while (instances < 200) {
        // random tower field and subgroup rank keeping enumeration small
        static const int degrees[] = {4, 6};
        const Field& f = Field::gf(degrees[rng() % 2]);
        int m1 = 3 + static_cast<int>(rng() % 2);  // subgroup of size 8 or 16
        if ((1 << m1) > static_cast<int>(f.size())) continue;

        // random GF(2)-independent basis inside the field
        std::vector<uint32_t> basis;
        {
            std::vector<uint32_t> reduced;
            while (static_cast<int>(basis.size()) < m1) {
                uint32_t x = 1 + static_cast<uint32_t>(rng() % (f.size() - 1));
                uint32_t y = x;
                for (uint32_t b : reduced) y = std::min(y, y ^ b);
                if (y) {
                    reduced.push_back(y);
                    basis.push_back(x);
                }
            }
        }
        EvaluationSet s = additive_subgroup(f, basis);
        int n = s.n();
        int k = 3 + static_cast<int>(rng() % (n - 5));  // 3 <= k <= n-3
        MultiplierVector v;
        for (int i = 0; i < n; ++i)
            v.values.push_back(1 + static_cast<uint32_t>(rng() % (f.size() - 1)));

        LinearCode hz = hz_generator(s, v, k);
        ++instances;

        // dual involution
        CHECK(hz.dual().dual().generator() == hz.generator());
        // nesting in GRS_{k+1}
        CHECK(row_space_contains(grs_generator(s, v, k + 1).generator(), hz.generator()));
        // NMDS matches the subset-sum criterion (always NMDS in this range)
        CHECK(subset_sum_zero_exists(s.points, k, f));

        // frobenius ring-homomorphism spot checks
        for (int t = 0; t < 8; ++t) {
            uint32_t a = static_cast<uint32_t>(rng() % f.size());
            uint32_t b = static_cast<uint32_t>(rng() % f.size());
            CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
            CHECK(f.frobenius(a ^ b) == (f.frobenius(a) ^ f.frobenius(b)));
        }

        // A_{n-k} = A^perp_k, via one enumeration of the cheaper side plus
        // MacWilliams for the other
        uint64_t q = f.size();
        bool primal_cheap = k <= n - k;
        if (ipow(BigInt(q), static_cast<unsigned>(std::min(k, n - k))) > BigInt(1 << 22))
            continue;  // keep the suite fast; the instance still exercised above
        WeightDistribution wd = primal_cheap
                                    ? hz.weight_distribution()
                                    : macwilliams_transform(hz.dual().weight_distribution(),
                                                            n, n - k, q);
        WeightDistribution wdual = primal_cheap
                                       ? macwilliams_transform(wd, n, k, q)
                                       : hz.dual().weight_distribution();
        CHECK(wd.counts[n - k] == wdual.counts[k]);
        CHECK(wd.counts[n - k] > 0);
        // and the combinatorial count agrees
        BigInt via_subsets = BigInt(q - 1) *
                             count_additive_subgroup_size(k, true, s.points.size());
        CHECK(wdual.counts[k] == via_subsets);
    }
}

TEST_CASE("hermitian dual involution and dimension identity on random codes") {
    std::mt19937_64 rng(99);
    const Field& f = Field::gf(8);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        int k = 1 + static_cast<int>(rng() % n);
        Matrix g(f, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = static_cast<uint32_t>(rng() % f.size());
        if (g.rank() != k) continue;
        LinearCode c(f, std::move(g));
        CHECK(c.k() + c.hermitian_dual().k() == n);
        CHECK(c.hermitian_dual().hermitian_dual().generator() == c.generator());
    }
}

TEST_CASE("minimum-weight block systems stay consistent under complements") {
    std::mt19937_64 rng(7);
    const Field& f = Field::gf(4);
    EvaluationSet s = additive_subgroup(f, {1, 2, 4, 8});
    for (int trial = 0; trial < 6; ++trial) {
        int k = 4 + 2 * static_cast<int>(rng() % 5);  // even 4..12
        MultiplierVector v;
        for (int i = 0; i < 16; ++i)
            v.values.push_back(1 + static_cast<uint32_t>(rng() % 15));
        LinearCode hz = hz_generator(s, v, k);
        BlockSystem dual_blocks = blocks_from_min_weight(hz.dual());
        BlockSystem primal_blocks = blocks_from_min_weight(hz);
        CHECK(complement_blocks(dual_blocks).blocks == primal_blocks.blocks);
    }
}
