#include <doctest.h>

#include <random>

#include "qlrc/constructions.hpp"

using namespace qlrc;

TEST_CASE("additive subgroup builder spans in canonical order") {
    const Field& f = Field::gf(3);
    EvaluationSet full = additive_subgroup(f, {1, 2, 4});
    CHECK(full.points == std::vector<uint32_t>({0, 1, 2, 3, 4, 5, 6, 7}));
    EvaluationSet tiny = additive_subgroup(f, {1});
    CHECK(tiny.points == std::vector<uint32_t>({0, 1}));
    const Field& f64 = Field::gf(6);
    uint32_t g = f64.generator();
    EvaluationSet four = additive_subgroup(f64, {1, g});
    CHECK(four.points == std::vector<uint32_t>({0, 1, g, 1u ^ g}));
    CHECK_THROWS_AS(additive_subgroup(f, {1, 2, 3}), ParameterError);  // dependent
}

TEST_CASE("subfield star builder") {
    const Field& f16 = Field::gf(4);
    EvaluationSet s = subfield_star(f16, 4);
    CHECK(s.points.size() == 15);
    const Field& f256 = Field::gf(8);
    EvaluationSet emb = subfield_star(f256, 4);
    CHECK(emb.points.size() == 15);
    for (uint32_t x : emb.points) CHECK(f256.pow(x, 16) == x);
    CHECK_THROWS_AS(subfield_star(f256, 3), ParameterError);
}

TEST_CASE("HZ generator shape, rank, and range checks") {
    const Field& f = Field::gf(3);
    EvaluationSet s = additive_subgroup(f, {1, 2, 4});
    LinearCode hz = hz_generator(s, MultiplierVector::ones(8), 4);
    CHECK(hz.k() == 4);
    CHECK(hz.n() == 8);
    CHECK_THROWS_AS(hz_generator(s, MultiplierVector::ones(8), 1), ParameterError);
    CHECK_THROWS_AS(hz_generator(s, MultiplierVector::ones(8), 8), ParameterError);
    CHECK_THROWS_AS(hz_generator(s, MultiplierVector{std::vector<uint32_t>(8, 0)}, 4),
                    ParameterError);
    // raw rank is k for any distinct points and any k in range
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 2 + static_cast<int>(rng() % 6);
        MultiplierVector v;
        for (int i = 0; i < 8; ++i)
            v.values.push_back(1 + static_cast<uint32_t>(rng() % 7));
        CHECK(hz_generator(s, v, k).k() == k);
    }
}

TEST_CASE("GRS generator is MDS and full-dim edge case works") {
    const Field& f = Field::gf(4);
    EvaluationSet s = subfield_star(f, 4);
    LinearCode grs = grs_generator(s, MultiplierVector::ones(15), 15);
    CHECK(grs.k() == 15);  // dim = n: the full space
    LinearCode small = grs_generator(s, MultiplierVector::ones(15), 3);
    CHECK(small.min_distance() == 13);  // n - dim + 1
}

TEST_CASE("GRS over 16 points of GF(256) has distance 12 by the minor criterion") {
    // 256^5 codewords are beyond brute force; MDS is equivalent to every
    // maximal minor of the generator being nonsingular, which is exhaustive
    // over C(16,5) supports. Singleton then pins d = n - k + 1 = 12.
    const Field& f = Field::gf(8);
    SubfieldEmbedding embd = subfield_image(f);
    std::vector<uint32_t> basis;
    for (int i = 0; i < 4; ++i) basis.push_back(embd.embed(1u << i));
    EvaluationSet s = additive_subgroup(f, basis);
    LinearCode grs = grs_generator(s, MultiplierVector::ones(16), 5);
    std::vector<int> idx(5);
    for (idx[0] = 0; idx[0] < 16; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < 16; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < 16; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < 16; ++idx[3])
                    for (idx[4] = idx[3] + 1; idx[4] < 16; ++idx[4])
                        if (grs.generator().select_columns(idx).rank() != 5)
                            FAIL("singular maximal minor: not MDS");
    // spot check: random codewords reach weight >= 12
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<uint32_t> w(16, 0);
        bool nz = false;
        for (int r = 0; r < 5; ++r) {
            uint32_t c = static_cast<uint32_t>(rng() % 256);
            nz = nz || c;
            row_axpy(f, c, grs.generator().row(r), w.data(), 16);
        }
        if (!nz) continue;
        int wt = 0;
        for (uint32_t v : w) wt += v != 0;
        CHECK(wt >= 12);
    }
}

TEST_CASE("HZ nests inside GRS of one higher dimension") {
    std::mt19937_64 rng(9);
    const Field& f = Field::gf(4);
    EvaluationSet s = subfield_star(f, 4);
    for (int trial = 0; trial < 10; ++trial) {
        int k = 2 + static_cast<int>(rng() % 10);
        MultiplierVector v;
        for (int i = 0; i < 15; ++i)
            v.values.push_back(1 + static_cast<uint32_t>(rng() % 15));
        LinearCode hz = hz_generator(s, v, k);
        LinearCode grs = grs_generator(s, v, k + 1);
        CHECK(row_space_contains(grs.generator(), hz.generator()));
    }
}

TEST_CASE("multiplier solver: embedded GF(16) in GF(256), dim 5") {
    const Field& f = Field::gf(8);
    SubfieldEmbedding embd = subfield_image(f);
    std::vector<uint32_t> basis;
    for (int i = 0; i < 4; ++i) basis.push_back(embd.embed(1u << i));
    EvaluationSet s = additive_subgroup(f, basis);
    SolverResult sol = solve_hermitian_multipliers(s, 5);
    CHECK(sol.v.values.size() == 16);
    LinearCode grs = grs_generator(s, sol.v, 5);
    CHECK(grs.is_hermitian_self_orthogonal());
    // the lift really inverts the norm map
    for (size_t i = 0; i < sol.v.values.size(); ++i)
        CHECK(f.norm(sol.v.values[i]) == sol.norms[i]);
}

TEST_CASE("multiplier solver obstructions") {
    const Field& f = Field::gf(8);
    EvaluationSet s = subfield_star(f, 4);
    CHECK_THROWS_AS(solve_hermitian_multipliers(s, 8), DimensionObstruction);  // 2*8 > 15
    const Field& odd = Field::gf(3);
    EvaluationSet so = additive_subgroup(odd, {1, 2, 4});
    CHECK_THROWS_AS(solve_hermitian_multipliers(so, 2), NonTowerField);
}

TEST_CASE("solver output makes the whole nesting chain dual-containing") {
    const Field& f = Field::gf(8);
    EvaluationSet s = subfield_star(f, 4);
    SolverResult sol = solve_hermitian_multipliers(s, 5);
    LinearCode hz = hz_generator(s, sol.v, 4);
    LinearCode grs = grs_generator(s, sol.v, 5);
    CHECK(grs.is_hermitian_self_orthogonal());
    CHECK(hz.is_hermitian_self_orthogonal());
    LinearCode c = hz.hermitian_dual();
    CHECK(c.contains_code(c.hermitian_dual()));  // dual-containing
}

TEST_CASE("solver determinism for a fixed seed") {
    const Field& f = Field::gf(8);
    EvaluationSet s = subfield_star(f, 4);
    SolverResult a = solve_hermitian_multipliers(s, 5, 0);
    SolverResult b = solve_hermitian_multipliers(s, 5, 0);
    CHECK(a.v.values == b.v.values);
    CHECK(a.trials == b.trials);
}
