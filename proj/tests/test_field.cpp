#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "qlrc/gf.hpp"

using namespace qlrc;

TEST_CASE("shipped moduli build fields of every degree up to 16") {
    for (int e = 1; e <= 16; ++e) {
        const Field& f = Field::gf(e);
        CHECK(f.degree() == e);
        CHECK(f.size() == (1u << e));
        // generator really has full multiplicative order
        std::set<uint32_t> seen;
        uint32_t x = 1;
        for (uint32_t i = 0; i < f.order(); ++i) {
            seen.insert(x);
            x = f.mul(x, f.generator());
        }
        CHECK(x == 1);
        CHECK(seen.size() == f.order());
    }
}

TEST_CASE("pinned default moduli") {
    CHECK(Field::gf(3).modulus() == 0xB);
    CHECK(Field::gf(4).modulus() == 0x13);
    CHECK(Field::gf(6).modulus() == 0x43);
    CHECK(Field::gf(8).modulus() == 0x11D);
    CHECK(Field::gf(10).modulus() == 0x409);
    CHECK(Field::gf(12).modulus() == 0x1009);
}

TEST_CASE("reducible moduli are rejected") {
    CHECK_THROWS_AS(Field::gf(4, 0x11), ParameterError);  // x^4+1 = (x+1)^4
    CHECK_THROWS_AS(Field::gf(3, 0x9), ParameterError);   // x^3+1 = (x+1)(x^2+x+1)
    CHECK_THROWS_AS(Field::gf(2, 0x5), ParameterError);   // x^2+1 = (x+1)^2
}

TEST_CASE("GF(8) pinned arithmetic") {
    const Field& f = Field::gf(3);
    // schoolbook: (x)(x^2+x) = x^3+x^2 = (x+1)+x^2 mod x^3+x+1 -> 0x7
    CHECK(f.mul(0x2, 0x6) == 0x7);
    CHECK(f.inv(0x2) == 0x5);
    CHECK(f.mul(0x2, 0x5) == 1);
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    for (uint32_t a = 0; a < 8; ++a) {
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
    }
}

TEST_CASE("field laws hold exhaustively for e <= 8") {
    for (int e = 1; e <= 8; ++e) {
        const Field& f = Field::gf(e);
        uint32_t n = f.size();
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (uint32_t c = 0; c < n; ++c) {
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) {
                        FAIL("associativity broke");
                    }
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) {
                        FAIL("distributivity broke");
                    }
                }
            }
    }
}

TEST_CASE("frobenius is an order-2 ring automorphism fixing the subfield") {
    for (int e : {4, 6, 8}) {
        const Field& f = Field::gf(e);
        REQUIRE(f.has_tower());
        for (uint32_t x = 0; x < f.size(); ++x) {
            CHECK(f.frobenius(f.frobenius(x)) == x);
            for (uint32_t y = 0; y < f.size(); ++y) {
                if (f.frobenius(f.add(x, y)) != f.add(f.frobenius(x), f.frobenius(y)))
                    FAIL("additivity broke");
                if (f.frobenius(f.mul(x, y)) != f.mul(f.frobenius(x), f.frobenius(y)))
                    FAIL("multiplicativity broke");
            }
        }
    }
    // larger tower fields: randomized pairs
    std::mt19937_64 rng(7);
    for (int e : {10, 12}) {
        const Field& f = Field::gf(e);
        for (int trial = 0; trial < 20000; ++trial) {
            uint32_t x = static_cast<uint32_t>(rng() % f.size());
            uint32_t y = static_cast<uint32_t>(rng() % f.size());
            CHECK(f.frobenius(f.frobenius(x)) == x);
            CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
            CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
        }
    }
}

TEST_CASE("frobenius needs a tower mark") {
    CHECK_THROWS_AS(Field::gf(3).frobenius(1), NonTowerField);
    CHECK_THROWS_AS(Field::gf(5).norm(1), NonTowerField);
}

TEST_CASE("frobenius of the generator is its q-th power") {
    const Field& f = Field::gf(6);
    uint32_t g = f.generator();
    CHECK(f.frobenius(g) == f.pow(g, 8));
}

TEST_CASE("norm maps onto the subfield with q+1 preimages each") {
    const Field& f = Field::gf(6);  // GF(64) over GF(8)
    CHECK(f.norm(0) == 0);
    CHECK(f.norm(1) == 1);
    std::map<uint32_t, int> pre;
    for (uint32_t x = 1; x < f.size(); ++x) {
        uint32_t z = f.norm(x);
        CHECK(f.in_subfield(z));
        ++pre[z];
    }
    CHECK(pre.size() == 7);  // GF(8)^*
    for (const auto& [z, count] : pre) CHECK(count == 9);  // q+1 = 9
    // norm is multiplicative
    for (uint32_t x = 0; x < f.size(); ++x)
        for (uint32_t y = 0; y < f.size(); y += 3)
            CHECK(f.norm(f.mul(x, y)) == f.mul(f.norm(x), f.norm(y)));
}

TEST_CASE("norm preimages are minimal and verified") {
    const Field& f = Field::gf(8);  // GF(256) over GF(16)
    for (uint32_t z = 1; z < f.size(); ++z) {
        if (!f.in_subfield(z)) continue;
        uint32_t v = f.norm_preimage_min(z);
        CHECK(f.norm(v) == z);
        for (uint32_t w = 1; w < v; ++w)
            if (f.norm(w) == z) FAIL("a smaller preimage exists");
    }
}

TEST_CASE("subfield embedding is a field isomorphism onto the fixed field") {
    for (int e : {2, 4, 6, 8, 10, 12}) {
        const Field& f = Field::gf(e);
        SubfieldEmbedding emb = subfield_image(f);
        int m = f.base_degree();
        CHECK(emb.image.size() == (1u << m));
        CHECK(emb.embed(0) == 0);
        CHECK(emb.embed(1) == 1);
        const Field& base = *emb.base;
        for (uint32_t a = 0; a < base.size(); ++a) {
            CHECK(f.in_subfield(emb.embed(a)));
            for (uint32_t b = 0; b < base.size(); ++b) {
                if (emb.embed(base.add(a, b)) != f.add(emb.embed(a), emb.embed(b)))
                    FAIL("embedding breaks addition");
                if (emb.embed(base.mul(a, b)) != f.mul(emb.embed(a), emb.embed(b)))
                    FAIL("embedding breaks multiplication");
            }
        }
    }
    // GF(4)/GF(2): the image is just {0, 1}
    SubfieldEmbedding tiny = subfield_image(Field::gf(2));
    CHECK(tiny.image == std::vector<uint32_t>({0, 1}));
}

TEST_CASE("Felt wrappers check field agreement") {
    const Field& f8 = Field::gf(3);
    const Field& f16 = Field::gf(4);
    Felt a(3, f8), b(5, f8), c(3, f16);
    CHECK((a * b).v == f8.mul(3, 5));
    CHECK((a + b).v == 6);
    CHECK_THROWS_AS(a * c, FieldMismatch);
    CHECK_THROWS_AS(Felt(9, f8), ParameterError);
}
