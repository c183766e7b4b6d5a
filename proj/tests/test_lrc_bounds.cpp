#include <doctest.h>

#include "qlrc/constructions.hpp"
#include "qlrc/lrc_bounds.hpp"

using namespace qlrc;

namespace {

LinearCode hz8() {
    const Field& f = Field::gf(3);
    return hz_generator(additive_subgroup(f, {1, 2, 4}), MultiplierVector::ones(8), 4);
}

LinearCode hz15(int k) {
    const Field& f = Field::gf(4);
    return hz_generator(subfield_star(f, 4), MultiplierVector::ones(15), k);
}

LinearCode hz16(int k) {
    const Field& f = Field::gf(4);
    return hz_generator(additive_subgroup(f, {1, 2, 4, 8}), MultiplierVector::ones(16), k);
}

}  // namespace

TEST_CASE("kopt upper bound") {
    CHECK(kopt_upper(4, 4, 8) == 1);
    CHECK(kopt_upper(8, 6, 4) == 2);   // Griesmer: 6+2+1 > 8, 6+2 <= 8
    CHECK(kopt_upper(10, 1, 4) == 10);
    CHECK(kopt_upper(3, 7, 16) == 0);  // d > n: no code
}

TEST_CASE("locality of the repetition code is 1") {
    LocalityCertificate cert = locality_exact(LinearCode::repetition(Field::gf(3), 6));
    REQUIRE(cert.r.has_value());
    CHECK(*cert.r == 1);
    CHECK(cert.lower_bound == 1);
    for (const auto& w : cert.witnesses) CHECK(w.support.size() == 2);
}

TEST_CASE("locality of HZ_4 over GF(8) is 3 on both sides") {
    LinearCode c = hz8();
    LocalityCertificate primal = locality_exact(c);
    REQUIRE(primal.r.has_value());
    CHECK(*primal.r == 3);
    CHECK(primal.exact);
    LocalityCertificate dual = locality_exact(c.dual());
    REQUIRE(dual.r.has_value());
    CHECK(*dual.r == 3);  // 2^{m1} - k - 1 = 3 on the dual side
    // every witness is a genuine dual codeword containing its coordinate
    LinearCode cd = c.dual();
    for (const auto& w : primal.witnesses) {
        CHECK(std::find(w.support.begin(), w.support.end(), w.coordinate) != w.support.end());
        Matrix row(c.field(), 1, c.n(), w.word);
        CHECK(c.generator().mul(row.transpose()).is_zero());
        CHECK(cd.contains_word(w.word));
    }
}

TEST_CASE("locality is undefined for the full space") {
    LocalityCertificate cert = locality_exact(LinearCode::full_space(Field::gf(3), 4));
    CHECK(!cert.r.has_value());
}

TEST_CASE("enumerative locality agrees with the provenance path") {
    LinearCode c = hz8();
    LinearCode plain(c.field(), c.generator());
    LocalityCertificate a = locality_exact(c);
    LocalityCertificate b = locality_exact(plain);
    REQUIRE(a.r.has_value());
    REQUIRE(b.r.has_value());
    CHECK(*a.r == *b.r);
}

TEST_CASE("the four classical bounds at the SQS(8) instance hold with equality") {
    ClrcBoundReport rep = clrc_bounds(8, 4, 4, 8, 3);
    CHECK(!rep.griesmer.vacuous);
    CHECK(rep.griesmer.rhs == 8);
    CHECK(rep.griesmer.met);
    CHECK(rep.cm.rhs == 4);
    CHECK(rep.cm.met);
    CHECK(rep.cm_relaxed);
    CHECK(rep.singleton.rhs == 4);
    CHECK(rep.singleton.met);
    CHECK(rep.plotkin.rhs == 4);
    CHECK(rep.plotkin.met);
    CHECK(rep.plotkin_exact == BigRat(4));
}

TEST_CASE("vacuous bound ranges when r >= k") {
    ClrcBoundReport rep = clrc_bounds(8, 4, 4, 8, 5);
    CHECK(rep.griesmer.vacuous);
    CHECK(rep.plotkin.vacuous);
    CHECK(!rep.singleton.vacuous);
}

TEST_CASE("Singleton equality at the [15,3,12] instance") {
    ClrcBoundReport rep = clrc_bounds(15, 3, 12, 16, 2);
    CHECK(rep.singleton.rhs == 12);
    CHECK(rep.singleton.met);
}

TEST_CASE("optimal cLRC certification of the subgroup family, n = 8 and 16") {
    {
        OptimalClrcCertificate cert = certify_optimal_clrc(hz8());
        CHECK(cert.certified());
        CHECK(cert.r == 3);
        CHECK(cert.bounds.all_met());
        OptimalClrcCertificate dual = certify_optimal_clrc(hz8().dual());
        CHECK(dual.certified());
        CHECK(dual.r == 3);
    }
    for (int k : {4, 6, 8, 10, 12}) {
        LinearCode c = hz16(k);
        OptimalClrcCertificate cert = certify_optimal_clrc(c);
        CAPTURE(k);
        CHECK(cert.certified());
        CHECK(cert.r == k - 1);
        OptimalClrcCertificate dual = certify_optimal_clrc(c.dual());
        CHECK(dual.certified());
        CHECK(dual.r == 16 - k - 1);
    }
}

TEST_CASE("optimal cLRC certification of the subfield-star family") {
    for (int k = 3; k <= 12; ++k) {
        LinearCode c = hz15(k);
        OptimalClrcCertificate cert = certify_optimal_clrc(c);
        CAPTURE(k);
        CHECK(cert.certified());
        CHECK(cert.r == k - 1);
        OptimalClrcCertificate dual = certify_optimal_clrc(c.dual());
        CHECK(dual.certified());
        CHECK(dual.r == 15 - k - 1);  // 2^{m2} - k - 2
    }
}

TEST_CASE("certification fails gracefully on an MDS code") {
    const Field& f = Field::gf(4);
    LinearCode mds = grs_generator(subfield_star(f, 4), MultiplierVector::ones(15), 4);
    OptimalClrcCertificate cert = certify_optimal_clrc(mds);
    CHECK(!cert.certified());
    CHECK(!cert.nmds);
}

TEST_CASE("soundness direction of the CM relaxation") {
    // kopt_upper >= the dimension of every concrete code we can build, so a
    // met relaxed bound implies the true bound is met.
    CHECK(kopt_upper(8, 4, 8) >= 4);    // the [8,4,4] code exists
    CHECK(kopt_upper(15, 12, 16) >= 3); // the [15,3,12] code exists
    CHECK(kopt_upper(16, 12, 16) >= 4); // the [16,4,12] code exists
}
