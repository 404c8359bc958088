#include "fixtures.hpp"
#include "hopfgate/compounds.hpp"
#include "hopfgate/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace hopfgate;
using fixtures::TestRng;

TEST_CASE("pair rank and unrank are inverse") {
    for (int n = 2; n <= 8; ++n) {
        int count = pair_count(n);
        CHECK(count == n * (n - 1) / 2);
        int rank = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                CHECK(pair_rank(n, i, j) == rank);
                PairIndex p = pair_unrank(n, rank);
                CHECK(p.i == i);
                CHECK(p.j == j);
                ++rank;
            }
        CHECK(rank == count);
    }
}

TEST_CASE("second additive compound of a frozen 3x3 product") {
    RationalMatrix a = fixtures::chain3();
    RationalMatrix bt = fixtures::chain3(); // all symbols set to one
    RationalMatrix j = a * bt.transpose();
    CHECK(j == fixtures::from_ints(3, 3, {2, 2, 1, 2, 3, 2, 1, 2, 2}));
    RationalMatrix c = additive_compound_2(j);
    CHECK(c == fixtures::from_ints(3, 3, {5, 2, -1, 2, 4, 2, -1, 2, 5}));
}

TEST_CASE("second additive compound of the identity doubles it") {
    for (int n = 2; n <= 5; ++n) {
        RationalMatrix c = additive_compound_2(RationalMatrix::identity(n));
        RationalMatrix expect(pair_count(n), pair_count(n));
        for (int r = 0; r < pair_count(n); ++r) expect(r, r) = 2;
        CHECK(c == expect);
    }
}

TEST_CASE("compound spectrum is the pairwise sums of the spectrum") {
    TestRng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform_int(2, 6);
        RationalMatrix m = fixtures::random_int_matrix(rng, n, n, 4, 0.9);
        auto base = numeric_spectrum(m);
        auto comp = numeric_spectrum(additive_compound_2(m));
        std::vector<std::complex<double>> sums;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) sums.push_back(base[i] + base[j]);
        auto key = [](const std::complex<double>& z) {
            return std::pair(std::round(z.real() * 1e6), std::round(z.imag() * 1e6));
        };
        std::sort(sums.begin(), sums.end(),
                  [&](auto x, auto y) { return key(x) < key(y); });
        std::sort(comp.begin(), comp.end(),
                  [&](auto x, auto y) { return key(x) < key(y); });
        REQUIRE(sums.size() == comp.size());
        for (size_t t = 0; t < sums.size(); ++t)
            CHECK(std::abs(sums[t] - comp[t]) < 1e-6 * (1 + std::abs(sums[t])));
    }
}

TEST_CASE("multiplicative compound entries are minors and top order is the determinant") {
    TestRng rng(23);
    RationalMatrix m = fixtures::random_rational_matrix(rng, 4, 4, 1.0);
    RationalMatrix c2 = multiplicative_compound(m, 2);
    CHECK(c2.rows() == 6);
    CHECK(c2(0, 0) == minor_of(m, {0, 1}, {0, 1}));
    CHECK(c2(5, 3) == minor_of(m, {2, 3}, {1, 2}));
    RationalMatrix cn = multiplicative_compound(m, 4);
    CHECK(cn.rows() == 1);
    CHECK(cn(0, 0) == det(m));
}

TEST_CASE("multiplicative compound is functorial on products") {
    TestRng rng(29);
    RationalMatrix a = fixtures::random_rational_matrix(rng, 4, 3, 1.0);
    RationalMatrix b = fixtures::random_rational_matrix(rng, 3, 4, 1.0);
    CHECK(multiplicative_compound(a * b, 2) ==
          multiplicative_compound(a, 2) * multiplicative_compound(b, 2));
}

TEST_CASE("factor pair of a single column vector") {
    RationalMatrix s(4, 1);
    for (int i = 0; i < 4; ++i) s(i, 0) = i + 1;
    CompoundFactorPair f = build_factors(s, s.transpose());
    CHECK(f.lbar == fixtures::from_ints(6, 4,
                                        {2, -1, 0, 0, 3, 0, -1, 0, 4, 0, 0, -1, 0, 3, -2, 0, 0, 4,
                                         0, -2, 0, 0, 4, -3}));
    CHECK(f.lbar * f.lunder == additive_compound_2(s * s.transpose()));
}

TEST_CASE("factorization identity on random rational pairs") {
    TestRng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform_int(2, 5), m = rng.uniform_int(1, 5);
        RationalMatrix a = fixtures::random_rational_matrix(rng, n, m, 0.8);
        RationalMatrix b = fixtures::random_rational_matrix(rng, m, n, 0.8);
        CompoundFactorPair f = build_factors(a, b);
        CHECK(f.lbar.rows() == pair_count(n));
        CHECK(f.lbar.cols() == m * n);
        CHECK(f.lbar * f.lunder == additive_compound_2(a * b));
    }
}

TEST_CASE("compound determinant via inner expansion matches the direct value") {
    TestRng rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        int n = rng.uniform_int(2, 4), m = rng.uniform_int(1, 4);
        RationalMatrix a = fixtures::random_rational_matrix(rng, n, m, 0.9);
        RationalMatrix b = fixtures::random_rational_matrix(rng, m, n, 0.9);
        CHECK(det_compound_via_cb(a, b) == det(additive_compound_2(a * b)));
    }
}

TEST_CASE("compound size guards") {
    RationalMatrix one(1, 1);
    CHECK_THROWS_AS(additive_compound_2(one), DimensionError);
    RationalMatrix rect(2, 3);
    CHECK_THROWS_AS(additive_compound_2(rect), DimensionError);
}
