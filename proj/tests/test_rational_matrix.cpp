#include "hopfgate/exact_linalg.hpp"

#include <doctest.h>

using namespace hopfgate;

TEST_CASE("rational parsing handles integers, fractions and decimals") {
    CHECK(rational_from_string("3") == Rational(3));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-10/4") == Rational(-5, 2));
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("-1.5") == Rational(-3, 2));
    CHECK(rational_from_string("2.") == Rational(2));
    CHECK(rational_from_string(".5") == Rational(1, 2));
}

TEST_CASE("rational parsing accepts the unicode minus sign") {
    CHECK(rational_from_string("−3") == Rational(-3));
    CHECK(rational_from_string("−1/2") == Rational(-1, 2));
}

TEST_CASE("rational parsing rejects garbage") {
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("rational to-string round-trips") {
    for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "1000001"}) {
        Rational q = rational_from_string(s);
        CHECK(rational_from_string(rational_to_string(q)) == q);
    }
}

TEST_CASE("rationalize produces dyadic approximations within half an ulp of 2^-20") {
    for (double x : {0.5, -0.125, 3.14159, 1e-3, 123.456}) {
        Rational q = rationalize(x);
        Rational err = q - rationalize(x);
        CHECK(err == 0);
        CHECK(abs(q.get_d() - x) <= 0.5 / 1048576.0 + 1e-15);
    }
}

TEST_CASE("matrix arithmetic basics") {
    RationalMatrix a(2, 3), b(3, 2);
    int v = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = v++;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) b(i, j) = v++;
    RationalMatrix p = a * b;
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 2);
    CHECK(p(0, 0) == Rational(1 * 7 + 2 * 9 + 3 * 11));
    CHECK(p(1, 1) == Rational(4 * 8 + 5 * 10 + 6 * 12));
    CHECK(a.transpose().transpose() == a);
    CHECK_THROWS_AS(b * b, DimensionError);
}

TEST_CASE("identity and submatrix") {
    RationalMatrix id = RationalMatrix::identity(3);
    CHECK(id * id == id);
    RationalMatrix sub = id.submatrix({0, 2}, {0, 2});
    CHECK(sub == RationalMatrix::identity(2));
    CHECK_THROWS_AS(id.submatrix({0, 3}, {0}), std::invalid_argument);
}

TEST_CASE("sign pattern extraction and membership") {
    RationalMatrix m(2, 2);
    m(0, 0) = 5;
    m(0, 1) = -3;
    SignPattern p = SignPattern::of(m);
    CHECK(p(0, 0) == 1);
    CHECK(p(0, 1) == -1);
    CHECK(p(1, 0) == 0);

    RationalMatrix member(2, 2);
    member(0, 0) = Rational(1, 7);
    member(0, 1) = -2;
    CHECK(qclass_membership(member, p, false));
    CHECK(qclass_membership(member, p, true));

    member(0, 0) = 0; // leaves the open class, stays in the closed one
    CHECK_FALSE(qclass_membership(member, p, false));
    CHECK(qclass_membership(member, p, true));

    member(1, 0) = 1; // outside both
    CHECK_FALSE(qclass_membership(member, p, true));
}

TEST_CASE("sign symbols") {
    CHECK(SignPattern::sign_from_symbol("+") == 1);
    CHECK(SignPattern::sign_from_symbol("-") == -1);
    CHECK(SignPattern::sign_from_symbol("−") == -1);
    CHECK(SignPattern::sign_from_symbol("0") == 0);
    CHECK_THROWS_AS(SignPattern::sign_from_symbol("x"), std::invalid_argument);
}

TEST_CASE("unit member realizes the pattern") {
    SignPattern p(2, 3);
    p.set(0, 1, -1);
    p.set(1, 2, 1);
    RationalMatrix u = p.unit_member();
    CHECK(u(0, 1) == Rational(-1));
    CHECK(u(1, 2) == Rational(1));
    CHECK(u(0, 0) == 0);
    CHECK(SignPattern::of(u) == p);
}
