#include <doctest.h>

#include "liealc/errors.hpp"
#include "liealc/linalg.hpp"
#include "support.hpp"

using namespace liealc;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("-2/3").str() == "-2/3");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational::parse(" 7 ").str() == "7");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK_THROWS_AS(Rational::parse("3/-6"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1) / Rational(3) * Rational(3) == Rational(1));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(lcm(mpz_class(4), mpz_class(6)) == 12);
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("vector parsing and dot products") {
    const auto v = RationalVector::parse("1/2,-1/2, 0");
    CHECK(v.dim() == 3);
    CHECK(v.str() == "(1/2, -1/2, 0)");
    CHECK(v.norm2() == Rational(1, 2));
    CHECK_THROWS_AS(RationalVector::parse("1,,2"), InputError);
}

TEST_CASE("property: field axioms on random rationals") {
    testing::Gen g(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = g.rational(50, 12), b = g.rational(50, 12), c = g.rational(50, 12);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("linear algebra on small matrices") {
    const std::vector<RationalVector> rows = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    const Matrix m = Matrix::from_rows(rows);
    CHECK(determinant(m) == Rational(5));
    CHECK(rank(m) == 2);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Matrix::identity(2));
    const auto x = solve_unique(m, {Rational(3), Rational(4)});
    REQUIRE(x);
    CHECK(*x == RationalVector{Rational(1), Rational(1)});

    const std::vector<RationalVector> sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    const Matrix s = Matrix::from_rows(sing);
    CHECK(rank(s) == 1);
    CHECK(!inverse(s));
    CHECK(!solve_unique(s, {Rational(1), Rational(2)}));
    CHECK(is_consistent(s, {Rational(1), Rational(2)}));
    CHECK(!is_consistent(s, {Rational(1), Rational(3)}));
    const auto ns = nullspace(s);
    REQUIRE(ns.size() == 1);
    CHECK(s.apply(ns[0]).is_zero());
}

TEST_CASE("property: random integer matrices") {
    testing::Gen g(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
        Matrix a(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a(r, c) = g.rational(6, 3);
        const auto inv = inverse(a);
        CHECK(inv.has_value() == !determinant(a).is_zero());
        if (inv) CHECK(a * *inv == Matrix::identity(n));
        CHECK(rank(a) + nullspace(a).size() == n);
        for (const auto& v : nullspace(a)) CHECK(a.apply(v).is_zero());
        CHECK(determinant(a.transpose()) == determinant(a));
    }
}
