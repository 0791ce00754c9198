#include <doctest.h>

#include "pairstab/rng.hpp"
#include "pairstab/rational.hpp"

using namespace pairstab;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));  // lowest terms on construction
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3, -7) == Rational(-3, 7));  // denominator kept positive
    CHECK_THROWS_AS(Rational(3, 7) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("5/6").str() == "5/6");
    CHECK(Rational::parse("-25").str() == "-25");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational::parse("-1/12").str() == "-1/12");
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("field axioms on randomized inputs") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        Rational a(rng.uniform(-50, 50), rng.uniform(1, 20));
        Rational b(rng.uniform(-50, 50), rng.uniform(1, 20));
        Rational c(rng.uniform(-50, 50), rng.uniform(1, 20));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("binomial and power helpers") {
    CHECK(Rational::binomial(24, 12) == Rational(mpz_class("2704156")));
    CHECK(Rational::binomial(3, 5) == Rational(0));
    CHECK(Rational::pow(Rational(0), 0) == Rational(1));
    CHECK(Rational::pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(Rational::factorial(6) == Rational(720));
}
