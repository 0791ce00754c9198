#include <doctest.h>

#include "pairstab/laurent.hpp"
#include "pairstab/rng.hpp"

using namespace pairstab;

namespace {
Laurent random_laurent(SplitMix64& rng) {
    Laurent l;
    int terms = static_cast<int>(rng.uniform(1, 4));
    for (int t = 0; t < terms; ++t)
        l.add_term(rng.uniform(-5, 5), Rational(rng.nonzero(9)));
    return l;
}
}  // namespace

TEST_CASE("order of vanishing") {
    Laurent x = Laurent::term(-2, Rational(1)) + Laurent::term(1, Rational(3));
    CHECK(x.ord() == -2);
    CHECK(Laurent(Rational(5)).ord() == 0);
    CHECK_THROWS_AS(Laurent().ord(), std::domain_error);
}

TEST_CASE("ord is additive on products") {
    SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).ord() == a.ord() + b.ord());
    }
}

TEST_CASE("cancellation removes stored terms") {
    Laurent a = Laurent::term(3, Rational(2));
    Laurent b = Laurent::term(3, Rational(-2));
    CHECK((a + b).is_zero());
}

TEST_CASE("division by units") {
    Laurent x = Laurent::term(2, Rational(6)) + Laurent::term(5, Rational(-3));
    Laurent u = Laurent::term(2, Rational(3));
    Laurent q = x.divide_by_unit(u);
    CHECK(q == Laurent(Rational(2)) + Laurent::term(3, Rational(-1)));
    Laurent not_unit = Laurent(1) + Laurent::t(1);
    CHECK_THROWS_AS(x.divide_by_unit(not_unit), std::domain_error);
}
