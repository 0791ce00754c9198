#include <doctest.h>

#include "pairstab/reps.hpp"
#include "pairstab/rng.hpp"
#include "pairstab/sampler.hpp"

using namespace pairstab;

namespace {

GroupElement lie_elementary(int n, int i, int j) {
    GroupElement e(n);
    e.at(i - 1, j - 1) = Rational(1);
    return e;
}

RepVector random_vector_in(const RepSpace& s, SplitMix64& rng) {
    RepVector v;
    v.space = s;
    int comp = static_cast<int>(rng.uniform(0, s.component_count() - 1));
    const RepSpace& c = s.component(comp);
    for (int t = 0; t < 3; ++t) {
        if (c.kind == RepSpace::Kind::sl2_sym) {
            v.add_term(Monomial::sl2(comp, static_cast<int>(rng.uniform(0, c.n)), c.n),
                       Rational(rng.nonzero(5)));
        } else {
            int a1 = static_cast<int>(rng.uniform(0, c.a));
            int a2 = static_cast<int>(rng.uniform(0, c.a - a1));
            int b1 = static_cast<int>(rng.uniform(0, c.b));
            int b2 = static_cast<int>(rng.uniform(0, c.b - b1));
            v.add_term(Monomial::sl3(comp, {a1, a2, c.a - a1 - a2}, {b1, b2, c.b - b1 - b2}),
                       Rational(rng.nonzero(5)));
        }
    }
    return v;
}

}  // namespace

TEST_CASE("weights of the distinguished monomials") {
    int k = 12;
    RepSpace w_space = RepSpace::sl3_gamma(2 * k, 1);
    CHECK(weight_of(Monomial::sl3(0, {0, 2 * k, 0}, {0, 1, 0}), w_space) ==
          Weight{0, 2 * k - 1});
    RepSpace v_space = RepSpace::sl3_gamma(0, k + 1);
    CHECK(weight_of(Monomial::sl3(0, {0, 0, 0}, {0, 2, k - 1}), v_space) ==
          Weight{k - 1, k - 3});
    CHECK(weight_of(Monomial::sl2(0, 1, 5), RepSpace::sl2_sym(5)) == Weight{-3, 0});
    CHECK_THROWS(weight_of(Monomial::sl2(0, 9, 5), RepSpace::sl2_sym(5)));
}

TEST_CASE("group action on explicit SL2 vectors") {
    RepSpace sym2 = RepSpace::sl2_sym(2);
    RepVector x;
    x.space = sym2;
    x.add_term(Monomial::sl2(0, 1, 2), Rational(1));  // e1 e2
    GroupElement rot(2);
    rot.at(0, 1) = Rational(-1);
    rot.at(1, 0) = Rational(1);
    RepVector expected = x.scaled(Rational(-1));
    CHECK(act_group(rot, x) == expected);
    CHECK(act_group(GroupElement::identity(2), x) == x);

    // (a e1 + c e2)(b e1 + d e2)^{n-1} written out for n = 3.
    int n = 3;
    RepVector v;
    v.space = RepSpace::sl2_sym(n);
    v.add_term(Monomial::sl2(0, 1, n), Rational(1));
    GroupElement g(2);
    long a = 2, b = 3, c = 5, d = 8;  // det = 1
    g.at(0, 0) = Rational(a);
    g.at(0, 1) = Rational(b);
    g.at(1, 0) = Rational(c);
    g.at(1, 1) = Rational(d);
    RepVector image = act_group(g, v);
    RepVector expected2;
    expected2.space = v.space;
    expected2.add_term(Monomial::sl2(0, 3, n), Rational(a * b * b));
    expected2.add_term(Monomial::sl2(0, 2, n), Rational(2 * a * b * d + c * b * b));
    expected2.add_term(Monomial::sl2(0, 1, n), Rational(a * d * d + 2 * c * b * d));
    expected2.add_term(Monomial::sl2(0, 0, n), Rational(c * d * d));
    CHECK(image == expected2);
}

TEST_CASE("determinant precondition") {
    RepVector x;
    x.space = RepSpace::sl2_sym(1);
    x.add_term(Monomial::sl2(0, 0, 1), Rational(1));
    GroupElement g = GroupElement::identity(2);
    g.at(0, 0) = Rational(2);
    CHECK_THROWS(act_group(g, x));
}

TEST_CASE("lie action facts for the SL3 pair") {
    int k = 12;
    Sl3Pair pair = sl3_pair(k);
    CHECK(act_lie(2, 3, pair.w0).is_zero());
    RepVector twice = act_lie(2, 3, act_lie(2, 3, pair.v));
    RepVector expected;
    expected.space = pair.v.space;
    expected.add_term(Monomial::sl3(0, {0, 0, 0}, {0, 0, k + 1}), Rational(2));
    CHECK(twice == expected);

    RepVector v;
    v.space = RepSpace::sl2_sym(4);
    v.add_term(Monomial::sl2(0, 1, 4), Rational(1));  // e1 e2^3
    RepVector dropped = act_lie(2, 1, v);             // -> e2^4
    RepVector expect_drop;
    expect_drop.space = v.space;
    expect_drop.add_term(Monomial::sl2(0, 0, 4), Rational(1));
    CHECK(dropped == expect_drop);
}

TEST_CASE("contraction rule and kernel membership") {
    int k = 12;
    Sl3Pair pair = sl3_pair(k);
    CHECK(contract(pair.w0).is_zero());

    RepSpace amb = RepSpace::sl3_tensor(2 * k, 1);
    RepVector single;
    single.space = amb;
    single.add_term(Monomial::sl3(0, {2 * k, 0, 0}, {1, 0, 0}), Rational(1));
    RepVector image = contract(single);
    RepVector expected;
    expected.space = RepSpace::sl3_tensor(2 * k - 1, 0);
    expected.add_term(Monomial::sl3(0, {2 * k - 1, 0, 0}, {0, 0, 0}), Rational(2 * k));
    CHECK(image == expected);

    RepVector no_dual;
    no_dual.space = RepSpace::sl3_tensor(3, 0);
    no_dual.add_term(Monomial::sl3(0, {3, 0, 0}, {0, 0, 0}), Rational(1));
    CHECK_THROWS(contract(no_dual));
}

TEST_CASE("kernel basis sizes match the dimension formula") {
    CHECK(gamma_basis(24, 1).size() == 675);
    CHECK(gamma_basis(1, 1).size() == 8);
    CHECK(gamma_basis(0, 13).size() == 105);  // contraction vacuous: the full monomial basis
    CHECK(gamma_basis(2, 2).size() == gamma_dimension_formula(2, 2));
    CHECK(gamma_basis(0, 0).size() == 1);
}

TEST_CASE("action is a group homomorphism") {
    SplitMix64 rng(61);
    std::vector<RepSpace> spaces = {
        RepSpace::sl2_sym(4),
        RepSpace::direct_sum({RepSpace::sl2_sym(3), RepSpace::sl2_sym(1)}),
        RepSpace::sl3_tensor(2, 1), RepSpace::sl3_gamma(3, 1)};
    for (const RepSpace& s : spaces) {
        Group grp = s.group();
        for (int t = 0; t < 8; ++t) {
            GroupElement a = random_shear_product(grp, rng, 3);
            GroupElement b = random_shear_product(grp, rng, 3);
            RepVector x = random_vector_in(s, rng);
            CHECK(act_group(a * b, x) == act_group(a, act_group(b, x)));
        }
    }
}

TEST_CASE("torus elements scale monomials by their weight pairing") {
    SplitMix64 rng(67);
    RepSpace s = RepSpace::sl3_tensor(3, 2);
    RepVector x = random_vector_in(s, rng);
    long long m1 = 2, m2 = -1;
    CurveMatrix d(3);
    d.at(0, 0) = Laurent::t(m1);
    d.at(1, 1) = Laurent::t(m2);
    d.at(2, 2) = Laurent::t(-m1 - m2);
    CurveVector image = act_group(d, x);
    CHECK(image.terms.size() == x.terms.size());
    for (const auto& [m, c] : image.terms) {
        long long expo = torus_pairing(m1, m2, weight_of(m, s));
        CHECK(c == Laurent::term(expo, x.terms.at(m)));
    }
}

TEST_CASE("group and lie actions are compatible to first order") {
    SplitMix64 rng(71);
    for (const RepSpace& s :
         {RepSpace::sl3_tensor(2, 1), RepSpace::sl3_gamma(2, 1), RepSpace::sl2_sym(5)}) {
        int dim = s.matrix_size();
        RepVector x = random_vector_in(s, rng);
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) {
                if (i == j) continue;
                CurveMatrix one_param = promote_to_curve(GroupElement::identity(dim));
                one_param.at(i - 1, j - 1) = Laurent::t(1);
                CurveVector curve_image = act_group(one_param, x);
                RepVector lie_image = act_lie(i, j, x);
                RepVector first_order;
                first_order.space = s;
                for (const auto& [m, c] : curve_image.terms) first_order.add_term(m, c.coeff(1));
                CHECK(first_order == lie_image);
            }
    }
}

TEST_CASE("contraction is equivariant, so the kernel is preserved") {
    SplitMix64 rng(73);
    RepSpace s = RepSpace::sl3_tensor(3, 2);
    for (int t = 0; t < 10; ++t) {
        GroupElement g = random_shear_product(Group::SL3, rng, 3);
        RepVector x = random_vector_in(s, rng);
        CHECK(contract(act_group(g, x)) == act_group(g, contract(x)));
    }
    for (const RepVector& b : gamma_basis(2, 1)) {
        GroupElement g = random_shear_product(Group::SL3, rng, 3);
        CHECK(contract(act_group(g, b)).is_zero());
    }
}

TEST_CASE("integer fast path agrees with the generic curve path") {
    SplitMix64 rng(79);
    RepSpace s = RepSpace::sl3_gamma(4, 1);
    std::vector<RepVector> basis = gamma_basis(4, 1);
    for (int t = 0; t < 5; ++t) {
        GroupElement g = random_shear_product(Group::SL3, rng, 4);
        RepVector x = basis[static_cast<size_t>(rng.uniform(
            0, static_cast<long long>(basis.size()) - 1))];
        RepVector fast = act_group(g, x);
        CurveVector slow = act_group(promote_to_curve(g), x);
        CHECK(slow.terms.size() == fast.terms.size());
        for (const auto& [m, c] : fast.terms) CHECK(slow.terms.at(m) == Laurent(c));
    }
}

TEST_CASE("homogeneous spaces are detected by the l3 extent") {
    // a + 2b equal <=> identical maximal l3 over the weight polytope.
    std::vector<std::pair<int, int>> pairs = {{2, 1}, {0, 2}, {4, 0}, {1, 1}, {3, 1}, {0, 1}};
    for (auto [a1, b1] : pairs)
        for (auto [a2, b2] : pairs) {
            WeightPolytope p1 = space_polytope(RepSpace::sl3_gamma(a1, b1));
            WeightPolytope p2 = space_polytope(RepSpace::sl3_gamma(a2, b2));
            bool homogeneous = a1 + 2 * b1 == a2 + 2 * b2;
            CHECK((p1.max_functional(Functional::l3) == p2.max_functional(Functional::l3)) ==
                  homogeneous);
        }
    // and for homogeneous pairs the polytopes nest by comparing a.
    WeightPolytope small = space_polytope(RepSpace::sl3_gamma(0, 2));
    WeightPolytope large = space_polytope(RepSpace::sl3_gamma(2, 1));
    CHECK(includes(large, small).included);
}

TEST_CASE("space polytopes match enumerated weight supports") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 1}, {0, 3}, {3, 0}, {2, 2}})
        CHECK(space_polytope(RepSpace::sl3_gamma(a, b)).hull() ==
              full_weight_support(RepSpace::sl3_gamma(a, b)).hull());
}

TEST_CASE("seeded combinations are reproducible") {
    std::vector<RepVector> basis = gamma_basis(2, 1);
    RepVector a = random_vector(basis, 99, 10);
    RepVector b = random_vector(basis, 99, 10);
    CHECK(a == b);
    CHECK_FALSE(a == random_vector(basis, 100, 10));
    RepVector pm1 = random_vector(basis, 7, 1);
    CHECK_FALSE(pm1.is_zero());
    CHECK_THROWS(random_vector({}, 1, 10));
}

TEST_CASE("explicit pair constructors") {
    Sl2ReduciblePair p2 = sl2_reducible_pair(3);
    CHECK(support_polytope(p2.w).support() ==
          std::vector<Weight>{Weight{-1, 0}, Weight{3, 0}});
    CHECK_THROWS(sl2_reducible_pair(2));

    Sl3Pair p3 = sl3_pair(12);
    CHECK(p3.w0.terms.size() == 6);
    CHECK(support_polytope(p3.w0).support() ==
          std::vector<Weight>{Weight{0, 23}, Weight{23, 0}});
}
