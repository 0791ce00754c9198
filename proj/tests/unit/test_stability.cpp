#include <doctest.h>

#include "pairstab/rng.hpp"
#include "pairstab/sampler.hpp"
#include "pairstab/stability.hpp"

using namespace pairstab;

TEST_CASE("curve orders of the reducible-case degeneration") {
    Sl2ReduciblePair pair = sl2_reducible_pair(5);
    GroupCurve curve = sl2_reducible_curve();
    CHECK(curve_order(curve, pair.v) == -4);  // 1 - n
    CHECK(curve_order(curve, pair.w) == -3);  // 2 - n
    GroupCurve id_curve = diagonal_curve({0, 0});
    CHECK(curve_order(id_curve, pair.v) == 0);
    PairVerdict same = destabilizes(id_curve, pair.v, pair.w);
    CHECK(same.kind == VerdictKind::indeterminate);
}

TEST_CASE("diagonal curve orders realize the support minimum") {
    SplitMix64 rng(83);
    RepSpace s = RepSpace::sl3_tensor(2, 2);
    for (int t = 0; t < 40; ++t) {
        RepVector x;
        x.space = s;
        for (int terms = 0; terms < 3; ++terms) {
            int a1 = static_cast<int>(rng.uniform(0, 2));
            int a2 = static_cast<int>(rng.uniform(0, 2 - a1));
            int b1 = static_cast<int>(rng.uniform(0, 2));
            int b2 = static_cast<int>(rng.uniform(0, 2 - b1));
            x.add_term(Monomial::sl3(0, {a1, a2, 2 - a1 - a2}, {b1, b2, 2 - b1 - b2}),
                       Rational(rng.nonzero(4)));
        }
        long long m1 = rng.uniform(-3, 3), m2 = rng.uniform(-3, 3);
        GroupCurve lambda = diagonal_curve({m1, m2, -m1 - m2});
        long long expected = 0;
        bool first = true;
        for (const auto& [m, c] : x.terms) {
            long long v = torus_pairing(m1, m2, weight_of(m, s));
            if (first || v < expected) expected = v;
            first = false;
        }
        CHECK(curve_order(lambda, x) == expected);
    }
}

TEST_CASE("curve order is compatible with constant right factors") {
    SplitMix64 rng(89);
    Sl2ReduciblePair pair = sl2_reducible_pair(4);
    for (int t = 0; t < 20; ++t) {
        GroupElement c = random_shear_product(Group::SL2, rng, 4);
        GroupCurve curve = sl2_shear_curve(2, 1, Rational(1));
        CurveMatrix shifted = curve.matrix * promote_to_curve(c);
        CHECK(curve_order(GroupCurve(shifted), pair.w) ==
              curve_order(curve, act_group(c, pair.w)));
    }
}

TEST_CASE("one-point numerical checks on the reducible pair") {
    Sl2ReduciblePair pair = sl2_reducible_pair(4);
    CHECK(numerically_semistable_at(GroupElement::identity(2), pair.v, pair.v).kind ==
          VerdictKind::sample_pass);
    GroupElement a0(2);  // a = 0 representative
    a0.at(0, 1) = Rational(1);
    a0.at(1, 0) = Rational(-1);
    a0.at(1, 1) = Rational(3);
    PairVerdict verdict = numerically_semistable_at(a0, pair.v, pair.w);
    CHECK(verdict.kind == VerdictKind::sample_pass);
}

TEST_CASE("numerical failure carries a witness weight") {
    RepVector v, w;
    v.space = RepSpace::sl2_sym(4);
    v.add_term(Monomial::sl2(0, 4, 4), Rational(1));  // weight 4
    w.space = RepSpace::sl2_sym(2);
    w.add_term(Monomial::sl2(0, 1, 2), Rational(1));  // weight 0
    PairVerdict verdict = numerically_semistable_at(GroupElement::identity(2), v, w);
    REQUIRE(verdict.kind == VerdictKind::numerical_failure);
    CHECK(*verdict.witness_weight == Weight{4, 0});
    SamplerConfig cfg;
    cfg.samples = 10;
    PairVerdict sampled = sample_numerical_semistability(v, w, cfg);
    CHECK(sampled.kind == VerdictKind::numerical_failure);
    CHECK(*sampled.sample_index == 0);
}

TEST_CASE("torus check against the exhaustive direction grid") {
    // All support subsets of Sym^n for n <= 6 against a [-5, 5] direction
    // sweep.
    for (int n = 1; n <= 6; ++n) {
        RepSpace s = RepSpace::sl2_sym(n);
        for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
            RepVector w;
            w.space = s;
            for (int i = 0; i <= n; ++i)
                if (mask & (1u << i)) w.add_term(Monomial::sl2(0, i, n), Rational(1));
            bool oracle = false;
            for (long long u = -5; u <= 5 && !oracle; ++u) {
                if (u == 0) continue;
                bool all_positive = true;
                for (const auto& [m, c] : w.terms)
                    all_positive = all_positive && u * (2LL * m.i - n) > 0;
                oracle = all_positive;
            }
            TorusVerdict verdict = torus_destabilizes(w);
            CHECK(verdict.destabilizing == oracle);
            if (verdict.destabilizing)
                for (const auto& [m, c] : w.terms)
                    CHECK(torus_pairing(verdict.witness->first, verdict.witness->second,
                                        weight_of(m, s)) > 0);
        }
    }
}

TEST_CASE("torus check spot values") {
    RepVector w;
    w.space = RepSpace::sl2_sym(2);
    w.add_term(Monomial::sl2(0, 1, 2), Rational(1));  // weight 0
    CHECK_FALSE(torus_destabilizes(w).destabilizing);
    CHECK_THROWS(torus_destabilizes(RepVector{RepSpace::sl2_sym(2), {}}));
}

TEST_CASE("quadratic obstruction values") {
    CHECK(q_obstruction(4, 6, 0, 2) == Rational(-8));
    for (long n = 1; n <= 6; ++n)
        for (long m = n; m <= 8; ++m)
            for (long g1 = -n; g1 <= n; g1 += 2) {
                CHECK(q_obstruction(n, m, g1, g1).is_zero());
                CHECK(q_obstruction(n, m, g1, m).is_zero());
            }
}

TEST_CASE("endpoint inequalities follow from one-dimensional inclusion") {
    SplitMix64 rng(97);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.uniform(1, 6));
        int m = static_cast<int>(rng.uniform(n, 8));
        int a1 = static_cast<int>(rng.uniform(0, n)), b1 = static_cast<int>(rng.uniform(a1, n));
        int a2 = static_cast<int>(rng.uniform(0, m)), b2 = static_cast<int>(rng.uniform(a2, m));
        WeightPolytope nv = WeightPolytope::from_points(
            {Weight{2LL * a1 - n, 0}, Weight{2LL * b1 - n, 0}});
        WeightPolytope nw = WeightPolytope::from_points(
            {Weight{2LL * a2 - m, 0}, Weight{2LL * b2 - m, 0}});
        if (includes(nw, nv).included) {
            CHECK(2 * a1 - n >= 2 * a2 - m);
            CHECK(n - 2 * b1 >= m - 2 * b2);
        }
    }
}

TEST_CASE("tensor-power stability at the identity") {
    int k = 12;
    Sl3Pair pair = sl3_pair(k);
    RepVector w = pair.w0 + random_vector(sl3_wprime_basis(k), 1, 10);
    CHECK(numerically_stable_at(GroupElement::identity(3), pair.v, w, 1));
    CHECK(search_stability_m(GroupElement::identity(3), pair.v, w, 50) == 1);
}

TEST_CASE("stratified sampling exhibits both facts about the reducible pair") {
    // The sampled inclusion passes while an explicit curve destabilizes: the
    // two one-sided certificates that frame the whole construction.
    Sl2ReduciblePair pair = sl2_reducible_pair(3);
    SamplerConfig cfg;
    cfg.seed = 5;
    cfg.samples = 200;
    CHECK(sample_numerical_semistability(pair.v, pair.w, cfg).kind ==
          VerdictKind::sample_pass);
    CHECK(destabilizes(sl2_reducible_curve(), pair.v, pair.w).kind ==
          VerdictKind::destabilized);
}

TEST_CASE("sampler strata produce the required patterns") {
    SplitMix64 rng(101);
    for (int t = 0; t < 30; ++t) {
        GroupElement a0 = sample_stratum_element(Group::SL2, "a-zero", rng, 7);
        CHECK(a0.at(0, 0).is_zero());
        CHECK(a0.det() == Rational(1));
        GroupElement c0 = sample_stratum_element(Group::SL2, "c-zero", rng, 7);
        CHECK(c0.at(1, 0).is_zero());
        GroupElement b12 = sample_stratum_element(Group::SL3, "b12-zero", rng, 7);
        CHECK(transpose_inverse(b12).at(0, 1).is_zero());
        GroupElement bb = sample_stratum_element(Group::SL3, "b12-b22-zero", rng, 7);
        CHECK(transpose_inverse(bb).at(0, 1).is_zero());
        CHECK(transpose_inverse(bb).at(1, 1).is_zero());
        GroupElement pu = sample_stratum_element(Group::SL3, "pul-u23z-u13nz", rng, 7);
        CHECK(pu.det() == Rational(1));
    }
    CHECK_THROWS(sample_stratum_element(Group::SL2, "bogus", rng, 7));
}
