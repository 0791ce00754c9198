#include <doctest.h>

#include <algorithm>

#include "pairstab/polytope.hpp"
#include "pairstab/rng.hpp"

using namespace pairstab;

namespace {

std::vector<Weight> random_points(SplitMix64& rng, int count, long long box) {
    std::vector<Weight> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(Weight{rng.uniform(-box, box), rng.uniform(-box, box)});
    return pts;
}

// Independent membership oracle: p lies in conv(S) iff it equals a point,
// lies on a segment, or lies in a triangle spanned by three points of S.
long long cross3(const Weight& a, const Weight& b, const Weight& c) {
    return (b.c1 - a.c1) * (c.c2 - a.c2) - (b.c2 - a.c2) * (c.c1 - a.c1);
}

bool on_segment(const Weight& a, const Weight& b, const Weight& p) {
    if (cross3(a, b, p) != 0) return false;
    return std::min(a.c1, b.c1) <= p.c1 && p.c1 <= std::max(a.c1, b.c1) &&
           std::min(a.c2, b.c2) <= p.c2 && p.c2 <= std::max(a.c2, b.c2);
}

bool in_hull_oracle(const std::vector<Weight>& s, const Weight& p) {
    for (const Weight& a : s)
        if (a == p) return true;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (on_segment(s[i], s[j], p)) return true;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            for (size_t k = j + 1; k < s.size(); ++k) {
                if (cross3(s[i], s[j], s[k]) == 0) continue;  // degenerate triangle
                long long d1 = cross3(s[i], s[j], p);
                long long d2 = cross3(s[j], s[k], p);
                long long d3 = cross3(s[k], s[i], p);
                bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
                bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
                if (!(has_neg && has_pos)) return true;
            }
    return false;
}

}  // namespace

TEST_CASE("degenerate hulls") {
    WeightPolytope point = WeightPolytope::from_points({Weight{3, -1}});
    CHECK(point.is_point());
    CHECK(point.contains(Weight{3, -1}));
    CHECK_FALSE(point.contains(Weight{3, 0}));

    WeightPolytope seg = WeightPolytope::from_points({Weight{0, 0}, Weight{4, 2}, Weight{2, 1}});
    CHECK(seg.is_segment());
    CHECK(seg.contains(Weight{2, 1}));
    CHECK_FALSE(seg.contains(Weight{1, 1}));
}

TEST_CASE("hull is idempotent and order-independent") {
    SplitMix64 rng(31);
    for (int t = 0; t < 100; ++t) {
        std::vector<Weight> pts = random_points(rng, static_cast<int>(rng.uniform(1, 12)), 8);
        WeightPolytope p = WeightPolytope::from_points(pts);
        std::reverse(pts.begin(), pts.end());
        WeightPolytope q = WeightPolytope::from_points(pts);
        CHECK(p.hull() == q.hull());
        CHECK(WeightPolytope::from_points(p.hull()).hull() == p.hull());
        for (const Weight& w : p.support()) CHECK(p.contains(w));
    }
}

TEST_CASE("containment agrees with the triangle oracle") {
    SplitMix64 rng(37);
    for (int t = 0; t < 120; ++t) {
        std::vector<Weight> pts = random_points(rng, static_cast<int>(rng.uniform(1, 9)), 6);
        WeightPolytope p = WeightPolytope::from_points(pts);
        for (long long x = -7; x <= 7; ++x)
            for (long long y = -7; y <= 7; ++y)
                CHECK(p.contains(Weight{x, y}) == in_hull_oracle(pts, Weight{x, y}));
    }
}

TEST_CASE("inclusion witnesses and reflexivity/transitivity") {
    SplitMix64 rng(41);
    for (int t = 0; t < 80; ++t) {
        WeightPolytope p = WeightPolytope::from_points(random_points(rng, 7, 6));
        WeightPolytope q = WeightPolytope::from_points(random_points(rng, 5, 3));
        WeightPolytope r = WeightPolytope::from_points(random_points(rng, 4, 2));
        CHECK(includes(p, p).included);
        if (includes(p, q).included && includes(q, r).included)
            CHECK(includes(p, r).included);
        InclusionResult inc = includes(p, q);
        if (!inc.included) {
            REQUIRE(inc.witness.has_value());
            CHECK_FALSE(p.contains(*inc.witness));
        }
    }
}

TEST_CASE("minkowski sum against the brute-force sumset") {
    SplitMix64 rng(43);
    for (int t = 0; t < 60; ++t) {
        std::vector<Weight> sp = random_points(rng, 5, 5), sq = random_points(rng, 5, 5);
        WeightPolytope p = WeightPolytope::from_points(sp);
        WeightPolytope q = WeightPolytope::from_points(sq);
        std::vector<Weight> sums;
        for (const Weight& a : sp)
            for (const Weight& b : sq) sums.push_back(Weight{a.c1 + b.c1, a.c2 + b.c2});
        CHECK(minkowski_sum(p, q).hull() == WeightPolytope::from_points(sums).hull());
    }
}

TEST_CASE("minkowski monotonicity and scaling additivity") {
    SplitMix64 rng(47);
    for (int t = 0; t < 60; ++t) {
        std::vector<Weight> inner = random_points(rng, 4, 3);
        std::vector<Weight> outer = inner;
        auto extra = random_points(rng, 3, 6);
        outer.insert(outer.end(), extra.begin(), extra.end());
        WeightPolytope q = WeightPolytope::from_points(inner);
        WeightPolytope p = WeightPolytope::from_points(outer);  // q subset p by construction
        WeightPolytope r = WeightPolytope::from_points(random_points(rng, 4, 4));
        CHECK(includes(minkowski_sum(p, r), minkowski_sum(q, r)).included);
        CHECK(scale(p, 5).hull() == minkowski_sum(scale(p, 2), scale(p, 3)).hull());
    }
}

TEST_CASE("identity element of the sum") {
    WeightPolytope p = WeightPolytope::from_points({Weight{1, 2}, Weight{-3, 0}, Weight{2, -2}});
    WeightPolytope origin = WeightPolytope::from_points({Weight{0, 0}});
    CHECK(minkowski_sum(p, origin).hull() == p.hull());
}

TEST_CASE("degree of standard polytopes") {
    // Triangle with vertices -(k+1) L_j has degree 2k+2.
    long long k = 12;
    WeightPolytope tri = WeightPolytope::from_points(
        {weight_from_L(-(k + 1), 0, 0), weight_from_L(0, -(k + 1), 0),
         weight_from_L(0, 0, -(k + 1))});
    CHECK(degree_of(tri) == 2 * k + 2);
    CHECK(degree_of(WeightPolytope::from_points({Weight{0, 0}})) == 1);
    // Scaled fundamental triangle has degree d.
    CHECK(degree_of(scale(fundamental_triangle(), 7)) == 7);
}

TEST_CASE("separating functionals certify the origin position") {
    SplitMix64 rng(53);
    for (int t = 0; t < 150; ++t) {
        WeightPolytope p =
            WeightPolytope::from_points(random_points(rng, static_cast<int>(rng.uniform(1, 7)), 5));
        auto sep = separating_functional(p);
        CHECK(sep.has_value() == !p.contains(Weight{0, 0}));
        if (sep)
            for (const Weight& w : p.support())
                CHECK(torus_pairing(sep->first, sep->second, w) > 0);
    }
}

TEST_CASE("functional table kills the trace direction") {
    for (Functional f : {Functional::l1, Functional::l2, Functional::l3, Functional::f1,
                         Functional::f2, Functional::f3})
        CHECK(eval_functional(f, weight_from_L(1, 1, 1)) == 0);
    CHECK(eval_functional(Functional::f3, weight_from_L(24, -1, 0)) == 25);  // 2k L1 - L2, k=12
}
