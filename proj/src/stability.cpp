#include "pairstab/stability.hpp"

#include <algorithm>

#include "pairstab/sampler.hpp"

namespace pairstab {

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::sample_pass: return "numerically-semistable-sample-pass";
        case VerdictKind::numerical_failure: return "numerical-failure";
        case VerdictKind::destabilized: return "destabilized";
        case VerdictKind::indeterminate: return "indeterminate";
    }
    return "?";
}

GroupCurve diagonal_curve(const std::vector<long>& exponents) {
    int n = static_cast<int>(exponents.size());
    if (n != 2 && n != 3) throw std::invalid_argument("diagonal_curve: size must be 2 or 3");
    long sum = 0;
    for (long e : exponents) sum += e;
    if (sum != 0) throw std::invalid_argument("diagonal_curve: exponents must sum to 0");
    CurveMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Laurent::t(exponents[static_cast<size_t>(i)]);
    return GroupCurve(std::move(m));
}

GroupCurve sl2_shear_curve(long p, long tau, const Rational& c) {
    // diag(t^{-p}, t^p) (I + c t^tau E21) = [[t^{-p}, 0], [c t^{tau+p}, t^p]]
    CurveMatrix m(2);
    m.at(0, 0) = Laurent::t(-p);
    m.at(1, 0) = Laurent::term(tau + p, c);
    m.at(1, 1) = Laurent::t(p);
    return GroupCurve(std::move(m));
}

GroupCurve sl2_reducible_curve() {
    CurveMatrix m(2);
    m.at(0, 0) = Laurent::t(1);
    m.at(1, 0) = Laurent(1);
    m.at(1, 1) = Laurent::t(-1);
    return GroupCurve(std::move(m));
}

GroupCurve sl3_mu_curve(long mu) {
    if (mu < 1) throw std::invalid_argument("sl3_mu_curve: mu must be >= 1");
    // diag(t^{-mu}, t^{-mu}, t^{2 mu}) (I + t E23); E23 is nilpotent of order
    // two, so the exponential stops there.
    CurveMatrix m(3);
    m.at(0, 0) = Laurent::t(-mu);
    m.at(1, 1) = Laurent::t(-mu);
    m.at(1, 2) = Laurent::t(1 - mu);
    m.at(2, 2) = Laurent::t(2 * mu);
    return GroupCurve(std::move(m));
}

long curve_order(const GroupCurve& curve, const RepVector& x) {
    if (x.is_zero()) throw std::invalid_argument("curve_order: zero vector");
    CurveVector image = act_group(curve.matrix, x);
    bool first = true;
    long best = 0;
    for (const auto& [m, c] : image.terms) {
        long o = c.ord();
        if (first || o < best) best = o;
        first = false;
    }
    if (first) throw std::logic_error("curve_order: image vanished");
    return best;
}

PairVerdict numerically_semistable_at(const GroupElement& g, const RepVector& v,
                                      const RepVector& w) {
    if (v.is_zero() || w.is_zero())
        throw std::invalid_argument("numerically_semistable_at: zero vector");
    GroupAction action(g);
    WeightPolytope pw = support_polytope(action.apply(w));
    WeightPolytope pv = support_polytope(action.apply(v));
    InclusionResult inc = includes(pw, pv);
    PairVerdict verdict;
    verdict.samples_run = 1;
    if (inc.included) {
        verdict.kind = VerdictKind::sample_pass;
    } else {
        verdict.kind = VerdictKind::numerical_failure;
        verdict.witness_weight = inc.witness;
        verdict.witness_g = g;
    }
    return verdict;
}

std::vector<std::string> default_strata(Group g) {
    if (g == Group::SL2) return {"ac-nonzero", "a-zero", "c-zero"};
    return {"generic",   "pul-u23nz", "pul-u23z-u13nz", "pul-u23z-u13z",
            "b12-zero",  "b22-zero",  "b32-zero",       "b12-b22-zero"};
}

PairVerdict sample_numerical_semistability(const RepVector& v, const RepVector& w,
                                           const SamplerConfig& cfg) {
    if (v.is_zero() || w.is_zero())
        throw std::invalid_argument("sample_numerical_semistability: zero vector");
    if (v.space.group() != w.space.group())
        throw std::invalid_argument("sample_numerical_semistability: group mismatch");
    Group group = v.space.group();
    std::vector<std::string> strata = cfg.strata.empty() ? default_strata(group) : cfg.strata;
    SplitMix64 root(cfg.seed);
    PairVerdict aggregate;
    aggregate.kind = VerdictKind::sample_pass;
    for (long i = 0; i < cfg.samples; ++i) {
        SplitMix64 rng = root.split(static_cast<uint64_t>(i));
        const std::string& stratum = strata[static_cast<size_t>(i) % strata.size()];
        GroupElement g = sample_stratum_element(group, stratum, rng, cfg.bound);
        PairVerdict one = numerically_semistable_at(g, v, w);
        ++aggregate.samples_run;
        if (one.kind == VerdictKind::numerical_failure) {
            one.sample_index = i;
            one.samples_run = aggregate.samples_run;
            return one;
        }
    }
    return aggregate;
}

PairVerdict destabilizes(const GroupCurve& curve, const RepVector& v, const RepVector& w) {
    if (v.is_zero() || w.is_zero()) throw std::invalid_argument("destabilizes: zero vector");
    CurveVector gv = act_group(curve.matrix, v);
    long ov = 0, ow = 0;
    {
        bool first = true;
        for (const auto& [m, c] : gv.terms) {
            long o = c.ord();
            if (first || o < ov) ov = o;
            first = false;
        }
    }
    ow = curve_order(curve, w);
    PairVerdict verdict;
    verdict.ord_v = ov;
    verdict.ord_w = ow;
    verdict.kind = ov < ow ? VerdictKind::destabilized : VerdictKind::indeterminate;
    if (verdict.kind == VerdictKind::destabilized) {
        // After scaling by t^{-ord_v} the w-component dies and the limit is
        // the lowest-order layer of the v-path.
        RepVector limit;
        limit.space = v.space;
        for (const auto& [m, c] : gv.terms) limit.add_term(m, c.coeff(ov));
        verdict.limit = std::move(limit);
    }
    return verdict;
}

TorusVerdict torus_destabilizes(const RepVector& w) {
    if (w.is_zero()) throw std::invalid_argument("torus_destabilizes: zero vector");
    WeightPolytope p = support_polytope(w);
    TorusVerdict verdict;
    auto sep = separating_functional(p);
    verdict.destabilizing = sep.has_value();
    verdict.witness = sep;
    return verdict;
}

bool numerically_stable_at(const GroupElement& g, const RepVector& v, const RepVector& w,
                           long m) {
    if (m < 1) throw std::invalid_argument("numerically_stable_at: m must be positive");
    if (v.space.group() != Group::SL3 || w.space.group() != Group::SL3)
        throw std::invalid_argument("numerically_stable_at: SL3 pairs only");
    // N(g.I) over the triple sum of standard representations: each column of
    // g contributes the weights of the basis vectors it touches. For any
    // invertible g that hull is the full fundamental triangle.
    std::vector<Weight> ipts;
    const Weight basis_weights[3] = {Weight{1, 0}, Weight{0, 1}, Weight{-1, -1}};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            if (!g.at(i, j).is_zero()) ipts.push_back(basis_weights[i]);
    WeightPolytope ni = WeightPolytope::from_points(std::move(ipts));
    if (!(ni == fundamental_triangle()))
        throw std::logic_error("numerically_stable_at: N(g.I) is not the fundamental triangle");

    long long deg = degree_of(space_polytope(v.space));
    GroupAction action(g);
    WeightPolytope nv = support_polytope(action.apply(v));
    WeightPolytope nw = support_polytope(action.apply(w));
    WeightPolytope lhs = minkowski_sum(scale(ni, deg), scale(nv, m));
    return includes(scale(nw, m + 1), lhs).included;
}

std::optional<long> search_stability_m(const GroupElement& g, const RepVector& v,
                                       const RepVector& w, long m_max) {
    // One action evaluation; the m-search afterwards is pure polytope work.
    GroupAction action(g);
    WeightPolytope nv = support_polytope(action.apply(v));
    WeightPolytope nw = support_polytope(action.apply(w));
    long long deg = degree_of(space_polytope(v.space));
    WeightPolytope lhs_fixed = scale(fundamental_triangle(), deg);
    for (long m = 1; m <= m_max; ++m) {
        WeightPolytope lhs = minkowski_sum(lhs_fixed, scale(nv, m));
        if (includes(scale(nw, m + 1), lhs).included) return m;
    }
    return std::nullopt;
}

Rational q_obstruction(long n, long m, long gamma1, long gamma2) {
    Rational qn(n), qm(m), g1(gamma1), g2(gamma2);
    return (qn - g2) * (qm - g2 - qn + g1) - (qn - g1) * (qm - qn);
}

}  // namespace pairstab
