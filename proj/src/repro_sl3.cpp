#include <algorithm>
#include <sstream>

#include "pairstab/repro.hpp"
#include "pairstab/sampler.hpp"

namespace pairstab {

namespace {

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(" << w.c1 << "," << w.c2 << ")";
    return os.str();
}

}  // namespace

ScenarioReport verify_sl3(int k, uint64_t seed, long samples, const std::vector<long>& mu_list,
                          long wprime_bound) {
    if (k < 3) throw std::invalid_argument("verify_sl3: needs k >= 3");
    ScenarioReport report;
    report.scenario = "sl3";
    report.param("k", std::to_string(k));
    report.param("seed", std::to_string(seed));
    report.param("samples", std::to_string(samples));
    {
        std::string mus;
        for (long mu : mu_list) mus += (mus.empty() ? "" : ",") + std::to_string(mu);
        report.param("mu", mus);
    }
    report.param("wprime_bound", std::to_string(wprime_bound));
    if (k < 12)
        report.warnings.push_back(
            "exploratory: k < 12 is outside the guaranteed range of the construction");

    Sl3Pair pair = sl3_pair(k);
    std::vector<RepVector> basis = gamma_basis(2 * k, 1);
    report.check("sl3.gamma-dim",
                 static_cast<long long>(basis.size()) == gamma_dimension_formula(2 * k, 1),
                 "dim=" + std::to_string(basis.size()));

    WeightPredicate low_l3;
    low_l3.conditions.push_back({Functional::l3, FunctionalCondition::Rel::le, 2LL * k - 7});
    std::vector<RepVector> wprime_basis = filter_by_weight(basis, low_l3);
    report.note("sl3.wprime-dim", "dim=" + std::to_string(wprime_basis.size()));

    report.check("sl3.contract-w0-zero", contract(pair.w0).is_zero());
    report.check("sl3.e23-annihilates-w0", act_lie(2, 3, pair.w0).is_zero());

    RepVector e23sq = act_lie(2, 3, act_lie(2, 3, pair.v));
    RepVector expected_e23sq;
    expected_e23sq.space = pair.v.space;
    expected_e23sq.add_term(Monomial::sl3(0, {0, 0, 0}, {0, 0, k + 1}), Rational(2));
    report.check("sl3.e23-squared-v", e23sq == expected_e23sq);

    // Weight chain under l3.
    {
        Weight eta_prime = weight_of_homogeneous(pair.v);
        WeightPolytope w0supp = support_polytope(pair.w0);
        bool supports_ok =
            w0supp.support() == std::vector<Weight>{Weight{0, 2 * k - 1}, Weight{2 * k - 1, 0}};
        report.check("sl3.w0-weights", supports_ok,
                     weight_str(Weight{0, 2 * k - 1}) + " " + weight_str(Weight{2 * k - 1, 0}));
        Weight eta_dprime = weight_of_homogeneous(e23sq);
        long long l3p = eval_functional(Functional::l3, eta_prime);
        long long l31 = eval_functional(Functional::l3, Weight{0, 2 * k - 1});
        long long l32 = eval_functional(Functional::l3, Weight{2 * k - 1, 0});
        long long l3pp = eval_functional(Functional::l3, eta_dprime);
        bool chain = l3p == 2LL * k - 4 && l31 == 2LL * k - 1 && l32 == 2LL * k - 1 &&
                     l3pp == 2LL * k + 2 && l3p < l31 && l31 < l3pp;
        report.check("sl3.l3-chain", chain,
                     std::to_string(l3p) + " < " + std::to_string(l31) + " < " +
                         std::to_string(l3pp));
    }

    // Polytope shapes and the touching pattern.
    {
        WeightPolytope nv = full_weight_support(pair.v.space);
        WeightPolytope nw = space_polytope(pair.w0.space);
        std::vector<Weight> tri = {weight_from_L(-(k + 1), 0, 0), weight_from_L(0, -(k + 1), 0),
                                   weight_from_L(0, 0, -(k + 1))};
        report.check("sl3.nv-triangle",
                     nv.hull() == WeightPolytope::from_points(tri).hull());
        std::vector<Weight> hex;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                long long L[3] = {0, 0, 0};
                L[i] += 2 * k;
                L[j] -= 1;
                hex.push_back(weight_from_L(L[0], L[1], L[2]));
            }
        report.check("sl3.nw-hexagon",
                     nw.hull() == WeightPolytope::from_points(hex).hull());
        InclusionResult inc = includes(nw, nv);
        std::vector<Weight> expected_contacts = tri;
        std::sort(expected_contacts.begin(), expected_contacts.end());
        report.check("sl3.inclusion", inc.included);
        report.check("sl3.contact-only-at-vertices", inc.boundary_contacts == expected_contacts,
                     "contacts=" + std::to_string(inc.boundary_contacts.size()));
    }

    // Destabilizing curve orders for the seeded generic shift.
    RepVector wprime = random_vector(wprime_basis, seed, wprime_bound);
    RepVector w = pair.w0 + wprime;
    for (long mu : mu_list) {
        PairVerdict verdict = destabilizes(sl3_mu_curve(mu), pair.v, w);
        long expect_v = 2 - (2 * k + 2) * mu;
        long expect_w = std::min(-(2 * k - 1) * mu, 3 - (2 * k + 2) * mu);
        std::string tag = std::to_string(mu);
        report.check("sl3.curve-ord-v-mu" + tag, verdict.ord_v && *verdict.ord_v == expect_v,
                     "ord=" + std::to_string(verdict.ord_v.value_or(999)) + " expect " +
                         std::to_string(expect_v));
        report.check("sl3.curve-ord-w-mu" + tag, verdict.ord_w && *verdict.ord_w == expect_w,
                     "ord=" + std::to_string(verdict.ord_w.value_or(999)) + " expect " +
                         std::to_string(expect_w));
        report.check("sl3.destabilized-mu" + tag, verdict.kind == VerdictKind::destabilized);
    }

    // Stratified numerical semistability of the shifted pair.
    {
        SamplerConfig cfg;
        cfg.seed = SplitMix64(seed).split(0x5af3).next();
        cfg.samples = samples;
        cfg.bound = 7;
        PairVerdict verdict = sample_numerical_semistability(pair.v, w, cfg);
        std::string detail = "samples=" + std::to_string(verdict.samples_run);
        if (verdict.kind != VerdictKind::sample_pass && verdict.witness_weight)
            detail += " witness-weight=" + weight_str(*verdict.witness_weight) +
                      " sample=" + std::to_string(verdict.sample_index.value_or(-1));
        report.check("sl3.sampled-numerical-ss", verdict.kind == VerdictKind::sample_pass,
                     detail);
    }
    return report;
}

ScenarioReport verify_stability_remark(int k, uint64_t seed, long samples, long m_max) {
    if (k < 3) throw std::invalid_argument("verify_stability_remark: needs k >= 3");
    ScenarioReport report;
    report.scenario = "sl3-stability";
    report.param("k", std::to_string(k));
    report.param("seed", std::to_string(seed));
    report.param("samples", std::to_string(samples));
    report.param("m_max", std::to_string(m_max));
    if (k < 12)
        report.warnings.push_back(
            "exploratory: k < 12 is outside the guaranteed range of the construction");

    Sl3Pair pair = sl3_pair(k);
    report.check("stab.degree", degree_of(space_polytope(pair.v.space)) == 2LL * k + 2,
                 "deg=" + std::to_string(degree_of(space_polytope(pair.v.space))));
    {
        std::vector<Weight> tri = {weight_from_L(1, 0, 0), weight_from_L(0, 1, 0),
                                   weight_from_L(0, 0, 1)};
        report.check("stab.fundamental-triangle",
                     fundamental_triangle().hull() == WeightPolytope::from_points(tri).hull());
    }

    std::vector<RepVector> wprime_basis = sl3_wprime_basis(k);
    RepVector w = pair.w0 + random_vector(wprime_basis, seed, 10);

    {
        std::optional<long> m_id =
            search_stability_m(GroupElement::identity(3), pair.v, w, m_max);
        report.check("stab.identity-m-found", m_id.has_value(),
                     "m=" + std::to_string(m_id.value_or(-1)));
    }

    const std::vector<std::string> strata = default_strata(Group::SL3);
    SplitMix64 root(seed);
    long ok = 0, indeterminate = 0, max_m = 0;
    for (long i = 0; i < samples; ++i) {
        SplitMix64 rng = root.split(static_cast<uint64_t>(i));
        GroupElement g = sample_stratum_element(
            Group::SL3, strata[static_cast<size_t>(i) % strata.size()], rng, 7);
        std::optional<long> m = search_stability_m(g, pair.v, w, m_max);
        if (m) {
            ++ok;
            max_m = std::max(max_m, *m);
        } else {
            ++indeterminate;
        }
    }
    std::string detail = "found=" + std::to_string(ok) + "/" + std::to_string(samples) +
                         " max_m=" + std::to_string(max_m) +
                         " indeterminate=" + std::to_string(indeterminate);
    report.check("stab.m-search-95pct", 20 * ok >= 19 * samples, detail);
    return report;
}

}  // namespace pairstab
