#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pairstab/stability.hpp"

namespace pairstab {

/// One assertion of a scenario run. `indeterminate` marks items whose
/// evidence could not be gathered (for example an empty rejection-sampling
/// budget); they are reported but do not fail the scenario.
struct CheckItem {
    std::string id;
    bool pass = false;
    bool indeterminate = false;
    std::string detail;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> params;  // insertion-ordered
    std::vector<std::string> warnings;
    std::vector<CheckItem> checklist;

    void param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void check(const std::string& id, bool pass, const std::string& detail = "") {
        checklist.push_back(CheckItem{id, pass, false, detail});
    }
    void note(const std::string& id, const std::string& detail) {
        checklist.push_back(CheckItem{id, true, true, detail});
    }
    bool overall() const {
        for (const CheckItem& c : checklist)
            if (!c.pass) return false;
        return true;
    }
};

/// Exhaustive sweep of the quadratic obstruction plus randomized
/// destabilization attempts on numerically semistable pairs in irreducible
/// SL2 representations (none may destabilize), with one planted
/// non-semistable control that must destabilize.
ScenarioReport verify_sl2_irreducible(int n_max, int m_max, long trials, uint64_t seed);

/// The reducible SL2 pair: stratified numerical semistability with exact
/// interval values, the explicit destabilizing curve, and the elementary
/// nilpotent iteration facts.
ScenarioReport verify_sl2_reducible(int n, long samples, uint64_t seed);

/// The SL3 pair in Gamma_{0,k+1} x Gamma_{2k,1}: structure facts, weight
/// chain, polytope contact, destabilizing curve orders for each mu, and
/// sampled numerical semistability of (v, w0 + w').
ScenarioReport verify_sl3(int k, uint64_t seed, long samples, const std::vector<long>& mu_list,
                          long wprime_bound = 10);

struct LemmaOptions {
    /// The sixth weight-window is printed with a strict l2 inequality; the
    /// flag switches it to non-strict for sensitivity runs.
    bool strict_l2_in_s312 = true;
};

/// Codimension lemma for the weight-window projections: per sampled
/// decomposition, printed coefficient structures against the group-action
/// oracle, case ranks, and a direct rank-or-infeasibility certificate that
/// every affine solution set has codimension at least 9.
ScenarioReport verify_lemma_codim_sprime(int k, long trials, uint64_t seed,
                                         const LemmaOptions& options = LemmaOptions{});

/// Codimension lemma for the monomial-strip projections over sampled
/// elements of the membership loci Y_alpha, including the Vandermonde
/// subcase and finite-difference leading-coefficient checks.
ScenarioReport verify_lemma_codim_s(int k, long trials, uint64_t seed);

/// Degree computation and the bounded search for the tensor-power stability
/// margin over sampled group elements.
ScenarioReport verify_stability_remark(int k, uint64_t seed, long samples, long m_max);

}  // namespace pairstab
