#include <algorithm>
#include <map>
#include <sstream>

#include "pairstab/linalg.hpp"
#include "pairstab/repro.hpp"
#include "pairstab/sampler.hpp"

namespace pairstab {

namespace {

// ---------------------------------------------------------------------------
// Shared pieces: weight windows, coordinate lists, input families.
// ---------------------------------------------------------------------------

struct Window {
    std::string name;
    WeightPredicate pred;
};

FunctionalCondition cond(Functional f, FunctionalCondition::Rel rel, long long v) {
    return FunctionalCondition{f, rel, v};
}

// The six projection windows. The sixth appears in print under a duplicated
// label mixing l2 with f1; that reading selects an empty weight set (checked
// separately), so the working definition follows the l/f pairing pattern of
// the other five.
std::vector<Window> sprime_windows(int k, bool strict_l2_in_s312) {
    using R = FunctionalCondition::Rel;
    long long hi = 2LL * k - 1;
    std::vector<Window> w(6);
    w[0] = {"s123", {{cond(Functional::l3, R::ge, hi), cond(Functional::f3, R::le, -2)}}};
    w[1] = {"s213", {{cond(Functional::l3, R::ge, hi), cond(Functional::f3, R::ge, 2)}}};
    w[2] = {"s132", {{cond(Functional::l2, R::ge, hi), cond(Functional::f2, R::le, -2)}}};
    w[3] = {"s312",
            {{cond(Functional::l2, strict_l2_in_s312 ? R::gt : R::ge, hi),
              cond(Functional::f2, R::ge, 2)}}};
    w[4] = {"s231", {{cond(Functional::l1, R::ge, hi), cond(Functional::f1, R::le, -2)}}};
    w[5] = {"s321", {{cond(Functional::l1, R::ge, hi), cond(Functional::f1, R::ge, 2)}}};
    return w;
}

WeightPredicate printed_sixth_window(int k) {
    using R = FunctionalCondition::Rel;
    return {{cond(Functional::l2, R::ge, 2LL * k - 1), cond(Functional::f1, R::ge, 2)}};
}

// Ambient monomials of Sym^{2k} U (x) U* whose weight satisfies the
// predicate, in canonical order. Projections of kernel vectors vanish
// exactly when all these coefficients vanish.
std::vector<Monomial> window_coordinates(int k, const WeightPredicate& pred) {
    RepSpace ambient = RepSpace::sl3_tensor(2 * k, 1);
    std::vector<Monomial> coords;
    for (int a1 = 2 * k; a1 >= 0; --a1)
        for (int a2 = 2 * k - a1; a2 >= 0; --a2)
            for (int j = 0; j < 3; ++j) {
                std::array<int, 3> beta{0, 0, 0};
                beta[static_cast<size_t>(j)] = 1;
                Monomial m = Monomial::sl3(0, {a1, a2, 2 * k - a1 - a2}, beta);
                if (pred.holds(weight_of(m, ambient))) coords.push_back(m);
            }
    std::sort(coords.begin(), coords.end());
    return coords;
}

std::vector<Rational> coords_of(const RepVector& x, const std::vector<Monomial>& coords) {
    std::vector<Rational> row;
    row.reserve(coords.size());
    for (const Monomial& m : coords) {
        auto it = x.terms.find(m);
        row.push_back(it == x.terms.end() ? Rational(0) : it->second);
    }
    return row;
}

RepVector single_monomial_vector(const RepSpace& space, const Monomial& m) {
    RepVector v;
    v.space = space;
    v.add_term(m, Rational(1));
    return v;
}

// xi_i = e1^i e3^{2k-i} (x) e2*,  eta_i = e2^i e3^{2k-i} (x) e1*.
Monomial xi_monomial(int k, int i) {
    return Monomial::sl3(0, {i, 0, 2 * k - i}, {0, 1, 0});
}
Monomial eta_monomial(int k, int i) {
    return Monomial::sl3(0, {0, i, 2 * k - i}, {1, 0, 0});
}

Rational rat_pow(const Rational& b, long e) {
    return Rational::pow(b, static_cast<unsigned long>(e));
}

std::string rank_list_str(const std::vector<std::pair<std::string, int>>& ranks) {
    std::string s;
    for (const auto& [name, r] : ranks) s += (s.empty() ? "" : " ") + name + "=" + std::to_string(r);
    return s;
}

// ---------------------------------------------------------------------------
// Step-one lemma: projections of U.(w0 + w') into the weight windows.
// ---------------------------------------------------------------------------

struct WindowSweep {
    std::vector<Monomial> coords;
    IncrementalRank tracker;
    std::vector<std::vector<Rational>> columns;  // one per swept basis vector
};

}  // namespace

ScenarioReport verify_lemma_codim_sprime(int k, long trials, uint64_t seed,
                                         const LemmaOptions& options) {
    if (k < 3) throw std::invalid_argument("verify_lemma_codim_sprime: needs k >= 3");
    ScenarioReport report;
    report.scenario = "sl3-lemma-sprime";
    report.param("k", std::to_string(k));
    report.param("trials", std::to_string(trials));
    report.param("seed", std::to_string(seed));
    report.param("s312_strict_l2", options.strict_l2_in_s312 ? "true" : "false");
    if (k < 12)
        report.warnings.push_back(
            "exploratory: k < 12 is outside the guaranteed range of the construction");

    const int two_k = 2 * k;
    RepSpace gamma = RepSpace::sl3_gamma(two_k, 1);
    Sl3Pair pair = sl3_pair(k);
    std::vector<RepVector> wprime_basis = sl3_wprime_basis(k);
    std::vector<Window> windows = sprime_windows(k, options.strict_l2_in_s312);
    std::vector<std::vector<Monomial>> window_coords;
    for (const Window& w : windows) window_coords.push_back(window_coordinates(k, w.pred));

    // The printed strict inequality in the s312 window is not
    // permutation-symmetric: permuted low-unipotent elements can land the
    // claim on the strict window with its boundary weights cut away, where
    // the affine set degenerates to all of W'. The codimension certificate
    // therefore runs on the non-strict family, and the strict reading is
    // tracked separately and reported.
    std::vector<Window> cert_windows = sprime_windows(k, false);
    std::vector<std::vector<Monomial>> cert_coords;
    for (const Window& w : cert_windows) cert_coords.push_back(window_coordinates(k, w.pred));
    long strict_violations = 0;

    // The duplicated printed definition of the sixth window selects no
    // ambient weight at all; it is recorded here and replaced by the
    // pattern-consistent reading in the checks above.
    report.check("sprime.printed-sixth-window-empty",
                 window_coordinates(k, printed_sixth_window(k)).empty(),
                 "printed duplicate label (l2 with f1) selects the empty window; the "
                 "codimension checks use the l1/f1 reading");

    SplitMix64 root(seed);
    bool l_preserves_wprime = true;

    // Aggregates across cases and trials.
    bool case1_closed = true, case1_structure = true, case1_rank = true;
    bool case2_closed = true, case2_structure = true, case2_rank = true;
    bool case3_linear = true, case3_closed = true, case3_nonzero = true, case3_empty = true;
    bool s312_closed = true, s312_rank = true;
    bool families_closed = true, easier_rank = true;
    bool codim_ok[3] = {true, true, true};
    std::string codim_witness[3];
    int min_rank_case1 = 1 << 20, min_rank_case2 = 1 << 20;
    int min_rank_easier = 1 << 20, min_rank_s312 = 1 << 20;

    WeightPredicate low_l3;
    low_l3.conditions.push_back({Functional::l3, FunctionalCondition::Rel::le, 2LL * k - 7});

    for (int cse = 1; cse <= 3; ++cse) {
        for (long t = 0; t < trials; ++t) {
            SplitMix64 rng = root.split(static_cast<uint64_t>(cse) * 1000003ULL +
                                        static_cast<uint64_t>(t));
            UnipotentPattern pat;
            if (cse == 1) {
                pat.u23 = UnipotentPattern::Entry::nonzero;
            } else if (cse == 2) {
                pat.u23 = UnipotentPattern::Entry::zero;
                pat.u13 = UnipotentPattern::Entry::nonzero;
            } else {
                pat.u23 = UnipotentPattern::Entry::zero;
                pat.u13 = UnipotentPattern::Entry::zero;
            }
            PULDecomposition pul = sample_pul(rng, 7, pat, true);
            const Rational u12 = pul.u.at(0, 1), u13 = pul.u.at(0, 2), u23 = pul.u.at(1, 2);
            GroupAction act_u(pul.u);

            // --- printed coefficient structures on U alone ---------------
            if (cse == 1 || cse == 2) {
                RatMatrix closed(static_cast<size_t>(two_k - 1)),
                    oracle(static_cast<size_t>(two_k - 1));
                bool structure = true;
                for (int i = 0; i <= two_k - 2; ++i) {
                    Monomial input = cse == 1 ? xi_monomial(k, i) : eta_monomial(k, i);
                    RepVector image = act_u.apply(single_monomial_vector(gamma, input));
                    for (int j = 0; j <= k - 1; ++j) {
                        Monomial target = Monomial::sl3(0, {j, two_k - j, 0}, {0, 0, 1});
                        Rational sum(0);
                        for (int i1 = 0; i1 <= j; ++i1) {
                            int i2 = j - i1;
                            if (i1 > i || i2 > two_k - i) continue;
                            Rational term = Rational::binomial(static_cast<unsigned long>(i),
                                                               static_cast<unsigned long>(i1)) *
                                            Rational::binomial(static_cast<unsigned long>(two_k - i),
                                                               static_cast<unsigned long>(i2));
                            if (cse == 1)
                                term = term * rat_pow(Rational(0), i - i1) * rat_pow(u13, i2) *
                                       rat_pow(u23, two_k - i - i2);
                            else
                                term = term * rat_pow(u12, i1) * rat_pow(u13, i2) *
                                       rat_pow(u23, two_k - i - i2);
                            sum += term;
                        }
                        Rational lead = cse == 1 ? -u23 : -u13;
                        closed[static_cast<size_t>(i)].push_back(lead * sum);
                        auto it = image.terms.find(target);
                        oracle[static_cast<size_t>(i)].push_back(
                            it == image.terms.end() ? Rational(0) : it->second);
                    }
                }
                bool equal = closed == oracle;
                if (cse == 1) {
                    case1_closed = case1_closed && equal;
                    for (int i = 0; i <= two_k - 2 && structure; ++i)
                        for (int j = 0; j <= k - 1; ++j) {
                            const Rational& c = closed[static_cast<size_t>(i)][static_cast<size_t>(j)];
                            if (j < i && !c.is_zero()) structure = false;
                            if (j == i && i <= k - 1 && c.is_zero()) structure = false;
                        }
                    case1_structure = case1_structure && structure;
                    int r = rank(closed);
                    min_rank_case1 = std::min(min_rank_case1, r);
                    case1_rank = case1_rank && r >= k;
                } else {
                    case2_closed = case2_closed && equal;
                    for (int i = 0; i <= two_k - 2 && structure; ++i)
                        for (int j = 0; j <= k - 1; ++j) {
                            const Rational& c = closed[static_cast<size_t>(i)][static_cast<size_t>(j)];
                            if (j < two_k - i && !c.is_zero()) structure = false;
                            if (j == two_k - i && c.is_zero()) structure = false;
                        }
                    case2_structure = case2_structure && structure;
                    int r = rank(closed);
                    min_rank_case2 = std::min(min_rank_case2, r);
                    case2_rank = case2_rank && r >= k - 2;
                }
            } else {
                // Case 3: the window projection of U.w' dies identically and
                // the offset from w0 is nonzero, so the affine set is empty.
                for (const RepVector& b : wprime_basis) {
                    RepVector image = act_u.apply(b);
                    for (const Rational& c : coords_of(image, window_coords[0]))
                        if (!c.is_zero()) {
                            case3_linear = false;
                            break;
                        }
                    if (!case3_linear) break;
                }
                // The printed offset computation lives in the reduced setting
                // with an identity permutation, where U L itself has
                // determinant 1.
                PULDecomposition pul_id = sample_pul(rng, 7, pat, false);
                GroupElement d = pul_id.u * pul_id.l;
                GroupAction act_d(d);
                RepVector dw0 = act_d.apply(pair.w0);
                bool all_zero = true;
                for (int j = 0; j <= k - 2; ++j) {
                    Monomial target = Monomial::sl3(0, {j, two_k - 1 - j, 1}, {0, 0, 1});
                    Rational expect =
                        Rational::binomial(static_cast<unsigned long>(two_k - 1),
                                           static_cast<unsigned long>(j)) *
                        (rat_pow(d.at(0, 1), j) * rat_pow(d.at(1, 1), two_k - 1 - j) +
                         rat_pow(d.at(0, 0), j) * rat_pow(d.at(1, 0), two_k - 1 - j));
                    auto it = dw0.terms.find(target);
                    Rational got = it == dw0.terms.end() ? Rational(0) : it->second;
                    if (!(expect == got)) case3_closed = false;
                    if (!got.is_zero()) all_zero = false;
                }
                case3_nonzero = case3_nonzero && !all_zero;
                // Linear part zero plus nonzero offset: empty solution set.
                RepVector dw0_proj_nonzero_check = dw0;
                bool offset_nonzero = false;
                for (const Rational& c : coords_of(dw0, window_coords[0]))
                    if (!c.is_zero()) offset_nonzero = true;
                bool linear_zero = true;
                for (const RepVector& b : wprime_basis) {
                    RepVector image = act_d.apply(b);
                    for (const Rational& c : coords_of(image, window_coords[0]))
                        if (!c.is_zero()) linear_zero = false;
                    if (!linear_zero) break;
                }
                case3_empty = case3_empty && linear_zero && offset_nonzero;
            }

            // --- universal family structures (hold for every unipotent U) --
            {
                RatMatrix xi_closed(static_cast<size_t>(two_k - 1)),
                    xi_oracle(static_cast<size_t>(two_k - 1));
                RatMatrix eta_closed(static_cast<size_t>(two_k - 1)),
                    eta_oracle(static_cast<size_t>(two_k - 1));
                for (int i = 0; i <= two_k - 2; ++i) {
                    RepVector xim = act_u.apply(single_monomial_vector(gamma, xi_monomial(k, i)));
                    RepVector etm = act_u.apply(single_monomial_vector(gamma, eta_monomial(k, i)));
                    for (int j = 0; j <= two_k; ++j) {
                        // coefficient of e1^j e3^{2k-j} (x) e2* in U.xi_i
                        Rational sum(0);
                        for (int i1 = 0; i1 <= j; ++i1) {
                            int i2 = j - i1;
                            if (i1 != i || i2 > two_k - i) continue;  // u31 = 0 collapses the sum
                            sum += Rational::binomial(static_cast<unsigned long>(two_k - i),
                                                      static_cast<unsigned long>(i2)) *
                                   rat_pow(u13, i2);
                        }
                        xi_closed[static_cast<size_t>(i)].push_back(sum);
                        Monomial xt = Monomial::sl3(0, {j, 0, two_k - j}, {0, 1, 0});
                        auto it = xim.terms.find(xt);
                        xi_oracle[static_cast<size_t>(i)].push_back(
                            it == xim.terms.end() ? Rational(0) : it->second);
                        // coefficient of e2^j e3^{2k-j} (x) e1* in U.eta_i
                        Rational esum(0);
                        if (j >= i)
                            esum = Rational::binomial(static_cast<unsigned long>(two_k - i),
                                                      static_cast<unsigned long>(j - i)) *
                                   rat_pow(u23, j - i);
                        eta_closed[static_cast<size_t>(i)].push_back(esum);
                        Monomial et = Monomial::sl3(0, {0, j, two_k - j}, {1, 0, 0});
                        auto eit = etm.terms.find(et);
                        eta_oracle[static_cast<size_t>(i)].push_back(
                            eit == etm.terms.end() ? Rational(0) : eit->second);
                    }
                }
                families_closed = families_closed && xi_closed == xi_oracle &&
                                  eta_closed == eta_oracle;
                auto block_rank = [](const RatMatrix& m, int j_lo, int j_hi) {
                    RatMatrix sub;
                    for (const auto& row : m) {
                        std::vector<Rational> r(row.begin() + j_lo, row.begin() + j_hi + 1);
                        sub.push_back(std::move(r));
                    }
                    return rank(sub);
                };
                int r132 = block_rank(xi_closed, 0, k - 1);
                int r312 = block_rank(xi_closed, k + 1, two_k);
                int r231 = block_rank(eta_closed, 0, k - 1);
                int r321 = block_rank(eta_closed, k + 1, two_k);
                min_rank_easier = std::min({min_rank_easier, r132, r312, r231, r321});
                easier_rank = easier_rank && r132 >= k - 2 && r312 >= k - 2 && r231 >= k - 2 &&
                              r321 >= k - 2;
                min_rank_s312 = std::min(min_rank_s312, r312);
                s312_closed = s312_closed && xi_closed == xi_oracle;
                s312_rank = s312_rank && r312 >= k - 2;
            }

            // --- direct codimension certificate on the full element -------
            {
                GroupElement a = pul.product();
                GroupAction action(a);
                size_t nwin = cert_windows.size();
                std::vector<WindowSweep> sweeps(nwin + 1);
                for (size_t wi = 0; wi < nwin; ++wi) sweeps[wi].coords = cert_coords[wi];
                sweeps[nwin].coords = window_coords[3];  // printed s312, observed only

                std::vector<size_t> order(wprime_basis.size());
                for (size_t i = 0; i < order.size(); ++i) order[i] = i;
                for (size_t i = order.size(); i-- > 1;)
                    std::swap(order[i], order[static_cast<size_t>(rng.uniform(
                                            0, static_cast<long long>(i)))]);

                auto all_certified = [&]() {
                    for (const WindowSweep& s : sweeps)
                        if (s.tracker.rank() < 9) return false;
                    return true;
                };
                for (size_t oi = 0; oi < order.size() && !all_certified(); ++oi) {
                    RepVector image = action.apply(wprime_basis[order[oi]]);
                    for (WindowSweep& s : sweeps) {
                        std::vector<Rational> row = coords_of(image, s.coords);
                        s.columns.push_back(row);
                        if (s.tracker.rank() < 9) s.tracker.add(std::move(row));
                    }
                }
                RepVector aw0 = action.apply(pair.w0);
                auto affine_empty = [&aw0](const WindowSweep& s) {
                    // Rank below 9: the affine set must be empty. Feasibility
                    // of (linear map) x = -offset over the swept columns
                    // decides it exactly when the sweep covered the basis.
                    std::vector<Rational> offset = coords_of(aw0, s.coords);
                    RatMatrix m(s.coords.size());
                    for (size_t r = 0; r < s.coords.size(); ++r) {
                        m[r].reserve(s.columns.size());
                        for (const auto& col : s.columns) m[r].push_back(col[r]);
                    }
                    std::vector<Rational> rhs;
                    rhs.reserve(offset.size());
                    for (const Rational& c : offset) rhs.push_back(-c);
                    return !solvable(std::move(m), std::move(rhs));
                };
                for (size_t wi = 0; wi < nwin; ++wi) {
                    if (sweeps[wi].tracker.rank() >= 9 || affine_empty(sweeps[wi])) continue;
                    codim_ok[cse - 1] = false;
                    codim_witness[cse - 1] = " window=" + cert_windows[wi].name +
                                             " trial=" + std::to_string(t) +
                                             " rank=" + std::to_string(sweeps[wi].tracker.rank());
                }
                if (sweeps[nwin].tracker.rank() < 9 && !affine_empty(sweeps[nwin]))
                    ++strict_violations;
            }

            // --- the lower factor preserves the low-l3 span (first trial) --
            if (t == 0) {
                GroupAction act_l(sample_pul(rng, 7, UnipotentPattern{}, false).l);
                for (const RepVector& b : wprime_basis) {
                    RepVector image = act_l.apply(b);
                    for (const auto& [m, c] : image.terms)
                        if (!low_l3.holds(weight_of(m, gamma))) l_preserves_wprime = false;
                    if (!l_preserves_wprime) break;
                }
            }
        }
    }

    report.check("sprime.case1.closed-form-matches-oracle", case1_closed);
    report.check("sprime.case1.triangular-structure", case1_structure);
    report.check("sprime.case1.rank", case1_rank,
                 "min_rank=" + std::to_string(min_rank_case1) + " need>=" + std::to_string(k));
    report.check("sprime.case2.closed-form-matches-oracle", case2_closed);
    report.check("sprime.case2.anti-triangular-structure", case2_structure);
    report.check("sprime.case2.rank", case2_rank,
                 "min_rank=" + std::to_string(min_rank_case2) + " need>=" + std::to_string(k - 2));
    report.check("sprime.case3.linear-part-vanishes", case3_linear);
    report.check("sprime.case3.offset-closed-form-matches-oracle", case3_closed);
    report.check("sprime.case3.offset-nonzero", case3_nonzero);
    report.check("sprime.case3.affine-set-empty", case3_empty);
    report.check("sprime.s312.closed-form-matches-oracle", s312_closed);
    report.check("sprime.s312.rank", s312_rank,
                 "min_rank=" + std::to_string(min_rank_s312) + " need>=" + std::to_string(k - 2));
    report.check("sprime.family-closed-forms-match-oracle", families_closed);
    report.check("sprime.easier-windows-rank", easier_rank,
                 "min_rank=" + std::to_string(min_rank_easier) + " need>=" + std::to_string(k - 2));
    for (int cse = 1; cse <= 3; ++cse)
        report.check("sprime.case" + std::to_string(cse) + ".codim9-all-windows",
                     codim_ok[cse - 1], codim_witness[cse - 1]);
    report.note("sprime.strict-reading-observation",
                strict_violations == 0
                    ? "strict-l2 window also satisfied codimension >= 9 in every trial"
                    : "strict-l2 window degenerated to codimension < 9 in " +
                          std::to_string(strict_violations) +
                          " trials (the printed strict inequality is not "
                          "permutation-symmetric); the non-strict family is certified above");
    report.check("sprime.lower-factor-preserves-wprime", l_preserves_wprime);
    return report;
}

// ---------------------------------------------------------------------------
// Step-two lemma: strip projections over the membership loci.
// ---------------------------------------------------------------------------

namespace {

// Strip coefficient data for the projection onto span{e_x^j e_y^{2k-j} (x) e_z*}.
struct StripSpec {
    int x, y, z;  // 1-based basis indices
    std::string name;
};

// c_{ij} = b_{z2} sum_{i1} C(i,i1) C(2k-i, j-i1) p^{i1} q^{i-i1} r^{j-i1} s^{2k-i-j+i1}
// with p = a_{x1}, q = a_{y1}, r = a_{x3}, s = a_{y3}.
struct StripMatrices {
    RatMatrix closed, oracle;
    Rational p, q, r, s, lead;
};

StripMatrices strip_matrices(int k, const GroupElement& a, GroupAction& action,
                             const StripSpec& spec) {
    int two_k = 2 * k;
    RepSpace gamma = RepSpace::sl3_gamma(two_k, 1);
    GroupElement b = transpose_inverse(a);
    StripMatrices out;
    out.p = a.at(spec.x - 1, 0);
    out.q = a.at(spec.y - 1, 0);
    out.r = a.at(spec.x - 1, 2);
    out.s = a.at(spec.y - 1, 2);
    out.lead = b.at(spec.z - 1, 1);
    out.closed.resize(static_cast<size_t>(two_k - 1));
    out.oracle.resize(static_cast<size_t>(two_k - 1));
    for (int i = 0; i <= two_k - 2; ++i) {
        RepVector v;
        v.space = gamma;
        v.add_term(xi_monomial(k, i), Rational(1));
        RepVector image = action.apply(v);
        for (int j = 0; j <= k - 1; ++j) {
            Rational sum(0);
            for (int i1 = 0; i1 <= j; ++i1) {
                if (i1 > i || j - i1 > two_k - i) continue;
                sum += Rational::binomial(static_cast<unsigned long>(i),
                                          static_cast<unsigned long>(i1)) *
                       Rational::binomial(static_cast<unsigned long>(two_k - i),
                                          static_cast<unsigned long>(j - i1)) *
                       rat_pow(out.p, i1) * rat_pow(out.q, i - i1) * rat_pow(out.r, j - i1) *
                       rat_pow(out.s, two_k - i - j + i1);
            }
            out.closed[static_cast<size_t>(i)].push_back(out.lead * sum);
            std::array<int, 3> alpha{0, 0, 0};
            alpha[static_cast<size_t>(spec.x - 1)] = j;
            alpha[static_cast<size_t>(spec.y - 1)] += two_k - j;
            std::array<int, 3> beta{0, 0, 0};
            beta[static_cast<size_t>(spec.z - 1)] = 1;
            auto it = image.terms.find(Monomial::sl3(0, alpha, beta));
            out.oracle[static_cast<size_t>(i)].push_back(
                it == image.terms.end() ? Rational(0) : it->second);
        }
    }
    return out;
}

RatMatrix chat_matrix(int k, const Rational& x, const Rational& y, int rows) {
    RatMatrix m(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= k - 1; ++j) {
            Rational sum(0);
            for (int i1 = 0; i1 <= j; ++i1) {
                if (i1 > i || j - i1 > 2 * k - i) continue;
                sum += Rational::binomial(static_cast<unsigned long>(i),
                                          static_cast<unsigned long>(i1)) *
                       Rational::binomial(static_cast<unsigned long>(2 * k - i),
                                          static_cast<unsigned long>(j - i1)) *
                       rat_pow(x, i1) * rat_pow(y, j - i1);
            }
            m[static_cast<size_t>(i)].push_back(sum);
        }
    return m;
}

}  // namespace

ScenarioReport verify_lemma_codim_s(int k, long trials, uint64_t seed) {
    if (k < 3) throw std::invalid_argument("verify_lemma_codim_s: needs k >= 3");
    ScenarioReport report;
    report.scenario = "sl3-lemma-s";
    report.param("k", std::to_string(k));
    report.param("trials", std::to_string(trials));
    report.param("seed", std::to_string(seed));
    if (k < 12)
        report.warnings.push_back(
            "exploratory: k < 12 is outside the guaranteed range of the construction");

    Sl3Pair pair = sl3_pair(k);
    SplitMix64 root(seed);

    // Sampling Y_alpha: generic elements land in every locus once the image
    // polytope fills out; explicit zero-entry templates reach the degenerate
    // subcases.
    const StripSpec specs_by_alpha[3][2] = {
        {{2, 3, 1, "s231"}, {3, 2, 1, "s321"}},
        {{1, 3, 2, "s132"}, {3, 1, 2, "s312"}},
        {{1, 2, 3, "s123"}, {2, 1, 3, "s213"}},
    };

    for (int alpha = 1; alpha <= 3; ++alpha) {
        long accepted = 0, attempts = 0;
        bool b_ok = true, closed_ok = true, rank9_ok = true, structure_ok = true;
        long subcase_counts[2][3] = {{0, 0, 0}, {0, 0, 0}};
        int min_rank = 1 << 20;
        std::string witness;

        // Degenerate template positions for this alpha's two strips.
        std::vector<std::pair<int, int>> zero_positions;
        for (const StripSpec& spec : specs_by_alpha[alpha - 1]) {
            zero_positions.emplace_back(spec.y, 1);  // q = a_{y1} = 0
            zero_positions.emplace_back(spec.y, 3);  // s = a_{y3} = 0
        }

        for (long t = 0; t < trials; ++t) {
            SplitMix64 rng = root.split(static_cast<uint64_t>(alpha) * 7000003ULL +
                                        static_cast<uint64_t>(t));
            bool found = false;
            GroupElement a = GroupElement::identity(3);
            for (int tries = 0; tries < 50 && !found; ++tries) {
                ++attempts;
                size_t source = static_cast<size_t>(tries + static_cast<int>(t)) %
                                (zero_positions.size() + 1);
                if (source == 0) {
                    a = random_shear_product(Group::SL3, rng, 7);
                } else {
                    auto [zr, zc] = zero_positions[source - 1];
                    a = sample_with_zero_entry(zr - 1, zc - 1, rng, 7);
                }
                GroupAction probe(a);
                WeightPolytope nav = support_polytope(probe.apply(pair.v));
                for (int j = 0; j < 3 && !found; ++j) {
                    long long L[3] = {0, 0, 0};
                    L[alpha - 1] -= k;
                    L[j] -= 1;
                    found = nav.contains(weight_from_L(L[0], L[1], L[2]));
                }
            }
            if (!found) continue;
            ++accepted;

            GroupElement b = transpose_inverse(a);
            if (b.at(alpha - 1, 1).is_zero()) {
                b_ok = false;
                witness = " b_alpha2=0 trial=" + std::to_string(t);
            }

            GroupAction action(a);
            for (int sidx = 0; sidx < 2; ++sidx) {
                const StripSpec& spec = specs_by_alpha[alpha - 1][sidx];
                StripMatrices m = strip_matrices(k, a, action, spec);
                if (!(m.closed == m.oracle)) {
                    closed_ok = false;
                    witness = " closed-form " + spec.name + " trial=" + std::to_string(t);
                }
                int r = rank(m.closed);
                min_rank = std::min(min_rank, r);
                if (r < 9) {
                    rank9_ok = false;
                    witness = " rank=" + std::to_string(r) + " " + spec.name +
                              " trial=" + std::to_string(t);
                }
                // Subcase structure.
                if (m.q.is_zero()) {
                    ++subcase_counts[sidx][0];
                    for (int i = 0; i <= 2 * k - 2 && structure_ok; ++i)
                        for (int j = 0; j <= k - 1; ++j) {
                            const Rational& c =
                                m.closed[static_cast<size_t>(i)][static_cast<size_t>(j)];
                            if (j < i && !c.is_zero()) structure_ok = false;
                            if (j == i && i <= k - 1 && c.is_zero()) structure_ok = false;
                        }
                    if (r < k) rank9_ok = false;
                } else if (m.s.is_zero()) {
                    ++subcase_counts[sidx][1];
                    for (int i = 0; i <= 2 * k - 2 && structure_ok; ++i)
                        for (int j = 0; j <= k - 1; ++j) {
                            const Rational& c =
                                m.closed[static_cast<size_t>(i)][static_cast<size_t>(j)];
                            if (j < 2 * k - i && !c.is_zero()) structure_ok = false;
                            if (j == 2 * k - i && c.is_zero()) structure_ok = false;
                        }
                } else {
                    ++subcase_counts[sidx][2];
                    Rational x = m.p / m.q, y = m.r / m.s;
                    if (x == y) structure_ok = false;
                    RatMatrix chat = chat_matrix(k, x, y, k);
                    if (determinant(chat).is_zero()) {
                        structure_ok = false;
                        witness = " vandermonde-det=0 trial=" + std::to_string(t);
                    }
                    if (rank(m.closed) != k) rank9_ok = false;
                }
            }
        }

        std::string tag = "s.alpha" + std::to_string(alpha);
        if (accepted == 0) {
            report.note(tag + ".sampling",
                        "indeterminate: no member found in " + std::to_string(attempts) +
                            " attempts");
            continue;
        }
        report.note(tag + ".sampling", "accepted=" + std::to_string(accepted) + "/" +
                                           std::to_string(attempts) + " subcases=[" +
                                           std::to_string(subcase_counts[0][0]) + "," +
                                           std::to_string(subcase_counts[0][1]) + "," +
                                           std::to_string(subcase_counts[0][2]) + "|" +
                                           std::to_string(subcase_counts[1][0]) + "," +
                                           std::to_string(subcase_counts[1][1]) + "," +
                                           std::to_string(subcase_counts[1][2]) + "]");
        report.check(tag + ".membership-implies-b-alpha2-nonzero", b_ok, witness);
        report.check(tag + ".closed-form-matches-oracle", closed_ok, witness);
        report.check(tag + ".rank-at-least-9", rank9_ok,
                     "min_rank=" + std::to_string(min_rank) + witness);
        report.check(tag + ".subcase-structure", structure_ok, witness);
    }

    // Vandermonde mechanism on its own: determinants and the leading
    // coefficient of the columns as polynomials in the row index, extracted
    // by finite differences.
    {
        SplitMix64 rng = root.split(0xabcdefULL);
        bool det_ok = true, lead_ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            Rational x(rng.uniform(-20, 20), rng.uniform(1, 9));
            Rational y(rng.uniform(-20, 20), rng.uniform(1, 9));
            if (x == y) y += Rational(1);
            RatMatrix chat = chat_matrix(k, x, y, 2 * k - 1);
            RatMatrix top(chat.begin(), chat.begin() + k);
            if (determinant(top).is_zero()) det_ok = false;
            if (trial < 10) {
                for (int j = 0; j <= k - 1 && lead_ok; ++j) {
                    Rational expect = Rational::pow(x - y, static_cast<unsigned long>(j));
                    // j-th finite difference in i is constantly j! * lead,
                    // and the (j+1)-st difference vanishes.
                    for (int i = 0; i + j + 1 <= 2 * k - 2 && lead_ok; ++i) {
                        Rational dj(0), dj1(0);
                        for (int r2 = 0; r2 <= j; ++r2) {
                            Rational bin = Rational::binomial(static_cast<unsigned long>(j),
                                                              static_cast<unsigned long>(r2));
                            Rational sgn = (j - r2) % 2 == 0 ? Rational(1) : Rational(-1);
                            dj += sgn * bin * chat[static_cast<size_t>(i + r2)][static_cast<size_t>(j)];
                        }
                        for (int r2 = 0; r2 <= j + 1; ++r2) {
                            Rational bin = Rational::binomial(static_cast<unsigned long>(j + 1),
                                                              static_cast<unsigned long>(r2));
                            Rational sgn = (j + 1 - r2) % 2 == 0 ? Rational(1) : Rational(-1);
                            dj1 += sgn * bin * chat[static_cast<size_t>(i + r2)][static_cast<size_t>(j)];
                        }
                        if (!(dj == expect) || !dj1.is_zero()) lead_ok = false;
                    }
                }
            }
        }
        report.check("s.vandermonde-determinant-sweep", det_ok, "pairs=100");
        report.check("s.vandermonde-leading-coefficient", lead_ok,
                     "finite differences over 10 pairs");
    }
    return report;
}

}  // namespace pairstab
