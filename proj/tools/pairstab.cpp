#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "pairstab/io.hpp"
#include "pairstab/repro.hpp"
#include "pairstab/svg.hpp"
#include "pairstab/version.hpp"

namespace {

using namespace pairstab;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

uint64_t default_seed() {
    // PAIRSTAB_SEED overrides only the built-in default; an explicit --seed
    // always wins.
    if (const char* env = std::getenv("PAIRSTAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::runtime_error("PAIRSTAB_SEED is not an integer");
        }
    }
    return Defaults::seed;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        io::write_file(out_path, content);
}

std::vector<GroupCurve> default_curve_grid(Group g) {
    std::vector<GroupCurve> grid;
    if (g == Group::SL2) {
        for (long p = 1; p <= 4; ++p) {
            grid.push_back(diagonal_curve({-p, p}));
            grid.push_back(diagonal_curve({p, -p}));
        }
        for (long p = 1; p <= 6; ++p)
            for (long tau = 1; tau <= 6; ++tau)
                for (long c : {1L, -1L}) {
                    grid.push_back(sl2_shear_curve(p, tau, Rational(c)));
                    grid.push_back(sl2_shear_curve(-p, tau, Rational(c)));
                }
        return grid;
    }
    for (long mu = 1; mu <= 3; ++mu) grid.push_back(sl3_mu_curve(mu));
    const long dirs[6][2] = {{-1, 0}, {0, -1}, {-1, -1}, {1, 0}, {0, 1}, {1, 1}};
    for (const auto& d : dirs)
        for (long s = 1; s <= 2; ++s)
            grid.push_back(diagonal_curve({s * d[0], s * d[1], -s * (d[0] + d[1])}));
    return grid;
}

int cmd_polytope(const std::string& input, const std::string& format, const std::string& out) {
    RepVector v = io::load_vector_file(input);
    WeightPolytope p = support_polytope(v);
    if (format == "svg") {
        emit(polytope_svg(p), out);
        return kExitPass;
    }
    io::json j = io::polytope_to_json(p);
    io::json extents;
    for (Functional f : {Functional::l1, Functional::l2, Functional::l3, Functional::f1,
                         Functional::f2, Functional::f3})
        extents[functional_name(f)] =
            io::json::array({p.min_functional(f), p.max_functional(f)});
    j["functional_extents"] = extents;
    if (format == "text") {
        std::ostringstream os;
        os << "support:";
        for (const Weight& w : p.support()) os << " (" << w.c1 << "," << w.c2 << ")";
        os << "\nhull:";
        for (const Weight& w : p.hull()) os << " (" << w.c1 << "," << w.c2 << ")";
        os << "\n";
        for (auto& [name, range] : extents.items())
            os << name << ": [" << range[0] << ", " << range[1] << "]\n";
        emit(os.str(), out);
    } else {
        emit(j.dump(2) + "\n", out);
    }
    return kExitPass;
}

int cmd_check_pair(const std::string& v_path, const std::string& w_path, SamplerConfig cfg,
                   const std::string& format, const std::string& out) {
    RepVector v = io::load_vector_file(v_path);
    RepVector w = io::load_vector_file(w_path);
    if (v.space.group() != w.space.group()) throw std::runtime_error("pair groups differ");

    PairVerdict sampled = sample_numerical_semistability(v, w, cfg);
    bool destabilized = false;
    io::json destab_info = io::json::array();
    for (const GroupCurve& curve : default_curve_grid(v.space.group())) {
        PairVerdict verdict = destabilizes(curve, v, w);
        if (verdict.kind == VerdictKind::destabilized) {
            destabilized = true;
            io::json d;
            d["curve"] = io::curve_to_json(curve);
            d["verdict"] = io::verdict_to_json(verdict);
            destab_info.push_back(std::move(d));
            break;
        }
    }
    io::json j;
    j["tool"]["name"] = kToolName;
    j["tool"]["version"] = kToolVersion;
    j["config"] = io::sampler_config_to_json(cfg);
    j["sampled"] = io::verdict_to_json(sampled);
    j["destabilized"] = destabilized;
    j["destabilizations"] = destab_info;
    bool pass = sampled.kind == VerdictKind::sample_pass && !destabilized;
    j["pass"] = pass;
    if (format == "text") {
        std::ostringstream os;
        os << "sampled: " << verdict_kind_name(sampled.kind) << " (" << sampled.samples_run
           << " samples)\n"
           << "curve grid: " << (destabilized ? "destabilized" : "no destabilization found")
           << "\nresult: " << (pass ? "pass" : "fail") << "\n";
        emit(os.str(), out);
    } else {
        emit(j.dump(2) + "\n", out);
    }
    return pass ? kExitPass : kExitVerificationFailure;
}

int cmd_destab(const std::string& v_path, const std::string& w_path,
               const std::string& curve_path, long mu, bool reducible, const std::string& format,
               const std::string& out) {
    RepVector v = io::load_vector_file(v_path);
    RepVector w = io::load_vector_file(w_path);
    std::optional<GroupCurve> curve;
    if (!curve_path.empty())
        curve = io::load_curve_file(curve_path);
    else if (reducible)
        curve = sl2_reducible_curve();
    else if (mu > 0)
        curve = sl3_mu_curve(mu);
    else
        throw std::runtime_error("destab needs --curve, --mu, or --reducible");
    PairVerdict verdict = destabilizes(*curve, v, w);
    io::json j = io::verdict_to_json(verdict);
    j["curve"] = io::curve_to_json(*curve);
    if (format == "text") {
        std::ostringstream os;
        os << "ord_v=" << verdict.ord_v.value_or(0) << " ord_w=" << verdict.ord_w.value_or(0)
           << " verdict=" << verdict_kind_name(verdict.kind) << "\n";
        emit(os.str(), out);
    } else {
        emit(j.dump(2) + "\n", out);
    }
    return verdict.kind == VerdictKind::destabilized ? kExitVerificationFailure : kExitPass;
}

int cmd_hm(const std::string& w_path, const std::string& format, const std::string& out) {
    RepVector w = io::load_vector_file(w_path);
    TorusVerdict verdict = torus_destabilizes(w);
    io::json j;
    j["destabilizing"] = verdict.destabilizing;
    if (verdict.witness)
        j["witness"] = io::json::array({verdict.witness->first, verdict.witness->second});
    if (format == "text") {
        std::ostringstream os;
        os << (verdict.destabilizing ? "torus-destabilized" : "origin inside the weight polytope");
        if (verdict.witness)
            os << "  witness=(" << verdict.witness->first << "," << verdict.witness->second
               << ")";
        os << "\n";
        emit(os.str(), out);
    } else {
        emit(j.dump(2) + "\n", out);
    }
    return verdict.destabilizing ? kExitVerificationFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semistability checks for vector pairs in SL2/SL3 representations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    std::string format = "json", out_path, input, v_path, w_path, curve_path;
    uint64_t seed = 0;
    bool seed_given = false;
    long samples = Defaults::samples, trials = Defaults::trials, m_max = Defaults::m_max;
    long long bound = Defaults::bound;
    int k = 12, n = 3;
    long mu_single = 0;
    bool reducible_curve = false, allow_small_k = false, nonstrict = false;
    std::vector<long> mu_list;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, text, or svg")->default_val("json");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };
    auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "PRNG seed")->each([&](const std::string&) {
            seed_given = true;
        });
        cmd->add_option("--samples", samples, "sample count");
        cmd->add_option("--bound", bound, "entry bound for sampled elements");
    };

    auto* polytope_cmd = app.add_subcommand("polytope", "weight support, hull, and extents");
    polytope_cmd->add_option("input", input, "vector JSON file")->required();
    add_common(polytope_cmd);

    auto* check_cmd = app.add_subcommand("check-pair", "sampled inclusion plus the curve grid");
    check_cmd->add_option("v", v_path, "vector file for v")->required();
    check_cmd->add_option("w", w_path, "vector file for w")->required();
    add_common(check_cmd);
    add_sampling(check_cmd);

    auto* destab_cmd = app.add_subcommand("destab", "orders of vanishing along one curve");
    destab_cmd->add_option("v", v_path, "vector file for v")->required();
    destab_cmd->add_option("w", w_path, "vector file for w")->required();
    destab_cmd->add_option("--curve", curve_path, "curve JSON file");
    destab_cmd->add_option("--mu", mu_single, "built-in SL3 diagonal-shear curve");
    destab_cmd->add_flag("--reducible", reducible_curve, "built-in SL2 reducible-case curve");
    add_common(destab_cmd);

    auto* hm_cmd = app.add_subcommand("hm", "classical torus check for a single vector");
    hm_cmd->add_option("w", w_path, "vector file")->required();
    add_common(hm_cmd);

    auto* repro_cmd = app.add_subcommand("repro", "scenario verifiers");
    std::string scenario;
    repro_cmd
        ->add_option("scenario", scenario,
                     "sl2-irreducible | sl2-reducible | sl3 | sl3-lemmas | sl3-stability")
        ->required();
    repro_cmd->add_option("--k", k, "SL3 parameter k");
    repro_cmd->add_option("--n", n, "SL2 parameter n");
    repro_cmd->add_option("--trials", trials, "trial count");
    repro_cmd->add_option("--m-max", m_max, "stability search bound");
    repro_cmd->add_option("--mu", mu_list, "comma-separated mu list")->delimiter(',');
    repro_cmd->add_flag("--allow-small-k", allow_small_k, "run k < 12 as exploratory");
    repro_cmd->add_flag("--sprime-312-nonstrict", nonstrict,
                        "sensitivity run: read the strict window inequality as non-strict");
    add_common(repro_cmd);
    add_sampling(repro_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!seed_given) seed = default_seed();
        if (polytope_cmd->parsed()) return cmd_polytope(input, format, out_path);
        if (check_cmd->parsed()) {
            SamplerConfig cfg;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.bound = bound;
            return cmd_check_pair(v_path, w_path, cfg, format, out_path);
        }
        if (destab_cmd->parsed())
            return cmd_destab(v_path, w_path, curve_path, mu_single, reducible_curve, format,
                              out_path);
        if (hm_cmd->parsed()) return cmd_hm(w_path, format, out_path);

        // repro
        if (k < 12 && (scenario == "sl3" || scenario == "sl3-lemmas" ||
                       scenario == "sl3-stability") &&
            !allow_small_k)
            throw std::runtime_error("k < 12 is exploratory; pass --allow-small-k to run it");
        std::vector<ScenarioReport> reports;
        if (scenario == "sl2-irreducible") {
            reports.push_back(verify_sl2_irreducible(12, 12, trials, seed));
        } else if (scenario == "sl2-reducible") {
            reports.push_back(verify_sl2_reducible(n, samples, seed));
        } else if (scenario == "sl3") {
            std::vector<long> mus = mu_list.empty() ? Defaults::mu_list() : mu_list;
            reports.push_back(verify_sl3(k, seed, samples, mus));
        } else if (scenario == "sl3-lemmas") {
            LemmaOptions options;
            options.strict_l2_in_s312 = !nonstrict;
            reports.push_back(verify_lemma_codim_sprime(k, trials, seed, options));
            reports.push_back(verify_lemma_codim_s(k, trials, seed));
        } else if (scenario == "sl3-stability") {
            reports.push_back(verify_stability_remark(k, seed, samples, m_max));
        } else {
            throw std::runtime_error("unknown scenario '" + scenario + "'");
        }
        bool pass = true;
        std::string rendered;
        if (format == "text") {
            for (const ScenarioReport& r : reports) rendered += io::report_text(r);
        } else {
            io::json j = reports.size() == 1 ? io::report_to_json(reports[0]) : io::json::array();
            if (reports.size() > 1)
                for (const ScenarioReport& r : reports) j.push_back(io::report_to_json(r));
            rendered = j.dump(2) + "\n";
        }
        for (const ScenarioReport& r : reports) pass = pass && r.overall();
        emit(rendered, out_path);
        return pass ? kExitPass : kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
