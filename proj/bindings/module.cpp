#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pairstab/io.hpp"
#include "pairstab/repro.hpp"
#include "pairstab/svg.hpp"
#include "pairstab/version.hpp"

namespace py = pybind11;
using namespace pairstab;

namespace {

// JSON strings keep the interface thin and identical to the CLI formats.
RepVector vector_from_string(const std::string& text) {
    return io::vector_from_json(io::json::parse(text));
}

GroupCurve curve_from_string(const std::string& text) {
    return io::curve_from_json(io::json::parse(text));
}

GroupElement matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    int n = static_cast<int>(rows.size());
    GroupElement g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix rows must be square");
        for (int j = 0; j < n; ++j)
            g.at(i, j) = Rational::parse(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact semistability checks for vector pairs in SL2/SL3 representations";
    m.attr("__version__") = kToolVersion;

    m.def("gamma_dimension", [](int a, int b) { return gamma_dimension_formula(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("gamma_basis_size", [](int a, int b) { return gamma_basis(a, b).size(); },
          py::arg("a"), py::arg("b"));
    m.def("wprime_dimension", [](int k) { return sl3_wprime_basis(k).size(); }, py::arg("k"));

    m.def("sl2_reducible_pair_json", [](int n) {
        Sl2ReduciblePair p = sl2_reducible_pair(n);
        return py::make_tuple(io::vector_to_json(p.v).dump(), io::vector_to_json(p.w).dump());
    });
    m.def("sl3_pair_json", [](int k) {
        Sl3Pair p = sl3_pair(k);
        return py::make_tuple(io::vector_to_json(p.v).dump(), io::vector_to_json(p.w0).dump());
    });
    m.def("sl3_shifted_pair_json", [](int k, uint64_t seed, long long bound) {
        Sl3Pair p = sl3_pair(k);
        RepVector w = p.w0 + random_vector(sl3_wprime_basis(k), seed, bound);
        return py::make_tuple(io::vector_to_json(p.v).dump(), io::vector_to_json(w).dump());
    }, py::arg("k"), py::arg("seed") = Defaults::seed, py::arg("bound") = Defaults::wprime_bound);

    m.def("support_polytope_json", [](const std::string& vec) {
        return io::polytope_to_json(support_polytope(vector_from_string(vec))).dump();
    });
    m.def("polytope_svg", [](const std::string& vec) {
        return polytope_svg(support_polytope(vector_from_string(vec)));
    });
    m.def("act_group_json", [](const std::vector<std::vector<std::string>>& g,
                               const std::string& vec) {
        return io::vector_to_json(act_group(matrix_from_rows(g), vector_from_string(vec))).dump();
    });
    m.def("act_lie_json", [](int i, int j, const std::string& vec) {
        return io::vector_to_json(act_lie(i, j, vector_from_string(vec))).dump();
    });
    m.def("contract_json", [](const std::string& vec) {
        return io::vector_to_json(contract(vector_from_string(vec))).dump();
    });

    m.def("numerically_semistable_at", [](const std::vector<std::vector<std::string>>& g,
                                          const std::string& v, const std::string& w) {
        return io::verdict_to_json(numerically_semistable_at(
                                       matrix_from_rows(g), vector_from_string(v),
                                       vector_from_string(w)))
            .dump();
    });
    m.def("sample_numerical_semistability",
          [](const std::string& v, const std::string& w, uint64_t seed, long samples,
             long long bound) {
              SamplerConfig cfg;
              cfg.seed = seed;
              cfg.samples = samples;
              cfg.bound = bound;
              return io::verdict_to_json(sample_numerical_semistability(
                                             vector_from_string(v), vector_from_string(w), cfg))
                  .dump();
          },
          py::arg("v"), py::arg("w"), py::arg("seed") = Defaults::seed,
          py::arg("samples") = Defaults::samples, py::arg("bound") = Defaults::bound);
    m.def("destabilizes", [](const std::string& curve, const std::string& v,
                             const std::string& w) {
        return io::verdict_to_json(destabilizes(curve_from_string(curve), vector_from_string(v),
                                                vector_from_string(w)))
            .dump();
    });
    m.def("curve_order", [](const std::string& curve, const std::string& v) {
        return curve_order(curve_from_string(curve), vector_from_string(v));
    });
    m.def("sl3_mu_curve_json", [](long mu) { return io::curve_to_json(sl3_mu_curve(mu)).dump(); });
    m.def("sl2_reducible_curve_json", []() {
        return io::curve_to_json(sl2_reducible_curve()).dump();
    });
    m.def("torus_destabilizes", [](const std::string& w) {
        TorusVerdict verdict = torus_destabilizes(vector_from_string(w));
        return py::make_tuple(verdict.destabilizing,
                              verdict.witness ? py::object(py::make_tuple(verdict.witness->first,
                                                                          verdict.witness->second))
                                              : py::object(py::none()));
    });
    m.def("q_obstruction", [](long n, long m, long g1, long g2) {
        return q_obstruction(n, m, g1, g2).str();
    });
    m.def("degree_of_space", [](const std::string& vec) {
        return degree_of(space_polytope(vector_from_string(vec).space));
    });

    m.def("verify", [](const std::string& scenario, py::kwargs kwargs) {
        auto geti = [&kwargs](const char* key, long long dflt) {
            return kwargs.contains(key) ? kwargs[key].cast<long long>() : dflt;
        };
        int k = static_cast<int>(geti("k", 12));
        int n = static_cast<int>(geti("n", 3));
        uint64_t seed = static_cast<uint64_t>(geti("seed", Defaults::seed));
        long samples = static_cast<long>(geti("samples", Defaults::samples));
        long trials = static_cast<long>(geti("trials", Defaults::trials));
        long m_max = static_cast<long>(geti("m_max", Defaults::m_max));
        ScenarioReport report;
        if (scenario == "sl2-irreducible")
            report = verify_sl2_irreducible(12, 12, trials, seed);
        else if (scenario == "sl2-reducible")
            report = verify_sl2_reducible(n, samples, seed);
        else if (scenario == "sl3")
            report = verify_sl3(k, seed, samples, Defaults::mu_list());
        else if (scenario == "sl3-lemma-sprime")
            report = verify_lemma_codim_sprime(k, trials, seed);
        else if (scenario == "sl3-lemma-s")
            report = verify_lemma_codim_s(k, trials, seed);
        else if (scenario == "sl3-stability")
            report = verify_stability_remark(k, seed, samples, m_max);
        else
            throw std::invalid_argument("unknown scenario '" + scenario + "'");
        return io::report_to_json(report).dump();
    });
}
