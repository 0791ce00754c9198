#include "pairstab/io.hpp"

#include "pairstab/version.hpp"

#include <fstream>
#include <sstream>

namespace pairstab::io {

namespace {

std::string group_name(Group g) { return g == Group::SL2 ? "SL2" : "SL3"; }

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

Rational coeff_from_json(const json& j) {
    if (!j.is_string()) fail("coefficient must be a rational string");
    Rational c = Rational::parse(j.get<std::string>());
    if (c.is_zero()) fail("zero coefficient stored in terms");
    return c;
}

}  // namespace

json laurent_to_json(const Laurent& l) {
    json arr = json::array();
    for (const auto& [e, c] : l.terms()) arr.push_back(json::array({e, c.str()}));
    return arr;
}

Laurent laurent_from_json(const json& j) {
    if (!j.is_array()) fail("Laurent scalar must be an array of [exponent, coeff] pairs");
    Laurent l;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) fail("bad Laurent term");
        l.add_term(term[0].get<long>(), Rational::parse(term[1].get<std::string>()));
    }
    return l;
}

json space_to_json(const RepSpace& s) {
    json j;
    j["group"] = group_name(s.group());
    switch (s.kind) {
        case RepSpace::Kind::sl2_sym:
            j["kind"] = "sym";
            j["n"] = s.n;
            break;
        case RepSpace::Kind::sl3_tensor:
            j["kind"] = "tensor";
            j["a"] = s.a;
            j["b"] = s.b;
            break;
        case RepSpace::Kind::sl3_gamma:
            j["kind"] = "gamma";
            j["a"] = s.a;
            j["b"] = s.b;
            break;
        case RepSpace::Kind::sum: {
            j["kind"] = "sum";
            json parts = json::array();
            for (const RepSpace& c : s.parts) parts.push_back(space_to_json(c));
            j["components"] = parts;
            break;
        }
    }
    return j;
}

RepSpace space_from_json(const json& j) {
    std::string group = j.at("group").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "sum") {
        std::vector<RepSpace> parts;
        for (const auto& c : j.at("components")) parts.push_back(space_from_json(c));
        RepSpace s = RepSpace::direct_sum(std::move(parts));
        if (group_name(s.group()) != group) fail("direct sum group tag mismatch");
        return s;
    }
    if (kind == "sym") {
        if (group != "SL2") fail("sym spaces belong to SL2");
        return RepSpace::sl2_sym(j.at("n").get<int>());
    }
    if (group != "SL3") fail("tensor/gamma spaces belong to SL3");
    int a = j.at("a").get<int>(), b = j.at("b").get<int>();
    if (kind == "tensor") return RepSpace::sl3_tensor(a, b);
    if (kind == "gamma") return RepSpace::sl3_gamma(a, b);
    fail("unknown space kind '" + kind + "'");
}

json vector_to_json(const RepVector& v) {
    json j;
    j["space"] = space_to_json(v.space);
    json terms = json::array();
    for (const auto& [m, c] : v.terms) {
        json t;
        t["component"] = m.component;
        if (m.sl2()) {
            t["i"] = m.i;
            t["n"] = m.n;
        } else {
            t["alpha"] = m.alpha;
            t["beta"] = m.beta;
        }
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = terms;
    return j;
}

RepVector vector_from_json(const json& j) {
    RepVector v;
    v.space = space_from_json(j.at("space"));
    for (const auto& t : j.at("terms")) {
        Monomial m;
        m.component = t.at("component").get<int>();
        if (t.contains("i")) {
            m.i = t.at("i").get<int>();
            m.n = t.at("n").get<int>();
        } else {
            auto alpha = t.at("alpha"), beta = t.at("beta");
            if (!alpha.is_array() || alpha.size() != 3 || !beta.is_array() || beta.size() != 3)
                fail("alpha/beta must be length-3 arrays");
            for (int x = 0; x < 3; ++x) {
                m.alpha[static_cast<size_t>(x)] = alpha[static_cast<size_t>(x)].get<int>();
                m.beta[static_cast<size_t>(x)] = beta[static_cast<size_t>(x)].get<int>();
            }
        }
        validate_monomial(m, v.space);
        if (v.terms.count(m)) fail("duplicate monomial in terms");
        v.add_term(m, coeff_from_json(t.at("coeff")));
    }
    // Kernel-space vectors must actually lie in the kernel.
    const RepSpace& s = v.space;
    if (s.kind == RepSpace::Kind::sl3_gamma && s.a >= 1 && s.b >= 1 && !v.is_zero()) {
        if (!contract(v).is_zero()) fail("vector is not in the contraction kernel");
    }
    return v;
}

json matrix_to_json(const GroupElement& g) {
    json rows = json::array();
    for (int i = 0; i < g.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.size(); ++j) row.push_back(g.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json polytope_to_json(const WeightPolytope& p) {
    json j;
    json support = json::array(), hull = json::array();
    for (const Weight& w : p.support()) support.push_back(json::array({w.c1, w.c2}));
    for (const Weight& w : p.hull()) hull.push_back(json::array({w.c1, w.c2}));
    j["support"] = support;
    j["hull"] = hull;
    return j;
}

json curve_to_json(const GroupCurve& c) {
    json j;
    j["size"] = c.matrix.size();
    json rows = json::array();
    for (int i = 0; i < c.matrix.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < c.matrix.size(); ++k) row.push_back(laurent_to_json(c.matrix.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = rows;
    return j;
}

GroupCurve curve_from_json(const json& j) {
    int n = j.at("size").get<int>();
    if (n != 2 && n != 3) fail("curve size must be 2 or 3");
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) fail("bad curve entries");
    CurveMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!rows[static_cast<size_t>(i)].is_array() ||
            static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            fail("bad curve row");
        for (int k = 0; k < n; ++k)
            m.at(i, k) = laurent_from_json(rows[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    }
    return GroupCurve(std::move(m));
}

json sampler_config_to_json(const SamplerConfig& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["bound"] = cfg.bound;
    json strata = json::array();
    for (const std::string& s : cfg.strata) strata.push_back(s);
    j["strata"] = strata;
    return j;
}

json verdict_to_json(const PairVerdict& v) {
    json j;
    j["kind"] = verdict_kind_name(v.kind);
    if (v.ord_v) j["ord_v"] = *v.ord_v;
    if (v.ord_w) j["ord_w"] = *v.ord_w;
    if (v.sample_index) j["sample_index"] = *v.sample_index;
    if (v.witness_weight)
        j["witness_weight"] = json::array({v.witness_weight->c1, v.witness_weight->c2});
    if (v.witness_g) j["witness_g"] = matrix_to_json(*v.witness_g);
    if (v.limit) j["limit"] = vector_to_json(*v.limit);
    j["samples_run"] = v.samples_run;
    return j;
}

json report_to_json(const ScenarioReport& r) {
    json j;
    j["tool"]["name"] = kToolName;
    j["tool"]["version"] = kToolVersion;
    j["scenario"] = r.scenario;
    json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    json warnings = json::array();
    for (const std::string& w : r.warnings) warnings.push_back(w);
    j["warnings"] = warnings;
    json list = json::array();
    for (const CheckItem& c : r.checklist) {
        json item;
        item["id"] = c.id;
        item["pass"] = c.pass;
        if (c.indeterminate) item["indeterminate"] = true;
        item["detail"] = c.detail;
        list.push_back(std::move(item));
    }
    j["checklist"] = list;
    j["overall"] = r.overall() ? "pass" : "fail";
    return j;
}

std::string report_text(const ScenarioReport& r) {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << "  scenario=" << r.scenario << "\n";
    for (const auto& [k, v] : r.params) os << "  " << k << "=" << v << "\n";
    for (const std::string& w : r.warnings) os << "  warning: " << w << "\n";
    for (const CheckItem& c : r.checklist) {
        os << (c.pass ? (c.indeterminate ? "  note " : "  pass ") : "  FAIL ") << c.id;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << "overall: " << (r.overall() ? "pass" : "fail") << "\n";
    return os.str();
}

RepVector load_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail("parse error in '" + path + "' at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return vector_from_json(j);
}

GroupCurve load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail("parse error in '" + path + "' at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return curve_from_json(j);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) fail("cannot write '" + path + "'");
    out << content;
}

}  // namespace pairstab::io
