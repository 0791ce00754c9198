#pragma once

#include <string>

#include <json.hpp>

#include "pairstab/repro.hpp"
#include "pairstab/stability.hpp"

namespace pairstab::io {

/// Ordered JSON keeps key insertion order, which together with exact scalar
/// strings makes every emitted document byte-stable.
using json = nlohmann::ordered_json;

json laurent_to_json(const Laurent& l);
Laurent laurent_from_json(const json& j);

json space_to_json(const RepSpace& s);
RepSpace space_from_json(const json& j);

json vector_to_json(const RepVector& v);
RepVector vector_from_json(const json& j);

json matrix_to_json(const GroupElement& g);
json polytope_to_json(const WeightPolytope& p);

json curve_to_json(const GroupCurve& c);
GroupCurve curve_from_json(const json& j);

json verdict_to_json(const PairVerdict& v);
json sampler_config_to_json(const SamplerConfig& cfg);

json report_to_json(const ScenarioReport& r);
std::string report_text(const ScenarioReport& r);

/// File loaders; parse and validation errors surface as std::runtime_error
/// with a byte location when available.
RepVector load_vector_file(const std::string& path);
GroupCurve load_curve_file(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace pairstab::io
