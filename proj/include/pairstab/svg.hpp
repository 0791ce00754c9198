#pragma once

#include <optional>
#include <string>

#include "pairstab/polytope.hpp"

namespace pairstab {

/// Deterministic SVG rendering: 10px per lattice step, hulls as closed
/// paths, support points as dots. When `inner` is present it is overlaid
/// with a distinct stroke class.
std::string polytope_svg(const WeightPolytope& outer,
                         const std::optional<WeightPolytope>& inner = std::nullopt);

}  // namespace pairstab
