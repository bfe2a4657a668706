#pragma once

#include <optional>
#include <string>

#include "obsroute/arrangement.hpp"
#include "obsroute/tspn.hpp"
#include "obsroute/visibility.hpp"

namespace obsroute {

/// Deterministic SVG drawing: box outline, filled obstacles, optionally a
/// visibility region (outline + hatched holes) and a tour with witness marks.
/// Coordinates are rounded to 1e-6 for display only.
std::string render_svg(const Instance& inst, const PolygonWithHoles* region = nullptr,
                       const Tour* tour = nullptr);

}  // namespace obsroute
