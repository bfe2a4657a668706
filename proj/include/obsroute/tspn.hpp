#pragma once

#include <map>
#include <optional>
#include <vector>

#include "obsroute/arrangement.hpp"
#include "obsroute/geom.hpp"

namespace obsroute {

/// Connected regions to be visited by one closed tour. Regions may overlap.
struct RegionSet {
    std::vector<PolygonWithHoles> regions;
    Box box;
};

/// Closed tour with one certified touch point per region. Vertices are stored
/// exactly (coordinates produced by double arithmetic embed exactly), the
/// length is binary64.
struct Tour {
    std::vector<Point> vertices;  // closed; last connects back to first
    double length = 0;
    std::map<int, Point> witness;

    void recompute_length();
    bool point_on_tour(const Point& p) const;
};

/// Heuristic tour visiting every region: common-point shortcut, deepest-point
/// witnesses, 2-opt order, then touch-point refinement. Always valid; quality
/// is measured against the exact oracle, not guaranteed.
Tour tspn_tour(const RegionSet& rs);

/// One full pass of local touch-point optimization per region in tour order,
/// repeated until the round improvement falls below 1e-7 of the length.
Tour refine_touch_points(const std::vector<int>& order, const RegionSet& rs, const Tour& t);

/// Exact dynamic program over visiting orders and per-region candidate touch
/// points (boundary vertices, edge midpoints, deepest point), followed by
/// order-wise refinement. Upper bound on the discretized optimum.
Tour exact_small_tspn(const RegionSet& rs, int candidates_per_region = 16);

/// Deepest-point heuristic: center of the largest inscribed axis-aligned
/// square found by binary search over grid shifts; falls back to the anchor.
Point deepest_point(const PolygonWithHoles& region);

/// Candidate touch points used by the exact solver.
std::vector<Point> region_candidates(const PolygonWithHoles& region, int cap);

/// Minimizes |a x| + |x b| over x in the region (used by refinement).
Point best_touch_point(const PolygonWithHoles& region, const Point& a, const Point& b);

}  // namespace obsroute
