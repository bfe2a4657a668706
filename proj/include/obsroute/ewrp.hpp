#pragma once

#include <optional>
#include <vector>

#include "obsroute/geom.hpp"

namespace obsroute {

enum class RouteKind { Perimeter, DoubledChain };

/// External watchman route for a single convex polygon: either the full
/// perimeter or a doubled open chain (stored once; length counts it twice).
struct WatchmanRoute {
    RouteKind kind;
    std::vector<Point> polyline;  // closed ring for Perimeter, open chain otherwise
    double length;
    double chain_length() const { return kind == RouteKind::DoubledChain ? length / 2 : length; }
};

WatchmanRoute perimeter_route(const ConvexPolygon& p);

/// Doubled chain wrapping the boundary arc from edge i to edge j (CCW) with a
/// leg at each end reaching the supporting lines of the uncovered edges.
/// Absent when no finite legs cover everything.
std::optional<WatchmanRoute> doubled_chain_route(const ConvexPolygon& p, int i, int j);

/// True iff every boundary point of P is visible from some route point.
/// Visible arcs per viewpoint are exact (an edge is visible exactly when the
/// viewpoint lies in its closed outer half-plane); the viewpoint sampling
/// density doubles until the covered edge set stabilizes.
bool coverage_check(const WatchmanRoute& route, const ConvexPolygon& p, int samples = 64);

/// Shortest route among the perimeter and all feasible doubled chains;
/// ties go to the perimeter.
WatchmanRoute best_external_watchman(const ConvexPolygon& p);

/// All-obtuse convex n-gon whose shortest external watchman route beats the
/// perimeter: shortened-base pentagon for n = 5, corner cuts and repeated
/// shaving for larger n. Requires n >= 5 and 0 < eps < (2 - sqrt 3)/(3 sqrt 3).
ConvexPolygon make_obtuse_counterexample(int n, double eps);

}  // namespace obsroute
