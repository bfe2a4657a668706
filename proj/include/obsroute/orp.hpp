#pragma once

#include <map>
#include <vector>

#include "obsroute/tspn.hpp"
#include "obsroute/visibility.hpp"

namespace obsroute {

struct DetourEntry {
    int obstacle;
    double chord;
    double boundary_path;
};

/// Closed route avoiding all open obstacle interiors, with a certified
/// observation point per obstacle and the log of boundary detours taken.
struct ObservationRoute {
    Tour tour;
    std::map<int, Point> observed_from;
    std::vector<DetourEntry> detour_log;
    int detour_iterations = 0;
};

struct ValidationReport {
    bool interior_avoidance = false;
    bool coverage = false;
    bool closed = false;
    double length = 0;
    std::vector<int> uncovered;  // obstacle indices that failed coverage
    bool valid() const { return interior_avoidance && coverage && closed; }
};

/// Replace every maximal obstacle-crossing subpath by the shorter boundary
/// arc, iterating to a fixpoint. Witness points are preserved.
Tour detour_transform(const Tour& t, const Instance& inst,
                      std::vector<DetourEntry>* log = nullptr, int* iterations = nullptr);

/// Visibility regions, a TSPN tour over them, then boundary detours.
ObservationRoute solve_orp(const Instance& inst);
ObservationRoute solve_orp(const Instance& inst, const std::vector<PolygonWithHoles>& regions);

ValidationReport validate_observation_route(const ObservationRoute& route, const Instance& inst);

/// Discretized optimum proxy: candidate observation points (region boundary
/// vertices + free grid points) filtered per target by sees(), exact DP over
/// visiting orders and candidates, then boundary detours. Targets default to
/// all obstacles; at most 6 targets. With use_regions = false the region
/// construction is skipped and only grid + extra candidates are used (for
/// instances whose tangent arrangements are out of desk scale).
Tour discretized_opt_orp(const Instance& inst, int grid = 12,
                         std::vector<int> targets = {},
                         const std::vector<Point>& extra_candidates = {},
                         bool use_regions = true);

/// Same search over precomputed visibility regions (one per target, aligned).
Tour discretized_opt_orp_with_regions(const Instance& inst,
                                      const std::vector<PolygonWithHoles>& regions, int grid,
                                      std::vector<int> targets,
                                      const std::vector<Point>& extra_candidates = {});

/// One observation point per obstacle chosen among the tour vertices, or
/// nullopt when some obstacle is seen from no vertex.
std::optional<std::map<int, Point>> assign_observers(const Tour& t, const Instance& inst);

}  // namespace obsroute
