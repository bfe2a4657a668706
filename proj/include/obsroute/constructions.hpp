#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obsroute/tspn.hpp"
#include "obsroute/visibility.hpp"

namespace obsroute {

/// Set system over the universe {1..n}.
struct SetSystem {
    int n = 0;
    std::vector<std::vector<int>> sets;  // 1-based element labels
};

/// Instance plus the bookkeeping needed to re-derive and check the
/// construction: named reference geometry and the generator parameters.
struct ReductionArtifacts {
    Instance instance;
    std::map<std::string, Point> reference_points;
    std::map<std::string, Rat> parameters;
    std::vector<int> center_squares;  // grid-cluster: obstacle ids of hidden centers
    std::vector<std::vector<int>> cluster_members;
    std::vector<int> q_squares;  // set-cover: obstacle ids of the element squares
    std::vector<int> f1_faces;   // set-cover: obstacle ids of the arrangement faces
};

/// Six axis-parallel unit squares in two mirrored stepped rows; every common
/// observation point lies at distance >= delta from the convex hull of the
/// family. The separation eps(delta) is found by binary search, certifying
/// each candidate exactly.
Instance six_squares(double delta, Rat* eps_out = nullptr);

/// Exact verifier for the family above: the intersection of all visibility
/// regions is nonempty and its squared distance to conv(F) is >= delta^2.
bool verify_far_observation(const Instance& inst, const Rat& delta);

/// Squares-in-a-grid reduction instance from nonnegative integer points:
/// large grid squares plus one hidden-center cluster per point. The reduced
/// variant uses the 17-square cluster; the full one pads it to 25 squares.
ReductionArtifacts grid_cluster_instance(const std::vector<std::pair<int, int>>& points,
                                         bool reduced = false);

/// Axis-aligned squares of one hidden-center cluster, scaled by `side` and
/// centered at `center`; element 0 is the center square.
std::vector<ConvexPolygon> cluster_squares(const Point& center, const Rat& side, bool reduced);

/// Hidden-center property: no sampled viewpoint outside conv(cluster) sees
/// the center square. Samples a dense exterior ring plus all pairwise
/// intersections of the tangent lines between the center and the others.
bool verify_cluster_hiding(const std::vector<ConvexPolygon>& cluster, int center_index,
                           int samples = 10000, std::uint64_t seed = 42);

/// Set-cover reduction: slab/wedge corridors for the incidence lines, the
/// bounded faces of their complement, element squares, two distant unit
/// squares and one far rectangle, all compressed by the final linear map.
ReductionArtifacts setcover_instance(const SetSystem& ss);

/// Witness observation tour for a chosen cover (0-based set indices):
/// doubled left edge of the inner box plus one loop per chosen set.
Tour setcover_witness_tour(const ReductionArtifacts& art, const SetSystem& ss,
                           const std::vector<int>& cover_sets);

struct PackingResult {
    Instance instance;
    std::vector<Point> centers;
    double side = 0;
};

/// Greedy maximal packing of unit disks in [0, side]^2, each realized as an
/// inscribed regular k-gon; insertion sweep guarantees the maximality
/// certificate below.
PackingResult maximal_disk_packing(double side, int kgon, std::uint64_t seed = 42);

/// No new unit disk fits at any sweep-grid point.
bool packing_maximality_certificate(const PackingResult& packing, double pitch = 0.25);

enum class StripMode { Ewrp, Tspn };

/// Zig-zag strip route over the packing: per strip, visit obstacles in x
/// order, either circling each boundary (watchman mode) or touching one
/// vertex (tour mode); crossings are legalized with boundary detours.
Tour strip_traversal_route(const Instance& inst, StripMode mode);

/// Tiny k-gon "disks" at the scaled integer lattice points of [1, sqrt(n)]^2.
Instance sparse_grid_instance(int n, int kgon = 8);

/// Closed route along the convex hull of all obstacle vertices.
Tour hull_route(const Instance& inst);

}  // namespace obsroute
