#pragma once

#include <optional>
#include <vector>

#include "obsroute/arrangement.hpp"
#include "obsroute/geom.hpp"

namespace obsroute {

/// A family of pairwise disjoint convex obstacles strictly inside a bounding
/// rectangle. Visibility is limited to the (closed) rectangle.
class Instance {
  public:
    Instance(Box box, std::vector<ConvexPolygon> obstacles);

    const Box& box() const { return box_; }
    const std::vector<ConvexPolygon>& obstacles() const { return obstacles_; }
    const ConvexPolygon& obstacle(int i) const { return obstacles_[i]; }
    int n() const { return static_cast<int>(obstacles_.size()); }
    int total_vertices() const { return total_vertices_; }

    /// Instance with obstacle k removed (box unchanged).
    Instance without_obstacle(int k) const;

    /// True iff p avoids every open obstacle interior.
    bool point_free(const Point& p) const;

  private:
    Box box_;
    std::vector<ConvexPolygon> obstacles_;
    int total_vertices_ = 0;
};

/// Set of direction intervals around a viewpoint, all within one base cone of
/// angular width < pi. Endpoints are exact direction vectors ordered CCW by
/// orientation tests; intervals are closed, subtracted cones are open.
class AngularIntervalSet {
  public:
    AngularIntervalSet(Point viewpoint, Dir start, Dir end);

    /// Remove the open cone (a, b) of width < pi.
    void subtract_open(const Dir& a, const Dir& b);
    /// Remove the open half-plane of directions strictly left of c.
    void subtract_open_halfplane(const Dir& c);

    bool empty() const { return intervals_.empty(); }
    const Point& viewpoint() const { return viewpoint_; }
    const std::vector<std::pair<Dir, Dir>>& intervals() const { return intervals_; }
    bool contains(const Dir& d) const;

    /// Interior direction of the clipped overlap of (a, b) with the base
    /// cone, when the overlap has positive width.
    std::optional<Dir> overlap_interior(const Dir& a, const Dir& b) const;

  private:
    Point viewpoint_;
    Dir start_, end_;
    std::vector<std::pair<Dir, Dir>> intervals_;

    bool in_cone(const Dir& d) const;
    // -1, 0, +1 comparison of two directions within the base cone
    static int cone_cmp(const Dir& u, const Dir& v);
    void subtract_prefix(const Dir& b);  // removes [start, b)
    void subtract_suffix(const Dir& a);  // removes (a, end]
    void subtract_inner(const Dir& a, const Dir& b);
};

/// Exact object-visibility predicate: true iff some boundary point of the
/// target obstacle is visible from p, where a segment may touch boundaries
/// but not cross any open interior.
bool sees(const Point& p, int target_index, const Instance& inst);

/// The visibility region V(target) as a polygon with holes: all points of the
/// box, outside every open interior, that see the target. Built from the
/// arrangement of the box, obstacle boundaries, and all common tangents
/// between the target and the other obstacles; faces classified with sees().
PolygonWithHoles visibility_region(int target_index, const Instance& inst);

struct VisibilityStats {
    int faces = 0;
    int holes = 0;
    int vertices = 0;
};

/// Lexicographically smallest point seeing every obstacle, if one exists.
std::optional<Point> common_observation_point(const Instance& inst);
std::optional<Point> common_observation_point(const Instance& inst,
                                              const std::vector<PolygonWithHoles>& regions);

/// Decision identical to common_observation_point, computed by intersecting
/// the hole-free polygons V(C_i) union C_i; requires a translate family.
std::optional<Point> translate_intersection_simplification(const Instance& inst);

/// True iff all obstacles are translates of obstacle 0 (exact test).
bool is_translate_family(const Instance& inst);

/// Lexicographically smallest point in the common intersection of closed
/// regions, if any; considers exactly the overlay arrangement vertices.
std::optional<Point> regions_common_point(const std::vector<PolygonWithHoles>& regions);

}  // namespace obsroute
