#pragma once

#include <optional>
#include <vector>

#include "obsroute/geom.hpp"

namespace obsroute {

/// Connected region bounded by one CCW outer ring minus CW hole rings.
struct PolygonWithHoles {
    std::vector<Point> outer;              // CCW
    std::vector<std::vector<Point>> holes;  // CW
    std::optional<Point> anchor;            // some point strictly inside, when known

    int vertex_count() const;
    /// Closed membership (boundary points count as inside).
    bool contains(const Point& p) const;
    bool on_region_boundary(const Point& p) const;
    std::vector<Segment> edge_segments() const;
};

/// Exact parity test of p against a closed ring; boundary points are treated
/// as outside. The ring may repeat vertices (pinched walks are fine).
bool point_in_ring(const Point& p, const std::vector<Point>& ring);
bool point_on_ring(const Point& p, const std::vector<Point>& ring);

/// Planar subdivision induced by a set of segments: exact pairwise splitting,
/// half-edge structure, face cycles with hole assignment, and interior sample
/// points. Everything is computed with exact coordinates; doubles only filter.
class Arrangement {
  public:
    struct HalfEdge {
        int origin, target, twin, next;
        int cycle = -1;
    };
    struct Cycle {
        std::vector<int> hes;
        Rat area2;         // twice the signed area of the walk
        int face = -1;     // bounded face this cycle belongs to; -1 = unbounded
        bool positive() const { return sgn(area2) > 0; }
        bool zero() const { return sgn(area2) == 0; }
    };
    struct Face {
        int outer_cycle;
        std::vector<int> hole_cycles;  // negative-area cycles only
    };

    static Arrangement build(const std::vector<Segment>& segments);

    int vertex_count() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& vertex_points() const { return points_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<Cycle>& cycles() const { return cycles_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
    const Point& he_origin(int he) const { return points_[half_edges_[he].origin]; }
    const Point& he_target(int he) const { return points_[half_edges_[he].target]; }

    /// Vertex walk of a cycle (origin of each half-edge in order).
    std::vector<Point> cycle_ring(int cycle) const;

    /// A point strictly inside face f (lazily computed and cached).
    const Point& face_sample(int f);

    /// Region of a single face; anchor set to the face sample.
    PolygonWithHoles face_region(int f);

    /// Union of the faces with in_face[f] != 0, decomposed into connected
    /// components, each a polygon with holes.
    std::vector<PolygonWithHoles> union_of_faces(const std::vector<char>& in_face);

    /// Pairs of distinct bounded faces sharing at least one edge.
    std::vector<std::pair<int, int>> face_edge_adjacencies() const;

  private:
    std::vector<Point> points_;
    std::vector<HalfEdge> half_edges_;
    std::vector<Cycle> cycles_;
    std::vector<Face> faces_;
    std::vector<std::optional<Point>> sample_cache_;

    int face_of_he(int he) const { return cycles_[half_edges_[he].cycle].face; }
    Point first_hit_sample(int he0, const std::vector<int>& verify_cycles);
};

/// Anchor-computing constructor for regions assembled by hand: validates the
/// rings and finds an interior point via a local arrangement.
PolygonWithHoles make_region(std::vector<Point> outer, std::vector<std::vector<Point>> holes = {});

}  // namespace obsroute
