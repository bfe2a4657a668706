#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obsroute/errors.hpp"

namespace obsroute {

/// Exact rational coordinate type. Combinatorial predicates (orientation,
/// tangency, on-boundary, intersection) are evaluated exactly over this type;
/// metric quantities (lengths, fatness, dilation) use binary64.
using Rat = mpq_class;

Rat rat_from_string(const std::string& s);  // "num/den" or plain integer/decimal
std::string rat_to_string(const Rat& r);
double to_double(const Rat& r);

/// Planar point with exact rational coordinates. The double mirrors are
/// cached at construction and used only as a fast filter; every predicate
/// falls back to exact arithmetic when the filter is inconclusive.
struct Point {
    Rat x, y;
    double xd = 0.0, yd = 0.0;

    Point() : x(0), y(0) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) { sync(); }
    Point(int px, int py) : x(px), y(py) { sync(); }
    static Point from_doubles(double px, double py) { return Point(Rat(px), Rat(py)); }

    void sync() {
        xd = x.get_d();
        yd = y.get_d();
    }

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Lexicographic (x, then y) exact comparison.
bool lex_less(const Point& a, const Point& b);

/// Direction vector with exact rational components (never normalized).
struct Dir {
    Rat x, y;
    double xd = 0.0, yd = 0.0;

    Dir() : x(0), y(0) {}
    Dir(Rat dx, Rat dy) : x(std::move(dx)), y(std::move(dy)) {
        xd = x.get_d();
        yd = y.get_d();
    }
    Dir(const Point& from, const Point& to) : Dir(to.x - from.x, to.y - from.y) {}

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    Dir negated() const { return Dir(-x, -y); }
};

struct Segment {
    Point a, b;
    Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {
        if (a == b) throw InvalidParameters("degenerate segment");
    }
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of the cross product (q-p) x (r-p). Double filter with exact fallback.
Orientation orientation(const Point& p, const Point& q, const Point& r);
int cross_sign(const Dir& a, const Dir& b);
Rat cross(const Dir& a, const Dir& b);
Rat dot(const Dir& a, const Dir& b);

/// True iff p lies on the closed segment [a, b] (collinear and between).
bool on_segment(const Point& p, const Point& a, const Point& b);

double dist(const Point& a, const Point& b);
Rat dist2(const Point& a, const Point& b);
double segment_point_dist(const Point& a, const Point& b, const Point& p);
double segment_segment_dist(const Point& a, const Point& b, const Point& c, const Point& d);

/// Exact squared distance from p to the closed segment [a, b].
Rat point_segment_dist2(const Point& p, const Point& a, const Point& b);
/// Exact squared distance between two closed segments (0 when they meet).
Rat segment_segment_dist2(const Point& a, const Point& b, const Point& c, const Point& d);

/// Convex hull (CCW, no collinear vertices) of at least three points.
std::vector<Point> convex_hull(std::vector<Point> pts);

/// Line A*x + B*y = C with exact coefficients, normalized so that the first
/// nonzero coefficient of (A, B) is positive and gcd-reduced.
struct Line {
    Rat A, B, C;
    Line(const Point& p, const Point& q);
    Line(Rat a, Rat b, Rat c);
    int side(const Point& p) const;  // sign of A*x + B*y - C
    std::optional<Point> intersect(const Line& other) const;
    bool operator==(const Line& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const Line& o) const;
    void normalize();
};

/// Proper or touching intersection point of two segments, if any.
/// Collinear overlapping segments yield nullopt (no single intersection point).
std::optional<Point> segment_intersection(const Segment& s, const Segment& t);
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Convex polygon with CCW vertices in strictly convex position.
/// Construction validates: >= 3 vertices, strict convexity, no collinear triples.
class ConvexPolygon {
  public:
    static ConvexPolygon from_vertices(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    const Point& vertex(int i) const { return verts_[wrap(i)]; }
    Segment edge(int i) const { return Segment(verts_[wrap(i)], verts_[wrap(i + 1)]); }
    int wrap(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

    bool contains_closed(const Point& p) const;
    bool contains_strict(const Point& p) const;
    bool on_boundary(const Point& p) const;
    /// Edge index such that p lies on edge i, or -1.
    int boundary_edge(const Point& p) const;

    double perimeter() const { return perimeter_; }
    double width() const { return width_; }
    double diameter() const { return diameter_; }
    double fatness() const { return fatness_; }
    Point centroid() const;

    ConvexPolygon translated(const Dir& v) const;

    double min_xd() const { return min_xd_; }
    double max_xd() const { return max_xd_; }
    double min_yd() const { return min_yd_; }
    double max_yd() const { return max_yd_; }

    /// Interior angle at vertex i measured in degrees (binary64).
    double interior_angle_deg(int i) const;
    /// Exact test: interior angle at vertex i strictly greater than 90 degrees.
    bool angle_obtuse(int i) const;

  private:
    ConvexPolygon() = default;
    std::vector<Point> verts_;
    double width_ = 0, diameter_ = 0, fatness_ = 0, perimeter_ = 0;
    double min_xd_ = 0, max_xd_ = 0, min_yd_ = 0, max_yd_ = 0;
    void compute_metrics();
};

struct TangentPair {
    Point left;
    Point right;
    int left_index;
    int right_index;
};

/// The two supporting-line contact vertices of C seen from p (p strictly
/// outside C). Labeled so the CCW angular interval from right to left
/// subtends C. When a supporting line contains a whole edge, the contact
/// farther from p is returned.
TangentPair tangent_points(const Point& p, const ConvexPolygon& c);

struct CommonTangent {
    Line line;
    Point touch1, touch2;  // contact points on C1, C2
    bool outer;            // both polygons on the same side
};

/// All four common tangents (two outer, two inner) of two disjoint convex
/// polygons. Throws BodiesIntersect when the polygons are not disjoint.
std::vector<CommonTangent> common_tangents(const ConvexPolygon& c1, const ConvexPolygon& c2);

/// Exact disjointness (positive distance between the closed polygons).
bool polygons_disjoint(const ConvexPolygon& c1, const ConvexPolygon& c2);

struct WidthDiameter {
    double width;
    double diameter;
    double fatness;
};
WidthDiameter width_diameter(const ConvexPolygon& c);

/// min(pi / lambda, 2 (1/lambda + 1)); upper bound on the geometric dilation
/// of the boundary of a lambda-fat convex body.
double dilation_upper_bound(double lambda);

struct BoundaryPath {
    std::vector<Point> polyline;  // starts at p, ends at q
    double length;
};

/// Shorter of the two boundary arcs of C between boundary points p and q.
/// Exact half-perimeter ties resolve to the CCW arc.
BoundaryPath boundary_geodesic(const ConvexPolygon& c, const Point& p, const Point& q);

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Box {
    Rat x0, y0, x1, y1;
    Box(Rat ax0, Rat ay0, Rat ax1, Rat ay1);
    bool contains_closed(const Point& p) const;
    bool contains_strict(const Point& p) const;
    std::vector<Point> corners() const;  // CCW from (x0, y0)
    std::vector<Segment> edges() const;
    double width_d() const { return to_double(x1 - x0); }
    double height_d() const { return to_double(y1 - y0); }
};

/// Chord of the box cut by the line, or nullopt when the line misses the box
/// or only touches a corner.
std::optional<Segment> clip_line_to_box(const Line& l, const Box& box);

/// Smallest ray parameter t >= 0 with origin + t*d on the boundary of C,
/// or nullopt when the ray misses C.
std::optional<Rat> ray_entry(const Point& origin, const Dir& d, const ConvexPolygon& c);

/// Clip segment [a,b] against the closed polygon. Returns parameter range
/// [t0, t1] (in [0,1]) of the portion inside, or nullopt when disjoint.
std::optional<std::pair<Rat, Rat>> clip_segment_to_polygon(const Point& a, const Point& b,
                                                           const ConvexPolygon& c);

/// True iff the open segment (a,b) meets the open interior of C.
bool segment_crosses_interior(const Point& a, const Point& b, const ConvexPolygon& c);

Point interpolate(const Point& a, const Point& b, const Rat& t);

}  // namespace obsroute
