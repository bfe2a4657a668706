#include "obsroute/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace obsroute {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Rat r(s);
            if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: " + s);
            r.canonicalize();
            return r;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            Rat r(s);
            r.canonicalize();
            return r;
        }
        // decimal literal: digits.digits
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        std::string digits = head + tail;
        mpz_class num(digits);
        mpz_class den(1);
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

bool lex_less(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const double ax = q.xd - p.xd, ay = q.yd - p.yd;
    const double bx = r.xd - p.xd, by = r.yd - p.yd;
    const double det = ax * by - ay * bx;
    const double mag = std::abs(p.xd) + std::abs(q.xd) + std::abs(r.xd) + std::abs(p.yd) +
                       std::abs(q.yd) + std::abs(r.yd);
    const double bound = 1e-12 * mag * mag + 1e-290;
    if (det > bound) return Orientation::CCW;
    if (det < -bound) return Orientation::CW;
    Rat d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    int s = sgn(d);
    return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

int cross_sign(const Dir& a, const Dir& b) {
    const double det = a.xd * b.yd - a.yd * b.xd;
    const double mag = (std::abs(a.xd) + std::abs(a.yd)) * (std::abs(b.xd) + std::abs(b.yd));
    const double bound = 1e-12 * mag + 1e-290;
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return sgn(Rat(a.x * b.y - a.y * b.x));
}

Rat cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Dir& a, const Dir& b) { return a.x * b.x + a.y * b.y; }

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    if (cmp(a.x, b.x) != 0) {
        return (cmp(p.x, a.x) >= 0 && cmp(p.x, b.x) <= 0) ||
               (cmp(p.x, b.x) >= 0 && cmp(p.x, a.x) <= 0);
    }
    return (cmp(p.y, a.y) >= 0 && cmp(p.y, b.y) <= 0) ||
           (cmp(p.y, b.y) >= 0 && cmp(p.y, a.y) <= 0);
}

double dist(const Point& a, const Point& b) { return std::hypot(a.xd - b.xd, a.yd - b.yd); }

Rat dist2(const Point& a, const Point& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double segment_point_dist(const Point& a, const Point& b, const Point& p) {
    const double abx = b.xd - a.xd, aby = b.yd - a.yd;
    const double apx = p.xd - a.xd, apy = p.yd - a.yd;
    const double len2 = abx * abx + aby * aby;
    if (len2 <= 0.0) return std::hypot(apx, apy);
    double t = (apx * abx + apy * aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(apx - t * abx, apy - t * aby);
}

double segment_segment_dist(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_properly_cross(a, b, c, d)) return 0.0;
    return std::min(std::min(segment_point_dist(a, b, c), segment_point_dist(a, b, d)),
                    std::min(segment_point_dist(c, d, a), segment_point_dist(c, d, b)));
}

Rat point_segment_dist2(const Point& p, const Point& a, const Point& b) {
    Dir ab(a, b);
    Rat len2 = ab.x * ab.x + ab.y * ab.y;
    if (sgn(len2) == 0) return dist2(p, a);
    Dir ap(a, p);
    Rat t = dot(ap, ab) / len2;
    if (sgn(t) < 0) t = 0;
    if (cmp(t, Rat(1)) > 0) t = 1;
    Point foot(a.x + t * ab.x, a.y + t * ab.y);
    return dist2(p, foot);
}

Rat segment_segment_dist2(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (!(a == b) && !(c == d)) {
        if (segment_intersection(Segment(a, b), Segment(c, d))) return Rat(0);
        // collinear overlap
        if (orientation(a, b, c) == Orientation::Collinear &&
            orientation(a, b, d) == Orientation::Collinear &&
            (on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d)))
            return Rat(0);
    }
    Rat best = point_segment_dist2(c, a, b);
    Rat cand = point_segment_dist2(d, a, b);
    if (cmp(cand, best) < 0) best = cand;
    cand = point_segment_dist2(a, c, d);
    if (cmp(cand, best) < 0) best = cand;
    cand = point_segment_dist2(b, c, d);
    if (cmp(cand, best) < 0) best = cand;
    return best;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw InvalidParameters("convex_hull needs at least 3 distinct points");
    std::vector<Point> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) != Orientation::CCW) --k;
        hull[k++] = pts[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) != Orientation::CCW)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw InvalidParameters("convex_hull: points are collinear");
    return hull;
}

Line::Line(const Point& p, const Point& q) : A(q.y - p.y), B(p.x - q.x), C(0) {
    if (p == q) throw InvalidParameters("line through identical points");
    C = A * p.x + B * p.y;
    normalize();
}

Line::Line(Rat a, Rat b, Rat c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (sgn(A) == 0 && sgn(B) == 0) throw InvalidParameters("degenerate line");
    normalize();
}

void Line::normalize() {
    mpz_class l = lcm(lcm(A.get_den(), B.get_den()), C.get_den());
    mpz_class an = A.get_num() * (l / A.get_den());
    mpz_class bn = B.get_num() * (l / B.get_den());
    mpz_class cn = C.get_num() * (l / C.get_den());
    mpz_class g = gcd(gcd(an, bn), cn);
    if (sgn(g) == 0) g = 1;
    an /= g;
    bn /= g;
    cn /= g;
    int lead = sgn(an) != 0 ? sgn(an) : sgn(bn);
    if (lead < 0) {
        an = -an;
        bn = -bn;
        cn = -cn;
    }
    A = Rat(an);
    B = Rat(bn);
    C = Rat(cn);
}

int Line::side(const Point& p) const { return sgn(Rat(A * p.x + B * p.y - C)); }

std::optional<Point> Line::intersect(const Line& o) const {
    Rat det = A * o.B - B * o.A;
    if (sgn(det) == 0) return std::nullopt;
    Rat x = (C * o.B - B * o.C) / det;
    Rat y = (A * o.C - C * o.A) / det;
    return Point(x, y);
}

bool Line::operator<(const Line& o) const {
    int c = cmp(A, o.A);
    if (c != 0) return c < 0;
    c = cmp(B, o.B);
    if (c != 0) return c < 0;
    return cmp(C, o.C) < 0;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    auto o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    auto o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return static_cast<int>(o1) * static_cast<int>(o2) < 0 &&
           static_cast<int>(o3) * static_cast<int>(o4) < 0;
}

std::optional<Point> segment_intersection(const Segment& s, const Segment& t) {
    const Point &a = s.a, &b = s.b, &c = t.a, &d = t.b;
    auto o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    auto o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) return std::nullopt;
    if (static_cast<int>(o1) * static_cast<int>(o2) > 0 ||
        static_cast<int>(o3) * static_cast<int>(o4) > 0)
        return std::nullopt;
    Dir ab(a, b), cd(c, d), ac(a, c);
    Rat denom = cross(ab, cd);
    if (sgn(denom) == 0) {
        // parallel, touching at an endpoint
        if (on_segment(c, a, b)) return c;
        if (on_segment(d, a, b)) return d;
        if (on_segment(a, c, d)) return a;
        if (on_segment(b, c, d)) return b;
        return std::nullopt;
    }
    Rat tt = cross(ac, cd) / denom;
    if (sgn(tt) < 0 || cmp(tt, Rat(1)) > 0) return std::nullopt;
    Rat ss = cross(ac, ab) / denom;
    if (sgn(ss) < 0 || cmp(ss, Rat(1)) > 0) return std::nullopt;
    return interpolate(a, b, tt);
}

Point interpolate(const Point& a, const Point& b, const Rat& t) {
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vertices) {
    if (vertices.size() < 3) throw InvalidPolygon("convex polygon needs >= 3 vertices");
    const int n = static_cast<int>(vertices.size());
    for (int i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        const Point& c = vertices[(i + 2) % n];
        if (a == b) throw InvalidPolygon("repeated vertex");
        if (orientation(a, b, c) != Orientation::CCW)
            throw InvalidPolygon("vertices not in strictly convex CCW position");
    }
    ConvexPolygon poly;
    poly.verts_ = std::move(vertices);
    poly.compute_metrics();
    return poly;
}

void ConvexPolygon::compute_metrics() {
    const int n = size();
    Rat best_d2(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d2 = dist2(verts_[i], verts_[j]);
            if (cmp(d2, best_d2) > 0) best_d2 = d2;
        }
    // width: min over edges of the max vertex distance to the edge line
    Rat best_w2(-1);
    for (int i = 0; i < n; ++i) {
        Dir e(verts_[i], verts_[(i + 1) % n]);
        Rat elen2 = e.x * e.x + e.y * e.y;
        Rat far2(0);
        for (int j = 0; j < n; ++j) {
            Dir v(verts_[i], verts_[j]);
            Rat cr = cross(e, v);
            Rat d2 = cr * cr / elen2;
            if (cmp(d2, far2) > 0) far2 = d2;
        }
        if (sgn(best_w2) < 0 || cmp(far2, best_w2) < 0) best_w2 = far2;
    }
    diameter_ = std::sqrt(to_double(best_d2));
    width_ = std::sqrt(to_double(best_w2));
    fatness_ = diameter_ > 0 ? std::sqrt(to_double(best_w2 / best_d2)) : 0.0;
    perimeter_ = 0;
    min_xd_ = max_xd_ = verts_[0].xd;
    min_yd_ = max_yd_ = verts_[0].yd;
    for (int i = 0; i < n; ++i) {
        perimeter_ += dist(verts_[i], verts_[(i + 1) % n]);
        min_xd_ = std::min(min_xd_, verts_[i].xd);
        max_xd_ = std::max(max_xd_, verts_[i].xd);
        min_yd_ = std::min(min_yd_, verts_[i].yd);
        max_yd_ = std::max(max_yd_, verts_[i].yd);
    }
}

bool ConvexPolygon::contains_closed(const Point& p) const {
    if (p.xd < min_xd_ - 1e-9 || p.xd > max_xd_ + 1e-9 || p.yd < min_yd_ - 1e-9 ||
        p.yd > max_yd_ + 1e-9)
        return false;
    const int n = size();
    for (int i = 0; i < n; ++i)
        if (orientation(verts_[i], verts_[(i + 1) % n], p) == Orientation::CW) return false;
    return true;
}

bool ConvexPolygon::contains_strict(const Point& p) const {
    if (p.xd < min_xd_ - 1e-9 || p.xd > max_xd_ + 1e-9 || p.yd < min_yd_ - 1e-9 ||
        p.yd > max_yd_ + 1e-9)
        return false;
    const int n = size();
    for (int i = 0; i < n; ++i)
        if (orientation(verts_[i], verts_[(i + 1) % n], p) != Orientation::CCW) return false;
    return true;
}

bool ConvexPolygon::on_boundary(const Point& p) const { return boundary_edge(p) >= 0; }

int ConvexPolygon::boundary_edge(const Point& p) const {
    const int n = size();
    for (int i = 0; i < n; ++i)
        if (on_segment(p, verts_[i], verts_[(i + 1) % n])) return i;
    return -1;
}

Point ConvexPolygon::centroid() const {
    Rat sx(0), sy(0);
    for (const Point& v : verts_) {
        sx += v.x;
        sy += v.y;
    }
    Rat n(size());
    return Point(sx / n, sy / n);
}

ConvexPolygon ConvexPolygon::translated(const Dir& v) const {
    std::vector<Point> moved;
    moved.reserve(verts_.size());
    for (const Point& p : verts_) moved.emplace_back(p.x + v.x, p.y + v.y);
    return from_vertices(std::move(moved));
}

double ConvexPolygon::interior_angle_deg(int i) const {
    const Point& v = vertex(i);
    const Point& prev = vertex(i - 1);
    const Point& next = vertex(i + 1);
    double ax = prev.xd - v.xd, ay = prev.yd - v.yd;
    double bx = next.xd - v.xd, by = next.yd - v.yd;
    // angle from (v->next) CCW to (v->prev); in (0, pi) for a convex vertex
    double d = std::atan2(ay, ax) - std::atan2(by, bx);
    while (d < 0) d += 2 * std::numbers::pi;
    while (d >= 2 * std::numbers::pi) d -= 2 * std::numbers::pi;
    return d * 180.0 / std::numbers::pi;
}

bool ConvexPolygon::angle_obtuse(int i) const {
    const Point& v = vertex(i);
    Dir a(v, vertex(i - 1));
    Dir b(v, vertex(i + 1));
    return sgn(dot(a, b)) < 0;
}

TangentPair tangent_points(const Point& p, const ConvexPolygon& c) {
    if (c.contains_closed(p)) throw PointInsideBody("tangent_points: point inside body");
    const int n = c.size();
    int right = -1, left = -1;
    for (int i = 0; i < n; ++i) {
        const Point& v = c.vertex(i);
        bool all_left = true, all_right = true;
        for (int j = 0; j < n && (all_left || all_right); ++j) {
            if (j == i) continue;
            Orientation o = orientation(p, v, c.vertex(j));
            if (o == Orientation::CW) all_left = false;
            if (o == Orientation::CCW) all_right = false;
        }
        // right tangent: every other vertex weakly CCW of ray p->v; when the
        // supporting line contains a whole edge, the nearer endpoint wins
        if (all_left) {
            if (right < 0 || cmp(dist2(p, v), dist2(p, c.vertex(right))) < 0) right = i;
        }
        if (all_right) {
            if (left < 0 || cmp(dist2(p, v), dist2(p, c.vertex(left))) < 0) left = i;
        }
    }
    if (right < 0 || left < 0)
        throw InternalInvariantViolation("tangent_points: no supporting vertex found");
    return TangentPair{c.vertex(left), c.vertex(right), left, right};
}

bool polygons_disjoint(const ConvexPolygon& c1, const ConvexPolygon& c2) {
    if (c1.max_xd() < c2.min_xd() - 1e-9 || c2.max_xd() < c1.min_xd() - 1e-9 ||
        c1.max_yd() < c2.min_yd() - 1e-9 || c2.max_yd() < c1.min_yd() - 1e-9)
        return true;
    for (const Point& v : c1.vertices())
        if (c2.contains_closed(v)) return false;
    for (const Point& v : c2.vertices())
        if (c1.contains_closed(v)) return false;
    for (int i = 0; i < c1.size(); ++i)
        for (int j = 0; j < c2.size(); ++j) {
            Segment e1 = c1.edge(i), e2 = c2.edge(j);
            if (segment_intersection(e1, e2)) return false;
            // collinear overlap means contact
            if (orientation(e1.a, e1.b, e2.a) == Orientation::Collinear &&
                orientation(e1.a, e1.b, e2.b) == Orientation::Collinear &&
                (on_segment(e2.a, e1.a, e1.b) || on_segment(e2.b, e1.a, e1.b) ||
                 on_segment(e1.a, e2.a, e2.b)))
                return false;
        }
    return true;
}

std::vector<CommonTangent> common_tangents(const ConvexPolygon& c1, const ConvexPolygon& c2) {
    if (!polygons_disjoint(c1, c2)) throw BodiesIntersect("common_tangents: bodies intersect");
    std::vector<CommonTangent> out;
    std::vector<Line> seen_lines;
    for (int i = 0; i < c1.size(); ++i) {
        for (int j = 0; j < c2.size(); ++j) {
            const Point& u = c1.vertex(i);
            const Point& v = c2.vertex(j);
            if (u == v) continue;
            int side1 = 0, side2 = 0;  // -1, 0, +1 accumulated side of each polygon
            bool supporting = true;
            Line l(u, v);
            for (int k = 0; k < c1.size() && supporting; ++k) {
                int s = l.side(c1.vertex(k));
                if (s == 0) continue;
                if (side1 == 0)
                    side1 = s;
                else if (side1 != s)
                    supporting = false;
            }
            for (int k = 0; k < c2.size() && supporting; ++k) {
                int s = l.side(c2.vertex(k));
                if (s == 0) continue;
                if (side2 == 0)
                    side2 = s;
                else if (side2 != s)
                    supporting = false;
            }
            if (!supporting || side1 == 0 || side2 == 0) continue;
            if (std::find(seen_lines.begin(), seen_lines.end(), l) != seen_lines.end()) continue;
            seen_lines.push_back(l);
            out.push_back(CommonTangent{l, u, v, side1 == side2});
        }
    }
    int outer = 0, inner = 0;
    for (const auto& t : out) (t.outer ? outer : inner)++;
    if (outer != 2 || inner != 2)
        throw InternalInvariantViolation("common_tangents: expected 2 outer and 2 inner");
    return out;
}

WidthDiameter width_diameter(const ConvexPolygon& c) {
    return WidthDiameter{c.width(), c.diameter(), c.fatness()};
}

double dilation_upper_bound(double lambda) {
    if (lambda <= 0) throw NonPositiveFatness("dilation_upper_bound: lambda <= 0");
    return std::min(std::numbers::pi / lambda, 2.0 * (1.0 / lambda + 1.0));
}

namespace {

std::vector<Point> ccw_arc(const ConvexPolygon& c, const Point& p, int ep, const Point& q,
                           int eq) {
    std::vector<Point> pts{p};
    if (p == q) return pts;
    if (ep == eq) {
        // exact position along the shared edge decides whether q is ahead
        Dir e(c.vertex(ep), c.vertex(ep + 1));
        Rat ap = dot(Dir(c.vertex(ep), p), e);
        Rat aq = dot(Dir(c.vertex(ep), q), e);
        if (cmp(aq, ap) >= 0) {
            pts.push_back(q);
            return pts;
        }
    }
    int i = ep;
    for (int steps = 0; steps <= c.size(); ++steps) {
        int nxt = c.wrap(i + 1);
        pts.push_back(c.vertex(nxt));
        i = nxt;
        if (i == eq) break;
    }
    pts.push_back(q);
    // drop consecutive duplicates (p or q coinciding with a vertex)
    std::vector<Point> clean;
    for (Point& pt : pts)
        if (clean.empty() || !(clean.back() == pt)) clean.push_back(std::move(pt));
    return clean;
}

double polyline_length(const std::vector<Point>& pts) {
    double len = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
    return len;
}

}  // namespace

BoundaryPath boundary_geodesic(const ConvexPolygon& c, const Point& p, const Point& q) {
    int ep = c.boundary_edge(p);
    int eq = c.boundary_edge(q);
    if (ep < 0 || eq < 0) throw PointNotOnBoundary("boundary_geodesic: point not on boundary");
    std::vector<Point> fwd = ccw_arc(c, p, ep, q, eq);
    std::vector<Point> bwd = ccw_arc(c, q, eq, p, ep);
    double lf = polyline_length(fwd);
    double lb = polyline_length(bwd);
    if (lf <= lb + 1e-12 * c.perimeter()) return BoundaryPath{std::move(fwd), lf};
    std::reverse(bwd.begin(), bwd.end());
    return BoundaryPath{std::move(bwd), lb};
}

Box::Box(Rat ax0, Rat ay0, Rat ax1, Rat ay1)
    : x0(std::move(ax0)), y0(std::move(ay0)), x1(std::move(ax1)), y1(std::move(ay1)) {
    if (cmp(x0, x1) >= 0 || cmp(y0, y1) >= 0) throw InvalidParameters("empty box");
}

bool Box::contains_closed(const Point& p) const {
    return cmp(p.x, x0) >= 0 && cmp(p.x, x1) <= 0 && cmp(p.y, y0) >= 0 && cmp(p.y, y1) <= 0;
}

bool Box::contains_strict(const Point& p) const {
    return cmp(p.x, x0) > 0 && cmp(p.x, x1) < 0 && cmp(p.y, y0) > 0 && cmp(p.y, y1) < 0;
}

std::vector<Point> Box::corners() const {
    return {Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)};
}

std::vector<Segment> Box::edges() const {
    auto c = corners();
    return {Segment(c[0], c[1]), Segment(c[1], c[2]), Segment(c[2], c[3]), Segment(c[3], c[0])};
}

std::optional<Segment> clip_line_to_box(const Line& l, const Box& box) {
    std::vector<Point> hits;
    auto add = [&](const Point& p) {
        for (const Point& q : hits)
            if (q == p) return;
        hits.push_back(p);
    };
    for (const Segment& e : box.edges()) {
        Line el(e.a, e.b);
        auto ip = l.intersect(el);
        if (ip && on_segment(*ip, e.a, e.b)) add(*ip);
    }
    if (hits.size() < 2) return std::nullopt;
    std::sort(hits.begin(), hits.end(), lex_less);
    return Segment(hits.front(), hits.back());
}

std::optional<Rat> ray_entry(const Point& origin, const Dir& d, const ConvexPolygon& c) {
    std::optional<Rat> best;
    auto consider = [&](const Rat& t) {
        if (sgn(t) < 0) return;
        if (!best || cmp(t, *best) < 0) best = t;
    };
    for (int i = 0; i < c.size(); ++i) {
        const Point& ea = c.vertex(i);
        const Point& eb = c.vertex(i + 1);
        Dir e(ea, eb);
        Dir u(origin, ea);
        Rat denom = cross(d, e);
        if (sgn(denom) == 0) {
            // parallel; collinear edge contributes its endpoints
            if (orientation(origin, Point(origin.x + d.x, origin.y + d.y), ea) ==
                Orientation::Collinear) {
                for (const Point* pt : {&ea, &eb}) {
                    Rat t = sgn(d.x) != 0 ? Rat((pt->x - origin.x) / d.x)
                                          : Rat((pt->y - origin.y) / d.y);
                    consider(t);
                }
            }
            continue;
        }
        Rat t = cross(u, e) / denom;
        Rat s = cross(u, d) / denom;
        if (sgn(s) >= 0 && cmp(s, Rat(1)) <= 0) consider(t);
    }
    return best;
}

std::optional<std::pair<Rat, Rat>> clip_segment_to_polygon(const Point& a, const Point& b,
                                                           const ConvexPolygon& c) {
    // fast reject on double bounding boxes
    double lox = std::min(a.xd, b.xd), hix = std::max(a.xd, b.xd);
    double loy = std::min(a.yd, b.yd), hiy = std::max(a.yd, b.yd);
    if (hix < c.min_xd() - 1e-9 || lox > c.max_xd() + 1e-9 || hiy < c.min_yd() - 1e-9 ||
        loy > c.max_yd() + 1e-9)
        return std::nullopt;
    Rat t0(0), t1(1);
    for (int i = 0; i < c.size(); ++i) {
        const Point& ea = c.vertex(i);
        const Point& eb = c.vertex(i + 1);
        Dir e(ea, eb);
        // inside half-plane: cross(e, p - ea) >= 0
        Rat f0 = cross(e, Dir(ea, a));
        Rat f1 = cross(e, Dir(ea, b));
        Rat df = f1 - f0;
        if (sgn(df) == 0) {
            if (sgn(f0) < 0) return std::nullopt;
            continue;
        }
        Rat tc = -f0 / df;
        if (sgn(df) > 0) {
            if (cmp(tc, t0) > 0) t0 = tc;
        } else {
            if (cmp(tc, t1) < 0) t1 = tc;
        }
        if (cmp(t0, t1) > 0) return std::nullopt;
    }
    return std::make_pair(t0, t1);
}

bool segment_crosses_interior(const Point& a, const Point& b, const ConvexPolygon& c) {
    auto clip = clip_segment_to_polygon(a, b, c);
    if (!clip) return false;
    if (cmp(clip->first, clip->second) >= 0) return false;
    Rat mid = (clip->first + clip->second) / 2;
    return c.contains_strict(interpolate(a, b, mid));
}

}  // namespace obsroute
