#include "obsroute/ewrp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace obsroute {

namespace {

// closed outer half-plane of edge e: on or right of the directed edge line
bool in_outer_halfplane(const ConvexPolygon& p, int e, const Point& q) {
    return orientation(p.vertex(e), p.vertex(e + 1), q) != Orientation::CCW;
}

std::vector<char> covered_edges(const ConvexPolygon& p, const std::vector<Point>& viewpoints) {
    std::vector<char> cov(p.size(), 0);
    for (const Point& q : viewpoints)
        for (int e = 0; e < p.size(); ++e)
            if (!cov[e] && in_outer_halfplane(p, e, q)) cov[e] = 1;
    return cov;
}

std::vector<Point> sample_route(const std::vector<Point>& polyline, bool closed, int per_edge) {
    std::vector<Point> out = polyline;
    const size_t n = polyline.size();
    if (n < 2) return out;
    const size_t edges = closed ? n : n - 1;
    for (size_t i = 0; i < edges; ++i) {
        const Point& a = polyline[i];
        const Point& b = polyline[(i + 1) % n];
        if (a == b) continue;
        for (int k = 1; k < per_edge; ++k) out.push_back(interpolate(a, b, Rat(k, per_edge)));
    }
    return out;
}

// minimum-distance point from v to the intersection of the closed outer
// half-planes of the given edges; exact candidate enumeration
std::optional<Point> min_leg_endpoint(const ConvexPolygon& p, const Point& v,
                                      const std::vector<int>& edges) {
    if (edges.empty()) return v;
    auto feasible = [&](const Point& q) {
        for (int e : edges)
            if (!in_outer_halfplane(p, e, q)) return false;
        return true;
    };
    if (feasible(v)) return v;
    std::vector<Point> cands;
    for (int e : edges) {
        const Point& a = p.vertex(e);
        const Point& b = p.vertex(e + 1);
        Dir d(a, b);
        Rat len2 = d.x * d.x + d.y * d.y;
        Rat t = (d.x * (v.x - a.x) + d.y * (v.y - a.y)) / len2;
        cands.emplace_back(a.x + t * d.x, a.y + t * d.y);  // perpendicular foot
    }
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            Line li(p.vertex(edges[i]), p.vertex(edges[i] + 1));
            Line lj(p.vertex(edges[j]), p.vertex(edges[j] + 1));
            auto ip = li.intersect(lj);
            if (ip) cands.push_back(*ip);
        }
    std::optional<Point> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const Point& q : cands) {
        if (!feasible(q)) continue;
        double d = dist(v, q);
        if (d < best_d - 1e-15 || (d < best_d + 1e-15 && best && lex_less(q, *best))) {
            best_d = d;
            best = q;
        }
    }
    return best;
}

}  // namespace

WatchmanRoute perimeter_route(const ConvexPolygon& p) {
    return WatchmanRoute{RouteKind::Perimeter, p.vertices(), p.perimeter()};
}

bool coverage_check(const WatchmanRoute& route, const ConvexPolygon& p, int samples) {
    const bool closed = route.kind == RouteKind::Perimeter;
    // the route has to stay in the closed exterior
    const size_t n = route.polyline.size();
    if (n == 0) return false;
    const size_t edges = n < 2 ? 0 : (closed ? n : n - 1);
    for (size_t i = 0; i < edges; ++i) {
        const Point& a = route.polyline[i];
        const Point& b = route.polyline[(i + 1) % n];
        if (a == b) continue;
        if (segment_crosses_interior(a, b, p))
            throw RouteIntersectsInterior("coverage_check: route crosses the interior");
    }
    for (const Point& q : route.polyline)
        if (p.contains_strict(q))
            throw RouteIntersectsInterior("coverage_check: route vertex inside the polygon");

    std::vector<char> cov = covered_edges(p, sample_route(route.polyline, closed, samples));
    for (int density = samples * 2; density <= samples * 8; density *= 2) {
        std::vector<char> denser = covered_edges(p, sample_route(route.polyline, closed, density));
        if (denser == cov) break;
        cov = denser;
    }
    return std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; });
}

std::optional<WatchmanRoute> doubled_chain_route(const ConvexPolygon& p, int i, int j) {
    if (i == j) throw InvalidParameters("doubled_chain_route: arc needs i != j");
    i = p.wrap(i);
    j = p.wrap(j);

    std::vector<int> uncovered;  // edges strictly between j and i in CCW order
    for (int e = p.wrap(j + 1); e != i; e = p.wrap(e + 1)) uncovered.push_back(e);

    std::vector<Point> arc;
    for (int e = i;; e = p.wrap(e + 1)) {
        arc.push_back(p.vertex(e));
        if (e == j) break;
    }
    arc.push_back(p.vertex(j + 1));

    const int u = static_cast<int>(uncovered.size());
    std::optional<WatchmanRoute> best;
    for (int split = 0; split <= u; ++split) {
        std::vector<int> end_set(uncovered.begin(), uncovered.begin() + split);
        std::vector<int> start_set(uncovered.begin() + split, uncovered.end());
        auto z_end = min_leg_endpoint(p, arc.back(), end_set);
        auto z_start = min_leg_endpoint(p, arc.front(), start_set);
        if (!z_end || !z_start) continue;
        if (segment_crosses_interior(arc.back(), *z_end, p)) continue;
        if (segment_crosses_interior(arc.front(), *z_start, p)) continue;
        std::vector<Point> chain;
        if (!(*z_start == arc.front())) chain.push_back(*z_start);
        chain.insert(chain.end(), arc.begin(), arc.end());
        if (!(*z_end == arc.back())) chain.push_back(*z_end);
        double open_len = 0;
        for (size_t q = 0; q + 1 < chain.size(); ++q) open_len += dist(chain[q], chain[q + 1]);
        WatchmanRoute route{RouteKind::DoubledChain, chain, 2 * open_len};
        bool covers;
        try {
            covers = coverage_check(route, p);
        } catch (const RouteIntersectsInterior&) {
            covers = false;
        }
        if (!covers) continue;
        if (!best || route.length < best->length) best = std::move(route);
    }
    return best;
}

WatchmanRoute best_external_watchman(const ConvexPolygon& p) {
    WatchmanRoute best = perimeter_route(p);
    const double per = best.length;
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
            if (i == j) continue;
            auto cand = doubled_chain_route(p, i, j);
            if (!cand) continue;
            // ties go to the perimeter
            if (cand->length < best.length - 1e-12 * per) best = std::move(*cand);
        }
    }
    return best;
}

namespace {

// vertex cut replacing vertex vi by points at parameters tp (toward the
// previous vertex) and tn (toward the next); obtuse corners stay obtuse
std::vector<Point> cut_vertex(const std::vector<Point>& ring, int vi, const Rat& tp,
                              const Rat& tn) {
    const int n = static_cast<int>(ring.size());
    const Point& v = ring[vi];
    const Point& prev = ring[(vi + n - 1) % n];
    const Point& next = ring[(vi + 1) % n];
    Point a(v.x + tp * (prev.x - v.x), v.y + tp * (prev.y - v.y));
    Point b(v.x + tn * (next.x - v.x), v.y + tn * (next.y - v.y));
    std::vector<Point> out;
    for (int q = 0; q < n; ++q) {
        if (q == vi) {
            out.push_back(a);
            out.push_back(b);
        } else {
            out.push_back(ring[q]);
        }
    }
    return out;
}

}  // namespace

ConvexPolygon make_obtuse_counterexample(int n, double eps) {
    if (n < 5)
        throw InvalidParameters("make_obtuse_counterexample: every triangle or quadrilateral has a "
                                "nonobtuse angle; n >= 5 required");
    const double eps_max = (2.0 - std::sqrt(3.0)) / (3.0 * std::sqrt(3.0));
    if (!(eps > 0.0 && eps < eps_max))
        throw InvalidParameters("make_obtuse_counterexample: eps out of range");

    const Rat e(eps);
    // rational stand-in for 1/sqrt(3), error ~4e-17
    const Rat r3inv(mpz_class("577350269189626"), mpz_class("1000000000000000"));
    Rat base_half = 1 - e * e;
    std::vector<Point> ring{Point(-base_half, Rat(0)), Point(base_half, Rat(0)),
                            Point(Rat(1), e), Point(Rat(0), e + r3inv), Point(Rat(-1), e)};

    int cuts = n - 5;
    // first trim the two near-right base corners, then shave the widest angles
    if (cuts > 0) {
        Rat tp = (e / 2) / (2 * base_half);  // half-eps leg along the base
        ring = cut_vertex(ring, 1, tp, Rat(1, 2));
        --cuts;
    }
    if (cuts > 0) {
        Rat tn = (e / 2) / (2 * base_half);
        ring = cut_vertex(ring, 0, Rat(1, 2), tn);
        --cuts;
    }
    while (cuts > 0) {
        ConvexPolygon cur = ConvexPolygon::from_vertices(ring);
        int widest = 0;
        double best = 0;
        for (int v = 0; v < cur.size(); ++v) {
            double a = cur.interior_angle_deg(v);
            if (a > best) {
                best = a;
                widest = v;
            }
        }
        ring = cut_vertex(ring, widest, Rat(1, 4), Rat(1, 4));
        --cuts;
    }

    ConvexPolygon out = ConvexPolygon::from_vertices(ring);
    if (out.size() != n)
        throw InternalInvariantViolation("make_obtuse_counterexample: wrong vertex count");
    for (int v = 0; v < out.size(); ++v)
        if (!out.angle_obtuse(v))
            throw InternalInvariantViolation("make_obtuse_counterexample: non-obtuse angle");
    return out;
}

}  // namespace obsroute
