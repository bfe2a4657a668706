#include "obsroute/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace obsroute {

int PolygonWithHoles::vertex_count() const {
    int n = static_cast<int>(outer.size());
    for (const auto& h : holes) n += static_cast<int>(h.size());
    return n;
}

bool point_on_ring(const Point& p, const std::vector<Point>& ring) {
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i)
        if (on_segment(p, ring[i], ring[(i + 1) % n])) return true;
    return false;
}

bool point_in_ring(const Point& p, const std::vector<Point>& ring) {
    // exact parity along the rightward horizontal ray; half-open rule at
    // vertices, horizontal edges never counted
    const int n = static_cast<int>(ring.size());
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        int ya = cmp(a.y, p.y), yb = cmp(b.y, p.y);
        if (ya <= 0 && yb > 0) {
            if (orientation(a, b, p) == Orientation::CW) inside = !inside;
        } else if (yb <= 0 && ya > 0) {
            if (orientation(b, a, p) == Orientation::CW) inside = !inside;
        }
    }
    return inside;
}

bool PolygonWithHoles::on_region_boundary(const Point& p) const {
    if (point_on_ring(p, outer)) return true;
    for (const auto& h : holes)
        if (point_on_ring(p, h)) return true;
    return false;
}

bool PolygonWithHoles::contains(const Point& p) const {
    if (on_region_boundary(p)) return true;
    if (!point_in_ring(p, outer)) return false;
    for (const auto& h : holes)
        if (point_in_ring(p, h)) return false;
    return true;
}

std::vector<Segment> PolygonWithHoles::edge_segments() const {
    std::vector<Segment> out;
    auto add_ring = [&out](const std::vector<Point>& ring) {
        const int n = static_cast<int>(ring.size());
        for (int i = 0; i < n; ++i)
            if (!(ring[i] == ring[(i + 1) % n])) out.emplace_back(ring[i], ring[(i + 1) % n]);
    };
    add_ring(outer);
    for (const auto& h : holes) add_ring(h);
    return out;
}

namespace {

struct LexLess {
    bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

// CCW order around a vertex starting at the positive x direction
bool dir_ccw_before(const Dir& a, const Dir& b) {
    auto half = [](const Dir& d) {
        int sy = sgn(d.y);
        if (sy > 0) return 0;
        if (sy < 0) return 1;
        return sgn(d.x) > 0 ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross_sign(a, b) > 0;
}

Rat ring_area2(const std::vector<Point>& ring) {
    Rat a(0);
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

}  // namespace

Arrangement Arrangement::build(const std::vector<Segment>& segments) {
    Arrangement arr;
    const int S = static_cast<int>(segments.size());
    std::map<Point, int, LexLess> vertex_id;
    auto vid = [&](const Point& p) {
        auto it = vertex_id.find(p);
        if (it != vertex_id.end()) return it->second;
        int id = static_cast<int>(arr.points_.size());
        arr.points_.push_back(p);
        vertex_id.emplace(p, id);
        return id;
    };

    std::vector<std::vector<int>> on_seg(S);
    struct SegBox {
        double lox, hix, loy, hiy;
    };
    std::vector<SegBox> boxes(S);
    for (int i = 0; i < S; ++i) {
        on_seg[i].push_back(vid(segments[i].a));
        on_seg[i].push_back(vid(segments[i].b));
        boxes[i] = {std::min(segments[i].a.xd, segments[i].b.xd),
                    std::max(segments[i].a.xd, segments[i].b.xd),
                    std::min(segments[i].a.yd, segments[i].b.yd),
                    std::max(segments[i].a.yd, segments[i].b.yd)};
    }
    const double eps = 1e-9;
    for (int i = 0; i < S; ++i) {
        for (int j = i + 1; j < S; ++j) {
            if (boxes[i].hix < boxes[j].lox - eps || boxes[j].hix < boxes[i].lox - eps ||
                boxes[i].hiy < boxes[j].loy - eps || boxes[j].hiy < boxes[i].loy - eps)
                continue;
            const Point &a = segments[i].a, &b = segments[i].b;
            const Point &c = segments[j].a, &d = segments[j].b;
            Orientation o1 = orientation(a, b, c), o2 = orientation(a, b, d);
            if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
                // collinear: splitting at each other's endpoints covers overlaps
                if (on_segment(c, a, b)) on_seg[i].push_back(vid(c));
                if (on_segment(d, a, b)) on_seg[i].push_back(vid(d));
                if (on_segment(a, c, d)) on_seg[j].push_back(vid(a));
                if (on_segment(b, c, d)) on_seg[j].push_back(vid(b));
                continue;
            }
            auto ip = segment_intersection(segments[i], segments[j]);
            if (ip) {
                int v = vid(*ip);
                on_seg[i].push_back(v);
                on_seg[j].push_back(v);
            }
        }
    }

    // split each segment at all vertices on it and emit unique edges
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < S; ++i) {
        auto& ids = on_seg[i];
        const bool by_x = cmp(segments[i].a.x, segments[i].b.x) != 0;
        std::sort(ids.begin(), ids.end(), [&](int u, int v) {
            const Point &pu = arr.points_[u], &pv = arr.points_[v];
            return by_x ? cmp(pu.x, pv.x) < 0 : cmp(pu.y, pv.y) < 0;
        });
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (size_t k = 0; k + 1 < ids.size(); ++k) {
            int u = ids[k], v = ids[k + 1];
            if (u == v) continue;
            auto key = std::minmax(u, v);
            if (edge_id.emplace(key, static_cast<int>(edges.size())).second)
                edges.emplace_back(key.first, key.second);
        }
    }

    // half-edges: 2*e and 2*e+1 are twins
    arr.half_edges_.resize(2 * edges.size());
    std::vector<std::vector<int>> outgoing(arr.points_.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        arr.half_edges_[2 * e] = HalfEdge{u, v, static_cast<int>(2 * e + 1), -1};
        arr.half_edges_[2 * e + 1] = HalfEdge{v, u, static_cast<int>(2 * e), -1};
        outgoing[u].push_back(static_cast<int>(2 * e));
        outgoing[v].push_back(static_cast<int>(2 * e + 1));
    }
    for (auto& out : outgoing) {
        std::sort(out.begin(), out.end(), [&](int h1, int h2) {
            Dir d1(arr.points_[arr.half_edges_[h1].origin], arr.points_[arr.half_edges_[h1].target]);
            Dir d2(arr.points_[arr.half_edges_[h2].origin], arr.points_[arr.half_edges_[h2].target]);
            return dir_ccw_before(d1, d2);
        });
    }
    // next(h): CCW-predecessor of twin(h) around the target vertex
    for (size_t h = 0; h < arr.half_edges_.size(); ++h) {
        int tw = arr.half_edges_[h].twin;
        const auto& out = outgoing[arr.half_edges_[h].target];
        auto it = std::find(out.begin(), out.end(), tw);
        size_t idx = static_cast<size_t>(it - out.begin());
        arr.half_edges_[h].next = out[(idx + out.size() - 1) % out.size()];
    }

    // cycles
    for (size_t h0 = 0; h0 < arr.half_edges_.size(); ++h0) {
        if (arr.half_edges_[h0].cycle >= 0) continue;
        int cid = static_cast<int>(arr.cycles_.size());
        arr.cycles_.emplace_back();
        Cycle& cyc = arr.cycles_.back();
        int h = static_cast<int>(h0);
        do {
            arr.half_edges_[h].cycle = cid;
            cyc.hes.push_back(h);
            h = arr.half_edges_[h].next;
        } while (h != static_cast<int>(h0));
        cyc.area2 = ring_area2(arr.cycle_ring(cid));
    }

    // faces: one per positive cycle; other cycles attach to the smallest
    // positive cycle strictly containing a representative edge midpoint
    std::vector<int> positives;
    for (size_t c = 0; c < arr.cycles_.size(); ++c)
        if (arr.cycles_[c].positive()) {
            arr.cycles_[c].face = static_cast<int>(arr.faces_.size());
            arr.faces_.push_back(Face{static_cast<int>(c), {}});
            positives.push_back(static_cast<int>(c));
        }
    std::vector<std::vector<Point>> pos_rings;
    pos_rings.reserve(positives.size());
    for (int c : positives) pos_rings.push_back(arr.cycle_ring(c));
    for (size_t c = 0; c < arr.cycles_.size(); ++c) {
        Cycle& cyc = arr.cycles_[c];
        if (cyc.positive()) continue;
        int he = cyc.hes.front();
        Point mid = interpolate(arr.he_origin(he), arr.he_target(he), Rat(1, 2));
        int best = -1;
        for (size_t k = 0; k < positives.size(); ++k) {
            if (point_on_ring(mid, pos_rings[k])) continue;
            if (!point_in_ring(mid, pos_rings[k])) continue;
            if (best < 0 || cmp(arr.cycles_[positives[k]].area2, arr.cycles_[positives[best]].area2) < 0)
                best = static_cast<int>(k);
        }
        if (best >= 0) {
            cyc.face = arr.cycles_[positives[best]].face;
            if (!cyc.zero()) arr.faces_[cyc.face].hole_cycles.push_back(static_cast<int>(c));
        }
    }
    arr.sample_cache_.resize(arr.faces_.size());
    return arr;
}

std::vector<Point> Arrangement::cycle_ring(int cycle) const {
    std::vector<Point> ring;
    ring.reserve(cycles_[cycle].hes.size());
    for (int he : cycles_[cycle].hes) ring.push_back(he_origin(he));
    return ring;
}

// Sample strictly inside the face adjacent to the left of half-edge he0:
// walk inward from the edge midpoint along the left normal to the first
// boundary hit (edge or vertex) and stop halfway.
Point Arrangement::first_hit_sample(int he0, const std::vector<int>& verify_cycles) {
    const Point& a = he_origin(he0);
    const Point& b = he_target(he0);
    Point m = interpolate(a, b, Rat(1, 2));
    Dir d(a, b);
    Dir n(-(d.y), d.x);  // left normal

    const int he0_edge = he0 / 2;
    const int E = static_cast<int>(half_edges_.size() / 2);
    const double mxd = m.xd, myd = m.yd, nxd = n.xd, nyd = n.yd;

    std::optional<Rat> best;
    auto consider = [&](const Rat& t) {
        if (sgn(t) <= 0) return;
        if (!best || cmp(t, *best) < 0) best = t;
    };
    auto scan_edge_exact = [&](int e) {
        if (e == he0_edge) return;
        const Point& u = points_[half_edges_[2 * e].origin];
        const Point& v = points_[half_edges_[2 * e].target];
        Dir ed(u, v);
        Rat denom = cross(n, ed);
        if (sgn(denom) == 0) return;  // parallel: its endpoints are scanned as vertices
        Dir um(m, u);
        Rat t = cross(um, ed) / denom;
        Rat s = cross(um, n) / denom;
        if (sgn(s) >= 0 && cmp(s, Rat(1)) <= 0) consider(t);
    };
    auto scan_vertex_exact = [&](int vi) {
        const Point& v = points_[vi];
        Dir mv(m, v);
        if (mv.is_zero() || cross_sign(n, mv) != 0) return;
        Rat t = sgn(n.x) != 0 ? Rat(mv.x / n.x) : Rat(mv.y / n.y);
        consider(t);
    };
    auto verify = [&](const Point& sample) {
        for (int c : verify_cycles) {
            auto ring = cycle_ring(c);
            if (point_on_ring(sample, ring)) return false;
            if (cycles_[c].zero()) continue;
            if (point_in_ring(sample, ring) != cycles_[c].positive()) return false;
        }
        return true;
    };

    // fast double pass shortlists candidate edges and vertices
    std::vector<std::pair<double, int>> approx;
    double tbest = std::numeric_limits<double>::infinity();
    for (int e = 0; e < E; ++e) {
        if (e == he0_edge) continue;
        const Point& u = points_[half_edges_[2 * e].origin];
        const Point& v = points_[half_edges_[2 * e].target];
        double edx = v.xd - u.xd, edy = v.yd - u.yd;
        double denom = nxd * edy - nyd * edx;
        double umx = u.xd - mxd, umy = u.yd - myd;
        double scale = (std::abs(nxd) + std::abs(nyd)) * (std::abs(edx) + std::abs(edy));
        if (std::abs(denom) <= 1e-9 * scale + 1e-300) {
            approx.emplace_back(-1.0, e);
            continue;
        }
        double t = (umx * edy - umy * edx) / denom;
        double s = (umx * nyd - umy * nxd) / denom;
        if (s < -1e-7 || s > 1 + 1e-7 || t <= 1e-12) continue;
        approx.emplace_back(t, e);
        if (t < tbest) tbest = t;
    }
    for (auto& [t, e] : approx)
        if (t < 0 || t <= tbest * (1 + 1e-6) + 1e-9) scan_edge_exact(e);
    const double nmag = std::abs(nxd) + std::abs(nyd) + 1e-300;
    for (int vi = 0; vi < static_cast<int>(points_.size()); ++vi) {
        const Point& v = points_[vi];
        double cr = nxd * (v.yd - myd) - nyd * (v.xd - mxd);
        double vmag = std::abs(v.xd - mxd) + std::abs(v.yd - myd);
        if (std::abs(cr) <= 1e-9 * nmag * vmag + 1e-300) scan_vertex_exact(vi);
    }
    if (best) {
        Point sample(m.x + (*best / 2) * n.x, m.y + (*best / 2) * n.y);
        if (verify(sample)) return sample;
    }
    // exact fallback over everything
    best.reset();
    for (int e = 0; e < E; ++e) scan_edge_exact(e);
    for (int vi = 0; vi < static_cast<int>(points_.size()); ++vi) scan_vertex_exact(vi);
    if (!best) throw InternalInvariantViolation("face sample ray escaped the arrangement");
    Point sample(m.x + (*best / 2) * n.x, m.y + (*best / 2) * n.y);
    if (!verify(sample)) throw InternalInvariantViolation("face sample verification failed");
    return sample;
}

const Point& Arrangement::face_sample(int f) {
    if (!sample_cache_[f]) {
        std::vector<int> verify_cycles{faces_[f].outer_cycle};
        for (int c : faces_[f].hole_cycles) verify_cycles.push_back(c);
        int he0 = cycles_[faces_[f].outer_cycle].hes.front();
        sample_cache_[f] = first_hit_sample(he0, verify_cycles);
    }
    return *sample_cache_[f];
}

PolygonWithHoles Arrangement::face_region(int f) {
    PolygonWithHoles region;
    region.outer = cycle_ring(faces_[f].outer_cycle);
    for (int c : faces_[f].hole_cycles) region.holes.push_back(cycle_ring(c));
    region.anchor = face_sample(f);
    return region;
}

std::vector<std::pair<int, int>> Arrangement::face_edge_adjacencies() const {
    std::vector<std::pair<int, int>> out;
    for (size_t e = 0; e < half_edges_.size() / 2; ++e) {
        int f1 = face_of_he(static_cast<int>(2 * e));
        int f2 = face_of_he(static_cast<int>(2 * e + 1));
        if (f1 >= 0 && f2 >= 0 && f1 != f2) out.emplace_back(std::min(f1, f2), std::max(f1, f2));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PolygonWithHoles> Arrangement::union_of_faces(const std::vector<char>& in_face) {
    auto face_in = [&](int f) { return f >= 0 && in_face[f] != 0; };
    auto boundary = [&](int he) {
        return face_in(face_of_he(he)) && !face_in(face_of_he(half_edges_[he].twin));
    };
    std::vector<char> visited(half_edges_.size(), 0);
    struct Loop {
        std::vector<Point> ring;
        Rat area2;
        int sample_he;
    };
    std::vector<Loop> loops;
    for (size_t h0 = 0; h0 < half_edges_.size(); ++h0) {
        if (visited[h0] || !boundary(static_cast<int>(h0))) continue;
        Loop loop;
        int h = static_cast<int>(h0);
        do {
            visited[h] = 1;
            loop.ring.push_back(he_origin(h));
            // advance to the next boundary half-edge around the target vertex
            int g = half_edges_[h].next;
            while (!boundary(g)) g = half_edges_[half_edges_[g].twin].next;
            h = g;
        } while (h != static_cast<int>(h0));
        loop.area2 = ring_area2(loop.ring);
        loop.sample_he = static_cast<int>(h0);
        loops.push_back(std::move(loop));
    }

    std::vector<int> outers, holes;
    for (size_t i = 0; i < loops.size(); ++i)
        (sgn(loops[i].area2) > 0 ? outers : holes).push_back(static_cast<int>(i));

    std::vector<PolygonWithHoles> comps(outers.size());
    for (size_t k = 0; k < outers.size(); ++k) comps[k].outer = loops[outers[k]].ring;
    for (int hidx : holes) {
        int he = loops[hidx].sample_he;
        Point mid = interpolate(he_origin(he), he_target(he), Rat(1, 2));
        int best = -1;
        for (size_t k = 0; k < outers.size(); ++k) {
            if (point_on_ring(mid, comps[k].outer) || !point_in_ring(mid, comps[k].outer))
                continue;
            if (best < 0 ||
                cmp(loops[outers[k]].area2, loops[outers[best]].area2) < 0)
                best = static_cast<int>(k);
        }
        if (best < 0)
            throw InternalInvariantViolation("union hole loop without enclosing outer loop");
        comps[best].holes.push_back(loops[hidx].ring);
    }
    // anchor: sample of some in-face inside each component
    for (auto& comp : comps) {
        for (int f = 0; f < face_count() && !comp.anchor; ++f) {
            if (!face_in(f)) continue;
            const Point& s = face_sample(f);
            if (comp.contains(s)) comp.anchor = s;
        }
    }
    return comps;
}

PolygonWithHoles make_region(std::vector<Point> outer, std::vector<std::vector<Point>> holes) {
    if (outer.size() < 3) throw InvalidParameters("region outer ring needs >= 3 vertices");
    if (sgn(ring_area2(outer)) <= 0) throw InvalidParameters("outer ring must be CCW");
    for (auto& h : holes)
        if (sgn(ring_area2(h)) >= 0) throw InvalidParameters("hole rings must be CW");
    PolygonWithHoles region;
    region.outer = std::move(outer);
    region.holes = std::move(holes);
    Arrangement arr = Arrangement::build(region.edge_segments());
    for (int f = 0; f < arr.face_count(); ++f) {
        const Point& s = arr.face_sample(f);
        if (region.contains(s) && !region.on_region_boundary(s)) {
            region.anchor = s;
            break;
        }
    }
    if (!region.anchor) throw InvalidParameters("region has empty interior");
    return region;
}

}  // namespace obsroute
