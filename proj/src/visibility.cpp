#include "obsroute/visibility.hpp"

#include <algorithm>
#include <map>

namespace obsroute {

Instance::Instance(Box box, std::vector<ConvexPolygon> obstacles)
    : box_(std::move(box)), obstacles_(std::move(obstacles)) {
    for (const auto& c : obstacles_) {
        total_vertices_ += c.size();
        for (const Point& v : c.vertices())
            if (!box_.contains_strict(v))
                throw InvalidInstance("obstacle not strictly inside the bounding box");
    }
    for (size_t i = 0; i < obstacles_.size(); ++i)
        for (size_t j = i + 1; j < obstacles_.size(); ++j)
            if (!polygons_disjoint(obstacles_[i], obstacles_[j]))
                throw InvalidInstance("obstacles are not pairwise disjoint");
}

Instance Instance::without_obstacle(int k) const {
    std::vector<ConvexPolygon> rest;
    rest.reserve(obstacles_.size() - 1);
    for (int i = 0; i < n(); ++i)
        if (i != k) rest.push_back(obstacles_[i]);
    return Instance(box_, std::move(rest));
}

bool Instance::point_free(const Point& p) const {
    for (const auto& c : obstacles_)
        if (c.contains_strict(p)) return false;
    return true;
}

AngularIntervalSet::AngularIntervalSet(Point viewpoint, Dir start, Dir end)
    : viewpoint_(std::move(viewpoint)), start_(start), end_(end) {
    if (start.is_zero() || end.is_zero())
        throw InvalidParameters("angular interval with zero direction");
    int cs = cross_sign(start, end);
    if (cs < 0) throw InvalidParameters("base cone must have width < pi and CCW order");
    if (cs == 0 && sgn(dot(start, end)) < 0)
        throw InvalidParameters("base cone must have width < pi");
    intervals_.emplace_back(start_, end_);
}

int AngularIntervalSet::cone_cmp(const Dir& u, const Dir& v) {
    int cs = cross_sign(u, v);
    return cs > 0 ? -1 : (cs < 0 ? 1 : 0);
}

bool AngularIntervalSet::in_cone(const Dir& d) const {
    return cross_sign(start_, d) >= 0 && cross_sign(d, end_) >= 0 &&
           !(sgn(dot(d, start_)) < 0 && sgn(dot(d, end_)) < 0);
}

bool AngularIntervalSet::contains(const Dir& d) const {
    for (const auto& [u, v] : intervals_)
        if (cone_cmp(u, d) <= 0 && cone_cmp(d, v) <= 0) return true;
    return false;
}

void AngularIntervalSet::subtract_inner(const Dir& a, const Dir& b) {
    std::vector<std::pair<Dir, Dir>> out;
    for (auto& [u, v] : intervals_) {
        if (cone_cmp(b, u) <= 0 || cone_cmp(v, a) <= 0) {
            out.emplace_back(u, v);
            continue;
        }
        if (cone_cmp(u, a) <= 0) out.emplace_back(u, a);
        if (cone_cmp(b, v) <= 0) out.emplace_back(b, v);
    }
    intervals_ = std::move(out);
}

void AngularIntervalSet::subtract_prefix(const Dir& b) {
    std::vector<std::pair<Dir, Dir>> out;
    for (auto& [u, v] : intervals_) {
        if (cone_cmp(b, u) <= 0)
            out.emplace_back(u, v);
        else if (cone_cmp(b, v) <= 0)
            out.emplace_back(b, v);
    }
    intervals_ = std::move(out);
}

void AngularIntervalSet::subtract_suffix(const Dir& a) {
    std::vector<std::pair<Dir, Dir>> out;
    for (auto& [u, v] : intervals_) {
        if (cone_cmp(v, a) <= 0)
            out.emplace_back(u, v);
        else if (cone_cmp(u, a) <= 0)
            out.emplace_back(u, a);
    }
    intervals_ = std::move(out);
}

namespace {

bool strictly_inside_open_cone(const Dir& x, const Dir& a, const Dir& b) {
    return cross_sign(a, x) > 0 && cross_sign(x, b) > 0;
}

}  // namespace

void AngularIntervalSet::subtract_open(const Dir& a, const Dir& b) {
    if (cross_sign(a, b) == 0 && sgn(dot(a, b)) > 0) return;  // empty open cone
    bool ain = in_cone(a), bin = in_cone(b);
    if (ain && bin) {
        int c = cone_cmp(a, b);
        if (c < 0) {
            subtract_inner(a, b);
        } else if (c > 0) {
            subtract_prefix(b);
            subtract_suffix(a);
        }
        return;
    }
    if (ain) {
        subtract_suffix(a);
        return;
    }
    if (bin) {
        subtract_prefix(b);
        return;
    }
    if (strictly_inside_open_cone(start_, a, b)) intervals_.clear();
}

void AngularIntervalSet::subtract_open_halfplane(const Dir& c) {
    int ss = cross_sign(c, start_), se = cross_sign(c, end_);
    if (ss > 0 && se > 0) {
        intervals_.clear();
        return;
    }
    if (ss <= 0 && se <= 0) return;
    Dir bc = in_cone(c) ? c : c.negated();
    if (ss > 0)
        subtract_prefix(bc);
    else
        subtract_suffix(bc);
}

std::optional<Dir> AngularIntervalSet::overlap_interior(const Dir& a, const Dir& b) const {
    bool ain = in_cone(a), bin = in_cone(b);
    if (!ain && !bin && !strictly_inside_open_cone(start_, a, b)) return std::nullopt;
    Dir lo = ain ? a : start_;
    Dir hi = bin ? b : end_;
    if (cone_cmp(lo, hi) >= 0) return std::nullopt;
    return Dir(lo.x + hi.x, lo.y + hi.y);
}

bool sees(const Point& p, int target_index, const Instance& inst) {
    const ConvexPolygon& target = inst.obstacle(target_index);
    if (target.on_boundary(p)) return true;
    if (target.contains_strict(p))
        throw PointInsideObstacle("sees: viewpoint strictly inside the target");

    TangentPair tp = tangent_points(p, target);
    Dir cone_start(p, tp.right), cone_end(p, tp.left);
    AngularIntervalSet vis(p, cone_start, cone_end);

    for (int o = 0; o < inst.n() && !vis.empty(); ++o) {
        if (o == target_index) continue;
        const ConvexPolygon& occ = inst.obstacle(o);
        int edge = occ.boundary_edge(p);
        if (edge >= 0) {
            // viewpoint on the occluder boundary: only directions into the
            // open interior are blocked, grazing ones are not
            int at_vertex = -1;
            for (int k = 0; k < occ.size(); ++k)
                if (occ.vertex(k) == p) at_vertex = k;
            if (at_vertex >= 0) {
                Dir d1(p, occ.vertex(at_vertex + 1));
                Dir d2(p, occ.vertex(at_vertex - 1));
                vis.subtract_open(d1, d2);
            } else {
                Dir along(occ.vertex(edge), occ.vertex(edge + 1));
                vis.subtract_open_halfplane(along);
            }
            continue;
        }
        if (occ.contains_strict(p))
            throw PointInsideObstacle("sees: viewpoint strictly inside an obstacle");

        TangentPair ot = tangent_points(p, occ);
        Dir a(p, ot.right), b(p, ot.left);
        auto mid = vis.overlap_interior(a, b);
        if (!mid) continue;
        auto t_occ = ray_entry(p, *mid, occ);
        auto t_tgt = ray_entry(p, *mid, target);
        if (!t_occ || !t_tgt) continue;
        // disjoint convex bodies keep a fixed depth order across the overlap
        if (cmp(*t_occ, *t_tgt) < 0) vis.subtract_open(a, b);
    }
    return !vis.empty();
}

PolygonWithHoles visibility_region(int target_index, const Instance& inst) {
    std::vector<Segment> segments = inst.box().edges();
    for (const auto& c : inst.obstacles())
        for (int i = 0; i < c.size(); ++i) segments.push_back(c.edge(i));
    // boundary pieces lie on common tangents of the target with occluders and
    // also on occluder-occluder tangents (a window between two occluders can
    // close while the target still subtends both sides), so take all pairs
    for (int a = 0; a < inst.n(); ++a) {
        for (int b = a + 1; b < inst.n(); ++b) {
            for (const CommonTangent& t : common_tangents(inst.obstacle(a), inst.obstacle(b))) {
                auto chord = clip_line_to_box(t.line, inst.box());
                if (chord) segments.push_back(*chord);
            }
        }
    }
    Arrangement arr = Arrangement::build(segments);
    std::vector<char> in_face(arr.face_count(), 0);
    for (int f = 0; f < arr.face_count(); ++f) {
        const Point& s = arr.face_sample(f);
        in_face[f] = inst.point_free(s) && sees(s, target_index, inst) ? 1 : 0;
    }
    auto comps = arr.union_of_faces(in_face);
    if (comps.empty()) throw InternalInvariantViolation("visibility region is empty");
    if (comps.size() > 1) throw InternalInvariantViolation("visibility region is disconnected");
    return std::move(comps.front());
}

std::optional<Point> regions_common_point(const std::vector<PolygonWithHoles>& regions) {
    if (regions.empty()) return std::nullopt;
    // exact bounding-box prefilter: an empty common box means no common point
    Rat lox, hix, loy, hiy;
    for (size_t k = 0; k < regions.size(); ++k) {
        Rat rlox = regions[k].outer.front().x, rhix = rlox;
        Rat rloy = regions[k].outer.front().y, rhiy = rloy;
        for (const Point& v : regions[k].outer) {
            if (cmp(v.x, rlox) < 0) rlox = v.x;
            if (cmp(v.x, rhix) > 0) rhix = v.x;
            if (cmp(v.y, rloy) < 0) rloy = v.y;
            if (cmp(v.y, rhiy) > 0) rhiy = v.y;
        }
        if (k == 0) {
            lox = rlox;
            hix = rhix;
            loy = rloy;
            hiy = rhiy;
        } else {
            if (cmp(rlox, lox) > 0) lox = rlox;
            if (cmp(rhix, hix) < 0) hix = rhix;
            if (cmp(rloy, loy) > 0) loy = rloy;
            if (cmp(rhiy, hiy) < 0) hiy = rhiy;
        }
    }
    if (cmp(lox, hix) > 0 || cmp(loy, hiy) > 0) return std::nullopt;
    std::vector<Segment> segments;
    for (const auto& r : regions) {
        auto es = r.edge_segments();
        segments.insert(segments.end(), es.begin(), es.end());
    }
    Arrangement arr = Arrangement::build(segments);
    std::vector<int> order(arr.vertex_count());
    for (int i = 0; i < arr.vertex_count(); ++i) order[i] = i;
    const auto& pts = arr.vertex_points();
    std::sort(order.begin(), order.end(), [&](int i, int j) { return lex_less(pts[i], pts[j]); });
    for (int i : order) {
        const Point& v = pts[i];
        bool in_all = true;
        for (const auto& r : regions)
            if (!r.contains(v)) {
                in_all = false;
                break;
            }
        if (in_all) return v;
    }
    return std::nullopt;
}

std::optional<Point> common_observation_point(const Instance&,
                                              const std::vector<PolygonWithHoles>& regions) {
    return regions_common_point(regions);
}

std::optional<Point> common_observation_point(const Instance& inst) {
    std::vector<PolygonWithHoles> regions;
    regions.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) regions.push_back(visibility_region(i, inst));
    return common_observation_point(inst, regions);
}

bool is_translate_family(const Instance& inst) {
    if (inst.n() <= 1) return true;
    const ConvexPolygon& base = inst.obstacle(0);
    Point c0 = base.centroid();
    std::vector<Point> base_rel;
    for (const Point& v : base.vertices()) base_rel.emplace_back(v.x - c0.x, v.y - c0.y);
    std::sort(base_rel.begin(), base_rel.end(), lex_less);
    for (int i = 1; i < inst.n(); ++i) {
        const ConvexPolygon& c = inst.obstacle(i);
        if (c.size() != base.size()) return false;
        Point ci = c.centroid();
        std::vector<Point> rel;
        for (const Point& v : c.vertices()) rel.emplace_back(v.x - ci.x, v.y - ci.y);
        std::sort(rel.begin(), rel.end(), lex_less);
        if (rel != base_rel) return false;
    }
    return true;
}

std::optional<Point> translate_intersection_simplification(const Instance& inst) {
    if (!is_translate_family(inst))
        throw NotTranslateFamily("translate_intersection_simplification: not translates");
    std::vector<PolygonWithHoles> simple;
    simple.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        PolygonWithHoles v = visibility_region(i, inst);
        if (v.holes.size() != 1)
            throw InternalInvariantViolation(
                "translate visibility region does not have exactly one hole");
        // V(C) union C is the outer ring alone: the unique hole is C itself
        PolygonWithHoles s;
        s.outer = std::move(v.outer);
        s.anchor = v.anchor;
        simple.push_back(std::move(s));
    }
    return regions_common_point(simple);
}

}  // namespace obsroute
