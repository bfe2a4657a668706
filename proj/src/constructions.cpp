#include "obsroute/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "obsroute/orp.hpp"

namespace obsroute {

namespace {

ConvexPolygon rect_polygon(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1) {
    return ConvexPolygon::from_vertices(
        {Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)});
}

Instance build_six_squares(const Rat& e) {
    Rat h = Rat(4) + Rat(10) / e;
    Box box(Rat(-3), -h, Rat(7), h);
    // the middle pair sits closest to the separating line: deep boundary
    // pieces are then reachable only by threading two near-vertical slits,
    // which forces observation points far out
    std::vector<ConvexPolygon> squares;
    for (int k = 0; k < 3; ++k) {
        Rat x0 = Rat(k) + Rat(k) * e;
        Rat gap = (k == 1) ? e : 4 * e;
        squares.push_back(rect_polygon(x0, gap, x0 + 1, gap + 1));
        squares.push_back(rect_polygon(x0, -gap - 1, x0 + 1, -gap));
    }
    return Instance(box, std::move(squares));
}

}  // namespace

bool verify_far_observation(const Instance& inst, const Rat& delta) {
    std::vector<PolygonWithHoles> regions;
    regions.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) regions.push_back(visibility_region(i, inst));

    std::vector<Segment> overlay;
    for (const auto& r : regions) {
        auto es = r.edge_segments();
        overlay.insert(overlay.end(), es.begin(), es.end());
    }
    Arrangement arr = Arrangement::build(overlay);

    auto in_all = [&](const Point& p) {
        for (const auto& r : regions)
            if (!r.contains(p)) return false;
        return true;
    };

    std::vector<Point> hull_pts;
    for (const auto& c : inst.obstacles())
        for (const Point& v : c.vertices()) hull_pts.push_back(v);
    std::vector<Point> hull = convex_hull(hull_pts);
    Rat d2 = delta * delta;
    auto far_enough_point = [&](const Point& p) {
        for (size_t i = 0; i < hull.size(); ++i) {
            Rat dd = point_segment_dist2(p, hull[i], hull[(i + 1) % hull.size()]);
            if (cmp(dd, d2) < 0) return false;
        }
        return true;
    };

    bool found_any = false;
    for (const Point& v : arr.vertex_points()) {
        if (!in_all(v)) continue;
        found_any = true;
        if (!far_enough_point(v)) return false;
    }
    // intersection edges: every boundary piece of the common region is an
    // overlay edge whose midpoint stays in all regions
    for (size_t he = 0; he < arr.half_edges().size(); he += 2) {
        const Point& a = arr.he_origin(static_cast<int>(he));
        const Point& b = arr.he_target(static_cast<int>(he));
        Point mid = interpolate(a, b, Rat(1, 2));
        if (!in_all(mid)) continue;
        found_any = true;
        for (size_t i = 0; i < hull.size(); ++i) {
            Rat dd = segment_segment_dist2(a, b, hull[i], hull[(i + 1) % hull.size()]);
            if (cmp(dd, d2) < 0) return false;
        }
    }
    return found_any;
}

Instance six_squares(double delta, Rat* eps_out) {
    if (delta <= 0) throw InvalidParameters("six_squares: delta must be positive");
    Rat d(delta);
    Rat eps(3, 50);
    for (int halvings = 0; halvings < 24; ++halvings) {
        Instance inst = build_six_squares(eps);
        if (verify_far_observation(inst, d)) {
            if (eps_out) *eps_out = eps;
            return inst;
        }
        eps /= 2;
    }
    throw InternalInvariantViolation("six_squares: no suitable separation found");
}

std::vector<ConvexPolygon> cluster_squares(const Point& center, const Rat& side, bool reduced) {
    // layout in hundredths of the square side; rotational closure of the
    // north-side pieces keeps the gaps staggered in every quadrant
    struct R {
        int x0, y0, x1, y1;
    };
    std::vector<R> base{
        {-50, 58, 50, 158},   // inner ring, axis square
        {58, 58, 158, 158},   // inner ring, diagonal square
        {4, 250, 104, 350},   // blocker behind the vertical inner slot
        {250, 4, 350, 104},   // blocker behind the horizontal inner slot
    };
    if (!reduced) {
        base.push_back({250, 250, 350, 350});    // corner filler
        base.push_back({-235, 250, -135, 350});  // side filler
    }
    std::vector<R> rects{{-50, -50, 50, 50}};
    for (const R& r : base) {
        R cur = r;
        for (int rot = 0; rot < 4; ++rot) {
            rects.push_back(cur);
            cur = R{-cur.y1, cur.x0, -cur.y0, cur.x1};
        }
    }
    std::vector<ConvexPolygon> out;
    out.reserve(rects.size());
    Rat unit = side / 100;
    for (const R& r : rects)
        out.push_back(rect_polygon(center.x + r.x0 * unit, center.y + r.y0 * unit,
                                   center.x + r.x1 * unit, center.y + r.y1 * unit));
    return out;
}

bool verify_cluster_hiding(const std::vector<ConvexPolygon>& cluster, int center_index,
                           int samples, std::uint64_t seed) {
    std::vector<Point> all_vertices;
    for (const auto& c : cluster)
        for (const Point& v : c.vertices()) all_vertices.push_back(v);
    std::vector<Point> hull = convex_hull(all_vertices);
    auto hull_contains = [&](const Point& p) {
        for (size_t i = 0; i < hull.size(); ++i)
            if (orientation(hull[i], hull[(i + 1) % hull.size()], p) == Orientation::CW)
                return false;
        return true;
    };
    double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
    for (const Point& v : all_vertices) {
        lox = std::min(lox, v.xd);
        hix = std::max(hix, v.xd);
        loy = std::min(loy, v.yd);
        hiy = std::max(hiy, v.yd);
    }
    const double ext = std::max(hix - lox, hiy - loy);
    Box box(Rat(lox - ext), Rat(loy - ext), Rat(hix + ext), Rat(hiy + ext));
    Instance inst(box, cluster);

    auto blocked_from = [&](const Point& p) {
        if (hull_contains(p)) return true;  // only exterior viewpoints matter
        return !sees(p, center_index, inst);
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(lox - ext * 0.9, hix + ext * 0.9);
    std::uniform_real_distribution<double> uy(loy - ext * 0.9, hiy + ext * 0.9);
    int kept = 0, attempts = 0;
    while (kept < samples && attempts < 40 * samples) {
        ++attempts;
        Point p = Point::from_doubles(ux(rng), uy(rng));
        if (hull_contains(p)) continue;
        ++kept;
        if (!blocked_from(p)) return false;
    }
    // extreme viewpoints: pairwise intersections of all tangent lines between
    // the center square and every other square
    std::vector<Line> tangent_lines;
    for (size_t o = 0; o < cluster.size(); ++o) {
        if (static_cast<int>(o) == center_index) continue;
        for (const CommonTangent& t : common_tangents(cluster[center_index], cluster[o]))
            tangent_lines.push_back(t.line);
    }
    for (size_t i = 0; i < tangent_lines.size(); ++i)
        for (size_t j = i + 1; j < tangent_lines.size(); ++j) {
            auto ip = tangent_lines[i].intersect(tangent_lines[j]);
            if (!ip || !box.contains_strict(*ip) || hull_contains(*ip)) continue;
            if (!inst.point_free(*ip)) continue;
            if (!blocked_from(*ip)) return false;
        }
    return true;
}

ReductionArtifacts grid_cluster_instance(const std::vector<std::pair<int, int>>& points,
                                         bool reduced) {
    if (points.empty()) throw PointsNotInGrid("grid_cluster_instance: empty point set");
    std::set<std::pair<int, int>> dedup(points.begin(), points.end());
    if (dedup.size() != points.size())
        throw PointsNotInGrid("grid_cluster_instance: repeated points");
    int minx = points[0].first, miny = points[0].second, maxx = 0, maxy = 0;
    for (auto [x, y] : points) {
        if (x < 0 || y < 0) throw PointsNotInGrid("grid_cluster_instance: negative coordinate");
        minx = std::min(minx, x);
        miny = std::min(miny, y);
    }
    std::vector<std::pair<int, int>> pts;
    for (auto [x, y] : points) pts.emplace_back(x - minx, y - miny);
    for (auto [x, y] : pts) {
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
    }
    const int a = std::max(1, maxx);
    const int b = std::max(1, maxy);
    const int n = static_cast<int>(pts.size());
    Rat w(1, 10 * a * n);
    Rat s = w / 100;

    if (!verify_cluster_hiding(cluster_squares(Point(0, 0), Rat(100), reduced), 0, 4000))
        throw ClusterNotHiding("grid_cluster_instance: cluster layout failed verification");

    ReductionArtifacts art{
        Instance(Box(-w / 2, -w / 2, Rat(a) + w / 2, Rat(b) + w / 2), {}), {}, {}, {}, {}, {}, {}};
    std::vector<ConvexPolygon> obstacles;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            obstacles.push_back(
                rect_polygon(Rat(i) + w / 2, Rat(j) + w / 2, Rat(i + 1) - w / 2,
                             Rat(j + 1) - w / 2));
    for (int k = 0; k < n; ++k) {
        Point ref(pts[k].first, pts[k].second);
        auto cluster = cluster_squares(ref, s, reduced);
        std::vector<int> members;
        art.center_squares.push_back(static_cast<int>(obstacles.size()));
        for (auto& c : cluster) {
            members.push_back(static_cast<int>(obstacles.size()));
            obstacles.push_back(std::move(c));
        }
        art.cluster_members.push_back(std::move(members));
        art.reference_points.emplace("cluster/" + std::to_string(k), ref);
    }
    art.parameters.emplace("w", w);
    art.parameters.emplace("s", s);
    art.parameters.emplace("a", Rat(a));
    art.parameters.emplace("b", Rat(b));
    art.instance = Instance(Box(-w / 2, -w / 2, Rat(a) + w / 2, Rat(b) + w / 2),
                            std::move(obstacles));
    return art;
}

namespace {

std::vector<Point> dedup_ring_collinear(std::vector<Point> ring) {
    // drop vertices collinear with their neighbors (arrangement splits edges)
    bool changed = true;
    while (changed && ring.size() > 3) {
        changed = false;
        for (size_t i = 0; i < ring.size(); ++i) {
            const Point& prev = ring[(i + ring.size() - 1) % ring.size()];
            const Point& next = ring[(i + 1) % ring.size()];
            if (orientation(prev, ring[i], next) == Orientation::Collinear) {
                ring.erase(ring.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return ring;
}

}  // namespace

ReductionArtifacts setcover_instance(const SetSystem& ss) {
    if (ss.n < 1 || ss.sets.empty()) throw InvalidSetSystem("setcover_instance: empty system");
    std::vector<char> covered(ss.n + 1, 0);
    for (const auto& set : ss.sets) {
        if (set.empty()) throw InvalidSetSystem("setcover_instance: empty set");
        for (int e : set) {
            if (e < 1 || e > ss.n) throw InvalidSetSystem("setcover_instance: element out of range");
            covered[e] = 1;
        }
    }
    for (int e = 1; e <= ss.n; ++e)
        if (!covered[e]) throw InvalidSetSystem("setcover_instance: uncovered element");
    const int m = static_cast<int>(ss.sets.size());
    if (ss.n > 3 || m > 3)
        throw InvalidParameters("setcover_instance: desk-scale generator supports n, m <= 3");

    const int M = std::max(12 * m, ss.n + 1);
    Rat M2inv = Rat(1, M) * Rat(1, M);
    Rat M4inv = M2inv * M2inv;
    Rat M8inv = M4inv * M4inv;
    Rat half_width = M8inv / 2;  // slab half-width, measured vertically

    Box b1(-M2inv, Rat(-M), Rat(2 * M), Rat(2 * M));
    std::vector<Segment> segments = b1.edges();
    struct Corridor {
        int set;       // 0-based set index
        int element;   // 1-based element
        Rat slope;     // incidence line y = (set+1) + slope x
        Point apex;    // p_i
        Dir wedge_lo;  // toward q_j
        Dir wedge_hi;  // toward q_j'
    };
    std::vector<Corridor> corridors;
    for (int i = 0; i < m; ++i) {
        Point p(Rat(0), Rat(i + 1));
        for (int j : ss.sets[i]) {
            Point q{Rat(M), Rat(j)};
            Point qp{Rat(M), Rat(j) + M4inv};
            Rat slope = (Rat(j) - Rat(i + 1)) / Rat(M);
            corridors.push_back(Corridor{i, j, slope, p, Dir(p, q), Dir(p, qp)});
            // slab boundaries: y = (i+1) + slope x +- half_width
            for (int sign : {-1, 1}) {
                Line border(slope, Rat(-1), -(Rat(i + 1) + Rat(sign) * half_width));
                auto chord = clip_line_to_box(border, b1);
                if (chord) segments.push_back(*chord);
            }
            // upper wedge boundary: ray from p through q'
            Line ray_line(p, qp);
            auto chord = clip_line_to_box(ray_line, b1);
            if (chord) {
                Point far = sgn(Dir(p, chord->a).x) > 0 ? chord->a : chord->b;
                segments.emplace_back(p, far);
            }
        }
    }

    auto in_slab = [&](const Corridor& c, const Point& pt) {
        Rat off = pt.y - (Rat(c.set + 1) + c.slope * pt.x);
        return cmp(off, half_width) <= 0 && cmp(off, -half_width) >= 0;
    };
    auto in_wedge = [&](const Corridor& c, const Point& pt) {
        if (cmp(pt.x, c.apex.x) < 0) return false;
        Dir v(c.apex, pt);
        return cross_sign(c.wedge_lo, v) >= 0 && cross_sign(v, c.wedge_hi) >= 0;
    };
    auto removed = [&](const Point& pt) {
        for (const Corridor& c : corridors)
            if (in_slab(c, pt) || in_wedge(c, pt)) return true;
        return false;
    };

    Arrangement arr = Arrangement::build(segments);
    std::vector<ConvexPolygon> pre;  // geometry before the final transform
    ReductionArtifacts art{Instance(Box(Rat(0), Rat(0), Rat(1), Rat(1)), {}), {}, {}, {},
                           {},                                                {}, {}};
    for (int f = 0; f < arr.face_count(); ++f) {
        const Point& sample = arr.face_sample(f);
        if (removed(sample)) continue;
        PolygonWithHoles region = arr.face_region(f);
        if (!region.holes.empty())
            throw InternalInvariantViolation("setcover_instance: face with holes");
        std::vector<Point> ring = dedup_ring_collinear(region.outer);
        art.f1_faces.push_back(static_cast<int>(pre.size()));
        pre.push_back(ConvexPolygon::from_vertices(std::move(ring)));
    }

    for (int j = 1; j <= ss.n; ++j) {
        Point c{Rat(M), Rat(j) + M4inv / 2};
        art.q_squares.push_back(static_cast<int>(pre.size()));
        pre.push_back(rect_polygon(c.x - half_width, c.y - half_width, c.x + half_width,
                                   c.y + half_width));
        art.reference_points.emplace("q/" + std::to_string(j), c);
    }
    pre.push_back(rect_polygon(Rat(-3, 2), Rat(-3, 2), Rat(-1, 2), Rat(-1, 2)));  // C1
    pre.push_back(rect_polygon(Rat(-3, 2), Rat(M) + Rat(1, 2), Rat(-1, 2),
                               Rat(M) + Rat(3, 2)));  // C2
    pre.push_back(rect_polygon(Rat(-M), Rat(0), -M2inv - M4inv, Rat(M)));        // B2

    auto transform = [&](const Point& p) {
        return Point(p.x * Rat(M * M) / 2, p.y / Rat(24 * M));
    };
    std::vector<ConvexPolygon> post;
    post.reserve(pre.size());
    for (const auto& c : pre) {
        std::vector<Point> vs;
        for (const Point& v : c.vertices()) vs.push_back(transform(v));
        post.push_back(ConvexPolygon::from_vertices(std::move(vs)));
    }
    Point lo = transform(Point(Rat(-M - 1), Rat(-M - 2)));
    Point hi = transform(Point(Rat(2 * M + 1), Rat(2 * M + 2)));
    art.instance = Instance(Box(lo.x, lo.y, hi.x, hi.y), std::move(post));
    for (int i = 0; i < m; ++i) {
        Point p(Rat(0), Rat(i + 1));
        art.reference_points.emplace("p_pre/" + std::to_string(i), p);
        art.reference_points.emplace("p/" + std::to_string(i), transform(p));
    }
    art.parameters.emplace("M", Rat(M));
    art.parameters.emplace("slab_width", M8inv);
    return art;
}

Tour setcover_witness_tour(const ReductionArtifacts& art, const SetSystem& ss,
                           const std::vector<int>& cover_sets) {
    const int M = static_cast<int>(to_double(art.parameters.at("M")));
    Rat M2inv = Rat(1, M) * Rat(1, M);
    auto transform = [&](const Point& p) {
        return Point(p.x * Rat(M * M) / 2, p.y / Rat(24 * M));
    };
    Point bottom(-M2inv, Rat(-M));
    Point top(-M2inv, Rat(2 * M));

    struct Stop {
        Rat y_cross;
        std::optional<Point> apex;  // loop tip for chosen sets
    };
    std::vector<Stop> stops;
    for (int i = 0; i < static_cast<int>(ss.sets.size()); ++i) {
        bool chosen = std::find(cover_sets.begin(), cover_sets.end(), i) != cover_sets.end();
        for (int j : ss.sets[i]) {
            Rat slope = (Rat(j) - Rat(i + 1)) / Rat(M);
            Rat y_cross = Rat(i + 1) + slope * (-M2inv);
            // every corridor crossing becomes a tour vertex; the chosen set
            // loops once through its first element's corridor
            bool loop_here = chosen && j == ss.sets[i].front();
            stops.push_back(Stop{y_cross, loop_here ? std::optional<Point>(Point(Rat(0), Rat(i + 1)))
                                                    : std::nullopt});
        }
    }
    for (int set_idx : cover_sets)
        if (set_idx < 0 || set_idx >= static_cast<int>(ss.sets.size()))
            throw InvalidParameters("setcover_witness_tour: set index out of range");
    std::sort(stops.begin(), stops.end(),
              [](const Stop& a, const Stop& b) { return cmp(a.y_cross, b.y_cross) < 0; });

    std::vector<Point> pre{bottom};
    for (const Stop& l : stops) {
        pre.emplace_back(-M2inv, l.y_cross);
        if (l.apex) {
            pre.push_back(*l.apex);
            pre.emplace_back(-M2inv, l.y_cross);
        }
    }
    pre.push_back(top);

    Tour t;
    for (const Point& p : pre) {
        Point q = transform(p);
        if (t.vertices.empty() || !(t.vertices.back() == q)) t.vertices.push_back(q);
    }
    t.recompute_length();
    return t;
}

PackingResult maximal_disk_packing(double side, int kgon, std::uint64_t seed) {
    if (side < 10) throw InvalidParameters("maximal_disk_packing: side must be >= 10");
    if (kgon < 8) throw InvalidParameters("maximal_disk_packing: kgon must be >= 8");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(1.0, side - 1.0);
    std::vector<std::pair<double, double>> centers;
    auto fits = [&](double x, double y) {
        for (auto [cx, cy] : centers) {
            double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy < 4.0 + 1e-6) return false;
        }
        return true;
    };
    int rejects = 0;
    while (rejects < 10000) {
        double x = u(rng), y = u(rng);
        if (fits(x, y)) {
            centers.emplace_back(x, y);
            rejects = 0;
        } else {
            ++rejects;
        }
    }
    // sweep-insert until no grid point admits another disk
    bool inserted = true;
    while (inserted) {
        inserted = false;
        for (double x = 1.0; x <= side - 1.0 + 1e-9 && !inserted; x += 0.25)
            for (double y = 1.0; y <= side - 1.0 + 1e-9 && !inserted; y += 0.25)
                if (fits(x, y)) {
                    centers.emplace_back(x, y);
                    inserted = true;
                }
    }

    std::uniform_real_distribution<double> uphase(0.0, 2 * std::numbers::pi);
    std::vector<ConvexPolygon> polys;
    std::vector<Point> center_points;
    for (auto [cx, cy] : centers) {
        double phase = uphase(rng);
        std::vector<Point> vs;
        for (int k = 0; k < kgon; ++k) {
            double a = phase + 2 * std::numbers::pi * k / kgon;
            vs.push_back(Point::from_doubles(cx + std::cos(a), cy + std::sin(a)));
        }
        polys.push_back(ConvexPolygon::from_vertices(std::move(vs)));
        center_points.push_back(Point::from_doubles(cx, cy));
    }
    Rat pad(1, 16);
    Instance inst(Box(-pad, -pad, Rat(side) + pad, Rat(side) + pad), std::move(polys));
    return PackingResult{std::move(inst), std::move(center_points), side};
}

bool packing_maximality_certificate(const PackingResult& packing, double pitch) {
    const double side = packing.side;
    for (double x = 1.0; x <= side - 1.0 + 1e-9; x += pitch)
        for (double y = 1.0; y <= side - 1.0 + 1e-9; y += pitch) {
            bool fits = true;
            for (const Point& c : packing.centers) {
                double dx = x - c.xd, dy = y - c.yd;
                if (dx * dx + dy * dy < 4.0 + 1e-6) {
                    fits = false;
                    break;
                }
            }
            if (fits) return false;
        }
    return true;
}

Tour strip_traversal_route(const Instance& inst, StripMode mode) {
    const Box& box = inst.box();
    const double y_top = to_double(box.y1), y_bot = to_double(box.y0);
    const double x_left = to_double(box.x0), x_right = to_double(box.x1);
    const int strips = std::max(1, static_cast<int>(std::ceil((y_top - y_bot) / 4.0)));

    std::vector<std::vector<int>> per_strip(strips);
    for (int i = 0; i < inst.n(); ++i) {
        const ConvexPolygon& c = inst.obstacle(i);
        double cy = (c.min_yd() + c.max_yd()) / 2;
        int k = std::clamp(static_cast<int>((y_top - cy) / 4.0), 0, strips - 1);
        per_strip[k].push_back(i);
    }

    Tour t;
    std::vector<Point> path;
    auto emit = [&](const Point& p) {
        if (path.empty() || !(path.back() == p)) path.push_back(p);
    };
    const Rat inset(1, 4);
    for (int k = 0; k < strips; ++k) {
        bool left_to_right = (k % 2 == 0);
        double yc = y_top - 4.0 * k - 2.0;
        yc = std::max(yc, y_bot + 0.25);
        Point lane_a = Point(box.x0 + inset, Rat(yc));
        Point lane_b = Point(box.x1 - inset, Rat(yc));
        emit(left_to_right ? lane_a : lane_b);
        auto& members = per_strip[k];
        std::sort(members.begin(), members.end(), [&](int i, int j) {
            double xi = (inst.obstacle(i).min_xd() + inst.obstacle(i).max_xd()) / 2;
            double xj = (inst.obstacle(j).min_xd() + inst.obstacle(j).max_xd()) / 2;
            return left_to_right ? xi < xj : xi > xj;
        });
        for (int i : members) {
            const ConvexPolygon& c = inst.obstacle(i);
            const Point& cur = path.back();
            int entry = 0;
            double best = 1e300;
            for (int v = 0; v < c.size(); ++v) {
                double d = dist(cur, c.vertex(v));
                if (d < best) {
                    best = d;
                    entry = v;
                }
            }
            emit(c.vertex(entry));
            t.witness.emplace(i, c.vertex(entry));
            if (mode == StripMode::Ewrp) {
                for (int v = 1; v <= c.size(); ++v) emit(c.vertex(entry + v));
            }
        }
        emit(left_to_right ? lane_b : lane_a);
    }
    (void)x_left;
    (void)x_right;
    t.vertices = std::move(path);
    while (t.vertices.size() > 1 && t.vertices.front() == t.vertices.back())
        t.vertices.pop_back();
    t.recompute_length();
    return detour_transform(t, inst);
}

Instance sparse_grid_instance(int n, int kgon) {
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (r * r != n || n < 1)
        throw InvalidParameters("sparse_grid_instance: n must be a perfect square");
    if (kgon < 3) throw InvalidParameters("sparse_grid_instance: bad kgon");
    Rat radius = Rat(1, 100 * r);
    std::vector<ConvexPolygon> polys;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            double cx = static_cast<double>(i) / (r + 1);
            double cy = static_cast<double>(j) / (r + 1);
            std::vector<Point> vs;
            for (int k = 0; k < kgon; ++k) {
                double a = 2 * std::numbers::pi * k / kgon + 0.3;
                vs.push_back(Point::from_doubles(cx + to_double(radius) * std::cos(a),
                                                 cy + to_double(radius) * std::sin(a)));
            }
            polys.push_back(ConvexPolygon::from_vertices(std::move(vs)));
        }
    return Instance(Box(Rat(-1, 8), Rat(-1, 8), Rat(9, 8), Rat(9, 8)), std::move(polys));
}

Tour hull_route(const Instance& inst) {
    std::vector<Point> pts;
    for (const auto& c : inst.obstacles())
        for (const Point& v : c.vertices()) pts.push_back(v);
    std::vector<Point> hull = convex_hull(pts);
    Tour t;
    // hull vertices face outward and edge midpoints can hide behind a
    // boundary obstacle, so subdivide each edge for the inward views
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % hull.size()];
        t.vertices.push_back(a);
        for (int k = 1; k < 8; ++k) t.vertices.push_back(interpolate(a, b, Rat(k, 8)));
    }
    t.recompute_length();
    return t;
}

}  // namespace obsroute
