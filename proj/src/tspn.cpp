#include "obsroute/tspn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "obsroute/visibility.hpp"

namespace obsroute {

void Tour::recompute_length() {
    length = 0;
    const size_t n = vertices.size();
    if (n < 2) return;
    for (size_t i = 0; i < n; ++i) length += dist(vertices[i], vertices[(i + 1) % n]);
}

bool Tour::point_on_tour(const Point& p) const {
    const size_t n = vertices.size();
    if (n == 0) return false;
    if (n == 1) return vertices[0] == p;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        if (a == b) {
            if (p == a) return true;
            continue;
        }
        if (on_segment(p, a, b)) return true;
    }
    return false;
}

namespace {

// double-precision parity test for the deepest-point scans; candidates picked
// with it are re-checked exactly before they are returned
bool contains_approx(const PolygonWithHoles& region, double x, double y) {
    auto in_ring = [&](const std::vector<Point>& ring) {
        bool inside = false;
        const size_t n = ring.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& a = ring[i];
            const Point& b = ring[(i + 1) % n];
            if ((a.yd <= y) != (b.yd <= y)) {
                double t = (y - a.yd) / (b.yd - a.yd);
                if (a.xd + t * (b.xd - a.xd) > x) inside = !inside;
            }
        }
        return inside;
    };
    if (!in_ring(region.outer)) return false;
    for (const auto& h : region.holes)
        if (in_ring(h)) return false;
    return true;
}

}  // namespace

Point deepest_point(const PolygonWithHoles& region) {
    double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
    for (const Point& v : region.outer) {
        lox = std::min(lox, v.xd);
        hix = std::max(hix, v.xd);
        loy = std::min(loy, v.yd);
        hiy = std::max(hiy, v.yd);
    }
    const double w = hix - lox, h = hiy - loy;
    double side_lo = 0, side_hi = std::min(w, h);
    std::optional<Point> best;
    auto fits = [&](double s, std::optional<Point>& center_out) {
        const double pitch = std::max(s / 2, std::max(w, h) / 32);
        for (double cx = lox + s / 2; cx <= hix - s / 2 + 1e-12; cx += pitch) {
            for (double cy = loy + s / 2; cy <= hiy - s / 2 + 1e-12; cy += pitch) {
                if (!contains_approx(region, cx, cy)) continue;
                bool ok = true;
                for (int dx = -1; dx <= 1 && ok; ++dx)
                    for (int dy = -1; dy <= 1 && ok; ++dy) {
                        if (dx == 0 && dy == 0) continue;
                        if (!contains_approx(region, cx + dx * s / 2, cy + dy * s / 2)) ok = false;
                    }
                if (ok) {
                    center_out = Point::from_doubles(cx, cy);
                    return true;
                }
            }
        }
        return false;
    };
    for (int iter = 0; iter < 18; ++iter) {
        double s = (side_lo + side_hi) / 2;
        if (s <= 0) break;
        std::optional<Point> c;
        if (fits(s, c)) {
            best = c;
            side_lo = s;
        } else {
            side_hi = s;
        }
    }
    // witnesses must lie in the region exactly, not just approximately
    if (best && region.contains(*best)) return *best;
    if (region.anchor) return *region.anchor;
    return region.outer.front();
}

std::vector<Point> region_candidates(const PolygonWithHoles& region, int cap) {
    std::vector<Point> all;
    auto add_ring = [&](const std::vector<Point>& ring) {
        const int n = static_cast<int>(ring.size());
        for (int i = 0; i < n; ++i) {
            all.push_back(ring[i]);
            if (!(ring[i] == ring[(i + 1) % n]))
                all.push_back(interpolate(ring[i], ring[(i + 1) % n], Rat(1, 2)));
        }
    };
    add_ring(region.outer);
    for (const auto& h : region.holes) add_ring(h);
    std::vector<Point> out;
    out.push_back(deepest_point(region));
    if (static_cast<int>(all.size()) + 1 <= cap) {
        out.insert(out.end(), all.begin(), all.end());
    } else {
        const double stride = static_cast<double>(all.size()) / (cap - 1);
        for (int k = 0; k < cap - 1; ++k)
            out.push_back(all[static_cast<size_t>(k * stride)]);
    }
    return out;
}

Point best_touch_point(const PolygonWithHoles& region, const Point& a, const Point& b) {
    double rlox = 1e300, rhix = -1e300, rloy = 1e300, rhiy = -1e300;
    for (const Point& v : region.outer) {
        rlox = std::min(rlox, v.xd);
        rhix = std::max(rhix, v.xd);
        rloy = std::min(rloy, v.yd);
        rhiy = std::max(rhiy, v.yd);
    }
    const double pad = 1e-9 * (1 + rhix - rlox + rhiy - rloy);
    bool bbox_overlap = std::min(a.xd, b.xd) <= rhix + pad && std::max(a.xd, b.xd) >= rlox - pad &&
                        std::min(a.yd, b.yd) <= rhiy + pad && std::max(a.yd, b.yd) >= rloy - pad;
    // the unconstrained optimum is any region point on [a, b]; prefer
    // dyadic snap points so witness coordinates stay small across rounds
    if (!(a == b) && bbox_overlap) {
        std::vector<double> ts{0.0, 1.0};
        Segment ab(a, b);
        std::vector<Rat> exact_ts{Rat(0), Rat(1)};
        for (const Segment& e : region.edge_segments()) {
            auto ip = segment_intersection(ab, e);
            if (ip) {
                Dir d(a, b);
                Dir v(a, *ip);
                Rat t = sgn(d.x) != 0 ? Rat(v.x / d.x) : Rat(v.y / d.y);
                ts.push_back(to_double(t));
                exact_ts.push_back(std::move(t));
            }
        }
        std::sort(ts.begin(), ts.end());
        std::vector<double> cands = ts;
        for (size_t i = 0; i + 1 < ts.size(); ++i) cands.push_back((ts[i] + ts[i + 1]) / 2);
        std::sort(cands.begin(), cands.end());
        for (double t : cands) {
            double xd = a.xd + t * (b.xd - a.xd);
            double yd = a.yd + t * (b.yd - a.yd);
            if (!contains_approx(region, xd, yd)) continue;
            Point x = Point::from_doubles(xd, yd);
            if (region.contains(x)) return x;
        }
        // near-degenerate crossings: decide the exact parameters directly
        std::sort(exact_ts.begin(), exact_ts.end());
        for (const Rat& t : exact_ts) {
            Point x = interpolate(a, b, t);
            if (region.contains(x)) return x;
        }
    } else if (a == b && region.contains(a)) {
        return a;
    }
    // otherwise the optimum lies on the region boundary: per edge, reflect a
    // and intersect, falling back to edge endpoints
    double best_cost = std::numeric_limits<double>::infinity();
    Point best = region.outer.front();
    auto eval = [&](const Point& x) {
        double c = dist(a, x) + dist(x, b);
        if (c < best_cost) {
            best_cost = c;
            best = x;
        }
    };
    for (const Segment& e : region.edge_segments()) {
        eval(e.a);
        eval(e.b);
        const double ux = e.a.xd, uy = e.a.yd;
        const double dx = e.b.xd - ux, dy = e.b.yd - uy;
        const double len2 = dx * dx + dy * dy;
        if (len2 <= 0) continue;
        // reflect a across the edge line
        double apx = a.xd - ux, apy = a.yd - uy;
        double proj = (apx * dx + apy * dy) / len2;
        double fx = ux + proj * dx, fy = uy + proj * dy;
        double rx = 2 * fx - a.xd, ry = 2 * fy - a.yd;
        // intersect segment (reflected a) -> b with the edge line; s is the
        // edge parameter of the crossing
        double wx = b.xd - rx, wy = b.yd - ry;
        double denom = wx * dy - wy * dx;
        if (std::abs(denom) < 1e-30) continue;
        double s = ((ux - rx) * wy - (uy - ry) * wx) / denom;
        if (s > 0 && s < 1) {
            Rat sr(s);
            eval(interpolate(e.a, e.b, sr));
        }
    }
    return best;
}

namespace {

double tour_cost(const std::vector<int>& order, const std::map<int, Point>& witness) {
    double c = 0;
    const size_t n = order.size();
    for (size_t i = 0; i < n; ++i)
        c += dist(witness.at(order[i]), witness.at(order[(i + 1) % n]));
    return c;
}

Tour assemble(const std::vector<int>& order, const std::map<int, Point>& witness) {
    Tour t;
    t.witness = witness;
    for (int r : order) {
        const Point& w = witness.at(r);
        if (t.vertices.empty() || !(t.vertices.back() == w)) t.vertices.push_back(w);
    }
    while (t.vertices.size() > 1 && t.vertices.front() == t.vertices.back())
        t.vertices.pop_back();
    t.recompute_length();
    return t;
}

}  // namespace

Tour refine_touch_points(const std::vector<int>& order, const RegionSet& rs, const Tour& t) {
    const size_t n = order.size();
    std::map<int, Point> witness = t.witness;
    if (n <= 1) return assemble(order, witness);
    double len = tour_cost(order, witness);
    for (int round = 0; round < 200; ++round) {
        for (size_t i = 0; i < n; ++i) {
            int r = order[i];
            const Point& a = witness.at(order[(i + n - 1) % n]);
            const Point& b = witness.at(order[(i + 1) % n]);
            Point cur = witness.at(r);
            double cur_cost = dist(a, cur) + dist(cur, b);
            Point cand = best_touch_point(rs.regions[r], a, b);
            double cand_cost = dist(a, cand) + dist(cand, b);
            if (cand_cost < cur_cost) witness[r] = cand;
        }
        double now = tour_cost(order, witness);
        if (len - now < 1e-7 * std::max(now, 1e-12)) {
            len = std::min(len, now);
            break;
        }
        len = now;
    }
    return assemble(order, witness);
}

namespace {

std::vector<int> ordered_tour(const std::map<int, Point>& witness, int n) {
    // nearest-neighbor order from region 0, ties to the lowest index
    std::vector<int> order{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    while (static_cast<int>(order.size()) < n) {
        int cur = order.back(), pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            double d = dist(witness.at(cur), witness.at(j));
            if (d < best - 1e-15) {
                best = d;
                pick = j;
            }
        }
        used[pick] = 1;
        order.push_back(pick);
    }
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 50) {
        improved = false;
        for (int i = 1; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                int a = order[i - 1], b = order[i], c = order[j], d = order[(j + 1) % n];
                double before =
                    dist(witness.at(a), witness.at(b)) + dist(witness.at(c), witness.at(d));
                double after =
                    dist(witness.at(a), witness.at(c)) + dist(witness.at(b), witness.at(d));
                if (after < before - 1e-12) {
                    std::reverse(order.begin() + i, order.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }
    return order;
}

double region_dist_approx(const PolygonWithHoles& region, double x, double y) {
    if (contains_approx(region, x, y)) return 0.0;
    Point p = Point::from_doubles(x, y);
    double best = 1e300;
    for (const Segment& e : region.edge_segments())
        best = std::min(best, segment_point_dist(e.a, e.b, p));
    return best;
}

}  // namespace

Tour tspn_tour(const RegionSet& rs) {
    const int n = static_cast<int>(rs.regions.size());
    if (n == 0) throw EmptyRegionSet("tspn_tour: no regions");

    if (auto common = regions_common_point(rs.regions)) {
        Tour t;
        t.vertices.push_back(*common);
        for (int i = 0; i < n; ++i) t.witness.emplace(i, *common);
        t.length = 0;
        return t;
    }

    std::map<int, Point> deep;
    for (int i = 0; i < n; ++i) deep.emplace(i, deepest_point(rs.regions[i]));
    std::vector<int> order = ordered_tour(deep, n);
    Tour best = refine_touch_points(order, rs, assemble(order, deep));

    // restart from a consensus point: regions that nearly share a point leave
    // the deepest-point witnesses scattered, which refinement cannot undo
    std::vector<std::pair<double, double>> centers;
    for (const auto& [i, p] : deep) {
        (void)i;
        centers.emplace_back(p.xd, p.yd);
    }
    for (const auto& r : rs.regions)
        if (r.anchor) centers.emplace_back(r.anchor->xd, r.anchor->yd);
    const double bx0 = to_double(rs.box.x0), by0 = to_double(rs.box.y0);
    const double bw = rs.box.width_d(), bh = rs.box.height_d();
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            centers.emplace_back(bx0 + bw * (2 * i + 1) / 18.0, by0 + bh * (2 * j + 1) / 18.0);
    double best_sum = std::numeric_limits<double>::infinity();
    std::pair<double, double> consensus = centers.front();
    for (auto [cx, cy] : centers) {
        double sum = 0;
        for (const auto& r : rs.regions) sum += region_dist_approx(r, cx, cy);
        if (sum < best_sum) {
            best_sum = sum;
            consensus = {cx, cy};
        }
    }
    Point star = Point::from_doubles(consensus.first, consensus.second);
    std::map<int, Point> gathered;
    for (int i = 0; i < n; ++i) gathered.emplace(i, best_touch_point(rs.regions[i], star, star));
    std::vector<int> order2 = ordered_tour(gathered, n);
    Tour alt = refine_touch_points(order2, rs, assemble(order2, gathered));
    return alt.length < best.length ? alt : best;
}

Tour exact_small_tspn(const RegionSet& rs, int candidates_per_region) {
    const int n = static_cast<int>(rs.regions.size());
    if (n == 0) throw EmptyRegionSet("exact_small_tspn: no regions");
    if (n > 9) throw TooManyRegions("exact_small_tspn supports at most 9 regions");

    if (auto common = regions_common_point(rs.regions)) {
        Tour t;
        t.vertices.push_back(*common);
        for (int i = 0; i < n; ++i) t.witness.emplace(i, *common);
        t.length = 0;
        return t;
    }

    std::vector<std::vector<Point>> cands(n);
    std::vector<int> base(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        cands[i] = region_candidates(rs.regions[i], candidates_per_region);
        base[i + 1] = base[i] + static_cast<int>(cands[i].size());
    }
    const int total = base[n];
    auto owner = [&](int g) {
        int r = 0;
        while (base[r + 1] <= g) ++r;
        return r;
    };
    std::vector<Point> flat;
    flat.reserve(total);
    for (int i = 0; i < n; ++i)
        for (const Point& p : cands[i]) flat.push_back(p);
    std::vector<double> dmat(static_cast<size_t>(total) * total);
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j)
            dmat[static_cast<size_t>(i) * total + j] = dist(flat[i], flat[j]);

    const double INF = std::numeric_limits<double>::infinity();
    double best_total = INF;
    std::vector<int> best_seq;

    const int full = (1 << n) - 1;
    std::vector<double> dp(static_cast<size_t>(1 << n) * total);
    std::vector<int> parent(static_cast<size_t>(1 << n) * total);
    for (int c0 = base[0]; c0 < base[1]; ++c0) {
        std::fill(dp.begin(), dp.end(), INF);
        dp[static_cast<size_t>(1) * total + c0] = 0;
        for (int mask = 1; mask <= full; ++mask) {
            if (!(mask & 1)) continue;
            for (int g = 0; g < total; ++g) {
                double cur = dp[static_cast<size_t>(mask) * total + g];
                if (cur >= INF) continue;
                if (!(mask & (1 << owner(g)))) continue;
                for (int r = 0; r < n; ++r) {
                    if (mask & (1 << r)) continue;
                    int nm = mask | (1 << r);
                    for (int h = base[r]; h < base[r + 1]; ++h) {
                        double cand = cur + dmat[static_cast<size_t>(g) * total + h];
                        size_t idx = static_cast<size_t>(nm) * total + h;
                        if (cand < dp[idx]) {
                            dp[idx] = cand;
                            parent[idx] = g;
                        }
                    }
                }
            }
        }
        for (int g = 0; g < total; ++g) {
            double cur = dp[static_cast<size_t>(full) * total + g];
            if (cur >= INF) continue;
            double closed = cur + dmat[static_cast<size_t>(g) * total + c0];
            if (closed < best_total) {
                best_total = closed;
                best_seq.clear();
                int mask = full, at = g;
                while (true) {
                    best_seq.push_back(at);
                    if (mask == 1) break;
                    int p = parent[static_cast<size_t>(mask) * total + at];
                    mask &= ~(1 << owner(at));
                    at = p;
                }
                std::reverse(best_seq.begin(), best_seq.end());
            }
        }
    }
    if (best_seq.empty()) throw InternalInvariantViolation("exact_small_tspn: no tour found");

    std::vector<int> order;
    std::map<int, Point> witness;
    for (int g : best_seq) {
        order.push_back(owner(g));
        witness.emplace(owner(g), flat[g]);
    }
    Tour t = assemble(order, witness);
    Tour refined = refine_touch_points(order, rs, t);
    return refined.length <= t.length ? refined : t;
}

}  // namespace obsroute
