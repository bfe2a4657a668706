#include "obsroute/orp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace obsroute {

namespace {

struct EdgeCross {
    bool has = false;
    Rat t0, t1;
    Point entry, exit;
};

}  // namespace

Tour detour_transform(const Tour& t, const Instance& inst, std::vector<DetourEntry>* log,
                      int* iterations) {
    Tour cur = t;
    for (const auto& [idx, w] : cur.witness) {
        (void)idx;
        if (!inst.point_free(w))
            throw InternalInvariantViolation("detour_transform: witness strictly inside an obstacle");
    }
    int iter = 0;
    const int iter_cap = 4 + 2 * inst.n();
    bool changed = true;
    while (changed && iter < iter_cap) {
        changed = false;
        ++iter;
        for (int oi = 0; oi < inst.n(); ++oi) {
            const ConvexPolygon& c = inst.obstacle(oi);
            const int n = static_cast<int>(cur.vertices.size());
            if (n < 2) break;
            std::vector<EdgeCross> cr(n);
            bool any = false;
            for (int k = 0; k < n; ++k) {
                const Point& a = cur.vertices[k];
                const Point& b = cur.vertices[(k + 1) % n];
                if (a == b) continue;
                auto clip = clip_segment_to_polygon(a, b, c);
                if (!clip || cmp(clip->first, clip->second) >= 0) continue;
                Rat mid = (clip->first + clip->second) / 2;
                if (!c.contains_strict(interpolate(a, b, mid))) continue;
                cr[k].has = true;
                cr[k].t0 = clip->first;
                cr[k].t1 = clip->second;
                cr[k].entry = interpolate(a, b, cr[k].t0);
                cr[k].exit = interpolate(a, b, cr[k].t1);
                any = true;
            }
            if (!any) continue;
            changed = true;

            // anchor the walk at a vertex that does not sit inside a crossing
            // run, so runs can be merged without wrapping
            auto run_interior = [&](int v) {
                int prev = (v + n - 1) % n;
                return cr[prev].has && cmp(cr[prev].t1, Rat(1)) == 0 && cr[v].has &&
                       sgn(cr[v].t0) == 0;
            };
            int anchor = -1;
            for (int v = 0; v < n && anchor < 0; ++v)
                if (!run_interior(v)) anchor = v;
            const bool merge_runs = anchor >= 0;
            if (anchor < 0) anchor = 0;

            std::vector<Point> out;
            auto emit = [&](const Point& p) {
                if (out.empty() || !(out.back() == p)) out.push_back(p);
            };
            int step = 0;
            while (step < n) {
                int k = (anchor + step) % n;
                emit(cur.vertices[k]);
                if (!cr[k].has) {
                    ++step;
                    continue;
                }
                Point entry = cr[k].entry;
                int run_end = k;
                int consumed = 1;
                while (merge_runs && consumed < n && cmp(cr[run_end].t1, Rat(1)) == 0) {
                    int nxt = (run_end + 1) % n;
                    if (!cr[nxt].has || sgn(cr[nxt].t0) != 0) break;
                    // never merge across a witness vertex
                    const Point& shared = cur.vertices[nxt];
                    bool is_witness = false;
                    for (const auto& [wi, wp] : cur.witness)
                        if (wp == shared) {
                            is_witness = true;
                            break;
                        }
                    if (is_witness) break;
                    run_end = nxt;
                    ++consumed;
                }
                Point exit = cr[run_end].exit;
                BoundaryPath geo = boundary_geodesic(c, entry, exit);
                for (const Point& p : geo.polyline) emit(p);
                if (log)
                    log->push_back(DetourEntry{oi, dist(entry, exit), geo.length});
                step += consumed;
            }
            while (out.size() > 1 && out.front() == out.back()) out.pop_back();
            cur.vertices = std::move(out);
        }
    }
    if (changed)
        throw InternalInvariantViolation("detour_transform did not reach a fixpoint");
    if (iterations) *iterations = iter;
    cur.recompute_length();
    for (const auto& [idx, w] : cur.witness) {
        (void)idx;
        if (!cur.point_on_tour(w))
            throw InternalInvariantViolation("detour_transform lost a witness point");
    }
    return cur;
}

ObservationRoute solve_orp(const Instance& inst,
                           const std::vector<PolygonWithHoles>& regions) {
    RegionSet rs{regions, inst.box()};
    Tour base = tspn_tour(rs);
    ObservationRoute route;
    route.tour = detour_transform(base, inst, &route.detour_log, &route.detour_iterations);
    route.observed_from = route.tour.witness;
    ValidationReport report = validate_observation_route(route, inst);
    if (!report.valid())
        throw InternalInvariantViolation("solve_orp produced an invalid observation route");
    return route;
}

ObservationRoute solve_orp(const Instance& inst) {
    std::vector<PolygonWithHoles> regions;
    regions.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) regions.push_back(visibility_region(i, inst));
    return solve_orp(inst, regions);
}

ValidationReport validate_observation_route(const ObservationRoute& route, const Instance& inst) {
    ValidationReport rep;
    const auto& vs = route.tour.vertices;
    rep.closed = !vs.empty();
    rep.length = 0;
    if (vs.size() >= 2)
        for (size_t i = 0; i < vs.size(); ++i)
            rep.length += dist(vs[i], vs[(i + 1) % vs.size()]);

    rep.interior_avoidance = true;
    for (const Point& v : vs)
        if (!inst.point_free(v)) rep.interior_avoidance = false;
    const size_t n = vs.size();
    if (n >= 2) {
        for (size_t i = 0; i < n && rep.interior_avoidance; ++i) {
            const Point& a = vs[i];
            const Point& b = vs[(i + 1) % n];
            if (a == b) continue;
            for (const auto& c : inst.obstacles())
                if (segment_crosses_interior(a, b, c)) {
                    rep.interior_avoidance = false;
                    break;
                }
        }
    }

    rep.coverage = true;
    for (int i = 0; i < inst.n(); ++i) {
        auto it = route.observed_from.find(i);
        bool ok = it != route.observed_from.end();
        if (ok) ok = route.tour.point_on_tour(it->second);
        if (ok) {
            try {
                ok = sees(it->second, i, inst);
            } catch (const PointInsideObstacle&) {
                ok = false;
            }
        }
        if (!ok) {
            rep.coverage = false;
            rep.uncovered.push_back(i);
        }
    }
    return rep;
}

std::optional<std::map<int, Point>> assign_observers(const Tour& t, const Instance& inst) {
    // tour vertices first, then interior samples of each edge
    std::vector<Point> viewpoints = t.vertices;
    const size_t n = t.vertices.size();
    if (n >= 2) {
        for (size_t i = 0; i < n; ++i) {
            const Point& a = t.vertices[i];
            const Point& b = t.vertices[(i + 1) % n];
            if (a == b) continue;
            for (int k = 1; k < 8; ++k) viewpoints.push_back(interpolate(a, b, Rat(k, 8)));
        }
    }
    std::map<int, Point> out;
    for (int i = 0; i < inst.n(); ++i) {
        bool found = false;
        for (const Point& v : viewpoints) {
            bool ok;
            try {
                ok = sees(v, i, inst);
            } catch (const PointInsideObstacle&) {
                ok = false;
            }
            if (ok) {
                out.emplace(i, v);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return out;
}

namespace {

Tour discretized_core(const Instance& inst, const std::vector<PolygonWithHoles>* region_ptr,
                      int grid, const std::vector<int>& targets,
                      const std::vector<Point>& extra_candidates) {
    const int nt = static_cast<int>(targets.size());
    const bool use_regions = region_ptr != nullptr;
    const std::vector<PolygonWithHoles> no_regions;
    const std::vector<PolygonWithHoles>& regions = use_regions ? *region_ptr : no_regions;

    if (use_regions) {
        if (auto common = regions_common_point(regions)) {
            Tour t;
            t.vertices.push_back(*common);
            for (int tr : targets) t.witness.emplace(tr, *common);
            t.length = 0;
            return t;
        }
    }

    // candidate pool: region boundary vertices + free grid points + extras
    std::vector<Point> pool;
    auto push = [&](const Point& p) {
        if (!inst.box().contains_closed(p) || !inst.point_free(p)) return;
        for (const Point& q : pool)
            if (q == p) return;
        pool.push_back(p);
    };
    for (const auto& r : regions) {
        for (const Point& v : r.outer) push(v);
        for (const auto& h : r.holes)
            for (const Point& v : h) push(v);
    }
    const Box& box = inst.box();
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            push(Point(box.x0 + (box.x1 - box.x0) * Rat(2 * i + 1, 2 * grid),
                       box.y0 + (box.y1 - box.y0) * Rat(2 * j + 1, 2 * grid)));
    for (const Point& p : extra_candidates) push(p);

    if (!use_regions) {
        // zero detection without regions: some candidate sees every target
        std::vector<Point> sorted = pool;
        std::sort(sorted.begin(), sorted.end(), lex_less);
        for (const Point& p : sorted) {
            bool all = true;
            for (int t : targets)
                if (!sees(p, t, inst)) {
                    all = false;
                    break;
                }
            if (all) {
                Tour t;
                t.vertices.push_back(p);
                for (int tr : targets) t.witness.emplace(tr, p);
                t.length = 0;
                return t;
            }
        }
    }

    const int cap = 48;
    std::vector<std::vector<Point>> cands(nt);
    for (int k = 0; k < nt; ++k) {
        std::vector<Point> seen;
        for (const Point& p : pool)
            if (sees(p, targets[k], inst)) seen.push_back(p);
        if (seen.empty())
            throw InternalInvariantViolation("discretized_opt_orp: target has no candidates");
        if (static_cast<int>(seen.size()) <= cap) {
            cands[k] = std::move(seen);
        } else {
            double stride = static_cast<double>(seen.size()) / cap;
            for (int q = 0; q < cap; ++q) cands[k].push_back(seen[static_cast<size_t>(q * stride)]);
        }
    }

    std::vector<int> base(nt + 1, 0);
    for (int k = 0; k < nt; ++k) base[k + 1] = base[k] + static_cast<int>(cands[k].size());
    const int total = base[nt];
    std::vector<Point> flat;
    for (int k = 0; k < nt; ++k)
        for (const Point& p : cands[k]) flat.push_back(p);
    auto owner = [&](int g) {
        int r = 0;
        while (base[r + 1] <= g) ++r;
        return r;
    };
    std::vector<double> dmat(static_cast<size_t>(total) * total);
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j)
            dmat[static_cast<size_t>(i) * total + j] = dist(flat[i], flat[j]);

    const double INF = std::numeric_limits<double>::infinity();
    const int full = (1 << nt) - 1;
    double best_total = INF;
    std::vector<int> best_seq;
    std::vector<double> dp(static_cast<size_t>(1 << nt) * total);
    std::vector<int> parent(static_cast<size_t>(1 << nt) * total);
    for (int c0 = base[0]; c0 < base[1]; ++c0) {
        std::fill(dp.begin(), dp.end(), INF);
        dp[static_cast<size_t>(1) * total + c0] = 0;
        for (int mask = 1; mask <= full; ++mask) {
            if (!(mask & 1)) continue;
            for (int g = 0; g < total; ++g) {
                double cur = dp[static_cast<size_t>(mask) * total + g];
                if (cur >= INF) continue;
                for (int r = 0; r < nt; ++r) {
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
    if (best_seq.empty())
        throw InternalInvariantViolation("discretized_opt_orp: dynamic program found no tour");

    // nearest-candidate refinement along the fixed order
    std::vector<int> choice = best_seq;
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < nt; ++i) {
            int r = owner(choice[i]);
            const Point& prev = flat[choice[(i + nt - 1) % nt]];
            const Point& next = flat[choice[(i + 1) % nt]];
            int best = choice[i];
            double best_cost = dist(prev, flat[best]) + dist(flat[best], next);
            for (int h = base[r]; h < base[r + 1]; ++h) {
                double cost = dist(prev, flat[h]) + dist(flat[h], next);
                if (cost < best_cost - 1e-15) {
                    best_cost = cost;
                    best = h;
                }
            }
            choice[i] = best;
        }
    }

    Tour t;
    for (int i = 0; i < nt; ++i) {
        const Point& w = flat[choice[i]];
        t.witness.emplace(targets[owner(choice[i])], w);
        if (t.vertices.empty() || !(t.vertices.back() == w)) t.vertices.push_back(w);
    }
    while (t.vertices.size() > 1 && t.vertices.front() == t.vertices.back()) t.vertices.pop_back();
    t.recompute_length();
    return detour_transform(t, inst);
}

}  // namespace

Tour discretized_opt_orp(const Instance& inst, int grid, std::vector<int> targets,
                         const std::vector<Point>& extra_candidates, bool use_regions) {
    if (targets.empty())
        for (int i = 0; i < inst.n(); ++i) targets.push_back(i);
    if (targets.size() > 6)
        throw TooManyObstacles("discretized_opt_orp supports at most 6 targets");
    if (!use_regions) return discretized_core(inst, nullptr, grid, targets, extra_candidates);
    std::vector<PolygonWithHoles> regions;
    regions.reserve(targets.size());
    for (int t : targets) regions.push_back(visibility_region(t, inst));
    return discretized_core(inst, &regions, grid, targets, extra_candidates);
}

Tour discretized_opt_orp_with_regions(const Instance& inst,
                                      const std::vector<PolygonWithHoles>& regions, int grid,
                                      std::vector<int> targets,
                                      const std::vector<Point>& extra_candidates) {
    if (targets.empty())
        for (int i = 0; i < inst.n(); ++i) targets.push_back(i);
    if (targets.size() > 6)
        throw TooManyObstacles("discretized_opt_orp supports at most 6 targets");
    if (regions.size() != targets.size())
        throw InvalidParameters("discretized_opt_orp_with_regions: one region per target");
    return discretized_core(inst, &regions, grid, targets, extra_candidates);
}

}  // namespace obsroute
