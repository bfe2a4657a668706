#pragma once

// Shared deterministic instance builders used across the test suites.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "obsroute/visibility.hpp"

namespace obsroute::testing {

inline ConvexPolygon square_at(const Rat& x, const Rat& y, const Rat& side = Rat(1)) {
    return ConvexPolygon::from_vertices({Point(x, y), Point(x + side, y),
                                         Point(x + side, y + side), Point(x, y + side)});
}

/// Three collinear unit squares in a row.
inline Instance collinear_squares() {
    return Instance(Box(Rat(-3), Rat(-3), Rat(10), Rat(4)),
                    {square_at(0, 0), square_at(3, 0), square_at(6, 0)});
}

/// Tall triangle target with a small block in front (bounded umbra closing at
/// the external homothety center: one shadow hole) and a large block whose
/// shadow escapes through the box edge: two holes in total.
inline Instance two_hole_instance() {
    ConvexPolygon tri = ConvexPolygon::from_vertices({Point(2, 1), Point(5, 7), Point(2, 13)});
    ConvexPolygon small_block = square_at(8, Rat(13, 2), 1);
    ConvexPolygon big_block = square_at(13, 3, 5);
    return Instance(Box(Rat(0), Rat(0), Rat(20), Rat(14)), {tri, small_block, big_block});
}

/// Seven translates of a convex pentagon.
inline Instance seven_translates() {
    std::vector<Point> base{Point(0, 0), Point(2, 0), Point(3, 1), Point(2, 2), Point(0, 1)};
    std::vector<std::pair<int, int>> offsets{{0, 0}, {4, 0}, {8, 0}, {2, 3},
                                             {6, 3}, {4, 6}, {0, 6}};
    std::vector<ConvexPolygon> polys;
    for (auto [dx, dy] : offsets) {
        std::vector<Point> vs;
        for (const Point& v : base) vs.emplace_back(v.x + dx, v.y + dy);
        polys.push_back(ConvexPolygon::from_vertices(vs));
    }
    return Instance(Box(Rat(-2), Rat(-2), Rat(13), Rat(10)), std::move(polys));
}

/// Staggered two-row family observable from the whole separating line y = 0.
inline Instance staggered_rows() {
    return Instance(Box(Rat(-2), Rat(-5), Rat(8), Rat(5)),
                    {square_at(0, 1), square_at(2, 1), square_at(4, 1), square_at(1, -2),
                     square_at(3, -2), square_at(5, -2)});
}

/// Tight row of four translated unit squares; points behind the row cannot
/// see the first square.
inline Instance tight_row() {
    return Instance(Box(Rat(-2), Rat(-2), Rat(7), Rat(3)),
                    {square_at(0, 0), square_at(Rat(5, 4), 0), square_at(Rat(10, 4), 0),
                     square_at(Rat(15, 4), 0)});
}

/// Dense instance of large fat polygons in a tight box; most seeds give
/// instances that cannot be observed from a single point.
inline Instance random_dense_instance(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double box_size = 10.0;
    std::vector<ConvexPolygon> polys;
    int attempts = 0;
    while (static_cast<int>(polys.size()) < 6 && attempts < 600) {
        ++attempts;
        int k = 4 + static_cast<int>(u(rng) * 3);
        double r = 1.2 + 1.1 * u(rng);
        double cx = r + 0.2 + u(rng) * (box_size - 2 * r - 0.4);
        double cy = r + 0.2 + u(rng) * (box_size - 2 * r - 0.4);
        double phase = u(rng) * 2 * std::numbers::pi;
        std::vector<Point> vs;
        for (int i = 0; i < k; ++i) {
            double a = phase + 2 * std::numbers::pi * i / k;
            vs.push_back(Point::from_doubles(cx + r * std::cos(a), cy + r * std::sin(a)));
        }
        ConvexPolygon cand = ConvexPolygon::from_vertices(vs);
        bool ok = true;
        for (const auto& p : polys) {
            if (!polygons_disjoint(cand, p)) {
                ok = false;
                break;
            }
            double gap = 1e300;
            for (int i = 0; i < cand.size(); ++i)
                for (int j = 0; j < p.size(); ++j) {
                    Segment e1 = cand.edge(i), e2 = p.edge(j);
                    gap = std::min(gap, segment_segment_dist(e1.a, e1.b, e2.a, e2.b));
                }
            if (gap < 0.08) {
                ok = false;
                break;
            }
        }
        if (ok) polys.push_back(std::move(cand));
    }
    Rat side(box_size);
    return Instance(Box(Rat(0), Rat(0), side, side), std::move(polys));
}

/// Six-square tent family in a box too shallow for its distant watchposts:
/// the deep boundary pieces then need several separate viewpoints, so the
/// shortest observation route has positive length.
inline Instance tent_shallow_instance(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Rat e(0.02 + 0.04 * u(rng));
    Rat h(2.5 + 1.5 * u(rng));
    Rat dx(-1.0 + 0.5 * u(rng));
    std::vector<ConvexPolygon> squares;
    for (int k = 0; k < 3; ++k) {
        Rat x0 = Rat(k) + Rat(k) * e + dx;
        Rat gap = (k == 1) ? e : 4 * e;
        squares.push_back(square_at(x0, gap));
        squares.push_back(square_at(x0, -gap - 1));
    }
    return Instance(Box(Rat(-3) + dx, -h, Rat(7) + dx, h), std::move(squares));
}

/// Random instance of disjoint fat convex polygons (regular k-gons with a
/// random radius/phase), deterministic in the seed.
inline Instance random_fat_instance(unsigned seed, int max_obstacles = 5, double box_size = 12.0,
                                    int max_total_vertices = 30) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int want = 1 + static_cast<int>(u(rng) * max_obstacles);
    std::vector<ConvexPolygon> polys;
    int total_vertices = 0;
    int attempts = 0;
    while (static_cast<int>(polys.size()) < want && attempts < 300) {
        ++attempts;
        int k = 3 + static_cast<int>(u(rng) * 5);
        if (total_vertices + k > max_total_vertices) break;
        double r = 0.5 + 1.2 * u(rng);
        double cx = r + 0.3 + u(rng) * (box_size - 2 * r - 0.6);
        double cy = r + 0.3 + u(rng) * (box_size - 2 * r - 0.6);
        double phase = u(rng) * 2 * std::numbers::pi;
        std::vector<Point> vs;
        for (int i = 0; i < k; ++i) {
            double a = phase + 2 * std::numbers::pi * i / k;
            vs.push_back(Point::from_doubles(cx + r * std::cos(a), cy + r * std::sin(a)));
        }
        ConvexPolygon cand = ConvexPolygon::from_vertices(vs);
        bool ok = true;
        for (const auto& p : polys) {
            if (!polygons_disjoint(cand, p)) {
                ok = false;
                break;
            }
            // keep a positive gap so tangents are well separated
            double gap = 1e300;
            for (int i = 0; i < cand.size(); ++i)
                for (int j = 0; j < p.size(); ++j) {
                    Segment e1 = cand.edge(i), e2 = p.edge(j);
                    gap = std::min(gap, segment_segment_dist(e1.a, e1.b, e2.a, e2.b));
                }
            if (gap < 0.05) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        polys.push_back(std::move(cand));
        total_vertices += k;
    }
    if (polys.empty()) polys.push_back(square_at(1, 1));
    Rat side = Rat(box_size);
    return Instance(Box(Rat(0), Rat(0), side, side), std::move(polys));
}

}  // namespace obsroute::testing
