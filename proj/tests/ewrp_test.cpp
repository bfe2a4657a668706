#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "obsroute/ewrp.hpp"

using namespace obsroute;

namespace {

ConvexPolygon unit_square() {
    return ConvexPolygon::from_vertices({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
}

ConvexPolygon random_convex(std::mt19937_64& rng, int max_k = 8) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int k = 3 + static_cast<int>(u(rng) * (max_k - 3));
    double rx = 0.5 + 2 * u(rng), ry = 0.5 + 2 * u(rng), ph = u(rng) * 2 * std::numbers::pi;
    std::vector<Point> vs;
    for (int i = 0; i < k; ++i) {
        double a = ph + 2 * std::numbers::pi * i / k;
        vs.push_back(Point::from_doubles(rx * std::cos(a), ry * std::sin(a)));
    }
    return ConvexPolygon::from_vertices(vs);
}

double pentagon_perimeter(double eps) {
    double a = 2.0 / std::sqrt(3.0);
    return 2.0 * (a + (1.0 - eps * eps) + eps * std::sqrt(1.0 + eps * eps));
}

}  // namespace

TEST_CASE("perimeter routes") {
    SUBCASE("unit square") {
        WatchmanRoute r = perimeter_route(unit_square());
        CHECK(r.kind == RouteKind::Perimeter);
        CHECK(r.length == doctest::Approx(4.0));
        CHECK(coverage_check(r, unit_square()));
    }
    SUBCASE("equilateral triangle of side 1") {
        double h = std::sqrt(3.0) / 2.0;
        ConvexPolygon tri = ConvexPolygon::from_vertices(
            {Point(0, 0), Point(1, 0), Point::from_doubles(0.5, h)});
        WatchmanRoute r = perimeter_route(tri);
        CHECK(r.length == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("shortened-base pentagon matches the closed form") {
        for (double eps : {0.001, 0.01, 0.05}) {
            ConvexPolygon p = make_obtuse_counterexample(5, eps);
            WatchmanRoute r = perimeter_route(p);
            CHECK(r.length == doctest::Approx(pentagon_perimeter(eps)).epsilon(1e-9));
        }
    }
}

TEST_CASE("coverage check") {
    ConvexPolygon sq = unit_square();
    SUBCASE("perimeter always covers") {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 20; ++it) {
            ConvexPolygon p = random_convex(rng);
            CHECK(coverage_check(perimeter_route(p), p));
        }
    }
    SUBCASE("a single exterior point never covers") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-4.0, 5.0);
        int tried = 0;
        while (tried < 100) {
            Point p = Point::from_doubles(u(rng), u(rng));
            if (sq.contains_closed(p)) continue;
            ++tried;
            WatchmanRoute point_route{RouteKind::DoubledChain, {p}, 0.0};
            CHECK_FALSE(coverage_check(point_route, sq));
        }
    }
    SUBCASE("route through the interior is rejected") {
        WatchmanRoute bad{RouteKind::DoubledChain,
                          {Point(-1, Rat(1, 2)), Point(2, Rat(1, 2))},
                          2 * 3.0};
        CHECK_THROWS_AS(coverage_check(bad, sq), RouteIntersectsInterior);
    }
    SUBCASE("visible edge set matches dense boundary sampling") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-6.0, 6.0);
        int pairs = 0;
        while (pairs < 20) {
            ConvexPolygon p = random_convex(rng);
            Point view = Point::from_doubles(u(rng), u(rng));
            if (p.contains_closed(view)) continue;
            ++pairs;
            const int per_edge = 10000 / p.size();
            for (int e = 0; e < p.size(); ++e) {
                bool edge_visible =
                    orientation(p.vertex(e), p.vertex(e + 1), view) != Orientation::CCW;
                for (int k = 1; k < per_edge; ++k) {
                    Point q = interpolate(p.vertex(e), p.vertex(e + 1), Rat(k, per_edge));
                    bool sample_visible = !segment_crosses_interior(view, q, p);
                    if (sample_visible != edge_visible) {
                        CHECK(sample_visible == edge_visible);
                        break;
                    }
                }
            }
        }
    }
}

TEST_CASE("doubled chains on the unit square never beat the perimeter") {
    ConvexPolygon sq = unit_square();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            auto r = doubled_chain_route(sq, i, j);
            if (!r) continue;
            CHECK(r->length >= 4.0 - 1e-9);
            CHECK(r->length == doctest::Approx(2 * r->chain_length()).epsilon(1e-12));
        }
    WatchmanRoute best = best_external_watchman(sq);
    CHECK(best.kind == RouteKind::Perimeter);
    CHECK(best.length == doctest::Approx(4.0));
}

TEST_CASE("degenerate pair with empty uncovered set doubles the whole boundary") {
    ConvexPolygon sq = unit_square();
    auto r = doubled_chain_route(sq, 0, 3);
    REQUIRE(r.has_value());
    CHECK(r->chain_length() == doctest::Approx(4.0));
    CHECK(coverage_check(*r, sq));
}

TEST_CASE("pentagon counterexample") {
    ConvexPolygon p = make_obtuse_counterexample(5, 0.001);
    double per = perimeter_route(p).length;

    SUBCASE("the base-and-sides chain stays below 2(1+eps) doubled") {
        auto r = doubled_chain_route(p, 4, 1);
        REQUIRE(r.has_value());
        CHECK(r->chain_length() < 2.0 * (1.0 + 0.001));
        CHECK(r->length < 4.0 * (1.0 + 0.001));
        CHECK(coverage_check(*r, p));
    }
    SUBCASE("best route is a doubled chain at ratio <= 0.93") {
        WatchmanRoute best = best_external_watchman(p);
        CHECK(best.kind == RouteKind::DoubledChain);
        CHECK(best.length / per <= 0.93);
        CHECK(coverage_check(best, p));
    }
}

TEST_CASE("heptagon counterexample") {
    ConvexPolygon p = make_obtuse_counterexample(7, 0.001);
    REQUIRE(p.size() == 7);
    for (int v = 0; v < p.size(); ++v) CHECK(p.interior_angle_deg(v) >= 120.0 - 0.1);
    WatchmanRoute best = best_external_watchman(p);
    CHECK(best.kind == RouteKind::DoubledChain);
    CHECK(best.length < perimeter_route(p).length);
}

TEST_CASE("obtuse counterexample family") {
    SUBCASE("pentagon angles all obtuse and near the design values") {
        ConvexPolygon p = make_obtuse_counterexample(5, 0.001);
        REQUIRE(p.size() == 5);
        for (int v = 0; v < p.size(); ++v) {
            CHECK(p.angle_obtuse(v));
            CHECK(p.interior_angle_deg(v) > 90.0);
            CHECK(p.interior_angle_deg(v) < 180.0);
        }
        // angle multiset close to 120, 120-d, 90+d, 90+d, 120-d
        std::vector<double> angles;
        for (int v = 0; v < p.size(); ++v) angles.push_back(p.interior_angle_deg(v));
        std::sort(angles.begin(), angles.end());
        CHECK(angles[0] == doctest::Approx(90.0).epsilon(0.01));
        CHECK(angles[1] == doctest::Approx(90.0).epsilon(0.01));
        CHECK(angles[4] == doctest::Approx(120.0).epsilon(0.01));
    }
    SUBCASE("larger n keeps every angle obtuse") {
        for (int n : {6, 8, 9, 12}) {
            ConvexPolygon p = make_obtuse_counterexample(n, 0.001);
            REQUIRE(p.size() == n);
            for (int v = 0; v < p.size(); ++v) CHECK(p.angle_obtuse(v));
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(make_obtuse_counterexample(4, 0.001), InvalidParameters);
        CHECK_THROWS_AS(make_obtuse_counterexample(5, 0.3), InvalidParameters);
        CHECK_THROWS_AS(make_obtuse_counterexample(5, 0.0), InvalidParameters);
        CHECK_THROWS_AS(make_obtuse_counterexample(5, 0.052), InvalidParameters);
    }
}

TEST_CASE("doubling arithmetic is exact") {
    std::mt19937_64 rng(11);
    ConvexPolygon p = make_obtuse_counterexample(5, 0.01);
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (i == j) continue;
            auto r = doubled_chain_route(p, i, j);
            if (!r) continue;
            CHECK(std::abs(r->length - 2 * r->chain_length()) <= 1e-12 * std::max(1.0, r->length));
        }
    (void)rng;
}
