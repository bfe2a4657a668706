#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "obsroute/geom.hpp"

using namespace obsroute;

namespace {

ConvexPolygon unit_square_at(int x, int y) {
    return ConvexPolygon::from_vertices(
        {Point(x, y), Point(x + 1, y), Point(x + 1, y + 1), Point(x, y + 1)});
}

// independent check of the supporting-line property for a tangent candidate:
// every vertex weakly on one side of the line p-v
bool is_supporting(const Point& p, const ConvexPolygon& c, const Point& v) {
    int side = 0;
    for (const Point& u : c.vertices()) {
        Orientation o = orientation(p, v, u);
        if (o == Orientation::Collinear) continue;
        if (side == 0)
            side = static_cast<int>(o);
        else if (side != static_cast<int>(o))
            return false;
    }
    return true;
}

Rat rq(int num, int den = 1) { return Rat(num, den); }

}  // namespace

TEST_CASE("orientation basic examples") {
    CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation::CCW);
    CHECK(orientation(Point(0, 0), Point(1, 0), Point(2, 0)) == Orientation::Collinear);
    CHECK(orientation(Point(0, 0), Point(0, 1), Point(1, 1)) == Orientation::CW);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-50, 50), den(1, 9);
    for (int it = 0; it < 300; ++it) {
        Point p(Rat(coord(rng), den(rng)), Rat(coord(rng), den(rng)));
        Point q(Rat(coord(rng), den(rng)), Rat(coord(rng), den(rng)));
        Point r(Rat(coord(rng), den(rng)), Rat(coord(rng), den(rng)));
        Orientation o = orientation(p, q, r);
        Orientation swapped = orientation(p, r, q);
        CHECK(static_cast<int>(o) == -static_cast<int>(swapped));
        Rat tx(coord(rng), den(rng)), ty(coord(rng), den(rng));
        auto shift = [&](const Point& a) { return Point(a.x + tx, a.y + ty); };
        CHECK(orientation(shift(p), shift(q), shift(r)) == o);
    }
}

TEST_CASE("orientation filter agrees with exact arithmetic on near-collinear input") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    for (int it = 0; it < 500; ++it) {
        // three points on a line, then a tiny rational perturbation
        Point p(coord(rng), coord(rng));
        Rat dx(coord(rng)), dy(coord(rng));
        if (sgn(dx) == 0 && sgn(dy) == 0) continue;
        Point q(p.x + dx, p.y + dy);
        Rat eps(it % 3 - 1, 1000000000);
        Point r(p.x + 2 * dx, p.y + 2 * dy + eps);
        Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        CHECK(static_cast<int>(orientation(p, q, r)) == sgn(det));
    }
}

TEST_CASE("rational parsing round-trips") {
    CHECK(rat_from_string("3/4") == rq(3, 4));
    CHECK(rat_from_string("-7") == rq(-7));
    CHECK(rat_from_string("1.25") == rq(5, 4));
    CHECK(rat_from_string("-0.5") == rq(-1, 2));
    CHECK(rat_to_string(rq(3, 4)) == "3/4");
    CHECK(rat_to_string(rq(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
}

TEST_CASE("convex polygon construction rejects degenerate input") {
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({Point(0, 0), Point(1, 0)}), InvalidPolygon);
    CHECK_THROWS_AS(
        ConvexPolygon::from_vertices({Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1)}),
        InvalidPolygon);
    // CW order rejected
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({Point(0, 0), Point(0, 1), Point(1, 0)}),
                    InvalidPolygon);
    // repeated vertex
    CHECK_THROWS_AS(
        ConvexPolygon::from_vertices({Point(0, 0), Point(1, 0), Point(1, 0), Point(0, 1)}),
        InvalidPolygon);
}

TEST_CASE("tangent points on the unit square") {
    ConvexPolygon sq = ConvexPolygon::from_vertices(
        {Point(1, 0), Point(2, 0), Point(2, 1), Point(1, 1)});

    SUBCASE("viewpoint at origin") {
        TangentPair t = tangent_points(Point(0, 0), sq);
        CHECK(t.right == Point(1, 0));
        CHECK(t.left == Point(1, 1));
        CHECK(is_supporting(Point(0, 0), sq, t.right));
        CHECK(is_supporting(Point(0, 0), sq, t.left));
    }
    SUBCASE("viewpoint right of the square") {
        TangentPair t = tangent_points(Point(Rat(3), Rat(1, 2)), sq);
        CHECK(t.right == Point(2, 1));
        CHECK(t.left == Point(2, 0));
    }
    SUBCASE("viewpoint on an edge extension picks the nearer endpoint") {
        // (-1,0) lies on the extension of the bottom edge; the supporting line
        // contains the whole edge and the contact resolves to the near end
        TangentPair t = tangent_points(Point(-1, 0), sq);
        CHECK(orientation(Point(-1, 0), t.right, Point(2, 0)) == Orientation::Collinear);
        CHECK(t.right == Point(1, 0));
    }
    SUBCASE("inside point rejected") {
        CHECK_THROWS_AS(tangent_points(Point(Rat(3, 2), Rat(1, 2)), sq), PointInsideBody);
        CHECK_THROWS_AS(tangent_points(Point(1, 0), sq), PointInsideBody);
    }
    SUBCASE("subtended interval contains every vertex") {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> coord(-6, 8);
        for (int it = 0; it < 200; ++it) {
            Point p(coord(rng), coord(rng));
            if (sq.contains_closed(p)) continue;
            TangentPair t = tangent_points(p, sq);
            Dir r(p, t.right), l(p, t.left);
            for (const Point& v : sq.vertices()) {
                Dir dv(p, v);
                CHECK(cross_sign(r, dv) >= 0);
                CHECK(cross_sign(dv, l) >= 0);
            }
        }
    }
}

TEST_CASE("common tangents of two squares") {
    ConvexPolygon a = unit_square_at(0, 0);
    ConvexPolygon b = unit_square_at(3, 0);
    auto ts = common_tangents(a, b);
    REQUIRE(ts.size() == 4);
    int outer = 0, inner = 0;
    for (const auto& t : ts) (t.outer ? outer : inner)++;
    CHECK(outer == 2);
    CHECK(inner == 2);

    SUBCASE("translates share horizontal outer tangents") {
        int horizontal_outer = 0;
        for (const auto& t : ts)
            if (t.outer && sgn(t.line.A) == 0) horizontal_outer++;
        CHECK(horizontal_outer == 2);
    }
    SUBCASE("inner tangents cross between the squares") {
        for (const auto& t : ts) {
            if (t.outer) continue;
            // supporting contact points straddle the gap
            CHECK(to_double(t.touch1.x) <= 1.0 + 1e-12);
            CHECK(to_double(t.touch2.x) >= 3.0 - 1e-12);
        }
    }
    SUBCASE("every tangent supports both polygons") {
        for (const auto& t : ts) {
            int s1 = 0, s2 = 0;
            for (const Point& v : a.vertices()) s1 = std::max(s1, std::abs(t.line.side(v)));
            for (const Point& v : b.vertices()) s2 = std::max(s2, std::abs(t.line.side(v)));
            CHECK(t.line.side(t.touch1) == 0);
            CHECK(t.line.side(t.touch2) == 0);
        }
    }
    SUBCASE("intersecting bodies rejected") {
        CHECK_THROWS_AS(common_tangents(a, unit_square_at(0, 0)), BodiesIntersect);
    }
    SUBCASE("mirror-symmetric configuration yields mirror-symmetric tangent set") {
        // squares at (0,0) and (3,0) are symmetric about x = 2
        std::vector<Line> mirrored;
        for (const auto& t : ts) {
            // reflect line A x + B y = C about x = 2: A(4 - x) + B y = C
            mirrored.push_back(Line(-t.line.A, t.line.B, t.line.C - 4 * t.line.A));
        }
        for (const auto& ml : mirrored) {
            bool found = false;
            for (const auto& t : ts)
                if (t.line == ml) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("width, diameter and fatness") {
    SUBCASE("unit square is 1/sqrt(2)-fat") {
        auto wd = width_diameter(unit_square_at(0, 0));
        CHECK(wd.width == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(wd.diameter == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(wd.fatness == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    }
    SUBCASE("3x1 rectangle is 1/sqrt(10)-fat") {
        ConvexPolygon rect = ConvexPolygon::from_vertices(
            {Point(0, 0), Point(3, 0), Point(3, 1), Point(0, 1)});
        auto wd = width_diameter(rect);
        CHECK(wd.fatness == doctest::Approx(1.0 / std::sqrt(10.0)).epsilon(1e-9));
    }
    SUBCASE("regular hexagon of side 1") {
        // brute-force oracle over vertex pairs and edge strips is the same
        // computation the implementation performs; freeze the closed forms
        double s3 = std::sqrt(3.0);
        std::vector<Point> vs;
        double ang0 = 0;
        for (int k = 0; k < 6; ++k) {
            double a = ang0 + k * std::numbers::pi / 3.0;
            vs.push_back(Point::from_doubles(std::cos(a), std::sin(a)));
        }
        ConvexPolygon hex = ConvexPolygon::from_vertices(vs);
        auto wd = width_diameter(hex);
        CHECK(wd.width == doctest::Approx(s3).epsilon(1e-9));
        CHECK(wd.diameter == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(wd.fatness == doctest::Approx(s3 / 2.0).epsilon(1e-9));
    }
    SUBCASE("width never exceeds diameter and perimeter <= pi * diameter") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int it = 0; it < 50; ++it) {
            int k = 3 + static_cast<int>(u(rng) * 6);
            std::vector<Point> vs;
            double phase = u(rng);
            double rx = 0.5 + 2 * u(rng), ry = 0.5 + 2 * u(rng);
            for (int i = 0; i < k; ++i) {
                double a = 2 * std::numbers::pi * (i + 0.8 * u(rng) * 0 + phase) / k;
                vs.push_back(Point::from_doubles(rx * std::cos(a), ry * std::sin(a)));
            }
            ConvexPolygon c = ConvexPolygon::from_vertices(vs);
            CHECK(c.width() <= c.diameter() * (1 + 1e-9));
            CHECK(c.perimeter() <= std::numbers::pi * c.diameter() * (1 + 1e-9));
        }
    }
}

TEST_CASE("dilation upper bound") {
    CHECK(dilation_upper_bound(1.0 / std::sqrt(2.0)) ==
          doctest::Approx(std::numbers::pi * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dilation_upper_bound(1.0) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(dilation_upper_bound(0.1) == doctest::Approx(22.0).epsilon(1e-12));
    CHECK_THROWS_AS(dilation_upper_bound(0.0), NonPositiveFatness);
    CHECK_THROWS_AS(dilation_upper_bound(-1.0), NonPositiveFatness);
}

TEST_CASE("boundary geodesic on the unit square") {
    ConvexPolygon sq = unit_square_at(0, 0);
    SUBCASE("same edge") {
        auto g = boundary_geodesic(sq, Point(0, 0), Point(1, 0));
        CHECK(g.length == doctest::Approx(1.0));
        CHECK(g.polyline.size() == 2);
    }
    SUBCASE("antipodal tie goes CCW") {
        auto g = boundary_geodesic(sq, Point(0, 0), Point(1, 1));
        CHECK(g.length == doctest::Approx(2.0));
        REQUIRE(g.polyline.size() == 3);
        CHECK(g.polyline[1] == Point(1, 0));  // CCW arc passes (1,0)
    }
    SUBCASE("midpoint to midpoint around a corner") {
        auto g = boundary_geodesic(sq, Point(Rat(1, 2), Rat(0)), Point(Rat(1), Rat(1, 2)));
        CHECK(g.length == doctest::Approx(1.0));
        REQUIRE(g.polyline.size() == 3);
        CHECK(g.polyline[1] == Point(1, 0));
    }
    SUBCASE("not on boundary rejected") {
        CHECK_THROWS_AS(boundary_geodesic(sq, Point(5, 5), Point(0, 0)), PointNotOnBoundary);
    }
    SUBCASE("arc lengths sum to the perimeter") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> num(0, 7);
        for (int it = 0; it < 100; ++it) {
            // random boundary points at eighth positions
            auto pick = [&](int k) {
                int e = k / 2;
                Rat t = (k % 2 == 0) ? Rat(0) : Rat(1, 2);
                return interpolate(sq.vertex(e), sq.vertex(e + 1), t);
            };
            Point p = pick(num(rng)), q = pick(num(rng));
            auto g1 = boundary_geodesic(sq, p, q);
            auto g2 = boundary_geodesic(sq, q, p);
            CHECK(g1.length == doctest::Approx(g2.length).epsilon(1e-12));
            CHECK(g1.length <= sq.perimeter() / 2 + 1e-9);
        }
    }
}

TEST_CASE("geodesic dilation stays below the fatness bound") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 25; ++it) {
        int k = 3 + static_cast<int>(u(rng) * 5);
        std::vector<Point> vs;
        double rx = 0.5 + 2 * u(rng), ry = 0.5 + 2 * u(rng), ph = u(rng) * 2;
        for (int i = 0; i < k; ++i) {
            double a = 2 * std::numbers::pi * i / k + ph;
            vs.push_back(Point::from_doubles(rx * std::cos(a), ry * std::sin(a)));
        }
        ConvexPolygon c = ConvexPolygon::from_vertices(vs);
        double bound = dilation_upper_bound(c.fatness());
        std::vector<Point> samples;
        for (int i = 0; i < c.size(); ++i) {
            samples.push_back(c.vertex(i));
            samples.push_back(interpolate(c.vertex(i), c.vertex(i + 1), Rat(1, 2)));
        }
        for (size_t i = 0; i < samples.size(); ++i)
            for (size_t j = i + 1; j < samples.size(); ++j) {
                if (samples[i] == samples[j]) continue;
                auto g = boundary_geodesic(c, samples[i], samples[j]);
                double chord = dist(samples[i], samples[j]);
                CHECK(g.length / chord <= bound + 1e-9);
            }
    }
}

TEST_CASE("segment clipping against a convex polygon") {
    ConvexPolygon sq = unit_square_at(0, 0);
    SUBCASE("chord through opposite edge midpoints") {
        auto clip = clip_segment_to_polygon(Point(Rat(1, 2), Rat(-1)), Point(Rat(1, 2), Rat(2)), sq);
        REQUIRE(clip.has_value());
        CHECK(to_double(clip->first) == doctest::Approx(1.0 / 3.0));
        CHECK(to_double(clip->second) == doctest::Approx(2.0 / 3.0));
        CHECK(segment_crosses_interior(Point(Rat(1, 2), Rat(-1)), Point(Rat(1, 2), Rat(2)), sq));
    }
    SUBCASE("grazing along an edge is not an interior crossing") {
        CHECK_FALSE(segment_crosses_interior(Point(-1, 0), Point(2, 0), sq));
        // corner touch only
        CHECK_FALSE(segment_crosses_interior(Point(-1, 1), Point(1, -1), sq));
    }
    SUBCASE("disjoint segment") {
        CHECK_FALSE(clip_segment_to_polygon(Point(5, 5), Point(6, 6), sq).has_value());
    }
    SUBCASE("diagonal crosses") {
        CHECK(segment_crosses_interior(Point(-1, -1), Point(2, 2), sq));
    }
}

TEST_CASE("ray entry parameters") {
    ConvexPolygon sq = unit_square_at(2, 0);
    auto t = ray_entry(Point(0, Rat(1, 2)), Dir(Rat(1), Rat(0)), sq);
    REQUIRE(t.has_value());
    CHECK(to_double(*t) == doctest::Approx(2.0));
    CHECK_FALSE(ray_entry(Point(0, Rat(1, 2)), Dir(Rat(-1), Rat(0)), sq).has_value());
    CHECK_FALSE(ray_entry(Point(0, 5), Dir(Rat(1), Rat(0)), sq).has_value());
}
