#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "obsroute/tspn.hpp"
#include "obsroute/visibility.hpp"

using namespace obsroute;
using namespace obsroute::testing;

namespace {

PolygonWithHoles square_region(int x, int y, int side = 1) {
    return make_region(
        {Point(x, y), Point(x + side, y), Point(x + side, y + side), Point(x, y + side)});
}

RegionSet three_corner_squares() {
    RegionSet rs{{square_region(0, 0, 1), square_region(10, 0, 1), square_region(0, 10, 1)},
                 Box(Rat(-1), Rat(-1), Rat(13), Rat(13))};
    return rs;
}

bool tour_valid(const Tour& t, const RegionSet& rs) {
    for (size_t i = 0; i < rs.regions.size(); ++i) {
        auto it = t.witness.find(static_cast<int>(i));
        if (it == t.witness.end()) return false;
        if (!rs.regions[i].contains(it->second)) return false;
        if (!t.point_on_tour(it->second)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("tspn: overlapping regions give a zero tour") {
    RegionSet rs{{make_region({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)}),
                  make_region({Point(2, 2), Point(6, 2), Point(6, 6), Point(2, 6)}),
                  make_region({Point(3, 3), Point(7, 3), Point(7, 7), Point(3, 7)})},
                 Box(Rat(-1), Rat(-1), Rat(8), Rat(8))};
    Tour t = tspn_tour(rs);
    CHECK(t.length == 0.0);
    CHECK(t.vertices.size() == 1);
    CHECK(tour_valid(t, rs));
}

TEST_CASE("tspn: single region gives a zero tour at its witness") {
    RegionSet rs{{square_region(2, 3, 2)}, Box(Rat(0), Rat(0), Rat(8), Rat(8))};
    Tour t = tspn_tour(rs);
    CHECK(t.length == 0.0);
    CHECK(tour_valid(t, rs));
}

TEST_CASE("tspn: empty region set rejected") {
    RegionSet rs{{}, Box(Rat(0), Rat(0), Rat(1), Rat(1))};
    CHECK_THROWS_AS(tspn_tour(rs), EmptyRegionSet);
    CHECK_THROWS_AS(exact_small_tspn(rs), EmptyRegionSet);
}

TEST_CASE("tspn: too many regions for the exact solver") {
    std::vector<PolygonWithHoles> regions;
    for (int i = 0; i < 10; ++i) regions.push_back(square_region(3 * i, 0, 1));
    RegionSet rs{std::move(regions), Box(Rat(-1), Rat(-1), Rat(31), Rat(3))};
    CHECK_THROWS_AS(exact_small_tspn(rs), TooManyRegions);
}

TEST_CASE("tspn: two regions double the bridge") {
    RegionSet rs{{square_region(0, 0, 2), square_region(6, 0, 2)},
                 Box(Rat(-1), Rat(-1), Rat(9), Rat(3))};
    Tour exact = exact_small_tspn(rs);
    CHECK(exact.length == doctest::Approx(2.0 * 4.0).epsilon(1e-6));
    Tour heur = tspn_tour(rs);
    CHECK(tour_valid(heur, rs));
    CHECK(heur.length == doctest::Approx(8.0).epsilon(1e-6));
}

TEST_CASE("tspn: heuristic stays within factor 1.5 of the oracle on 3 corner squares") {
    RegionSet rs = three_corner_squares();
    Tour exact = exact_small_tspn(rs);
    Tour heur = tspn_tour(rs);
    CHECK(tour_valid(exact, rs));
    CHECK(tour_valid(heur, rs));
    CHECK(heur.length <= 1.5 * exact.length + 1e-9);
    CHECK(heur.length >= exact.length - 1e-6);
}

TEST_CASE("tspn: four squares at the corners of a 10x10 layout") {
    RegionSet rs{{square_region(0, 0), square_region(10, 0), square_region(10, 10),
                  square_region(0, 10)},
                 Box(Rat(-1), Rat(-1), Rat(13), Rat(13))};
    Tour exact = exact_small_tspn(rs);
    // touring the four inner corners: a 9x9 square circuit
    CHECK(exact.length == doctest::Approx(36.0).epsilon(1e-6));
    Tour heur = tspn_tour(rs);
    CHECK(heur.length <= 1.5 * exact.length + 1e-9);
}

TEST_CASE("refine_touch_points is monotone and reaches fixpoints") {
    RegionSet rs{{square_region(0, 0, 2), square_region(8, 0, 2)},
                 Box(Rat(-1), Rat(-1), Rat(12), Rat(3))};
    SUBCASE("far-apart witnesses converge to the closest boundary points") {
        Tour start;
        start.witness.emplace(0, Point(0, 0));
        start.witness.emplace(1, Point(10, 2));
        start.vertices = {Point(0, 0), Point(10, 2)};
        start.recompute_length();
        Tour refined = refine_touch_points({0, 1}, rs, start);
        CHECK(refined.length <= start.length + 1e-12);
        CHECK(refined.length == doctest::Approx(2 * 6.0).epsilon(1e-6));
        // touch points converge to the facing edges
        CHECK(to_double(refined.witness.at(0).x) == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(to_double(refined.witness.at(1).x) == doctest::Approx(8.0).epsilon(1e-6));
    }
    SUBCASE("optimal witnesses are a fixpoint") {
        Tour start;
        start.witness.emplace(0, Point(2, 1));
        start.witness.emplace(1, Point(8, 1));
        start.vertices = {Point(2, 1), Point(8, 1)};
        start.recompute_length();
        Tour refined = refine_touch_points({0, 1}, rs, start);
        CHECK(refined.length == doctest::Approx(start.length).epsilon(1e-9));
    }
    SUBCASE("zero-area tour stays unchanged") {
        RegionSet one{{square_region(0, 0, 2), square_region(1, 1, 2)},
                      Box(Rat(-1), Rat(-1), Rat(4), Rat(4))};
        Tour start;
        start.witness.emplace(0, Point(Rat(3, 2), Rat(3, 2)));
        start.witness.emplace(1, Point(Rat(3, 2), Rat(3, 2)));
        start.vertices = {Point(Rat(3, 2), Rat(3, 2))};
        start.recompute_length();
        Tour refined = refine_touch_points({0, 1}, one, start);
        CHECK(refined.length == 0.0);
    }
}

TEST_CASE("tspn zero detection matches exact intersection emptiness") {
    SUBCASE("disjoint regions never produce zero tours") {
        RegionSet rs = three_corner_squares();
        Tour t = tspn_tour(rs);
        CHECK(t.length > 0);
        CHECK_FALSE(regions_common_point(rs.regions).has_value());
    }
    SUBCASE("touching regions produce zero tours") {
        RegionSet rs{{square_region(0, 0, 2), square_region(2, 0, 2)},
                     Box(Rat(-1), Rat(-1), Rat(5), Rat(3))};
        Tour t = tspn_tour(rs);
        CHECK(t.length == 0.0);
        REQUIRE(regions_common_point(rs.regions).has_value());
    }
}

TEST_CASE("tspn heuristic against the oracle on a 50-instance corpus") {
    double worst = 0;
    int compared = 0;
    for (unsigned seed = 301; seed < 351; ++seed) {
        Instance inst = random_fat_instance(seed, 6, 14.0, 26);
        if (inst.n() < 2) continue;
        std::vector<PolygonWithHoles> regions;
        for (const auto& c : inst.obstacles()) {
            std::vector<Point> ring(c.vertices());
            regions.push_back(make_region(ring));
        }
        RegionSet rs{std::move(regions), inst.box()};
        Tour exact = exact_small_tspn(rs, 10);
        Tour heur = tspn_tour(rs);
        CHECK(tour_valid(exact, rs));
        CHECK(tour_valid(heur, rs));
        if (exact.length > 1e-9) {
            worst = std::max(worst, heur.length / exact.length);
            ++compared;
        }
    }
    CHECK(compared >= 20);
    CHECK(worst <= 2.0);
}
