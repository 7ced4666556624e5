#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "canalgeo/geom2d.hpp"
#include "canalgeo/verify.hpp"
#include "support/oracles.hpp"

using namespace canalgeo;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon unit_square() {
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon right_triangle() {
    return ConvexPolygon({{0, 0}, {1, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("convex hull removes interior and collinear points") {
    const std::vector<Point2> pts = {{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}};
    const ConvexPolygon h = convex_hull(pts);
    CHECK(h.size() == 3);
    CHECK(h.area() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("convex hull is permutation invariant") {
    const std::vector<Point2> shuffled = {{1, 1}, {0, 0}, {1, 0}, {0, 1}};
    const ConvexPolygon h = convex_hull(shuffled);
    CHECK(h.size() == 4);
    CHECK(h.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.perimeter() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("collinear input is degenerate") {
    const std::vector<Point2> pts = {{0, 0}, {1, 0}, {2, 0}};
    CHECK_THROWS_AS(convex_hull(pts), DegenerateInput);
}

TEST_CASE("hull is idempotent on polygon vertices") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const ConvexPolygon p = random_polygon(seed, 12, 3.0);
        const ConvexPolygon h = convex_hull(p.vertices());
        CHECK(oracles::same_polygon(p, h, 1e-12));
    }
}

TEST_CASE("measures of basic bodies") {
    CHECK(unit_square().area() == 1.0);
    CHECK(unit_square().perimeter() == 4.0);
    CHECK(right_triangle().area() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(right_triangle().perimeter() ==
          doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));

    const RoundedPolygon r(unit_square(), 1.0);
    CHECK(r.area() == doctest::Approx(1.0 + 4.0 + kPi).epsilon(1e-15));
    CHECK(r.perimeter() == doctest::Approx(4.0 + 2.0 * kPi).epsilon(1e-15));
}

TEST_CASE("Steiner formula for rounded bodies") {
    for (std::uint64_t seed : {9u, 10u, 11u}) {
        const ConvexPolygon p = random_polygon(seed, 11, 2.0);
        for (const double r : {0.0, 0.25, 1.0, 2.0}) {
            const RoundedPolygon rp(p, r);
            CHECK(std::abs(rp.area() - (p.area() + r * p.perimeter() + kPi * r * r)) <= 1e-12);
            CHECK(std::abs(rp.perimeter() - (p.perimeter() + 2.0 * kPi * r)) <= 1e-12);
        }
    }
}

TEST_CASE("Steiner formula matches the polygonal approximation") {
    const ConvexPolygon p = random_polygon(42, 10, 2.0);
    for (const double r : {0.3, 1.0, 2.0}) {
        const RoundedPolygon rp(p, r);
        const ConvexPolygon approx = rp.approximate_polygon(512);
        // Inscribed approximation: slightly smaller, within the sagitta bound.
        const double bound = RoundedPolygon::approximation_bound(r, 512) * rp.perimeter();
        CHECK(approx.area() <= rp.area() + 1e-12);
        CHECK(approx.area() >= rp.area() - bound - 1e-12);
        CHECK(std::abs(approx.perimeter() - rp.perimeter()) <= 8.0 * bound + 1e-12);
    }
}

TEST_CASE("minkowski sum of squares") {
    const ConvexPolygon s = minkowski_sum(unit_square(), unit_square());
    CHECK(s.size() == 4);
    CHECK(s.area() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("minkowski sum against the brute-force hull oracle") {
    const ConvexPolygon t = right_triangle();
    const ConvexPolygon refl = ConvexPolygon({{-1, 0}, {0, -1}, {0, 0}});
    const ConvexPolygon sum = minkowski_sum(t, refl);
    const ConvexPolygon brute = oracles::brute_minkowski(t, refl);
    CHECK(sum.size() == 6);  // centrally symmetric hexagon
    CHECK(hausdorff_distance(Body2(sum), Body2(brute)) <= 1e-12);
    CHECK(sum.area() == doctest::Approx(brute.area()).epsilon(1e-12));

    for (std::uint64_t seed = 10; seed < 20; ++seed) {
        const ConvexPolygon p = random_polygon(seed, 9, 2.0);
        const ConvexPolygon q = random_polygon(seed + 100, 7, 1.5);
        const ConvexPolygon a = minkowski_sum(p, q);
        const ConvexPolygon b = oracles::brute_minkowski(p, q);
        CHECK(hausdorff_distance(Body2(a), Body2(b)) <= 1e-9);
    }
}

TEST_CASE("minkowski sum with a point is a translation") {
    const Point2 q{2.5, -1.0};
    const ConvexPolygon moved = right_triangle().translated(q);
    CHECK(moved.support({1, 0}) == doctest::Approx(1.0 + q.x));
    CHECK(moved.area() == doctest::Approx(right_triangle().area()));
}

TEST_CASE("support additivity of minkowski sums") {
    const ConvexPolygon p = random_polygon(7, 11, 2.0);
    const ConvexPolygon q = random_polygon(8, 6, 3.0);
    const ConvexPolygon s = minkowski_sum(p, q);
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * kPi * i / 64.0;
        const Point2 u{std::cos(th), std::sin(th)};
        CHECK(s.support(u) == doctest::Approx(p.support(u) + q.support(u)).epsilon(1e-9));
    }
}

TEST_CASE("inner parallel body of the unit square") {
    const Region2 r = inner_parallel_body(unit_square(), 0.25);
    REQUIRE(r.kind() == Region2::Kind::polygon);
    CHECK(r.area() == doctest::Approx(0.25).epsilon(1e-12));

    const Region2 pt = inner_parallel_body(unit_square(), 0.5);
    REQUIRE(pt.kind() == Region2::Kind::point);
    CHECK(distance(pt.points()[0], {0.5, 0.5}) <= 1e-9);

    CHECK(inner_parallel_body(unit_square(), 0.75).is_empty());
}

TEST_CASE("inner parallel body matches the grid oracle") {
    const ConvexPolygon tri({{0, 0}, {4, 0}, {0, 3}});
    const Region2 r = inner_parallel_body(tri, 0.5);
    REQUIRE(r.kind() == Region2::Kind::polygon);
    CHECK(std::abs(r.area() - oracles::inner_set_area_grid(tri, 0.5)) <= 1e-3);
}

TEST_CASE("inner parallel area is monotone in t") {
    const ConvexPolygon p = random_polygon(21, 14, 2.0);
    const double rin = inradius(p);
    double prev = p.area();
    for (int i = 1; i <= 24; ++i) {
        const double t = rin * i / 25.0;
        const Region2 r = inner_parallel_body(p, t);
        REQUIRE(r.kind() == Region2::Kind::polygon);
        CHECK(r.area() < prev);
        prev = r.area();
    }
}

TEST_CASE("inradius of known bodies") {
    CHECK(inradius(unit_square()) == doctest::Approx(0.5).epsilon(1e-9));
    const ConvexPolygon tri({{0, 0}, {4, 0}, {0, 3}});
    CHECK(inradius(tri) == doctest::Approx(1.0).epsilon(1e-9));  // (a+b-c)/2
    std::vector<Point2> hex;
    for (int k = 0; k < 6; ++k)
        hex.push_back({std::cos(kPi * k / 3.0), std::sin(kPi * k / 3.0)});
    CHECK(inradius(convex_hull(hex)) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("isoperimetric sanity for random polygons") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ConvexPolygon p = random_polygon(seed, 4 + static_cast<int>(seed % 12), 2.0);
        CHECK(4.0 * kPi * p.area() <= p.perimeter() * p.perimeter() + 1e-9);
    }
}

TEST_CASE("hausdorff distance is exact on known pairs") {
    const ConvexPolygon sq = unit_square();
    CHECK(hausdorff_distance(Body2(sq), Body2(sq.translated({0.3, 0.4}))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // Rolling by r moves every support value by exactly r.
    const RoundedPolygon rolled(sq, 0.25);
    CHECK(hausdorff_distance(Body2(sq), Body2(rolled)) == doctest::Approx(0.25).epsilon(1e-12));
    // Disc against its inscribed polygon: sagitta bound is attained.
    const RoundedPolygon disc(Point2{0, 0}, 1.0);
    const ConvexPolygon approx = disc.approximate_polygon(64);
    CHECK(hausdorff_distance(Body2(disc), Body2(approx)) ==
          doctest::Approx(1.0 - std::cos(kPi / 64.0)).epsilon(1e-9));
}

TEST_CASE("region classification") {
    CHECK(Region2::classify({}).is_empty());
    CHECK(Region2::classify({{1, 2}}).kind() == Region2::Kind::point);
    CHECK(Region2::classify({{0, 0}, {1, 1}, {0.5, 0.5}}).kind() == Region2::Kind::segment);
    CHECK(Region2::classify({{0, 0}, {1, 0}, {0, 1}, {1, 1}}).kind() == Region2::Kind::polygon);
}

TEST_CASE("segment1d validation") {
    CHECK(Segment1D(2.0).length == 2.0);
    CHECK_THROWS_AS(Segment1D(0.0), DegenerateInput);
}

TEST_CASE("degenerate polygon constructions throw") {
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), DegenerateInput);
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}), DegenerateInput);
    // clockwise
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), DegenerateInput);
}
