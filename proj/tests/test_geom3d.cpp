#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "canalgeo/constructions.hpp"
#include "canalgeo/geom3d.hpp"
#include "canalgeo/verify.hpp"
#include "support/oracles.hpp"

using namespace canalgeo;

namespace {

const Direction e1({1, 0, 0});
const Direction e3({0, 0, 1});

}  // namespace

TEST_CASE("hull of the cube corners") {
    const ConvexPolytope3 cube = realize_cube();
    CHECK(cube.vertices().size() == 8);
    CHECK(cube.facets().size() == 6);
    CHECK(cube.edge_count() == 12);
    CHECK(cube.volume() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cube.surface_area() == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("hull of K3") {
    const ConvexPolytope3 k3 = realize_k3();
    CHECK(k3.vertices().size() == 5);
    CHECK(k3.facets().size() == 5);
    CHECK(k3.volume() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(k3.surface_area() == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("coplanar input is degenerate") {
    const std::vector<Vec3> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(ConvexPolytope3::hull(pts), DegenerateInput);
}

TEST_CASE("halfspace cuts of the cube") {
    const ConvexPolytope3 cube = realize_cube();
    const auto half = halfspace_cut(cube, {1, 0, 0}, 0.5);
    REQUIRE(half.has_value());
    CHECK(half->volume() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half->surface_area() == doctest::Approx(4.0).epsilon(1e-12));

    const auto unchanged = halfspace_cut(cube, {1, 0, 0}, 2.0);
    REQUIRE(unchanged.has_value());
    CHECK(unchanged->volume() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(!halfspace_cut(cube, {1, 0, 0}, -1.0).has_value());
}

TEST_CASE("prism measures") {
    for (const double h : {0.5, 1.0, 7.0}) {
        const ConvexPolytope3 p = realize_cylinder_cube3(h);
        CHECK(p.volume() == doctest::Approx(h).epsilon(1e-12));
        CHECK(p.surface_area() == doctest::Approx(4.0 * h + 2.0).epsilon(1e-12));
    }
}

TEST_CASE("projections of K3 and the cube") {
    const ConvexPolytope3 k3 = realize_k3();
    CHECK(project_to_plane(k3, e1).area() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(project_to_plane(k3, Direction({0, 1, 0})).area() ==
          doctest::Approx(0.5).epsilon(1e-12));
    const ConvexPolygon sq = project_to_plane(realize_cube(), e3);
    CHECK(sq.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq.perimeter() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("slices of the cube") {
    const ConvexPolytope3 cube = realize_cube();
    const Region2 mid = slice(cube, e3, 0.5);
    REQUIRE(mid.kind() == Region2::Kind::polygon);
    CHECK(mid.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mid.perimeter() == doctest::Approx(4.0).epsilon(1e-12));

    const Region2 top = slice(cube, e3, 1.0);
    REQUIRE(top.kind() == Region2::Kind::polygon);
    CHECK(top.area() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(slice(cube, e3, 2.0).is_empty());
}

TEST_CASE("slice perimeter integral: cube and quadrature oracle") {
    const ConvexPolytope3 cube = realize_cube();
    CHECK(slice_perimeter_integral(cube, e3) == doctest::Approx(4.0).epsilon(1e-12));

    const ConvexPolytope3 k3 = realize_k3();
    const auto q = oracles::slice_quadrature(k3, e3, 10000);
    CHECK(std::abs(slice_perimeter_integral(k3, e3) - q.perimeter_integral) <= 1e-4);
}

TEST_CASE("slice perimeter integral scales linearly under dilation") {
    const ConvexPolytope3 k = random_polytope(5, 16, ScaleProfile::sphere);
    const double base = slice_perimeter_integral(k, e3);
    for (const double lam : {2.0, 10.0, 100.0}) {
        const ConvexPolytope3 kl = dilate_along(k, e3, lam);
        CHECK(slice_perimeter_integral(kl, e3) ==
              doctest::Approx(lam * base).epsilon(1e-9));
    }
}

TEST_CASE("dilation of the cube") {
    const ConvexPolytope3 box = dilate_along(realize_cube(), e3, 2.0);
    CHECK(box.volume() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(box.surface_area() == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("dilation scales volume by lambda and the ratio increases") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const ConvexPolytope3 k = random_polytope(seed, 14, ScaleProfile::sphere);
        double prev = k.volume() / k.surface_area();
        for (const double lam : {1.5, 3.0, 8.0, 32.0}) {
            const ConvexPolytope3 kl = dilate_along(k, e3, lam);
            CHECK(kl.volume() == doctest::Approx(lam * k.volume()).epsilon(1e-9));
            const double r = kl.volume() / kl.surface_area();
            CHECK(r > prev);
            prev = r;
        }
    }
}

TEST_CASE("minkowski sums with degenerate summands") {
    const ConvexPolytope3 cube = realize_cube();
    const std::vector<Vec3> seg = {{0, 0, 0}, {0, 0, 1}};
    const ConvexPolytope3 box = minkowski_sum(cube, std::span<const Vec3>(seg));
    CHECK(box.volume() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(box.surface_area() == doctest::Approx(10.0).epsilon(1e-12));

    const std::vector<Vec3> pt = {{3, 4, 5}};
    const ConvexPolytope3 moved = minkowski_sum(cube, std::span<const Vec3>(pt));
    CHECK(moved.volume() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moved.support({0, 0, 1}) == doctest::Approx(6.0));
}

TEST_CASE("minkowski vertex cap") {
    const ConvexPolytope3 cube = realize_cube();
    CHECK_THROWS_AS(minkowski_sum(cube, cube, 16), ScaleLimit);
}

TEST_CASE("K3 + L~_10 volume sits inside the slab bounds") {
    const ConvexPolytope3 k3 = realize_k3();
    const ConvexPolytope3 lt = realize_lh_tilde3(10.0);
    const ConvexPolytope3 s = minkowski_sum(k3, lt);
    const double h = 10.0;
    const double lo = 0.5 * (h - 1.0);
    const double hi = (0.5 + 2.0 / h + 1.0 / (h * h)) * (h + 1.0);
    CHECK(s.volume() >= lo);
    CHECK(s.volume() <= hi);
}

TEST_CASE("measures are invariant under vertex permutation") {
    const ConvexPolytope3 k = random_polytope(71, 24, ScaleProfile::box);
    std::vector<Vec3> shuffled = k.vertices();
    SplitMix64 rng(5);
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.next_u64() % i]);
    const ConvexPolytope3 again = ConvexPolytope3::hull(shuffled);
    CHECK(again.volume() == doctest::Approx(k.volume()).epsilon(1e-12));
    CHECK(again.surface_area() == doctest::Approx(k.surface_area()).epsilon(1e-12));
    CHECK(again.vertices().size() == k.vertices().size());
}

TEST_CASE("measures are invariant under rigid motions") {
    SplitMix64 rng(99);
    for (std::uint64_t seed : {31u, 32u, 33u}) {
        const ConvexPolytope3 k = random_polytope(seed, 20, ScaleProfile::box);
        const auto rot = oracles::random_rotation(rng);
        const Vec3 shift{rng.next_in(-5, 5), rng.next_in(-5, 5), rng.next_in(-5, 5)};
        std::vector<Vec3> pts;
        for (const auto& v : k.vertices()) pts.push_back(oracles::rotate(rot, v) + shift);
        const ConvexPolytope3 moved = ConvexPolytope3::hull(pts);
        CHECK(moved.volume() == doctest::Approx(k.volume()).epsilon(1e-12));
        CHECK(moved.surface_area() == doctest::Approx(k.surface_area()).epsilon(1e-12));
    }
}

TEST_CASE("fubini: quadrature of slice areas recovers the volume") {
    for (std::uint64_t seed : {41u, 42u}) {
        const ConvexPolytope3 k = random_polytope(seed, 18, ScaleProfile::sphere);
        const auto q = oracles::slice_quadrature(k, e3, 10000);
        CHECK(std::abs(q.area_integral - k.volume()) <= 1e-6);
    }
}

TEST_CASE("brunn-minkowski on random pairs") {
    for (std::uint64_t seed : {51u, 52u, 53u, 54u}) {
        const ConvexPolytope3 k = random_polytope(seed, 12, ScaleProfile::sphere);
        const ConvexPolytope3 l = random_polytope(seed + 1000, 12, ScaleProfile::box);
        for (const double lam : {0.25, 0.5, 0.75}) {
            std::vector<Vec3> ka, lb;
            for (const auto& v : k.vertices()) ka.push_back((1.0 - lam) * v);
            for (const auto& v : l.vertices()) lb.push_back(lam * v);
            const double vol = minkowski_sum(ka, lb).volume();
            const double rhs = (1.0 - lam) * std::cbrt(k.volume()) + lam * std::cbrt(l.volume());
            CHECK(std::cbrt(vol) >= rhs - 1e-9);
        }
    }
}

TEST_CASE("projection commutes with dilation along the same direction") {
    for (std::uint64_t seed : {61u, 62u}) {
        const ConvexPolytope3 k = random_polytope(seed, 16, ScaleProfile::sphere);
        const ConvexPolygon before = project_to_plane(k, e3);
        const ConvexPolygon after = project_to_plane(dilate_along(k, e3, 17.0), e3);
        CHECK(oracles::same_polygon(before, after, 1e-9));
    }
}

TEST_CASE("direction validation") {
    CHECK_THROWS_AS(Direction({0, 0, 0}), PreconditionViolated);
    const Direction d({0, 3, 4});
    CHECK(norm(d.vec()) == doctest::Approx(1.0).epsilon(1e-15));
}
