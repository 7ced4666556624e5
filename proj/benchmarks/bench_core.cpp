#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "canalgeo/canal.hpp"
#include "canalgeo/cheeger.hpp"
#include "canalgeo/constructions.hpp"
#include "canalgeo/verify.hpp"

using namespace canalgeo;

namespace {

ConvexPolygon unit_square() {
    return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon regular_ngon(int m) {
    std::vector<Point2> pts;
    for (int k = 0; k < m; ++k)
        pts.push_back({std::cos(2.0 * std::numbers::pi * k / m),
                       std::sin(2.0 * std::numbers::pi * k / m)});
    return convex_hull(pts);
}

void BM_Hull3D(benchmark::State& state) {
    const int v = static_cast<int>(state.range(0));
    SplitMix64 rng(7);
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) pts.push_back(rng.next_on_sphere());
    for (auto _ : state) benchmark::DoNotOptimize(ConvexPolytope3::hull(pts));
    state.SetItemsProcessed(state.iterations() * v);
}
BENCHMARK(BM_Hull3D)->Arg(32)->Arg(128)->Arg(512);

void BM_MinkowskiSum(benchmark::State& state) {
    const ConvexPolytope3 a = random_polytope(1, static_cast<int>(state.range(0)),
                                              ScaleProfile::sphere);
    const ConvexPolytope3 b = random_polytope(2, static_cast<int>(state.range(0)),
                                              ScaleProfile::box);
    for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(a, b));
}
BENCHMARK(BM_MinkowskiSum)->Arg(8)->Arg(16)->Arg(32);

void BM_CheegerSolve(benchmark::State& state) {
    const ConvexPolygon body = regular_ngon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cheeger_2d(Body2(body)));
}
BENCHMARK(BM_CheegerSolve)->Arg(4)->Arg(16)->Arg(64);

void BM_InnerParallelBody(benchmark::State& state) {
    const ConvexPolygon body = regular_ngon(static_cast<int>(state.range(0)));
    const double t = 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(inner_parallel_body(body, t));
}
BENCHMARK(BM_InnerParallelBody)->Arg(8)->Arg(64)->Arg(256);

void BM_SlicePerimeterIntegral(benchmark::State& state) {
    const ConvexPolytope3 k = random_polytope(11, 64, ScaleProfile::sphere);
    const Direction u({0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(slice_perimeter_integral(k, u));
}
BENCHMARK(BM_SlicePerimeterIntegral);

void BM_CanalBounds(benchmark::State& state) {
    const ConvexPolygon sq = unit_square();
    CanalOptions opt;
    opt.arc_segments = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(canal_bounds(sq, opt));
}
BENCHMARK(BM_CanalBounds)->Arg(64)->Arg(256);

void BM_AhRealization(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(realize_ah3(83.0));
}
BENCHMARK(BM_AhRealization);

void BM_HausdorffRounded(benchmark::State& state) {
    const ConvexPolygon a = regular_ngon(static_cast<int>(state.range(0)));
    const RoundedPolygon b(a, 0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hausdorff_distance(Body2(a), Body2(b)));
}
BENCHMARK(BM_HausdorffRounded)->Arg(16)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
