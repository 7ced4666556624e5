#include "canalgeo/cheeger.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace canalgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGTol = 1e-12;
constexpr int kMaxIter = 200;

// Bisection for the root of g(t) = inner_area(t) - pi t^2 on [0, hi].
// g is strictly decreasing with g(0) > 0 and g(hi) <= 0.
double solve_area_equation(const std::function<double(double)>& inner_area, double hi) {
    double lo = 0.0;
    double t = 0.5 * hi;
    for (int it = 0; it < kMaxIter; ++it) {
        t = 0.5 * (lo + hi);
        const double g = inner_area(t) - kPi * t * t;
        if (std::abs(g) <= kGTol) break;
        if (g > 0)
            lo = t;
        else
            hi = t;
    }
    return t;
}

CheegerResult solve_polygon(const ConvexPolygon& c) {
    const double rin = inradius(c);
    const double t = solve_area_equation(
        [&c](double s) { return inner_parallel_body(c, s).area(); }, rin);
    Region2 core = inner_parallel_body(c, t);
    if (core.kind() != Region2::Kind::polygon)
        throw Error("Cheeger core degenerated; input scale is below the geometric tolerance");
    const double residual = std::abs(core.area() - kPi * t * t);
    ConvexPolygon core_poly = core.polygon();
    return CheegerResult{t, RoundedPolygon(core_poly, t), Body2(std::move(core_poly)), residual};
}

CheegerResult solve_rounded(const RoundedPolygon& c) {
    const double r = c.radius();
    const bool has_core = c.has_polygon_core();
    const double core_inradius = has_core ? inradius(c.core()) : 0.0;

    auto inner_area = [&](double t) -> double {
        if (t <= r) {
            const double rr = r - t;
            if (!has_core) return kPi * rr * rr;
            const auto& q = c.core();
            return q.area() + rr * q.perimeter() + kPi * rr * rr;
        }
        if (!has_core) return 0.0;
        return inner_parallel_body(c.core(), t - r).area();
    };

    const double t = solve_area_equation(inner_area, r + core_inradius);
    const double residual = std::abs(inner_area(t) - kPi * t * t);

    if (t <= r) {
        // Inner parallel body is core (+) (r-t)*disc, so the Cheeger set is
        // the body itself: it is calibrable.
        Body2 inner = has_core ? Body2(RoundedPolygon(c.core(), r - t))
                               : Body2(RoundedPolygon(c.core_point(), r - t));
        return CheegerResult{t, c, std::move(inner), residual};
    }
    Region2 core = inner_parallel_body(c.core(), t - r);
    if (core.kind() != Region2::Kind::polygon)
        throw Error("Cheeger core degenerated; input scale is below the geometric tolerance");
    ConvexPolygon core_poly = core.polygon();
    return CheegerResult{t, RoundedPolygon(core_poly, t), Body2(std::move(core_poly)), residual};
}

}  // namespace

CheegerResult cheeger_2d(const Body2& c) {
    if (!(area(c) > 0)) throw DegenerateInput("Cheeger solver needs a body with positive area");
    if (const auto* p = std::get_if<ConvexPolygon>(&c)) return solve_polygon(*p);
    return solve_rounded(std::get<RoundedPolygon>(c));
}

bool is_cheeger_set(const Body2& c, double tol) {
    const CheegerResult r = cheeger_2d(c);
    return hausdorff_distance(c, Body2(r.cheeger_set)) <= tol;
}

bool is_cheeger_set(const Body2& c) { return is_cheeger_set(c, 1e-6 * diameter(c)); }

double cheeger_1d(const Segment1D& s) { return s.length / 2.0; }

}  // namespace canalgeo
