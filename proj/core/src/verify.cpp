#include "canalgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "canalgeo/json_io.hpp"

namespace canalgeo {

namespace {

constexpr double kPi = std::numbers::pi;

double holds_tol(double lhs, double rhs) { return 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)); }

CheckOutcome make_outcome(std::string name, double lhs, double rhs, nlohmann::json inputs,
                          std::uint64_t seed) {
    CheckOutcome o;
    o.name = std::move(name);
    o.lhs = lhs;
    o.rhs = rhs;
    o.slack = rhs - lhs;
    o.holds = o.slack >= -holds_tol(lhs, rhs);
    inputs["seed"] = seed;
    o.inputs = inputs.dump();
    o.seed = seed;
    return o;
}

nlohmann::json dir_json(const Direction& u) {
    return nlohmann::json::array({u.vec().x, u.vec().y, u.vec().z});
}

}  // namespace

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

std::uint64_t SplitMix64::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SplitMix64::next_in(double a, double b) { return a + (b - a) * next_unit(); }

double SplitMix64::next_gaussian() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u1 = next_unit();
    while (u1 <= 1e-300) u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Vec3 SplitMix64::next_on_sphere() {
    for (;;) {
        const Vec3 g{next_gaussian(), next_gaussian(), next_gaussian()};
        const double n = norm(g);
        if (n > 1e-6) return (1.0 / n) * g;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 s(master ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return s.next_u64();
}

const char* to_string(ScaleProfile p) {
    switch (p) {
        case ScaleProfile::sphere: return "sphere";
        case ScaleProfile::box: return "box";
        default: return "anisotropic";
    }
}

ScaleProfile scale_profile_from_string(const std::string& s) {
    if (s == "sphere") return ScaleProfile::sphere;
    if (s == "box") return ScaleProfile::box;
    if (s == "anisotropic") return ScaleProfile::anisotropic;
    throw PreconditionViolated("unknown scale profile '" + s + "'");
}

ConvexPolytope3 random_polytope(std::uint64_t seed, int v, ScaleProfile profile) {
    if (v < 4) throw PreconditionViolated("random polytope needs v >= 4");
    for (int attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Vec3> pts;
        pts.reserve(static_cast<std::size_t>(v));
        double flat = 1.0;
        if (profile == ScaleProfile::anisotropic) flat = std::pow(10.0, rng.next_in(-3.0, 0.0));
        for (int i = 0; i < v; ++i) {
            Vec3 p;
            if (profile == ScaleProfile::box)
                p = {rng.next_in(-1, 1), rng.next_in(-1, 1), rng.next_in(-1, 1)};
            else
                p = rng.next_on_sphere();
            if (profile == ScaleProfile::anisotropic) p.z *= flat;
            pts.push_back(p);
        }
        try {
            return ConvexPolytope3::hull(pts);
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("random polytope generation kept degenerating");
}

ConvexPolygon random_polygon(std::uint64_t seed, int v, double box_size) {
    if (v < 3) throw PreconditionViolated("random polygon needs v >= 3");
    for (int attempt = 0; attempt < 16; ++attempt) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Point2> pts;
        pts.reserve(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i)
            pts.push_back({rng.next_in(0, box_size), rng.next_in(0, box_size)});
        try {
            return convex_hull(pts);
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("random polygon generation kept degenerating");
}

Point2 random_point_inside(SplitMix64& rng, const ConvexPolygon& c) {
    double x0 = c.vertices()[0].x, x1 = x0, y0 = c.vertices()[0].y, y1 = y0;
    for (const auto& p : c.vertices()) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    for (;;) {
        const Point2 p{rng.next_in(x0, x1), rng.next_in(y0, y1)};
        if (c.contains(p, 0.0)) return p;
    }
}

namespace {

// Greedy thinning of a convex cycle: keep vertices at least min_dist apart.
// A subset of extreme points still spans a convex subset, which is all the
// witness construction needs.
std::vector<Point2> thin_cycle(const std::vector<Point2>& cycle, double min_dist) {
    std::vector<Point2> kept;
    for (const auto& p : cycle) {
        if (kept.empty() || distance(kept.back(), p) >= min_dist) kept.push_back(p);
    }
    while (kept.size() > 3 && distance(kept.back(), kept.front()) < min_dist) kept.pop_back();
    return kept;
}

}  // namespace

ConvexPolytope3 random_canal_witness(std::uint64_t seed, const ConvexPolygon& c, int sections,
                                     double max_stretch) {
    if (sections < 1) throw PreconditionViolated("canal witness needs sections >= 1");
    const double rin = inradius(c);
    const double feature_floor = 1e-3 * c.diameter();
    for (int attempt = 0; attempt < 8; ++attempt) {
        SplitMix64 rng(derive_seed(seed, 0xCA9A1 + static_cast<std::uint64_t>(attempt)));
        // Natural identification of the plane with e3^perp: (x, y) -> (x, y, h).
        std::vector<Vec3> pts;
        for (const auto& p : c.vertices()) pts.push_back({p.x, p.y, 0.0});
        for (int s = 0; s < sections; ++s) {
            const double h = rng.next_in(0.05, 1.0);
            if (rng.next_unit() < 0.5) {
                // Rolled inner-parallel section: the extremal corner of the
                // canal class, where slice ratios approach the Cheeger bound.
                // Thinned to a feature floor so hull predicates stay sound.
                const double t = rng.next_in(0.1, 0.9) * rin;
                const Region2 core = inner_parallel_body(c, t);
                if (core.kind() == Region2::Kind::polygon) {
                    const ConvexPolygon sec =
                        RoundedPolygon(core.polygon(), t).approximate_polygon(8);
                    const std::vector<Point2> thin = thin_cycle(sec.vertices(), feature_floor);
                    if (thin.size() >= 3) {
                        for (const auto& p : thin) pts.push_back({p.x, p.y, h});
                        continue;
                    }
                }
            }
            const int k = 3 + static_cast<int>(rng.next_u64() % 4);
            for (int i = 0; i < k; ++i) {
                const Point2 p = random_point_inside(rng, c);
                pts.push_back({p.x, p.y, h});
            }
        }
        try {
            ConvexPolytope3 body = ConvexPolytope3::hull(pts);
            if (max_stretch > 1.0) {
                const double lambda =
                    std::pow(10.0, rng.next_in(0.0, std::log10(max_stretch)));
                body = dilate_along(body, Direction({0.0, 0.0, 1.0}), lambda);
            }
            return body;
        } catch (const Error&) {
            // degenerate draw; resample
        }
    }
    throw DegenerateInput("canal witness generation kept degenerating");
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

CheckOutcome check_projection_ratio(const ConvexPolytope3& k, const Direction& u,
                                    std::uint64_t seed) {
    const double lhs = k.volume() / k.surface_area();
    const ConvexPolygon proj = project_to_plane(k, u);
    const double rhs = proj.area() / proj.perimeter();
    return make_outcome("projection-ratio", lhs, rhs,
                        {{"K", to_json(k)}, {"u", dir_json(u)}}, seed);
}

CheckOutcome check_ghp(const ConvexPolytope3& k, const Direction& u, std::uint64_t seed) {
    const double lhs = k.volume() / k.surface_area();
    const ConvexPolygon proj = project_to_plane(k, u);
    const double rhs = (4.0 / 3.0) * proj.area() / proj.perimeter();
    return make_outcome("ghp", lhs, rhs, {{"K", to_json(k)}, {"u", dir_json(u)}}, seed);
}

CheckOutcome check_fgm_2d(const ConvexPolygon& p, const ConvexPolygon& q, std::uint64_t seed) {
    const ConvexPolygon s = minkowski_sum(p, q);
    const double lhs = p.area() / p.perimeter() + q.area() / q.perimeter();
    const double rhs = s.area() / s.perimeter();
    return make_outcome("fgm-2d", lhs, rhs, {{"P", to_json(p)}, {"Q", to_json(q)}}, seed);
}

CheckOutcome check_linear_bm(const ConvexPolytope3& k, const ConvexPolytope3& l,
                             const Direction& u, double lambda, std::uint64_t seed) {
    if (lambda < 0.0 || lambda > 1.0)
        throw PreconditionViolated("linear BM needs lambda in [0,1]");
    const double ak = project_to_plane(k, u).area();
    const double al = project_to_plane(l, u).area();
    if (std::abs(ak - al) > tolerance() * std::max(ak, al) * 64.0)
        throw PreconditionViolated("linear BM needs equal projection areas");

    double rhs;
    if (lambda == 0.0) {
        rhs = k.volume();
    } else if (lambda == 1.0) {
        rhs = l.volume();
    } else {
        std::vector<Vec3> ka, lb;
        for (const auto& v : k.vertices()) ka.push_back((1.0 - lambda) * v);
        for (const auto& v : l.vertices()) lb.push_back(lambda * v);
        rhs = minkowski_sum(ka, lb).volume();
    }
    const double lhs = (1.0 - lambda) * k.volume() + lambda * l.volume();
    return make_outcome("linear-bm", lhs, rhs,
                        {{"K", to_json(k)}, {"L", to_json(l)}, {"u", dir_json(u)},
                         {"lambda", lambda}},
                        seed);
}

bool projections_homothetic(const ConvexPolygon& a, const ConvexPolygon& b, double rel_tol) {
    const ConvexPolygon an = a.translated({-a.centroid().x, -a.centroid().y})
                                 .scaled(1.0 / std::sqrt(a.area()));
    const ConvexPolygon bn = b.translated({-b.centroid().x, -b.centroid().y})
                                 .scaled(1.0 / std::sqrt(b.area()));
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * kPi * i / 64.0;
        const Point2 u{std::cos(th), std::sin(th)};
        const double ha = an.support(u);
        const double hb = bn.support(u);
        if (std::abs(ha - hb) > rel_tol * std::max({1.0, std::abs(ha), std::abs(hb)}))
            return false;
    }
    return true;
}

CheckOutcome check_thmD(const ConvexPolytope3& k, const ConvexPolytope3& l, const Direction& u,
                        std::uint64_t seed) {
    const ConvexPolygon pk = project_to_plane(k, u);
    const ConvexPolygon pl = project_to_plane(l, u);
    if (!projections_homothetic(pk, pl))
        throw PreconditionViolated("projections are not homothetic");
    const ConvexPolytope3 s = minkowski_sum(k, l);
    const double lhs = k.volume() / pk.area() + l.volume() / pl.area();
    const double rhs = s.volume() / project_to_plane(s, u).area();
    return make_outcome("thmD", lhs, rhs,
                        {{"K", to_json(k)}, {"L", to_json(l)}, {"u", dir_json(u)}}, seed);
}

CheckOutcome check_eq18_failure(double h) {
    if (h < 2.0) throw PreconditionViolated("eq18 counterexample needs h >= 2");
    // Built inline to stay independent of the constructions module.
    const std::vector<Vec3> k3_pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    const ConvexPolytope3 k3 = ConvexPolytope3::hull(k3_pts);
    std::vector<Vec3> lt_pts;
    for (int i = 0; i < 8; ++i)
        lt_pts.push_back({(i & 1) / h, ((i >> 1) & 1) * h, ((i >> 2) & 1) / h});
    const ConvexPolytope3 lt = ConvexPolytope3::hull(lt_pts);

    const Direction u({1.0, 0.0, 0.0});
    const ConvexPolytope3 s = minkowski_sum(k3, lt);
    const double lhs = k3.volume() / project_to_plane(k3, u).area() +
                       lt.volume() / project_to_plane(lt, u).area();
    const double rhs = s.volume() / project_to_plane(s, u).area();
    return make_outcome("eq18-failure", lhs, rhs, {{"h", h}}, 0);
}

CheckOutcome check_eq15_identity(const ConvexPolytope3& k, const Direction& u,
                                 std::uint64_t seed) {
    const std::vector<Vec3> seg = {{0, 0, 0}, u.vec()};
    const ConvexPolytope3 s = minkowski_sum(k, std::span<const Vec3>(seg));
    const double lhs = s.volume() / s.surface_area();
    const ConvexPolygon proj = project_to_plane(k, u);
    const double rhs = (k.volume() + proj.area()) / (k.surface_area() + proj.perimeter());
    CheckOutcome o = make_outcome("eq15-identity", lhs, rhs,
                                  {{"K", to_json(k)}, {"u", dir_json(u)}}, seed);
    o.holds = std::abs(o.slack) <= holds_tol(lhs, rhs);
    return o;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

namespace {

SweepSummary run_sweep(const std::string& check, std::uint64_t master_seed, int trials,
                       const OutcomeSink& sink,
                       const std::function<CheckOutcome(std::uint64_t)>& trial) {
    SweepSummary s;
    s.check = check;
    s.master_seed = master_seed;
    s.trials = trials;
    for (int i = 0; i < trials; ++i) {
        CheckOutcome o = trial(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
        if (!o.holds)
            ++s.violations;
        else if (o.slack < kNearViolationSlack)
            ++s.near_violations;
        if (sink) sink(o);
        if (!o.holds || o.slack < kNearViolationSlack) s.flagged.push_back(std::move(o));
    }
    return s;
}

}  // namespace

SweepSummary sweep_ghp(std::uint64_t master_seed, int trials, ScaleProfile profile, int verts,
                       const OutcomeSink& sink) {
    return run_sweep("ghp", master_seed, trials, sink, [&](std::uint64_t seed) {
        const ConvexPolytope3 k = random_polytope(seed, verts, profile);
        // The flattened profile is probed edge-on, where the bound tightens.
        Direction u = (profile == ScaleProfile::anisotropic)
                          ? Direction({1.0, 0.0, 0.0})
                          : Direction(SplitMix64(derive_seed(seed, 777)).next_on_sphere());
        return check_ghp(k, u, seed);
    });
}

SweepSummary sweep_fgm(std::uint64_t master_seed, int trials, int verts,
                       const OutcomeSink& sink) {
    return run_sweep("fgm-2d", master_seed, trials, sink, [&](std::uint64_t seed) {
        SplitMix64 rng(derive_seed(seed, 1));
        const double sa = std::pow(10.0, rng.next_in(-1.0, 1.0));
        const double sb = std::pow(10.0, rng.next_in(-1.0, 1.0));
        const ConvexPolygon p = random_polygon(derive_seed(seed, 2), verts, sa);
        const ConvexPolygon q = random_polygon(derive_seed(seed, 3), verts, sb);
        return check_fgm_2d(p, q, seed);
    });
}

SweepSummary sweep_projection_ratio(std::uint64_t master_seed, int trials,
                                    const ConvexPolygon& projection, int sections,
                                    double max_stretch, const OutcomeSink& sink) {
    return run_sweep("projection-ratio", master_seed, trials, sink, [&](std::uint64_t seed) {
        const ConvexPolytope3 k = random_canal_witness(seed, projection, sections, max_stretch);
        return check_projection_ratio(k, Direction({0.0, 0.0, 1.0}), seed);
    });
}

SweepSummary sweep_thmd(std::uint64_t master_seed, int trials, int verts,
                        const OutcomeSink& sink) {
    return run_sweep("thmD", master_seed, trials, sink, [&](std::uint64_t seed) {
        const Direction u({0.0, 0.0, 1.0});
        const ConvexPolytope3 k = random_polytope(derive_seed(seed, 1), verts,
                                                  ScaleProfile::sphere);
        // The witness generator identifies the plane with e3^perp naturally,
        // so the base must be K's natural (x, y) shadow.
        std::vector<Point2> flat;
        for (const auto& v : k.vertices()) flat.push_back({v.x, v.y});
        const ConvexPolygon c = convex_hull(flat);
        SplitMix64 rng(derive_seed(seed, 2));
        const double mu = rng.next_in(0.5, 2.0);
        const ConvexPolytope3 l =
            random_canal_witness(derive_seed(seed, 3), c, 2, 1.0).scaled(mu);
        return check_thmD(k, l, u, seed);
    });
}

SweepSummary sweep_eq15(std::uint64_t master_seed, int trials, ScaleProfile profile, int verts,
                        const OutcomeSink& sink) {
    return run_sweep("eq15-identity", master_seed, trials, sink, [&](std::uint64_t seed) {
        const ConvexPolytope3 k = random_polytope(seed, verts, profile);
        const Direction u(SplitMix64(derive_seed(seed, 99)).next_on_sphere());
        return check_eq15_identity(k, u, seed);
    });
}

}  // namespace canalgeo
