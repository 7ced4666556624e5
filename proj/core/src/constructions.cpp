#include "canalgeo/constructions.hpp"

#include <cmath>

namespace canalgeo {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

const char* to_string(BodyKind k) {
    switch (k) {
        case BodyKind::ah: return "AH";
        case BodyKind::cylinder_cube: return "CYLINDER_CUBE";
        case BodyKind::pyramid_c: return "PYRAMID_C";
        case BodyKind::pyramid_d: return "PYRAMID_D";
        case BodyKind::kn: return "KN";
        case BodyKind::lh: return "LH";
        default: return "LH_TILDE";
    }
}

double ClosedFormBody::measure(const std::string& key) const {
    const auto it = measures.find(key);
    if (it == measures.end())
        throw PreconditionViolated(std::string(to_string(kind)) + " has no measure '" + key + "'");
    return it->second;
}

ClosedFormBody build_ah(int n, double h) {
    if (n < 3) throw PreconditionViolated("A^h needs n >= 3");
    if (!(h > 0)) throw PreconditionViolated("A^h needs h > 0");
    const double p3 = ipow(3.0, n - 1);
    const double volume = h - h / (p3 * factorial(n));
    const double facet_fn = 1.0 / (p3 * factorial(n - 1));
    const double facet_fi = h / (ipow(3.0, n - 2) * factorial(n - 1));
    const double facet_f0 = std::sqrt(static_cast<double>(n - 1)) /
                            ((n - 1) * ipow(3.0, n - 2) * factorial(n - 2)) *
                            std::sqrt(h * h + 1.0 / (9.0 * (n - 1)));
    const double surface =
        (2.0 * (n - 1) * h + 2.0) - (n - 1) * facet_fi - facet_fn + facet_f0;

    ClosedFormBody b{BodyKind::ah, n, h, {}};
    b.measures["volume"] = volume;
    b.measures["surface_area"] = surface;
    b.measures["ratio"] = volume / surface;
    b.measures["facet_f0"] = facet_f0;
    b.measures["facet_fi"] = facet_fi;
    b.measures["facet_fn"] = facet_fn;
    b.measures["projection_area"] = 1.0;  // P_{e_n^perp}(A^h) is the unit cube
    b.measures["cylinder_limit"] = 1.0 / (2.0 * (n - 1));
    return b;
}

ClosedFormBody build_cylinder_cube(int n, double h) {
    if (n < 2) throw PreconditionViolated("cylinder needs n >= 2");
    if (!(h > 0)) throw PreconditionViolated("cylinder needs h > 0");
    ClosedFormBody b{BodyKind::cylinder_cube, n, h, {}};
    b.measures["volume"] = h;
    b.measures["surface_area"] = 2.0 * (n - 1) * h + 2.0;
    b.measures["ratio"] = h / (2.0 * (n - 1) * h + 2.0);
    b.measures["cylinder_limit"] = 1.0 / (2.0 * (n - 1));
    return b;
}

std::pair<ClosedFormBody, ClosedFormBody> build_pyramid(int n, double h) {
    if (n < 2) throw PreconditionViolated("pyramid needs n >= 2");
    if (!(h >= 1)) throw PreconditionViolated("pyramid needs h >= 1");

    ClosedFormBody c{BodyKind::pyramid_c, n, h, {}};
    const double h2n = ipow(h, 2 * (n - 1));
    const double bottom = h2n / factorial(n - 1);
    // Top facet conv{h^2 e_i, e_n} via its Gram determinant:
    // det(h^4 I + J) = h^{4(n-2)} (h^4 + n - 1).
    const double top = ipow(h, 2 * (n - 2)) * std::sqrt(ipow(h, 4) + (n - 1)) / factorial(n - 1);
    const double sides = (n - 1) * ipow(h, 2 * (n - 2)) / factorial(n - 1);
    c.measures["volume"] = h2n / factorial(n);
    c.measures["surface_area"] = bottom + sides + top;
    c.measures["ratio"] = c.measures["volume"] / c.measures["surface_area"];
    c.measures["bottom_facet"] = bottom;
    c.measures["ratio_bound"] = 1.0 / (2.0 * n);

    ClosedFormBody d{BodyKind::pyramid_d, n, h, {}};
    const double hn1 = ipow(h, n - 1);
    // Bracketing: [0,h]^{n-1} x [0, 1-(n-1)/h] inside D inside [0,h]^{n-1} x [0,1].
    const double vol_lower = hn1 * std::max(0.0, 1.0 - (n - 1) / h);
    const double surf_upper = 2.0 * hn1 + 2.0 * (n - 1) * ipow(h, n - 2);
    d.measures["volume_lower"] = vol_lower;
    d.measures["volume_upper"] = hn1;
    d.measures["surface_upper"] = surf_upper;
    d.measures["ratio_lower"] = vol_lower / surf_upper;
    if (n == 2) {
        if (h == 1.0) {
            d.measures["volume"] = 0.5;
            d.measures["surface_area"] = 2.0 + std::sqrt(2.0);
        } else {
            // Trapezoid (0,0),(h,0),(h,1-1/h),(0,1).
            d.measures["volume"] = h - 0.5;
            d.measures["surface_area"] =
                h + 1.0 + (1.0 - 1.0 / h) + std::sqrt(h * h + 1.0 / (h * h));
        }
        d.measures["ratio"] = d.measures["volume"] / d.measures["surface_area"];
    }
    return {std::move(c), std::move(d)};
}

ClosedFormBody build_kn(int n) {
    if (n < 3) throw PreconditionViolated("K_n needs n >= 3");
    ClosedFormBody b{BodyKind::kn, n, 0.0, {}};
    b.measures["volume"] = 1.0 / 3.0;
    b.measures["projection_area_e1"] = 0.5;
    b.measures["projection_area_e2"] = 0.5;
    b.measures["double_projection"] = 1.0;
    return b;
}

ClosedFormBody build_lh(int n, double h, bool tilde) {
    if (n < 3) throw PreconditionViolated("L_h needs n >= 3");
    if (!(h > 0)) throw PreconditionViolated("L_h needs h > 0");
    ClosedFormBody b{tilde ? BodyKind::lh_tilde : BodyKind::lh, n, h, {}};
    b.measures["projection_area_e1"] = 1.0;
    b.measures["side_e2"] = ipow(h, n - 2);
    b.measures["side_small"] = 1.0 / h;
    if (tilde) {
        b.measures["volume"] = 1.0 / h;
        b.measures["surface_area"] = 2.0 * (n - 1) + 2.0 / ipow(h, n - 1);
    } else {
        b.measures["section_volume"] = 1.0;  // H^{n-1}(L_h)
    }
    return b;
}

double ah_crossover(int n) {
    const double limit = 1.0 / (2.0 * (n - 1));
    auto above = [&](double h) { return build_ah(n, h).measure("ratio") > limit; };
    double hi = 1.0;
    while (!above(hi)) {
        hi *= 2.0;
        if (hi > 1e12) throw Error("A^h crossover not found below h = 1e12");
    }
    double lo = hi / 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

ConvexPolytope3 realize_cube() {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                       static_cast<double>((i >> 2) & 1)});
    return ConvexPolytope3::hull(pts);
}

ConvexPolytope3 realize_cylinder_cube3(double h) {
    if (!(h > 0)) throw PreconditionViolated("prism needs h > 0");
    std::vector<Vec3> pts;
    for (int i = 0; i < 4; ++i) {
        const double x = static_cast<double>(i & 1);
        const double y = static_cast<double>((i >> 1) & 1);
        pts.push_back({x, y, 0.0});
        pts.push_back({x, y, h});
    }
    return ConvexPolytope3::hull(pts);
}

ConvexPolytope3 realize_ah3(double h) {
    if (!(h > 0)) throw PreconditionViolated("A^h needs h > 0");
    // The removed simplex S is exactly the prism's portion below the plane
    // through e1/3, e2/3 and h*e3, so the complement is one convex cut.
    const auto cut =
        halfspace_cut(realize_cylinder_cube3(h), {-3.0, -3.0, -1.0 / h}, -1.0);
    if (!cut) throw Error("A^h cut unexpectedly empty");
    return *cut;
}

ConvexPolytope3 realize_k3() {
    const std::vector<Vec3> pts = {
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    return ConvexPolytope3::hull(pts);
}

ConvexPolytope3 realize_lh_tilde3(double h) {
    if (!(h > 0)) throw PreconditionViolated("L_h needs h > 0");
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({(i & 1) / h, ((i >> 1) & 1) * h, ((i >> 2) & 1) / h});
    return ConvexPolytope3::hull(pts);
}

std::pair<ConvexPolygon, ConvexPolygon> realize_pyramid2(double h) {
    if (!(h >= 1)) throw PreconditionViolated("pyramid needs h >= 1");
    ConvexPolygon c({{0, 0}, {h * h, 0}, {0, 1}});
    if (h == 1.0) return {c, ConvexPolygon({{0, 0}, {1, 0}, {0, 1}})};
    ConvexPolygon d({{0, 0}, {h, 0}, {h, 1.0 - 1.0 / h}, {0, 1}});
    return {c, d};
}

}  // namespace canalgeo
