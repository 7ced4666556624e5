#pragma once

#include <map>
#include <string>
#include <utility>

#include "canalgeo/geom2d.hpp"
#include "canalgeo/geom3d.hpp"

namespace canalgeo {

enum class BodyKind { ah, cylinder_cube, pyramid_c, pyramid_d, kn, lh, lh_tilde };

const char* to_string(BodyKind k);

// Symbolic descriptor of a parametric body family, with its measures
// evaluated in closed form. Bodies with n = 3 also have geometric
// realizations (see realize_* below); higher dimensions live only here.
struct ClosedFormBody {
    BodyKind kind;
    int n;
    double h;  // family parameter; 0 when unused
    std::map<std::string, double> measures;

    bool has(const std::string& key) const { return measures.count(key) != 0; }
    double measure(const std::string& key) const;
    double volume() const { return measure("volume"); }
    double surface_area() const { return measure("surface_area"); }
    double ratio() const { return volume() / surface_area(); }
};

// Prism over the unit (n-1)-cube, cut by the corner simplex with base legs
// 1/3 and apex h*e_n. volume = h - h/(3^(n-1) n!).
ClosedFormBody build_ah(int n, double h);

// Right cylinder (prism) of height h over the unit (n-1)-cube.
ClosedFormBody build_cylinder_cube(int n, double h);

// The flat pyramid C(h) = conv{0, h^2 e_1, ..., h^2 e_{n-1}, e_n} and its
// box truncation D = C n ([0,h]^{n-1} x R). For n = 2 both carry exact
// measures; for n >= 3, D carries bracketing bounds only.
std::pair<ClosedFormBody, ClosedFormBody> build_pyramid(int n, double h);

// K_n: prism over conv{0, e1, e2, e1+e2, e3}; identical key measures for
// every n >= 3.
ClosedFormBody build_kn(int n);

// L_h = [0, h^{n-2} e2] + sum_i [0, e_i/h] (i = 3..n); the tilde variant adds
// [0, e1/h] to make it full-dimensional.
ClosedFormBody build_lh(int n, double h, bool tilde);

// Smallest h where the A^h ratio exceeds the cylinder limit 1/(2(n-1)).
double ah_crossover(int n);

// n = 3 geometric realizations.
ConvexPolytope3 realize_cube();
ConvexPolytope3 realize_ah3(double h);
ConvexPolytope3 realize_cylinder_cube3(double h);
ConvexPolytope3 realize_k3();
ConvexPolytope3 realize_lh_tilde3(double h);
// n = 2 pyramid polygons (C(h), D).
std::pair<ConvexPolygon, ConvexPolygon> realize_pyramid2(double h);

}  // namespace canalgeo
