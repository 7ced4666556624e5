#pragma once

#include "canalgeo/geom2d.hpp"

namespace canalgeo {

// Cheeger data of a planar convex body, paper convention: t_star equals
// area/perimeter of the Cheeger set. The Cheeger set is core (+) t_star*disc,
// where core is the inner parallel body at t_star; for rounded inputs that
// core is itself a rounded body.
struct CheegerResult {
    double t_star;
    RoundedPolygon cheeger_set;
    Body2 core;
    double residual;  // |area(core) - pi t_star^2|
};

// Unique planar Cheeger set via the inner-parallel characterization:
// t_star in (0, inradius] solves area(inner_parallel_body(C, t)) = pi t^2,
// found by bisection (|g| <= 1e-12, max 200 iterations). For a rounded input
// of radius r, the inner parallel body at t <= r is core (+) (r-t)*disc.
CheegerResult cheeger_2d(const Body2& c);

// True iff the Hausdorff distance between C and its Cheeger set is <= tol.
bool is_cheeger_set(const Body2& c, double tol);
// Default tolerance 1e-6 * diameter(C); polygons with corners are never
// exactly calibrable, so the tolerance is part of the contract.
bool is_cheeger_set(const Body2& c);

// H^1/H^0 ratio of a segment (boundary has measure 2); a segment is its own
// Cheeger set.
double cheeger_1d(const Segment1D& s);

}  // namespace canalgeo
