#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canalgeo/cheeger.hpp"
#include "canalgeo/geom3d.hpp"

namespace canalgeo {

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

// area/perimeter of C: the limiting volume-to-surface ratio of tall right
// cylinders over C.
double cylinder_limit_ratio(const ConvexPolygon& c);

// volume(K) / slice_perimeter_integral(K, u): the limit of the dilation
// family's volume-to-surface ratios; strictly greater than vol/surf of K.
double slice_ratio(const ConvexPolytope3& k, const Direction& u);

// vol/surf of the dilated bodies D_lambda K; strictly increasing, with limit
// slice_ratio(K, u). lambdas must be ascending and >= 1.
std::vector<std::pair<double, double>> dilation_family_ratios(const ConvexPolytope3& k,
                                                              const Direction& u,
                                                              std::span<const double> lambdas);

// Join-body witness for the n = 3 characterization: K = conv(C x {0} u
// (B_m + e3)) with B_m the inscribed m-gon approximation of the Cheeger set.
struct JoinWitness {
    ConvexPolytope3 body;
    double ratio;  // slice_ratio along e3
    int arc_segments;
    double approx_bound;  // Hausdorff bound of B_m vs the exact Cheeger set
};

struct VerdictResult {
    Verdict verdict;  // yes iff C is its own Cheeger set within tol
    double calibrability_gap;  // Hausdorff distance between C and Cs(C)
    std::optional<JoinWitness> witness;  // present when verdict is no
};

// Tolerance-parameterized verdict: polygonal C is never exactly calibrable,
// so callers get the measured gap alongside the yes/no call. Default
// tol < 0 means 1e-3 * diameter(C).
VerdictResult verdict_q1_3d(const ConvexPolygon& c, double tol = -1.0, int arc_segments = 256);

struct CanalWitness {
    std::string descriptor;
    double ratio;
};

// Certified bounds on the canal-class supremum for C (canal direction e3).
struct CanalReport {
    ConvexPolygon projection;
    double cylinder_limit;   // area/perimeter of C
    double cheeger_upper;    // Cheeger-set ratio of C: upper bound
    double lower_bound;      // best witness slice ratio
    std::vector<CanalWitness> witnesses;
    Verdict verdict_q1;
    double calibrability_gap;
    double verdict_tolerance;
    double approx_bound;     // join-witness approximation bound (0 if unused)
};

struct CanalOptions {
    double tol = -1.0;      // verdict tolerance; < 0 means 1e-3 * diameter
    int arc_segments = 256;  // join-witness rounding resolution
    std::vector<std::pair<std::string, ConvexPolytope3>> extra_witnesses;
};

// Bounds plus verdict. Extra witnesses must project onto C along e3 (within
// tolerance), else ProjectionMismatch.
CanalReport canal_bounds(const ConvexPolygon& c, const CanalOptions& options = {});

}  // namespace canalgeo
