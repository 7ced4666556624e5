#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "canalgeo/common.hpp"
#include "canalgeo/geom2d.hpp"

namespace canalgeo {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) {
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

// Unit direction on the sphere.
class Direction {
public:
    explicit Direction(Vec3 u);
    const Vec3& vec() const { return u_; }

private:
    Vec3 u_;
};

// Orthonormal basis (a, b) of the plane orthogonal to u, chosen
// deterministically: a = normalize(e3 x u) when |<u,e3>| < 0.9, otherwise
// a = normalize(e1 x u); b = u x a. 2D outputs of projections and slices are
// expressed in this basis, so they reproduce bit-for-bit per platform.
struct PlaneBasis {
    Vec3 a, b;
};
PlaneBasis plane_basis(const Direction& u);

// Map 2D plane coordinates (in plane_basis(u)) at a given height along u back
// into 3D.
Vec3 embed_in_plane(const Direction& u, Point2 p, double height);

// Full-dimensional convex polytope held in dual representation: vertices plus
// facet halfspaces with ordered vertex cycles (counterclockwise seen from
// outside).
class ConvexPolytope3 {
public:
    struct Facet {
        Vec3 normal;   // unit, outward
        double offset;  // <normal, x> = offset on the facet plane
        std::vector<int> cycle;
    };

    // Hull of a point set; coplanar facet triangles are merged into polygonal
    // facets. Throws DegenerateInput if the points' affine dimension is < 3.
    static ConvexPolytope3 hull(std::span<const Vec3> points);

    const std::vector<Vec3>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::size_t edge_count() const;

    double volume() const;
    double surface_area() const;
    double facet_area(std::size_t i) const;
    Vec3 centroid_of_vertices() const;
    double coordinate_scale() const;
    double support(Vec3 dir) const;

    ConvexPolytope3 translated(Vec3 d) const;
    ConvexPolytope3 scaled(double s) const;

private:
    ConvexPolytope3() = default;
    friend ConvexPolytope3 dilate_along(const ConvexPolytope3&, const Direction&, double);
    std::vector<Vec3> verts_;
    std::vector<Facet> facets_;
};

// K intersected with {x : <x,normal> <= offset}. Empty (nullopt) also covers
// measure-zero leftovers, matching the full-dimensionality invariant.
std::optional<ConvexPolytope3> halfspace_cut(const ConvexPolytope3& k, Vec3 normal,
                                             double offset);

// 2D hull of the projected vertices, in plane_basis(u) coordinates.
ConvexPolygon project_to_plane(const ConvexPolytope3& k, const Direction& u);

// Cross-section K n (h u + u^perp) in plane_basis(u) coordinates.
Region2 slice(const ConvexPolytope3& k, const Direction& u, double h);

// Sum over facets of sin(angle(facet normal, u)) * facet area; equals the
// integral of the slice boundary lengths over heights.
double slice_perimeter_integral(const ConvexPolytope3& k, const Direction& u);

// x -> x + (lambda - 1) <x,u> u applied to vertices, facets rebuilt.
ConvexPolytope3 dilate_along(const ConvexPolytope3& k, const Direction& u, double lambda);

// Hull of pairwise vertex sums. Segments and planar bodies embedded in 3D are
// accepted as summands via the vertex-list overloads. Throws ScaleLimit when
// the vertex product exceeds the cap.
inline constexpr std::size_t kMinkowskiVertexCap = 1'000'000;
ConvexPolytope3 minkowski_sum(std::span<const Vec3> a, std::span<const Vec3> b,
                              std::size_t cap = kMinkowskiVertexCap);
ConvexPolytope3 minkowski_sum(const ConvexPolytope3& a, const ConvexPolytope3& b,
                              std::size_t cap = kMinkowskiVertexCap);
ConvexPolytope3 minkowski_sum(const ConvexPolytope3& a, std::span<const Vec3> b,
                              std::size_t cap = kMinkowskiVertexCap);

// Right prism over a polygon given in plane_basis(u) coordinates, spanning
// heights [h0, h1] along u.
ConvexPolytope3 prism_over(const ConvexPolygon& base, const Direction& u, double h0, double h1);

}  // namespace canalgeo
