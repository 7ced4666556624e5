#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "canalgeo/common.hpp"

namespace canalgeo {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// 1-dimensional convex body (the n = 2 projection case).
struct Segment1D {
    explicit Segment1D(double len);
    double length;
};

// Convex polygon with counterclockwise vertices in strictly convex position
// (no three collinear within tolerance).
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    double area() const { return area_; }
    double perimeter() const { return perim_; }
    Point2 centroid() const;
    double diameter() const;

    // h_P(u) = max_{v in P} <v,u>; u need not be unit.
    double support(Point2 dir) const;
    bool contains(Point2 p, double tol) const;

    ConvexPolygon translated(Point2 d) const;
    ConvexPolygon scaled(double s) const;  // about the origin, s > 0

    struct Edge {
        Point2 a, b;
        Point2 unit_normal;  // outward
        double offset;       // <normal, a>
    };
    std::vector<Edge> edges() const;

private:
    std::vector<Point2> verts_;
    double area_ = 0.0;
    double perim_ = 0.0;
};

// core (+) radius * disc. Planar Cheeger sets are exactly of this form, so
// the type is exact rather than an m-gon approximation. A point core makes
// it a disc.
class RoundedPolygon {
public:
    RoundedPolygon(ConvexPolygon core, double radius);
    RoundedPolygon(Point2 center, double radius);  // disc

    bool has_polygon_core() const { return core_.has_value(); }
    const ConvexPolygon& core() const;
    Point2 core_point() const;
    double radius() const { return radius_; }

    // Steiner formulas.
    double area() const;
    double perimeter() const;
    double support(Point2 dir) const;
    double diameter() const;
    RoundedPolygon translated(Point2 d) const;
    RoundedPolygon scaled(double s) const;

    // Inscribed polygonal approximation. For a polygon core, arc_segments is
    // the number of segments per corner arc; for a point core it is the total
    // vertex count of the approximating regular polygon.
    ConvexPolygon approximate_polygon(int arc_segments) const;

    // Hausdorff distance bound between the body and approximate_polygon(m).
    static double approximation_bound(double radius, int arc_segments);

private:
    std::optional<ConvexPolygon> core_;
    Point2 point_{0.0, 0.0};
    double radius_ = 0.0;
};

using Body2 = std::variant<ConvexPolygon, RoundedPolygon>;

double area(const Body2& b);
double perimeter(const Body2& b);
double support(const Body2& b, Point2 dir);
double diameter(const Body2& b);
Body2 translated(const Body2& b, Point2 d);
Body2 scaled(const Body2& b, double s);

// Possibly-degenerate planar convex region. Legal output of operations that
// can shrink a body to lower dimension (inner parallel bodies, 3D slices).
class Region2 {
public:
    enum class Kind { empty, point, segment, polygon };

    static Region2 make_empty();
    static Region2 make_point(Point2 p);
    static Region2 make_segment(Point2 a, Point2 b);
    static Region2 make_polygon(ConvexPolygon p);

    // Hull + dimension classification of a point cloud.
    static Region2 classify(std::vector<Point2> pts);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::empty; }

    double area() const;
    // Boundary length. Polygon: edge sum; segment: 2 * length (two-sided
    // degenerate boundary); point/empty: 0. Degenerate kinds only occur at
    // isolated parameter values in every use here.
    double perimeter() const;

    const ConvexPolygon& polygon() const;
    const std::vector<Point2>& points() const { return pts_; }

private:
    Kind kind_ = Kind::empty;
    std::vector<Point2> pts_;
    std::optional<ConvexPolygon> poly_;
};

// Convex hull with duplicate/collinear points removed; counterclockwise.
// Throws DegenerateInput if the hull has affine dimension < 2.
ConvexPolygon convex_hull(std::span<const Point2> points);

// Edge-merge Minkowski sum of convex polygons.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

// Intersection of the inward-offset edge halfplanes {x : <x,n_i> <= b_i - t}.
// Empty when t exceeds the inradius.
Region2 inner_parallel_body(const ConvexPolygon& p, double t);

// Largest t with nonempty inner parallel body (bisection to 1e-12).
double inradius(const ConvexPolygon& p);

// Exact Hausdorff distance via the support-function sup over directions.
double hausdorff_distance(const Body2& a, const Body2& b);

}  // namespace canalgeo
