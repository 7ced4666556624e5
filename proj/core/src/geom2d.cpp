#include "canalgeo/geom2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace canalgeo {

namespace {

constexpr double kPi = std::numbers::pi;

double coordinate_scale(std::span<const Point2> pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

// Left-turn test with an angular tolerance: treats a turn as strict only if
// the cross product clears tau relative to the incident edge lengths.
bool strict_left_turn(Point2 a, Point2 b, Point2 c) {
    const Point2 u = b - a;
    const Point2 v = c - b;
    return cross(u, v) > tolerance() * norm(u) * norm(v);
}

// Drop chain vertices that fail the strict-turn test circularly (the chain
// seams are not covered by the monotone-chain passes).
void prune_collinear_circular(std::vector<Point2>& pts) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        std::vector<Point2> kept;
        kept.reserve(pts.size());
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 prev = pts[(i + n - 1) % n];
            const Point2 next = pts[(i + 1) % n];
            if (strict_left_turn(prev, pts[i], next))
                kept.push_back(pts[i]);
            else
                changed = true;
        }
        pts.swap(kept);
    }
}

}  // namespace

Segment1D::Segment1D(double len) : length(len) {
    if (!(len > 0)) throw DegenerateInput("Segment1D requires positive length");
}

// ---------------------------------------------------------------------------
// ConvexPolygon
// ---------------------------------------------------------------------------

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    const std::size_t n = verts_.size();
    if (n < 3) throw DegenerateInput("polygon needs at least 3 vertices");
    double a2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = verts_[i];
        const Point2 q = verts_[(i + 1) % n];
        const Point2 r = verts_[(i + 2) % n];
        if (!strict_left_turn(p, q, r))
            throw DegenerateInput("polygon vertices must be in strictly convex CCW position");
        a2 += cross(p, q);
        perim_ += distance(p, q);
    }
    if (a2 <= 0) throw DegenerateInput("polygon must be counterclockwise");
    area_ = 0.5 * a2;
}

Point2 ConvexPolygon::centroid() const {
    double cx = 0.0, cy = 0.0, a2 = 0.0;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = verts_[i];
        const Point2 q = verts_[(i + 1) % n];
        const double w = cross(p, q);
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

double ConvexPolygon::diameter() const {
    double d2 = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j) {
            const Point2 d = verts_[i] - verts_[j];
            d2 = std::max(d2, dot(d, d));
        }
    return std::sqrt(d2);
}

double ConvexPolygon::support(Point2 dir) const {
    double best = dot(verts_[0], dir);
    for (std::size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(verts_[i], dir));
    return best;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = verts_[i];
        const Point2 b = verts_[(i + 1) % n];
        if (cross(b - a, p - a) < -tol * norm(b - a)) return false;
    }
    return true;
}

ConvexPolygon ConvexPolygon::translated(Point2 d) const {
    std::vector<Point2> v = verts_;
    for (auto& p : v) p = p + d;
    return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
    if (!(s > 0)) throw PreconditionViolated("scale factor must be positive");
    std::vector<Point2> v = verts_;
    for (auto& p : v) p = s * p;
    return ConvexPolygon(std::move(v));
}

std::vector<ConvexPolygon::Edge> ConvexPolygon::edges() const {
    std::vector<Edge> out;
    out.reserve(verts_.size());
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = verts_[i];
        const Point2 b = verts_[(i + 1) % n];
        const Point2 e = b - a;
        const double len = norm(e);
        const Point2 nrm{e.y / len, -e.x / len};  // outward for CCW order
        out.push_back({a, b, nrm, dot(nrm, a)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hull
// ---------------------------------------------------------------------------

ConvexPolygon convex_hull(std::span<const Point2> points) {
    if (points.size() < 3) throw DegenerateInput("hull needs at least 3 points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    const double merge = tolerance() * coordinate_scale(pts);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [merge](Point2 a, Point2 b) {
                              return std::abs(a.x - b.x) <= merge && std::abs(a.y - b.y) <= merge;
                          }),
              pts.end());
    if (pts.size() < 3) throw DegenerateInput("hull input has affine dimension < 2");

    // Andrew's monotone chain; strict turns only, so collinear points drop out.
    auto build = [&](auto begin, auto end) {
        std::vector<Point2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   !strict_left_turn(chain[chain.size() - 2], chain.back(), *it))
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    prune_collinear_circular(lower);
    if (lower.size() < 3) throw DegenerateInput("hull input has affine dimension < 2");
    return ConvexPolygon(std::move(lower));
}

// ---------------------------------------------------------------------------
// Minkowski sum (edge merge by slope)
// ---------------------------------------------------------------------------

namespace {

// Rotate the vertex list so it starts at the bottom-most (then left-most) vertex.
std::vector<Point2> rotate_to_bottom(const std::vector<Point2>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
    std::vector<Point2> out(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    const std::vector<Point2> a = rotate_to_bottom(p.vertices());
    const std::vector<Point2> b = rotate_to_bottom(q.vertices());
    const std::size_t n = a.size(), m = b.size();
    std::vector<Point2> sum;
    sum.reserve(n + m);
    std::size_t i = 0, j = 0;
    Point2 cur = a[0] + b[0];
    while (i < n || j < m) {
        sum.push_back(cur);
        const Point2 ea = a[(i + 1) % n] - a[i % n];
        const Point2 eb = b[(j + 1) % m] - b[j % m];
        double c;
        if (i >= n)
            c = -1.0;
        else if (j >= m)
            c = 1.0;
        else
            c = cross(ea, eb);
        if (c > 0) {
            cur = cur + ea;
            ++i;
        } else if (c < 0) {
            cur = cur + eb;
            ++j;
        } else {
            cur = cur + ea + eb;
            ++i;
            ++j;
        }
    }
    // Canonicalize: parallel-edge merges can leave collinear chain points.
    return convex_hull(sum);
}

// ---------------------------------------------------------------------------
// Inner parallel bodies
// ---------------------------------------------------------------------------

namespace {

// Clip a convex vertex chain by {x : <x,n> <= c} (Sutherland-Hodgman step).
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, Point2 n, double c) {
    std::vector<Point2> out;
    const std::size_t k = poly.size();
    out.reserve(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        const Point2 cur = poly[i];
        const Point2 nxt = poly[(i + 1) % k];
        const double dc = dot(n, cur) - c;
        const double dn = dot(n, nxt) - c;
        if (dc <= 0) {
            out.push_back(cur);
            if (dn > 0) out.push_back(cur + (dc / (dc - dn)) * (nxt - cur));
        } else if (dn <= 0) {
            out.push_back(cur + (dc / (dc - dn)) * (nxt - cur));
        }
    }
    return out;
}

}  // namespace

Region2 inner_parallel_body(const ConvexPolygon& p, double t) {
    if (t < 0) throw PreconditionViolated("inner parallel distance must be >= 0");
    if (t == 0) return Region2::make_polygon(p);
    std::vector<Point2> poly = p.vertices();
    for (const auto& e : p.edges()) {
        poly = clip_halfplane(poly, e.unit_normal, e.offset - t);
        if (poly.empty()) return Region2::make_empty();
    }
    return Region2::classify(std::move(poly));
}

double inradius(const ConvexPolygon& p) {
    double lo = 0.0;
    double hi = 0.5 * p.diameter() + 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (inner_parallel_body(p, mid).is_empty())
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// RoundedPolygon
// ---------------------------------------------------------------------------

RoundedPolygon::RoundedPolygon(ConvexPolygon core, double radius)
    : core_(std::move(core)), radius_(radius) {
    if (radius < 0) throw PreconditionViolated("rounding radius must be >= 0");
}

RoundedPolygon::RoundedPolygon(Point2 center, double radius) : point_(center), radius_(radius) {
    if (radius < 0) throw PreconditionViolated("rounding radius must be >= 0");
}

const ConvexPolygon& RoundedPolygon::core() const {
    if (!core_) throw PreconditionViolated("rounded body has a point core");
    return *core_;
}

Point2 RoundedPolygon::core_point() const {
    if (core_) throw PreconditionViolated("rounded body has a polygon core");
    return point_;
}

double RoundedPolygon::area() const {
    if (!core_) return kPi * radius_ * radius_;
    return core_->area() + radius_ * core_->perimeter() + kPi * radius_ * radius_;
}

double RoundedPolygon::perimeter() const {
    return (core_ ? core_->perimeter() : 0.0) + 2.0 * kPi * radius_;
}

double RoundedPolygon::support(Point2 dir) const {
    const double base = core_ ? core_->support(dir) : dot(point_, dir);
    return base + radius_ * norm(dir);
}

double RoundedPolygon::diameter() const {
    return (core_ ? core_->diameter() : 0.0) + 2.0 * radius_;
}

RoundedPolygon RoundedPolygon::translated(Point2 d) const {
    if (core_) return RoundedPolygon(core_->translated(d), radius_);
    return RoundedPolygon(point_ + d, radius_);
}

RoundedPolygon RoundedPolygon::scaled(double s) const {
    if (!(s > 0)) throw PreconditionViolated("scale factor must be positive");
    if (core_) return RoundedPolygon(core_->scaled(s), s * radius_);
    return RoundedPolygon(s * point_, s * radius_);
}

ConvexPolygon RoundedPolygon::approximate_polygon(int arc_segments) const {
    if (!core_) {
        if (arc_segments < 3)
            throw PreconditionViolated("disc approximation needs at least 3 vertices");
        std::vector<Point2> pts;
        pts.reserve(static_cast<std::size_t>(arc_segments));
        for (int k = 0; k < arc_segments; ++k) {
            const double th = 2.0 * kPi * k / arc_segments;
            pts.push_back(point_ + radius_ * Point2{std::cos(th), std::sin(th)});
        }
        return convex_hull(pts);
    }
    if (arc_segments < 1)
        throw PreconditionViolated("corner arcs need at least 1 segment");
    if (radius_ == 0.0) return *core_;
    const auto es = core_->edges();
    const std::size_t n = es.size();
    std::vector<Point2> pts;
    pts.reserve(n * static_cast<std::size_t>(arc_segments + 1));
    for (std::size_t i = 0; i < n; ++i) {
        // Corner at the shared vertex of edges i-1 and i; arc sweeps between
        // the incident outward normals.
        const Point2 v = es[i].a;
        const Point2 nin = es[(i + n - 1) % n].unit_normal;
        const Point2 nout = es[i].unit_normal;
        const double a0 = std::atan2(nin.y, nin.x);
        double span = std::atan2(cross(nin, nout), dot(nin, nout));
        if (span < 0) span += 2.0 * kPi;
        for (int k = 0; k <= arc_segments; ++k) {
            const double th = a0 + span * k / arc_segments;
            pts.push_back(v + radius_ * Point2{std::cos(th), std::sin(th)});
        }
    }
    return convex_hull(pts);
}

double RoundedPolygon::approximation_bound(double radius, int arc_segments) {
    return radius * (1.0 - std::cos(kPi / arc_segments));
}

// ---------------------------------------------------------------------------
// Body2 helpers
// ---------------------------------------------------------------------------

double area(const Body2& b) {
    return std::visit([](const auto& x) { return x.area(); }, b);
}
double perimeter(const Body2& b) {
    return std::visit([](const auto& x) { return x.perimeter(); }, b);
}
double support(const Body2& b, Point2 dir) {
    return std::visit([dir](const auto& x) { return x.support(dir); }, b);
}
double diameter(const Body2& b) {
    return std::visit([](const auto& x) { return x.diameter(); }, b);
}
Body2 translated(const Body2& b, Point2 d) {
    return std::visit([d](const auto& x) -> Body2 { return x.translated(d); }, b);
}
Body2 scaled(const Body2& b, double s) {
    return std::visit([s](const auto& x) -> Body2 { return x.scaled(s); }, b);
}

// ---------------------------------------------------------------------------
// Region2
// ---------------------------------------------------------------------------

Region2 Region2::make_empty() { return Region2{}; }

Region2 Region2::make_point(Point2 p) {
    Region2 r;
    r.kind_ = Kind::point;
    r.pts_ = {p};
    return r;
}

Region2 Region2::make_segment(Point2 a, Point2 b) {
    Region2 r;
    r.kind_ = Kind::segment;
    r.pts_ = {a, b};
    return r;
}

Region2 Region2::make_polygon(ConvexPolygon p) {
    Region2 r;
    r.kind_ = Kind::polygon;
    r.pts_ = p.vertices();
    r.poly_ = std::move(p);
    return r;
}

Region2 Region2::classify(std::vector<Point2> pts) {
    if (pts.empty()) return make_empty();
    const double merge = tolerance() * coordinate_scale(pts) * 8.0;

    std::vector<Point2> uniq;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : uniq)
            if (distance(p, q) <= merge) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(p);
    }
    if (uniq.size() == 1) return make_point(uniq[0]);

    // Farthest pair spans the region; collinearity against that chord.
    std::size_t ia = 0, ib = 1;
    double best = 0.0;
    for (std::size_t i = 0; i < uniq.size(); ++i)
        for (std::size_t j = i + 1; j < uniq.size(); ++j) {
            const double d = distance(uniq[i], uniq[j]);
            if (d > best) {
                best = d;
                ia = i;
                ib = j;
            }
        }
    if (best <= merge) return make_point(uniq[ia]);
    const Point2 a = uniq[ia], b = uniq[ib];
    double dev = 0.0;
    for (const auto& p : uniq) dev = std::max(dev, std::abs(cross(b - a, p - a)) / best);
    if (dev <= merge) return make_segment(a, b);
    try {
        return make_polygon(convex_hull(uniq));
    } catch (const DegenerateInput&) {
        return make_segment(a, b);
    }
}

double Region2::area() const { return poly_ ? poly_->area() : 0.0; }

double Region2::perimeter() const {
    switch (kind_) {
        case Kind::polygon: return poly_->perimeter();
        case Kind::segment: return 2.0 * distance(pts_[0], pts_[1]);
        default: return 0.0;
    }
}

const ConvexPolygon& Region2::polygon() const {
    if (!poly_) throw PreconditionViolated("region is not full-dimensional");
    return *poly_;
}

// ---------------------------------------------------------------------------
// Hausdorff distance (exact, via support functions)
// ---------------------------------------------------------------------------

namespace {

struct SupportProfile {
    std::vector<double> breakpoints;  // edge-normal angles, any order
    const ConvexPolygon* poly = nullptr;
    Point2 point{0, 0};
    double radius = 0.0;

    Point2 support_vertex(double theta) const {
        if (!poly) return point;
        const Point2 u{std::cos(theta), std::sin(theta)};
        const auto& vs = poly->vertices();
        std::size_t best = 0;
        double bv = dot(vs[0], u);
        for (std::size_t i = 1; i < vs.size(); ++i) {
            const double v = dot(vs[i], u);
            if (v > bv) {
                bv = v;
                best = i;
            }
        }
        return vs[best];
    }
};

SupportProfile make_profile(const Body2& b) {
    SupportProfile sp;
    if (const auto* p = std::get_if<ConvexPolygon>(&b)) {
        sp.poly = p;
    } else {
        const auto& r = std::get<RoundedPolygon>(b);
        sp.radius = r.radius();
        if (r.has_polygon_core())
            sp.poly = &r.core();
        else
            sp.point = r.core_point();
    }
    if (sp.poly)
        for (const auto& e : sp.poly->edges())
            sp.breakpoints.push_back(std::atan2(e.unit_normal.y, e.unit_normal.x));
    return sp;
}

}  // namespace

double hausdorff_distance(const Body2& a, const Body2& b) {
    const SupportProfile pa = make_profile(a);
    const SupportProfile pb = make_profile(b);

    std::vector<double> brk = pa.breakpoints;
    brk.insert(brk.end(), pb.breakpoints.begin(), pb.breakpoints.end());
    if (brk.empty()) brk.push_back(0.0);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());

    const double rc = pa.radius - pb.radius;
    double worst = 0.0;
    const std::size_t m = brk.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double alpha = brk[i];
        const double beta = (i + 1 < m) ? brk[i + 1] : brk[0] + 2.0 * kPi;
        const double mid = 0.5 * (alpha + beta);
        // On this arc both argmax vertices are fixed, so the support gap is
        // rho*cos(theta - phi) + rc; its |max| sits at an endpoint or at a
        // critical angle inside the arc.
        const Point2 d = pa.support_vertex(mid) - pb.support_vertex(mid);
        const double rho = norm(d);
        const double phi = std::atan2(d.y, d.x);
        auto gap = [&](double th) {
            return std::abs(rho * std::cos(th - phi) + rc);
        };
        worst = std::max({worst, gap(alpha), gap(beta)});
        for (const double crit : {phi, phi + kPi, phi - kPi, phi + 2.0 * kPi}) {
            if (crit > alpha && crit < beta) worst = std::max(worst, gap(crit));
        }
    }
    return worst;
}

}  // namespace canalgeo
