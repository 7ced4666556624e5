#include "canalgeo/geom3d.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace canalgeo {

namespace {

double scale_of(std::span<const Vec3> pts) {
    double s = 1.0;
    for (const auto& p : pts)
        s = std::max({s, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    return s;
}

std::uint64_t edge_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

struct Tri {
    int a, b, c;
    Vec3 n;      // unit outward
    double off;
    bool alive = true;
};

}  // namespace

// ---------------------------------------------------------------------------
// Direction / plane basis
// ---------------------------------------------------------------------------

Direction::Direction(Vec3 u) {
    const double n = norm(u);
    if (n < 1e-12) throw PreconditionViolated("direction must be nonzero");
    u_ = {u.x / n, u.y / n, u.z / n};
}

PlaneBasis plane_basis(const Direction& u) {
    const Vec3 v = u.vec();
    const Vec3 seed = (std::abs(v.z) < 0.9) ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 a = normalized(cross(seed, v));
    const Vec3 b = cross(v, a);
    return {a, b};
}

Vec3 embed_in_plane(const Direction& u, Point2 p, double height) {
    const auto [a, b] = plane_basis(u);
    return p.x * a + p.y * b + height * u.vec();
}

// ---------------------------------------------------------------------------
// Hull construction
// ---------------------------------------------------------------------------

ConvexPolytope3 ConvexPolytope3::hull(std::span<const Vec3> points) {
    if (points.size() < 4) throw DegenerateInput("hull needs at least 4 points");
    std::vector<Vec3> pts(points.begin(), points.end());
    const double scale = scale_of(pts);
    const double eps = tolerance() * scale;

    std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [eps](const Vec3& a, const Vec3& b) {
                              return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps &&
                                     std::abs(a.z - b.z) <= eps;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 4) throw DegenerateInput("hull input has affine dimension < 3");

    // Initial simplex: spread-out quadruple.
    std::size_t i1 = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (norm(pts[i] - pts[0]) > norm(pts[i1] - pts[0])) i1 = i;
    if (norm(pts[i1] - pts[0]) <= eps) throw DegenerateInput("hull input has affine dimension < 3");
    std::size_t i2 = 0;
    double best2 = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = norm(cross(pts[i1] - pts[0], pts[i] - pts[0]));
        if (a > best2) {
            best2 = a;
            i2 = i;
        }
    }
    if (best2 <= eps * norm(pts[i1] - pts[0]))
        throw DegenerateInput("hull input has affine dimension < 3");
    const Vec3 plane_n = normalized(cross(pts[i1] - pts[0], pts[i2] - pts[0]));
    std::size_t i3 = 0;
    double best3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(dot(plane_n, pts[i] - pts[0]));
        if (d > best3) {
            best3 = d;
            i3 = i;
        }
    }
    if (best3 <= eps) throw DegenerateInput("hull input has affine dimension < 3");

    const int a0 = 0, a1 = static_cast<int>(i1), a2 = static_cast<int>(i2),
              a3 = static_cast<int>(i3);
    const Vec3 inner = 0.25 * (pts[a0] + pts[a1] + pts[a2] + pts[a3]);

    // Triangle mesh with an incrementally maintained directed-edge owner map.
    // Every insertion swaps a connected disk of faces for a fan over its
    // boundary loop, so the mesh stays manifold and watertight throughout.
    std::vector<Tri> tris;
    std::unordered_map<std::uint64_t, std::size_t> owner;
    auto register_tri = [&](std::size_t f) {
        const Tri& t = tris[f];
        for (const auto& [u, v] :
             {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}})
            if (!owner.emplace(edge_key(u, v), f).second)
                throw Error("hull mesh edge acquired two owners");
    };
    auto kill_tri = [&](std::size_t f) {
        Tri& t = tris[f];
        t.alive = false;
        owner.erase(edge_key(t.a, t.b));
        owner.erase(edge_key(t.b, t.c));
        owner.erase(edge_key(t.c, t.a));
    };
    auto add_tri = [&](int a, int b, int c) {
        Vec3 nn = cross(pts[b] - pts[a], pts[c] - pts[a]);
        const double ln = norm(nn);
        if (ln == 0.0) throw Error("degenerate hull triangle");
        nn = (1.0 / ln) * nn;
        double off = dot(nn, pts[a]);
        if (dot(nn, inner) > off) {  // enforce outward orientation
            nn = -1.0 * nn;
            off = -off;
            tris.push_back({a, c, b, nn, off, true});
        } else {
            tris.push_back({a, b, c, nn, off, true});
        }
        register_tri(tris.size() - 1);
    };
    add_tri(a0, a1, a2);
    add_tri(a0, a1, a3);
    add_tri(a0, a2, a3);
    add_tri(a1, a2, a3);

    std::vector<char> visible_mark;
    for (std::size_t pi = 0; pi < n; ++pi) {
        const int p = static_cast<int>(pi);
        if (p == a0 || p == a1 || p == a2 || p == a3) continue;

        // Candidate faces and the most-visible seed.
        double best_d = eps;
        std::size_t seed = tris.size();
        for (std::size_t f = 0; f < tris.size(); ++f) {
            if (!tris[f].alive) continue;
            const double d = dot(tris[f].n, pts[pi]) - tris[f].off;
            if (d > best_d) {
                best_d = d;
                seed = f;
            }
        }
        if (seed == tris.size()) continue;  // inside or on the hull

        // Visible disk: BFS from the seed through strictly visible faces,
        // then absorb coplanar pockets enclosed by the disk.
        visible_mark.assign(tris.size(), 0);
        std::vector<std::size_t> visible = {seed};
        visible_mark[seed] = 1;
        auto neighbors = [&](std::size_t f, auto&& fn) {
            const Tri& t = tris[f];
            const std::pair<int, int> es[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (const auto& [u, v] : es) {
                const auto it = owner.find(edge_key(v, u));
                if (it != owner.end()) fn(it->second);
            }
        };
        for (std::size_t qi = 0; qi < visible.size(); ++qi) {
            neighbors(visible[qi], [&](std::size_t g) {
                if (visible_mark[g]) return;
                if (dot(tris[g].n, pts[pi]) - tris[g].off > eps) {
                    visible_mark[g] = 1;
                    visible.push_back(g);
                }
            });
        }
        for (bool grown = true; grown;) {
            grown = false;
            for (std::size_t qi = 0; qi < visible.size(); ++qi) {
                neighbors(visible[qi], [&](std::size_t g) {
                    if (visible_mark[g]) return;
                    if (dot(tris[g].n, pts[pi]) - tris[g].off <= -64.0 * eps) return;
                    int adj = 0;
                    neighbors(g, [&](std::size_t h) { adj += visible_mark[h]; });
                    if (adj >= 2) {
                        visible_mark[g] = 1;
                        visible.push_back(g);
                        grown = true;
                    }
                });
            }
        }

        // Horizon loop.
        std::unordered_map<int, int> loop;
        for (const std::size_t f : visible) {
            const Tri& t = tris[f];
            const std::pair<int, int> es[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (const auto& [u, v] : es) {
                const auto it = owner.find(edge_key(v, u));
                if (it == owner.end() || !visible_mark[it->second])
                    if (!loop.emplace(u, v).second)
                        throw Error("hull horizon is not a simple loop");
            }
        }
        if (loop.size() < 3) throw Error("hull horizon is not a simple loop");
        std::vector<std::pair<int, int>> horizon;
        horizon.reserve(loop.size());
        const int start = loop.begin()->first;
        int cur = start;
        while (!loop.empty()) {
            const auto it = loop.find(cur);
            if (it == loop.end()) throw Error("hull horizon is not a simple loop");
            horizon.emplace_back(cur, it->second);
            cur = it->second;
            loop.erase(it);
            if (cur == start && !loop.empty())
                throw Error("hull horizon is not a simple loop");
        }
        if (cur != start) throw Error("hull horizon is not a simple loop");

        for (const std::size_t f : visible) kill_tri(f);
        for (const auto& [u, v] : horizon) add_tri(u, v, p);
    }

    // Merge coplanar triangles into polygonal facets. The triangle mesh is
    // manifold by construction (each insertion swaps a disk of faces for a
    // fan over its boundary), so regions grown by adjacency have closed
    // boundary cycles; consistency is structural, not numerical. The owner
    // map carries the final mesh adjacency.
    std::vector<std::size_t> alive;
    for (std::size_t f = 0; f < tris.size(); ++f)
        if (tris[f].alive) alive.push_back(f);

    for (const std::size_t f : alive) {
        const Tri& t = tris[f];
        const std::pair<int, int> es[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
        for (const auto& [u, v] : es)
            if (!owner.count(edge_key(v, u)))
                throw Error("hull triangle mesh is not watertight");
    }

    auto tri_area = [&](const Tri& t) {
        return 0.5 * norm(cross(pts[t.b] - pts[t.a], pts[t.c] - pts[t.a]));
    };

    // Grow coplanar regions from large seed triangles; a neighbor joins when
    // all of its corners lie on the seed plane.
    const double on_tol = 64.0 * eps;
    std::vector<std::size_t> order = alive;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return tri_area(tris[x]) > tri_area(tris[y]);
    });
    std::unordered_map<std::size_t, int> region_of;
    std::vector<std::vector<std::size_t>> regions;
    for (const std::size_t seed : order) {
        if (region_of.count(seed)) continue;
        const int r = static_cast<int>(regions.size());
        const Vec3 pn = tris[seed].n;
        const double poff =
            (dot(pn, pts[tris[seed].a]) + dot(pn, pts[tris[seed].b]) + dot(pn, pts[tris[seed].c])) /
            3.0;
        regions.emplace_back();
        std::vector<std::size_t> queue = {seed};
        region_of[seed] = r;
        while (!queue.empty()) {
            const std::size_t f = queue.back();
            queue.pop_back();
            regions[static_cast<std::size_t>(r)].push_back(f);
            const Tri& t = tris[f];
            const std::pair<int, int> es[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (const auto& [u, v] : es) {
                const std::size_t g = owner.at(edge_key(v, u));
                if (region_of.count(g)) continue;
                const Tri& o = tris[g];
                bool flat = true;
                for (const int w : {o.a, o.b, o.c})
                    if (std::abs(dot(pn, pts[static_cast<std::size_t>(w)]) - poff) > on_tol)
                        flat = false;
                if (flat) {
                    region_of[g] = r;
                    queue.push_back(g);
                }
            }
        }
    }

    // Boundary walk per region: boundary edges are those whose reverse lies
    // outside the region; on a simply connected region they chain into one
    // counterclockwise cycle.
    std::vector<std::vector<int>> cycles(regions.size());
    for (std::size_t r = 0; r < regions.size(); ++r) {
        std::unordered_map<int, int> next;
        for (const std::size_t f : regions[r]) {
            const Tri& t = tris[f];
            const std::pair<int, int> es[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (const auto& [u, v] : es) {
                const std::size_t g = owner.at(edge_key(v, u));
                if (region_of.at(g) != static_cast<int>(r)) {
                    if (!next.emplace(u, v).second)
                        throw Error("facet region boundary is not a simple cycle");
                }
            }
        }
        if (next.size() < 3) throw Error("facet region boundary is not a simple cycle");
        std::vector<int>& cycle = cycles[r];
        cycle.reserve(next.size());
        const int start = next.begin()->first;
        int cur = start;
        do {
            cycle.push_back(cur);
            const auto it = next.find(cur);
            if (it == next.end()) throw Error("facet region boundary is not a simple cycle");
            cur = it->second;
        } while (cur != start && cycle.size() <= next.size());
        if (cycle.size() != next.size())
            throw Error("facet region boundary is not a simple cycle");
    }

    // A hull vertex lies on at least three facets; boundary chain points
    // shared by only two regions sit in the interior of an edge and are
    // spliced out of both cycles.
    std::vector<int> facet_count(n, 0);
    for (const auto& cycle : cycles)
        for (const int v : cycle) ++facet_count[static_cast<std::size_t>(v)];
    for (auto& cycle : cycles) {
        std::vector<int> kept;
        kept.reserve(cycle.size());
        for (const int v : cycle)
            if (facet_count[static_cast<std::size_t>(v)] >= 3) kept.push_back(v);
        if (kept.size() < 3) throw Error("facet degenerated while removing chain points");
        cycle.swap(kept);
    }

    ConvexPolytope3 out;
    std::vector<int> remap(n, -1);
    for (std::size_t r = 0; r < regions.size(); ++r) {
        Vec3 nsum{0, 0, 0};
        for (const std::size_t f : regions[r]) nsum = nsum + tri_area(tris[f]) * tris[f].n;
        if (norm(nsum) == 0.0) throw Error("facet region has vanishing area");
        Facet facet;
        facet.normal = normalized(nsum);
        double off = 0.0;
        for (const int v : cycles[r]) off += dot(facet.normal, pts[static_cast<std::size_t>(v)]);
        facet.offset = off / static_cast<double>(cycles[r].size());
        facet.cycle = std::move(cycles[r]);
        out.facets_.push_back(std::move(facet));
    }

    for (auto& f : out.facets_)
        for (int& v : f.cycle) {
            if (remap[static_cast<std::size_t>(v)] < 0) {
                remap[static_cast<std::size_t>(v)] = static_cast<int>(out.verts_.size());
                out.verts_.push_back(pts[static_cast<std::size_t>(v)]);
            }
            v = remap[static_cast<std::size_t>(v)];
        }

    // Validation: dual representation consistency and the Euler relation.
    const double vtol = 256.0 * eps;  // fitted planes sit a few on_tol off their seed
    double worst_excess = 0.0;
    for (const auto& f : out.facets_)
        for (const auto& v : out.verts_)
            worst_excess = std::max(worst_excess, dot(f.normal, v) - f.offset);
    if (worst_excess > vtol) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "hull construction produced an inconsistent facet plane "
                      "(excess %.3e, tolerance %.3e)",
                      worst_excess, vtol);
        throw Error(msg);
    }
    const std::size_t V = out.verts_.size();
    const std::size_t F = out.facets_.size();
    std::size_t cyc = 0;
    for (const auto& f : out.facets_) cyc += f.cycle.size();
    if (cyc % 2 != 0 || V + F != cyc / 2 + 2)
        throw Error("hull construction violated the Euler relation");
    if (!(out.volume() > 0)) throw DegenerateInput("hull input has affine dimension < 3");
    return out;
}

std::size_t ConvexPolytope3::edge_count() const {
    std::size_t cyc = 0;
    for (const auto& f : facets_) cyc += f.cycle.size();
    return cyc / 2;
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

namespace {

double facet_polygon_area(const std::vector<Vec3>& verts, const ConvexPolytope3::Facet& f) {
    Vec3 acc{0, 0, 0};
    const Vec3& v0 = verts[static_cast<std::size_t>(f.cycle[0])];
    for (std::size_t i = 1; i + 1 < f.cycle.size(); ++i) {
        const Vec3& vi = verts[static_cast<std::size_t>(f.cycle[i])];
        const Vec3& vj = verts[static_cast<std::size_t>(f.cycle[i + 1])];
        acc = acc + cross(vi - v0, vj - v0);
    }
    return 0.5 * norm(acc);
}

}  // namespace

Vec3 ConvexPolytope3::centroid_of_vertices() const {
    Vec3 c{0, 0, 0};
    for (const auto& v : verts_) c = c + v;
    return (1.0 / static_cast<double>(verts_.size())) * c;
}

double ConvexPolytope3::coordinate_scale() const { return scale_of(verts_); }

double ConvexPolytope3::volume() const {
    // Signed cones from the vertex centroid: V = (1/3) sum dist(c, plane_F) A_F.
    const Vec3 c = centroid_of_vertices();
    double vol = 0.0;
    for (const auto& f : facets_) vol += (f.offset - dot(f.normal, c)) * facet_polygon_area(verts_, f);
    return vol / 3.0;
}

double ConvexPolytope3::surface_area() const {
    double s = 0.0;
    for (const auto& f : facets_) s += facet_polygon_area(verts_, f);
    return s;
}

double ConvexPolytope3::facet_area(std::size_t i) const {
    return facet_polygon_area(verts_, facets_.at(i));
}

double ConvexPolytope3::support(Vec3 dir) const {
    double best = dot(verts_[0], dir);
    for (std::size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(verts_[i], dir));
    return best;
}

ConvexPolytope3 ConvexPolytope3::translated(Vec3 d) const {
    ConvexPolytope3 out = *this;
    for (auto& v : out.verts_) v = v + d;
    for (auto& f : out.facets_) f.offset += dot(f.normal, d);
    return out;
}

ConvexPolytope3 ConvexPolytope3::scaled(double s) const {
    if (!(s > 0)) throw PreconditionViolated("scale factor must be positive");
    ConvexPolytope3 out = *this;
    for (auto& v : out.verts_) v = s * v;
    for (auto& f : out.facets_) f.offset *= s;
    return out;
}

// ---------------------------------------------------------------------------
// Cuts, projections, slices
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> unique_edges(const ConvexPolytope3& k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<int, int>> edges;
    for (const auto& f : k.facets()) {
        const std::size_t m = f.cycle.size();
        for (std::size_t i = 0; i < m; ++i) {
            int a = f.cycle[i];
            int b = f.cycle[(i + 1) % m];
            if (a > b) std::swap(a, b);
            if (seen.insert(edge_key(a, b)).second) edges.emplace_back(a, b);
        }
    }
    return edges;
}

}  // namespace

std::optional<ConvexPolytope3> halfspace_cut(const ConvexPolytope3& k, Vec3 normal,
                                             double offset) {
    const double ln = norm(normal);
    if (ln < 1e-12) throw PreconditionViolated("cut normal must be nonzero");
    const Vec3 nn = (1.0 / ln) * normal;
    const double bb = offset / ln;
    const double eps = tolerance() * std::max({1.0, k.coordinate_scale(), std::abs(bb)});

    const auto& vs = k.vertices();
    std::vector<double> d(vs.size());
    bool all_in = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        d[i] = dot(nn, vs[i]) - bb;
        if (d[i] > eps) all_in = false;
    }
    if (all_in) return k;

    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (d[i] <= eps) pts.push_back(vs[i]);
    for (const auto& [a, b] : unique_edges(k)) {
        const double da = d[static_cast<std::size_t>(a)];
        const double db = d[static_cast<std::size_t>(b)];
        if ((da > eps && db < -eps) || (db > eps && da < -eps)) {
            const double t = da / (da - db);
            pts.push_back(vs[static_cast<std::size_t>(a)] +
                          t * (vs[static_cast<std::size_t>(b)] - vs[static_cast<std::size_t>(a)]));
        }
    }
    if (pts.size() < 4) return std::nullopt;
    try {
        return ConvexPolytope3::hull(pts);
    } catch (const DegenerateInput&) {
        return std::nullopt;  // measure-zero remainder
    }
}

ConvexPolygon project_to_plane(const ConvexPolytope3& k, const Direction& u) {
    const auto [a, b] = plane_basis(u);
    std::vector<Point2> flat;
    flat.reserve(k.vertices().size());
    for (const auto& v : k.vertices()) flat.push_back({dot(v, a), dot(v, b)});
    return convex_hull(flat);
}

Region2 slice(const ConvexPolytope3& k, const Direction& u, double h) {
    const auto [a, b] = plane_basis(u);
    const Vec3 un = u.vec();
    const double eps = tolerance() * std::max({1.0, k.coordinate_scale(), std::abs(h)});
    const auto& vs = k.vertices();
    std::vector<Point2> pts;
    std::vector<double> d(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        d[i] = dot(un, vs[i]) - h;
        if (std::abs(d[i]) <= eps) pts.push_back({dot(vs[i], a), dot(vs[i], b)});
    }
    for (const auto& [i, j] : unique_edges(k)) {
        const double di = d[static_cast<std::size_t>(i)];
        const double dj = d[static_cast<std::size_t>(j)];
        if ((di > eps && dj < -eps) || (dj > eps && di < -eps)) {
            const double t = di / (di - dj);
            const Vec3 q = vs[static_cast<std::size_t>(i)] +
                           t * (vs[static_cast<std::size_t>(j)] - vs[static_cast<std::size_t>(i)]);
            pts.push_back({dot(q, a), dot(q, b)});
        }
    }
    return Region2::classify(std::move(pts));
}

double slice_perimeter_integral(const ConvexPolytope3& k, const Direction& u) {
    double acc = 0.0;
    for (const auto& f : k.facets())
        acc += norm(cross(f.normal, u.vec())) * facet_polygon_area(k.vertices(), f);
    return acc;
}

ConvexPolytope3 dilate_along(const ConvexPolytope3& k, const Direction& u, double lambda) {
    if (!(lambda > 0)) throw PreconditionViolated("dilation factor must be positive");
    const Vec3 un = u.vec();
    // D_lambda is an invertible affine map, so the face lattice is unchanged:
    // vertices map by D, facet planes by the inverse-transpose. Rebuilding the
    // hull instead would lose coplanarity resolution at extreme lambda.
    ConvexPolytope3 out = k;
    for (auto& v : out.verts_) v = v + ((lambda - 1.0) * dot(v, un)) * un;
    for (auto& f : out.facets_) {
        const Vec3 m = f.normal + ((1.0 / lambda - 1.0) * dot(f.normal, un)) * un;
        const double len = norm(m);
        f.normal = (1.0 / len) * m;
        f.offset /= len;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minkowski sums
// ---------------------------------------------------------------------------

ConvexPolytope3 minkowski_sum(std::span<const Vec3> a, std::span<const Vec3> b,
                              std::size_t cap) {
    if (a.empty() || b.empty()) throw PreconditionViolated("summands must be nonempty");
    if (a.size() * b.size() > cap)
        throw ScaleLimit("Minkowski vertex product exceeds the configured cap");
    std::vector<Vec3> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b) sums.push_back(p + q);
    return ConvexPolytope3::hull(sums);
}

ConvexPolytope3 minkowski_sum(const ConvexPolytope3& a, const ConvexPolytope3& b,
                              std::size_t cap) {
    return minkowski_sum(std::span<const Vec3>(a.vertices()),
                         std::span<const Vec3>(b.vertices()), cap);
}

ConvexPolytope3 minkowski_sum(const ConvexPolytope3& a, std::span<const Vec3> b,
                              std::size_t cap) {
    return minkowski_sum(std::span<const Vec3>(a.vertices()), b, cap);
}

ConvexPolytope3 prism_over(const ConvexPolygon& base, const Direction& u, double h0, double h1) {
    if (!(h1 > h0)) throw PreconditionViolated("prism needs h1 > h0");
    std::vector<Vec3> pts;
    pts.reserve(2 * base.size());
    for (const auto& p : base.vertices()) {
        pts.push_back(embed_in_plane(u, p, h0));
        pts.push_back(embed_in_plane(u, p, h1));
    }
    return ConvexPolytope3::hull(pts);
}

}  // namespace canalgeo
