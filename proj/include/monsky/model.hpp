#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace monsky {

struct OrientedTriangle {
    std::string id;
    std::array<std::string, 3> verts;

    friend bool operator==(const OrientedTriangle &, const OrientedTriangle &) = default;
};

/// A collinearity constraint, given by its dead triangle set S. The vertex
/// set C = Vxs(S) is derived by ConstrainedTriangulation::constraint_vertices.
struct Constraint {
    std::vector<std::string> triangles;

    friend bool operator==(const Constraint &, const Constraint &) = default;
};

enum Corner { P = 0, Q = 1, R = 2, S = 3 };

struct ConstrainedTriangulation {
    std::string name;
    std::vector<std::string> vertices;
    std::array<std::string, 4> corners; // p, q, r, s
    std::vector<OrientedTriangle> triangles;
    std::vector<Constraint> constraints;

    friend bool operator==(const ConstrainedTriangulation &, const ConstrainedTriangulation &) = default;

    int vertex_index(const std::string &v) const {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
    }
    int triangle_index(const std::string &id) const {
        for (std::size_t i = 0; i < triangles.size(); ++i)
            if (triangles[i].id == id) return static_cast<int>(i);
        return -1;
    }
    bool is_corner(const std::string &v) const {
        return std::find(corners.begin(), corners.end(), v) != corners.end();
    }
    std::vector<std::string> interior_vertices() const {
        std::vector<std::string> out;
        for (const auto &v : vertices)
            if (!is_corner(v)) out.push_back(v);
        return out;
    }
    /// C_i = vertices of the dead triangles S_i, in vertex-list order.
    std::vector<std::string> constraint_vertices(std::size_t i) const {
        std::set<std::string> s;
        for (const auto &id : constraints.at(i).triangles) {
            int t = triangle_index(id);
            if (t < 0) continue;
            for (const auto &v : triangles[static_cast<std::size_t>(t)].verts) s.insert(v);
        }
        std::vector<std::string> out;
        for (const auto &v : vertices)
            if (s.count(v)) out.push_back(v);
        return out;
    }
    bool constraint_contains(std::size_t i, const std::string &v) const {
        auto c = constraint_vertices(i);
        return std::find(c.begin(), c.end(), v) != c.end();
    }
};

struct Violation {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string kind, std::string detail) {
        ok = false;
        violations.push_back({std::move(kind), std::move(detail)});
    }
    bool has(const std::string &kind) const {
        return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == kind; });
    }
};

namespace violation {
inline const std::string kMalformed = "malformed";
inline const std::string kNonDisk = "non-disk";
inline const std::string kOrientation = "orientation mismatch";
inline const std::string kNonContiguous = "non-contiguous constraint";
inline const std::string kOverlapping = "overlapping constraint triangle sets";
inline const std::string kCorners = "corners not on boundary";
inline const std::string kNotCollinear = "constraint not collinear";
inline const std::string kDegenerateTriangle = "degenerate triangle";
inline const std::string kConstraintsShare = "constraints share more than one vertex";
} // namespace violation

namespace detail {

using Cell = std::vector<int>;

inline std::uint64_t edge_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

/// Checks that oriented polygonal cells glue to an oriented disk whose
/// boundary cycle runs through exactly the four corners in the order
/// p, q, r, s. Every one of `nverts` vertices must be used.
inline void check_disk(const std::vector<Cell> &cells, std::size_t nverts, const std::array<int, 4> &corners,
                       const std::vector<std::string> &names, ValidationReport &rep) {
    using namespace violation;
    std::unordered_map<std::uint64_t, int> directed;
    std::unordered_map<std::uint64_t, int> undirected;
    for (const auto &c : cells)
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            ++directed[edge_key(a, b)];
            ++undirected[edge_key(std::min(a, b), std::max(a, b))];
        }
    bool bad = false;
    for (const auto &[k, n] : undirected)
        if (n > 2) {
            rep.add(kNonDisk, "edge " + names[k >> 32] + names[k & 0xffffffffu] + " lies on " + std::to_string(n) +
                                  " cells");
            bad = true;
        }
    for (const auto &[k, n] : directed) {
        int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
        if (n > 1 && undirected[edge_key(std::min(a, b), std::max(a, b))] <= 2) {
            rep.add(kOrientation, "edge " + names[k >> 32] + "->" + names[k & 0xffffffffu] +
                                      " is traversed in the same direction by two cells");
            bad = true;
        }
    }
    if (bad) return;

    // cells connected through shared edges
    if (!cells.empty()) {
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_edge;
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (std::size_t i = 0; i < cells[ci].size(); ++i) {
                int a = cells[ci][i], b = cells[ci][(i + 1) % cells[ci].size()];
                by_edge[edge_key(std::min(a, b), std::max(a, b))].push_back(ci);
            }
        std::vector<std::size_t> parent(cells.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto &[k, cs] : by_edge)
            if (cs.size() == 2) parent[find(cs[0])] = find(cs[1]);
        std::size_t roots = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) roots += find(i) == i;
        if (roots != 1) rep.add(kNonDisk, "cells form " + std::to_string(roots) + " edge-connected pieces");
    }

    std::vector<char> used(nverts, 0);
    for (const auto &c : cells)
        for (int v : c) used[static_cast<std::size_t>(v)] = 1;
    for (std::size_t v = 0; v < nverts; ++v)
        if (!used[v]) rep.add(kNonDisk, "vertex " + names[v] + " belongs to no cell");

    // boundary: directed edges whose reverse is missing
    std::vector<int> next(nverts, -1), indeg(nverts, 0);
    std::size_t nboundary = 0;
    for (const auto &[k, n] : directed) {
        int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
        if (directed.count(edge_key(b, a))) continue;
        ++nboundary;
        if (next[static_cast<std::size_t>(a)] != -1) {
            rep.add(kNonDisk, "boundary pinched at " + names[static_cast<std::size_t>(a)]);
            return;
        }
        next[static_cast<std::size_t>(a)] = b;
        ++indeg[static_cast<std::size_t>(b)];
    }
    if (nboundary == 0) {
        rep.add(kNonDisk, "complex has no boundary");
        return;
    }
    std::vector<int> cycle;
    int start = corners[P] >= 0 && next[static_cast<std::size_t>(corners[P])] != -1 ? corners[P] : -1;
    if (start < 0)
        for (std::size_t v = 0; v < nverts; ++v)
            if (next[v] != -1) {
                start = static_cast<int>(v);
                break;
            }
    for (int v = start; cycle.size() <= nboundary;) {
        cycle.push_back(v);
        v = next[static_cast<std::size_t>(v)];
        if (v == start || v == -1) break;
    }
    if (cycle.size() != nboundary || next[static_cast<std::size_t>(cycle.back())] != start)
        rep.add(kNonDisk, "boundary edges do not form a single cycle");

    // vertex links must be arcs (boundary vertices) or circles (interior)
    std::vector<std::vector<std::pair<int, int>>> link(nverts);
    for (const auto &c : cells)
        for (std::size_t i = 0; i < c.size(); ++i) {
            int prev = c[(i + c.size() - 1) % c.size()], nx = c[(i + 1) % c.size()];
            link[static_cast<std::size_t>(c[i])].push_back({nx, prev});
        }
    for (std::size_t v = 0; v < nverts; ++v) {
        if (link[v].empty()) continue;
        std::map<int, int> succ;
        std::set<int> nodes;
        for (auto [a, b] : link[v]) {
            succ[a] = b;
            nodes.insert(a);
            nodes.insert(b);
        }
        bool on_boundary = next[v] != -1;
        std::size_t expected_arcs = on_boundary ? nodes.size() - 1 : nodes.size();
        bool ok = link[v].size() == expected_arcs;
        if (ok) {
            // walk from the arc start (a node with no predecessor) or anywhere on a circle
            std::set<int> has_pred;
            for (auto [a, b] : link[v]) has_pred.insert(b);
            int s = *nodes.begin();
            for (int n : nodes)
                if (!has_pred.count(n)) s = n;
            std::size_t seen = 1;
            for (int x = s; succ.count(x) && seen <= nodes.size();) {
                x = succ[x];
                if (x == s) break;
                ++seen;
            }
            ok = seen == nodes.size();
        }
        if (!ok) rep.add(kNonDisk, "link of " + names[v] + " is not a disk neighbourhood");
    }

    long euler = static_cast<long>(nverts) - static_cast<long>(undirected.size()) + static_cast<long>(cells.size());
    if (euler != 1) rep.add(kNonDisk, "Euler characteristic is " + std::to_string(euler) + ", expected 1");

    // corners: the boundary cycle is exactly p -> q -> r -> s
    bool corners_ok = cycle.size() == 4;
    for (int k = 0; corners_ok && k < 4; ++k) {
        int c = corners[static_cast<std::size_t>(k)];
        corners_ok = c >= 0 && next[static_cast<std::size_t>(c)] == corners[static_cast<std::size_t>((k + 1) % 4)];
    }
    if (!corners_ok) {
        std::string got;
        for (int v : cycle) got += (got.empty() ? "" : " ") + names[static_cast<std::size_t>(v)];
        rep.add(kCorners, "boundary cycle is (" + got + "), expected the corners p q r s in order");
    }
}

} // namespace detail

/// Euler characteristic V − E + F of the triangle complex (1 for a disk;
/// 2 once the outer face is counted).
inline long euler_characteristic(const ConstrainedTriangulation &ct) {
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto &t : ct.triangles)
        for (int i = 0; i < 3; ++i) {
            auto a = t.verts[static_cast<std::size_t>(i)], b = t.verts[static_cast<std::size_t>((i + 1) % 3)];
            edges.insert(std::minmax(a, b));
        }
    return static_cast<long>(ct.vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(ct.triangles.size());
}

inline ValidationReport validate_ct(const ConstrainedTriangulation &ct) {
    using namespace violation;
    ValidationReport rep;
    const auto &names = ct.vertices;
    {
        std::set<std::string> seen;
        for (const auto &v : names) {
            if (v.empty()) rep.add(kMalformed, "empty vertex id");
            if (!seen.insert(v).second) rep.add(kMalformed, "duplicate vertex " + v);
        }
        seen.clear();
        for (const auto &t : ct.triangles)
            if (!seen.insert(t.id).second) rep.add(kMalformed, "duplicate triangle " + t.id);
        std::set<std::string> cs(ct.corners.begin(), ct.corners.end());
        if (cs.size() != 4) rep.add(kMalformed, "corners are not four distinct vertices");
        for (const auto &c : ct.corners)
            if (ct.vertex_index(c) < 0) rep.add(kMalformed, "corner " + c + " is not a vertex");
    }
    std::vector<detail::Cell> cells;
    for (const auto &t : ct.triangles) {
        detail::Cell c;
        for (const auto &v : t.verts) {
            int i = ct.vertex_index(v);
            if (i < 0) rep.add(kMalformed, "triangle " + t.id + " uses unknown vertex " + v);
            c.push_back(i);
        }
        if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) rep.add(kMalformed, "triangle " + t.id + " repeats a vertex");
        cells.push_back(std::move(c));
    }
    std::map<std::string, std::size_t> owner;
    for (std::size_t i = 0; i < ct.constraints.size(); ++i) {
        const auto &c = ct.constraints[i];
        if (c.triangles.empty()) rep.add(kMalformed, "constraint " + std::to_string(i + 1) + " is empty");
        for (const auto &id : c.triangles) {
            if (ct.triangle_index(id) < 0) {
                rep.add(kMalformed, "constraint " + std::to_string(i + 1) + " names unknown triangle " + id);
                continue;
            }
            auto [it, fresh] = owner.emplace(id, i);
            if (!fresh && it->second != i)
                rep.add(kOverlapping, "triangle " + id + " is in constraints " + std::to_string(it->second + 1) +
                                          " and " + std::to_string(i + 1));
        }
    }
    if (!rep.ok) return rep;

    std::array<int, 4> corners{};
    for (int k = 0; k < 4; ++k) corners[static_cast<std::size_t>(k)] = ct.vertex_index(ct.corners[static_cast<std::size_t>(k)]);
    detail::check_disk(cells, names.size(), corners, names, rep);

    // contiguity: dead triangles of each constraint connected via shared edges
    for (std::size_t i = 0; i < ct.constraints.size(); ++i) {
        const auto &ids = ct.constraints[i].triangles;
        std::vector<std::size_t> tri;
        for (const auto &id : ids) tri.push_back(static_cast<std::size_t>(ct.triangle_index(id)));
        std::vector<char> reached(tri.size(), 0);
        std::vector<std::size_t> stack{0};
        reached[0] = 1;
        auto share_edge = [&](std::size_t a, std::size_t b) {
            int common = 0;
            for (int x : cells[a])
                for (int y : cells[b]) common += x == y;
            return common == 2;
        };
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < tri.size(); ++b)
                if (!reached[b] && share_edge(tri[a], tri[b])) {
                    reached[b] = 1;
                    stack.push_back(b);
                }
        }
        if (std::find(reached.begin(), reached.end(), 0) != reached.end())
            rep.add(kNonContiguous, "constraint " + std::to_string(i + 1) + " is not contiguous");
    }
    return rep;
}

inline void require_valid(const ConstrainedTriangulation &ct) {
    auto rep = validate_ct(ct);
    if (!rep.ok)
        throw InvalidTriangulation(rep.violations.front().kind + ": " + rep.violations.front().detail);
}

/// Triangles not contained in any constraint vertex set, in input order.
inline std::vector<std::string> living_triangles(const ConstrainedTriangulation &ct) {
    std::vector<std::set<std::string>> cs;
    for (std::size_t i = 0; i < ct.constraints.size(); ++i) {
        auto v = ct.constraint_vertices(i);
        cs.emplace_back(v.begin(), v.end());
    }
    std::vector<std::string> out;
    for (const auto &t : ct.triangles) {
        bool dead = std::any_of(cs.begin(), cs.end(), [&](const std::set<std::string> &c) {
            return std::all_of(t.verts.begin(), t.verts.end(), [&](const std::string &v) { return c.count(v) > 0; });
        });
        if (!dead) out.push_back(t.id);
    }
    return out;
}

/// Pairs of constraints (0-based) sharing two or more vertices.
inline std::vector<std::pair<std::size_t, std::size_t>> reducible_pairs(const ConstrainedTriangulation &ct) {
    std::vector<std::vector<std::string>> cs;
    for (std::size_t i = 0; i < ct.constraints.size(); ++i) cs.push_back(ct.constraint_vertices(i));
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            std::size_t n = 0;
            for (const auto &v : cs[i]) n += std::find(cs[j].begin(), cs[j].end(), v) != cs[j].end();
            if (n > 1) out.push_back({i, j});
        }
    return out;
}

inline bool is_combinatorially_irreducible(const ConstrainedTriangulation &ct) { return reducible_pairs(ct).empty(); }

/// Triangles, constraints and points of a (generalized) dissection. Each
/// ordered constraint lists the vertices of its poofagon in cyclic order.
struct GeneralizedDissection {
    std::string name;
    std::vector<std::string> vertices;
    std::map<std::string, Point> points;
    std::array<std::string, 4> corners;
    std::vector<OrientedTriangle> triangles;
    std::vector<std::vector<std::string>> constraints;

    friend bool operator==(const GeneralizedDissection &, const GeneralizedDissection &) = default;

    int vertex_index(const std::string &v) const {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
    }
};

inline ValidationReport validate_gd(const GeneralizedDissection &gd) {
    using namespace violation;
    ValidationReport rep;
    for (const auto &v : gd.vertices)
        if (!gd.points.count(v)) rep.add(kMalformed, "vertex " + v + " has no point");
    std::vector<detail::Cell> cells;
    auto to_cell = [&](const auto &vs, const std::string &what) {
        detail::Cell c;
        for (const auto &v : vs) {
            int i = gd.vertex_index(v);
            if (i < 0) rep.add(kMalformed, what + " uses unknown vertex " + v);
            c.push_back(i);
        }
        std::set<int> distinct(c.begin(), c.end());
        if (distinct.size() != c.size()) rep.add(kMalformed, what + " repeats a vertex");
        return c;
    };
    for (const auto &t : gd.triangles) cells.push_back(to_cell(t.verts, "triangle " + t.id));
    for (std::size_t i = 0; i < gd.constraints.size(); ++i) {
        if (gd.constraints[i].size() < 3) rep.add(kMalformed, "constraint " + std::to_string(i + 1) + " has < 3 vertices");
        cells.push_back(to_cell(gd.constraints[i], "constraint " + std::to_string(i + 1)));
    }
    if (!rep.ok) return rep;
    auto pt = [&](const std::string &v) -> const Point & { return gd.points.at(v); };
    for (const auto &t : gd.triangles)
        if (collinear(pt(t.verts[0]), pt(t.verts[1]), pt(t.verts[2])))
            rep.add(kDegenerateTriangle, "triangle " + t.id + " has zero area");
    for (std::size_t i = 0; i < gd.constraints.size(); ++i) {
        const auto &c = gd.constraints[i];
        for (std::size_t k = 2; k < c.size(); ++k)
            if (!collinear(pt(c[0]), pt(c[1]), pt(c[k])))
                rep.add(kNotCollinear, "constraint " + std::to_string(i + 1) + " is not totally degenerate");
        for (std::size_t j = i + 1; j < gd.constraints.size(); ++j) {
            std::size_t n = 0;
            for (const auto &v : c)
                n += std::find(gd.constraints[j].begin(), gd.constraints[j].end(), v) != gd.constraints[j].end();
            if (n > 1)
                rep.add(kConstraintsShare, "constraints " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
    }
    std::array<int, 4> corners{};
    for (int k = 0; k < 4; ++k) corners[static_cast<std::size_t>(k)] = gd.vertex_index(gd.corners[static_cast<std::size_t>(k)]);
    if (std::find(corners.begin(), corners.end(), -1) != corners.end()) {
        rep.add(kMalformed, "corner is not a vertex");
        return rep;
    }
    detail::check_disk(cells, gd.vertices.size(), corners, gd.vertices, rep);
    return rep;
}

namespace detail {

inline bool projections_separate(const std::array<Point, 3> &a, const std::array<Point, 3> &b, const Point &axis) {
    auto proj = [&](const Point &p) { return BigRational(p.x * axis.x + p.y * axis.y); };
    BigRational amin = proj(a[0]), amax = amin, bmin = proj(b[0]), bmax = bmin;
    for (int i = 1; i < 3; ++i) {
        BigRational x = proj(a[static_cast<std::size_t>(i)]), y = proj(b[static_cast<std::size_t>(i)]);
        amin = std::min(amin, x), amax = std::max(amax, x);
        bmin = std::min(bmin, y), bmax = std::max(bmax, y);
    }
    return amax <= bmin || bmax <= amin;
}

/// Exact test for overlapping interiors of two non-degenerate triangles
/// (separating axes among the six edge normals).
inline bool interiors_overlap(const std::array<Point, 3> &a, const std::array<Point, 3> &b) {
    for (const auto *tri : {&a, &b})
        for (int i = 0; i < 3; ++i) {
            const Point &u = (*tri)[static_cast<std::size_t>(i)], &v = (*tri)[static_cast<std::size_t>((i + 1) % 3)];
            Point normal{BigRational(u.y - v.y), BigRational(v.x - u.x)};
            if (projections_separate(a, b, normal)) return false;
        }
    return true;
}

inline std::vector<std::size_t> convex_hull(const std::vector<Point> &pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() < 3) return idx;
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
        hull[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
        hull[k++] = idx[i];
    }
    hull.resize(k - 1);
    return hull; // counterclockwise, no collinear points
}

} // namespace detail

/// Converts a classical dissection of a parallelogram into the generalized
/// dissection whose constraints are its maximal segments. Clockwise input
/// triangles are reoriented counterclockwise. Corners are p = the lowest
/// (then leftmost) hull vertex, followed counterclockwise by q, r, s; if
/// `corners` is supplied it must agree.
inline GeneralizedDissection dissection_to_generalized(const std::string &name, const std::vector<std::string> &vertices,
                                                       const std::map<std::string, Point> &points,
                                                       std::vector<OrientedTriangle> triangles,
                                                       const std::optional<std::array<std::string, 4>> &corners = {}) {
    const std::size_t n = vertices.size();
    std::vector<Point> pts;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        auto it = points.find(vertices[i]);
        if (it == points.end()) throw NotADissection("vertex " + vertices[i] + " has no point");
        if (!index.emplace(vertices[i], i).second) throw DuplicateId("vertex " + vertices[i]);
        pts.push_back(it->second);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) throw NotADissection("vertices " + vertices[i] + " and " + vertices[j] + " coincide");

    std::vector<std::array<std::size_t, 3>> tri;
    std::vector<char> used(n, 0);
    for (auto &t : triangles) {
        std::array<std::size_t, 3> v{};
        for (int k = 0; k < 3; ++k) {
            auto it = index.find(t.verts[static_cast<std::size_t>(k)]);
            if (it == index.end()) throw NotADissection("triangle " + t.id + " uses unknown vertex");
            v[static_cast<std::size_t>(k)] = it->second;
            used[it->second] = 1;
        }
        int o = orientation(pts[v[0]], pts[v[1]], pts[v[2]]);
        if (o == 0) throw NotADissection("triangle " + t.id + " is degenerate");
        if (o < 0) {
            std::swap(t.verts[1], t.verts[2]);
            std::swap(v[1], v[2]);
        }
        tri.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) throw NotADissection("vertex " + vertices[i] + " is on no triangle");

    // exact area bookkeeping and pairwise interior disjointness
    auto hull = detail::convex_hull(pts);
    if (hull.size() != 4) throw NotADissection("convex hull has " + std::to_string(hull.size()) + " corners");
    std::size_t lowest = 0;
    for (std::size_t k = 1; k < 4; ++k) {
        const Point &a = pts[hull[k]], &b = pts[hull[lowest]];
        if (a.y < b.y || (a.y == b.y && a.x < b.x)) lowest = k;
    }
    std::array<std::string, 4> cn;
    std::array<std::size_t, 4> ci{};
    for (std::size_t k = 0; k < 4; ++k) {
        ci[k] = hull[(lowest + k) % 4];
        cn[k] = vertices[ci[k]];
    }
    if (!(pts[ci[P]] + pts[ci[R]] == pts[ci[Q]] + pts[ci[S]]))
        throw NotADissection("convex hull is not a parallelogram");
    if (corners && *corners != cn) throw NotADissection("given corners disagree with the convex hull");
    // both sides doubled: the parallelogram is twice the triangle p, q, s
    BigRational hull_area = 2 * doubled_area(pts[ci[P]], pts[ci[Q]], pts[ci[S]]);
    BigRational sum = 0;
    for (const auto &v : tri) sum += doubled_area(pts[v[0]], pts[v[1]], pts[v[2]]);
    if (sum != hull_area)
        throw NotADissection("triangle areas sum to " + to_string(BigRational(sum / 2)) + ", hull area is " +
                             to_string(BigRational(hull_area / 2)));
    for (std::size_t a = 0; a < tri.size(); ++a)
        for (std::size_t b = a + 1; b < tri.size(); ++b) {
            std::array<Point, 3> ta{pts[tri[a][0]], pts[tri[a][1]], pts[tri[a][2]]};
            std::array<Point, 3> tb{pts[tri[b][0]], pts[tri[b][1]], pts[tri[b][2]]};
            if (detail::interiors_overlap(ta, tb))
                throw NotADissection("triangles " + triangles[a].id + " and " + triangles[b].id + " overlap");
        }

    // Split every triangle edge at the vertices it contains; a vertex inside
    // an edge is constrained.
    auto strictly_inside = [&](std::size_t a, std::size_t b, std::size_t v) {
        if (v == a || v == b || !collinear(pts[a], pts[b], pts[v])) return false;
        BigRational t = (pts[v].x - pts[a].x) * (pts[b].x - pts[a].x) + (pts[v].y - pts[a].y) * (pts[b].y - pts[a].y);
        BigRational len = (pts[b].x - pts[a].x) * (pts[b].x - pts[a].x) + (pts[b].y - pts[a].y) * (pts[b].y - pts[a].y);
        return t > 0 && t < len;
    };
    std::vector<char> constrained(n, 0);
    std::set<std::pair<std::size_t, std::size_t>> pieces;
    // the sides of the square count too: a vertex inside one is constrained
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto &v : tri)
        for (std::size_t k = 0; k < 3; ++k) edges.emplace_back(v[k], v[(k + 1) % 3]);
    for (std::size_t k = 0; k < 4; ++k) edges.emplace_back(ci[k], ci[(k + 1) % 4]);
    for (const auto &[a, b] : edges) {
        std::vector<std::pair<BigRational, std::size_t>> on{{BigRational(0), a}};
        for (std::size_t w = 0; w < n; ++w)
            if (strictly_inside(a, b, w)) {
                constrained[w] = 1;
                BigRational t = (pts[w].x - pts[a].x) * (pts[b].x - pts[a].x) +
                                (pts[w].y - pts[a].y) * (pts[b].y - pts[a].y);
                on.push_back({t, w});
            }
        on.push_back({BigRational(-1), b});
        std::sort(on.begin() + 1, on.end() - 1);
        for (std::size_t i = 0; i + 1 < on.size(); ++i)
            pieces.insert(std::minmax(on[i].second, on[i + 1].second));
    }
    // Merge collinear opposite pieces through constrained vertices.
    std::vector<std::pair<std::size_t, std::size_t>> plist(pieces.begin(), pieces.end());
    std::vector<std::size_t> parent(plist.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::size_t>> at(n);
    for (std::size_t i = 0; i < plist.size(); ++i) {
        at[plist[i].first].push_back(i);
        at[plist[i].second].push_back(i);
    }
    auto other = [&](std::size_t piece, std::size_t v) {
        return plist[piece].first == v ? plist[piece].second : plist[piece].first;
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (!constrained[v]) continue;
        for (std::size_t i = 0; i < at[v].size(); ++i)
            for (std::size_t j = i + 1; j < at[v].size(); ++j) {
                std::size_t a = other(at[v][i], v), b = other(at[v][j], v);
                if (strictly_inside(a, b, v)) parent[find(at[v][i])] = find(at[v][j]);
            }
    }
    std::map<std::size_t, std::set<std::size_t>> chains;
    for (std::size_t i = 0; i < plist.size(); ++i) {
        chains[find(i)].insert(plist[i].first);
        chains[find(i)].insert(plist[i].second);
    }
    std::vector<std::vector<std::size_t>> segs;
    for (auto &[root, vs] : chains)
        if (vs.size() >= 3) segs.emplace_back(vs.begin(), vs.end());

    GeneralizedDissection gd;
    gd.name = name;
    gd.vertices = vertices;
    gd.points = points;
    gd.corners = cn;
    gd.triangles = std::move(triangles);
    for (auto &seg : segs) {
        // endpoints a, b: extreme along the line
        std::size_t a = seg[0], b = seg[0];
        Point dir{};
        for (std::size_t w : seg)
            if (w != a) {
                dir = pts[w] - pts[a];
                break;
            }
        auto along = [&](std::size_t w) { return BigRational(pts[w].x * dir.x + pts[w].y * dir.y); };
        for (std::size_t w : seg) {
            if (along(w) < along(a)) a = w;
            if (along(w) > along(b)) b = w;
        }
        std::vector<std::size_t> inner;
        for (std::size_t w : seg)
            if (w != a && w != b) inner.push_back(w);
        std::sort(inner.begin(), inner.end(), [&](std::size_t x, std::size_t y) { return along(x) < along(y); });
        std::vector<std::size_t> right, left;
        for (std::size_t w : inner) {
            int side = 0;
            for (std::size_t piece : at[w]) {
                int o = orientation(pts[a], pts[b], pts[other(piece, w)]);
                if (o != 0) {
                    side = o;
                    break;
                }
            }
            (side < 0 ? right : left).push_back(w);
        }
        std::vector<std::string> cyc{vertices[a]};
        for (std::size_t w : right) cyc.push_back(vertices[w]);
        cyc.push_back(vertices[b]);
        for (auto it = left.rbegin(); it != left.rend(); ++it) cyc.push_back(vertices[*it]);
        gd.constraints.push_back(std::move(cyc));
    }
    std::sort(gd.constraints.begin(), gd.constraints.end(), [&](const auto &x, const auto &y) {
        return index.at(x.front()) < index.at(y.front()) ||
               (x.front() == y.front() && std::lexicographical_compare(
                                              x.begin(), x.end(), y.begin(), y.end(),
                                              [&](const std::string &s, const std::string &t) { return index.at(s) < index.at(t); }));
    });
    auto rep = validate_gd(gd);
    if (!rep.ok) throw NotADissection(rep.violations.front().kind + ": " + rep.violations.front().detail);
    return gd;
}

/// Triangulates every poofagon by a fan and turns it into a constraint.
/// `fan_roots[i]`, when present and non-empty, picks the root of the i-th
/// poofagon; the default is the lexicographically least vertex.
inline ConstrainedTriangulation generalized_to_ct(const GeneralizedDissection &gd,
                                                  const std::vector<std::string> &fan_roots = {}) {
    auto rep = validate_gd(gd);
    if (!rep.ok) throw InvalidTriangulation(rep.violations.front().kind + ": " + rep.violations.front().detail);
    ConstrainedTriangulation ct;
    ct.name = gd.name;
    ct.vertices = gd.vertices;
    ct.corners = gd.corners;
    ct.triangles = gd.triangles;
    std::set<std::string> ids;
    for (const auto &t : gd.triangles) ids.insert(t.id);
    for (std::size_t i = 0; i < gd.constraints.size(); ++i) {
        auto cyc = gd.constraints[i];
        std::string root = i < fan_roots.size() && !fan_roots[i].empty()
                               ? fan_roots[i]
                               : *std::min_element(cyc.begin(), cyc.end());
        auto it = std::find(cyc.begin(), cyc.end(), root);
        if (it == cyc.end()) throw InvalidTriangulation("fan root " + root + " is not on constraint " + std::to_string(i + 1));
        std::rotate(cyc.begin(), it, cyc.end());
        Constraint c;
        for (std::size_t k = 1; k + 1 < cyc.size(); ++k) {
            std::string id = "c" + std::to_string(i + 1) + "." + std::to_string(k);
            while (ids.count(id)) id = "_" + id;
            ids.insert(id);
            ct.triangles.push_back({id, {cyc[0], cyc[k], cyc[k + 1]}});
            c.triangles.push_back(id);
        }
        ct.constraints.push_back(std::move(c));
    }
    return ct;
}

} // namespace monsky
