#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "order.hpp"
#include "ratfunc.hpp"

namespace monsky {

using RPoint = Pt<RationalFunction>;

/// The rational map g≤ from parameter space to drawings.
struct Parameterization {
    DrawingOrder order;
    bool fixed_corners = true;
    VarList params;                             // w1, ..., wk in drawing order
    std::map<std::string, RPoint> coords;       // per vertex
    std::map<std::string, std::vector<std::size_t>> block; // parameter indices owned by each vertex

    std::size_t num_params() const { return params->size(); }
};

namespace detail {

inline RPoint rconst(const VarList &vars, long x, long y) {
    return {RationalFunction::constant(vars, x), RationalFunction::constant(vars, y)};
}

inline RationalFunction cross(const RPoint &a, const RPoint &b) { return a.x * b.y - a.y * b.x; }

} // namespace detail

/// Builds g≤. With fixed corners p, q, r, s go to (0,0), (1,0), (1,1),
/// (0,1); otherwise p, q, s are free and g_r = g_q + g_s − g_p.
inline Parameterization build_parameterization(const ConstrainedTriangulation &ct, const DrawingOrder &order,
                                               bool fixed_corners = true) {
    Parameterization par;
    par.order = order;
    par.fixed_corners = fixed_corners;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.sequence.size(); ++i) {
        const std::string &v = order.sequence[i];
        bool corner = i < 4;
        std::size_t own = corner ? (fixed_corners ? 0u : static_cast<std::size_t>(order.alpha[i]))
                                 : static_cast<std::size_t>(order.alpha[i] == 2 ? 2 : order.alpha[i] == 1 ? 1 : 0);
        for (std::size_t k = 0; k < own; ++k) {
            par.block[v].push_back(names.size());
            names.push_back("w" + std::to_string(names.size() + 1));
        }
        if (!own) par.block[v];
    }
    par.params = make_vars(names);
    const VarList &vars = par.params;
    auto param = [&](std::size_t i) { return RationalFunction(MultiPoly::variable(vars, i)); };
    auto &g = par.coords;
    const std::string &p = ct.corners[P], &q = ct.corners[Q], &r = ct.corners[R], &s = ct.corners[S];
    if (fixed_corners) {
        g.emplace(p, detail::rconst(vars, 0, 0));
        g.emplace(q, detail::rconst(vars, 1, 0));
        g.emplace(r, detail::rconst(vars, 1, 1));
        g.emplace(s, detail::rconst(vars, 0, 1));
    } else {
        for (const auto *c : {&p, &q, &s}) {
            const auto &b = par.block[*c];
            g.emplace(*c, RPoint{param(b[0]), param(b[1])});
        }
        g.emplace(r, g.at(q) + g.at(s) - g.at(p));
    }
    for (std::size_t i = 4; i < order.sequence.size(); ++i) {
        const std::string &v = order.sequence[i];
        const auto &b = par.block[v];
        const auto &rel = order.relevant[i];
        if (order.alpha[i] == 2) {
            g.emplace(v, RPoint{param(b[0]), param(b[1])});
        } else if (order.alpha[i] == 1) {
            const RPoint &y = g.at(rel[0].first), &z = g.at(rel[0].second);
            RationalFunction x = param(b[0]);
            RationalFunction one = RationalFunction::constant(vars, 1);
            g.emplace(v, RPoint{x * y.x + (one - x) * z.x, x * y.y + (one - x) * z.y});
        } else {
            // Cramer: intersection of line (a,b) with line (c,d)
            const RPoint &a = g.at(rel[0].first), &bb = g.at(rel[0].second);
            const RPoint &c = g.at(rel[1].first), &d = g.at(rel[1].second);
            RPoint ab = a - bb, cd = c - d;
            RationalFunction den = detail::cross(ab, cd);
            if (den.is_zero())
                throw IdenticallyParallel("lines for vertex " + v + " are parallel for all parameter values");
            RationalFunction e = detail::cross(a, bb), f = detail::cross(c, d);
            g.emplace(v, RPoint{(e * cd.x - f * ab.x) / den, (e * cd.y - f * ab.y) / den});
        }
    }
    return par;
}

/// Per-living-triangle areas W_j as rational functions of the parameters.
struct AreaSystem {
    std::vector<std::string> living;
    std::vector<RationalFunction> W;
    RationalFunction sigma;
};

inline AreaSystem area_system(const ConstrainedTriangulation &ct, const Parameterization &par) {
    AreaSystem sys;
    sys.living = living_triangles(ct);
    sys.sigma = RationalFunction(par.params);
    for (const auto &id : sys.living) {
        const auto &t = ct.triangles[static_cast<std::size_t>(ct.triangle_index(id))];
        RationalFunction w = triangle_area(par.coords.at(t.verts[0]), par.coords.at(t.verts[1]), par.coords.at(t.verts[2]));
        sys.sigma += w;
        sys.W.push_back(std::move(w));
    }
    return sys;
}

struct DrawingFlags {
    std::array<bool, 6> condition{}; // Def. conditions (1)..(6)
    bool is_drawing = false;
    bool is_life_preserving = false;
    bool is_generic = false;
};

struct Drawing {
    std::map<std::string, Point> points;
    DrawingFlags flags;
};

inline DrawingFlags check_drawing(const ConstrainedTriangulation &ct, const std::map<std::string, Point> &pts) {
    DrawingFlags fl;
    auto at = [&](const std::string &v) -> const Point & { return pts.at(v); };
    std::vector<std::vector<std::string>> cs;
    for (std::size_t c = 0; c < ct.constraints.size(); ++c) cs.push_back(ct.constraint_vertices(c));

    // a line through two distinct points of the list, if there is one
    auto line_of = [&](const std::vector<std::string> &vs) -> std::optional<std::pair<Point, Point>> {
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (!(at(vs[i]) == at(vs[0]))) return std::make_pair(at(vs[0]), at(vs[i]));
        return std::nullopt;
    };
    auto all_on = [&](const std::vector<std::string> &vs, const std::pair<Point, Point> &l) {
        return std::all_of(vs.begin(), vs.end(), [&](const std::string &v) { return collinear(l.first, l.second, at(v)); });
    };

    fl.condition[0] = std::all_of(cs.begin(), cs.end(), [&](const auto &c) {
        auto l = line_of(c);
        return !l || all_on(c, *l);
    });
    const Point &p = at(ct.corners[P]), &q = at(ct.corners[Q]), &r = at(ct.corners[R]), &s = at(ct.corners[S]);
    fl.condition[1] = p + r == q + s;
    fl.condition[2] = !collinear(p, q, s);
    fl.condition[3] = true;
    for (const auto &id : living_triangles(ct)) {
        const auto &t = ct.triangles[static_cast<std::size_t>(ct.triangle_index(id))];
        if (collinear(at(t.verts[0]), at(t.verts[1]), at(t.verts[2]))) fl.condition[3] = false;
    }
    fl.condition[4] = true;
    for (std::size_t i = 0; i < ct.vertices.size() && fl.condition[4]; ++i)
        for (std::size_t j = i + 1; j < ct.vertices.size(); ++j)
            if (at(ct.vertices[i]) == at(ct.vertices[j])) {
                fl.condition[4] = false;
                break;
            }
    fl.condition[5] = true;
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            bool meet = std::any_of(cs[a].begin(), cs[a].end(), [&](const std::string &v) {
                return std::find(cs[b].begin(), cs[b].end(), v) != cs[b].end();
            });
            if (!meet) continue;
            auto la = line_of(cs[a]);
            if (!la || all_on(cs[b], *la)) fl.condition[5] = false;
        }
    fl.is_drawing = fl.condition[0] && fl.condition[1];
    fl.is_life_preserving = fl.is_drawing && fl.condition[2] && fl.condition[3];
    fl.is_generic = fl.is_life_preserving && fl.condition[4] && fl.condition[5];
    return fl;
}

/// Evaluates g≤ at exact parameter values.
inline Drawing evaluate_drawing(const ConstrainedTriangulation &ct, const Parameterization &par,
                                std::span<const BigRational> values) {
    if (values.size() != par.num_params())
        throw AlgebraError("expected " + std::to_string(par.num_params()) + " parameter values");
    Drawing d;
    for (const auto &v : par.order.sequence) {
        const RPoint &g = par.coords.at(v);
        auto x = g.x.evaluate(values), y = g.y.evaluate(values);
        if (!x || !y) throw DenominatorVanishes(v);
        d.points.emplace(v, Point{*x, *y});
    }
    d.flags = check_drawing(ct, d.points);
    return d;
}

/// Parameters reproducing a drawing: coordinates for α = 2, the affine
/// weight for α = 1, nothing for α = 0.
inline std::vector<BigRational> recover_parameters(const Parameterization &par, const std::map<std::string, Point> &pts) {
    std::vector<BigRational> out(par.num_params());
    for (std::size_t i = 0; i < par.order.sequence.size(); ++i) {
        const std::string &v = par.order.sequence[i];
        const auto &b = par.block.at(v);
        if (b.size() == 2) {
            out[b[0]] = pts.at(v).x;
            out[b[1]] = pts.at(v).y;
        } else if (b.size() == 1) {
            const auto &rel = par.order.relevant[i][0];
            const Point &y = pts.at(rel.first), &z = pts.at(rel.second), &pv = pts.at(v);
            if (y.x != z.x) out[b[0]] = (pv.x - z.x) / (y.x - z.x);
            else if (y.y != z.y) out[b[0]] = (pv.y - z.y) / (y.y - z.y);
            else throw AlgebraError("cannot recover the weight of " + v + ": its reference points coincide");
        }
    }
    return out;
}

struct SampleOptions {
    int max_attempts = 1000;
    bool fixed_corners = true;
};

namespace detail {

inline BigRational grid_value(std::mt19937_64 &rng, int attempt) {
    long n = 8L << (attempt / 250);
    long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * n + 1)) - n;
    long den = 1L << (rng() % 5);
    return make_rational(num, den);
}

} // namespace detail

/// First generic drawing from a deterministic rational grid search.
inline Drawing sample_generic_drawing(const ConstrainedTriangulation &ct, const Parameterization &par,
                                      std::uint64_t seed, const SampleOptions &opt = {},
                                      std::vector<BigRational> *chosen = nullptr) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        std::vector<BigRational> vals;
        for (std::size_t k = 0; k < par.num_params(); ++k) vals.push_back(detail::grid_value(rng, attempt));
        try {
            Drawing d = evaluate_drawing(ct, par, vals);
            if (d.flags.is_generic) {
                if (chosen) *chosen = std::move(vals);
                return d;
            }
        } catch (const DenominatorVanishes &) {
        }
    }
    throw DrawabilityUndecided("no generic drawing found in " + std::to_string(opt.max_attempts) + " attempts");
}

inline Drawing sample_generic_drawing(const ConstrainedTriangulation &ct, std::uint64_t seed,
                                      const SampleOptions &opt = {}) {
    DrawingOrder order;
    try {
        order = find_drawing_order(ct);
    } catch (const Reducible &e) {
        throw DrawabilityUndecided(std::string("no drawing order: ") + e.what());
    } catch (const NotDrawingOrder &e) {
        throw DrawabilityUndecided(std::string("no drawing order: ") + e.what());
    }
    Parameterization par;
    try {
        par = build_parameterization(ct, order, opt.fixed_corners);
    } catch (const IdenticallyParallel &e) {
        throw DrawabilityUndecided(e.what());
    }
    return sample_generic_drawing(ct, par, seed, opt);
}

/// Areas of the living triangles of a concrete drawing.
inline std::vector<BigRational> living_areas(const ConstrainedTriangulation &ct, const std::map<std::string, Point> &pts) {
    std::vector<BigRational> out;
    for (const auto &id : living_triangles(ct)) {
        const auto &t = ct.triangles[static_cast<std::size_t>(ct.triangle_index(id))];
        out.push_back(triangle_area(pts.at(t.verts[0]), pts.at(t.verts[1]), pts.at(t.verts[2])));
    }
    return out;
}

/// x ↦ M x + b.
struct AffineMap {
    std::array<BigRational, 4> m{1, 0, 0, 1}; // row-major 2x2
    Point b{0, 0};

    Point operator()(const Point &x) const {
        return {BigRational(m[0] * x.x + m[1] * x.y + b.x), BigRational(m[2] * x.x + m[3] * x.y + b.y)};
    }
    BigRational det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// The affine map sending a, b, c to (0,0), (1,0), (0,1).
inline AffineMap normalizing_map(const Point &a, const Point &b, const Point &c) {
    BigRational det = doubled_area(a, b, c);
    if (det == 0) throw DegenerateFrame("frame points are collinear");
    // inverse of the matrix with columns (b − a), (c − a)
    BigRational ux = b.x - a.x, uy = b.y - a.y, vx = c.x - a.x, vy = c.y - a.y;
    AffineMap f;
    f.m = {BigRational(vy / det), BigRational(-vx / det), BigRational(-uy / det), BigRational(ux / det)};
    Point ma{BigRational(f.m[0] * a.x + f.m[1] * a.y), BigRational(f.m[2] * a.x + f.m[3] * a.y)};
    f.b = {BigRational(-ma.x), BigRational(-ma.y)};
    return f;
}

inline std::map<std::string, Point> apply(const AffineMap &f, const std::map<std::string, Point> &pts) {
    std::map<std::string, Point> out;
    for (const auto &[k, v] : pts) out.emplace(k, f(v));
    return out;
}

} // namespace monsky
