#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "param.hpp"

namespace monsky {

struct AreaPolynomial {
    MultiPoly p;                  // in the living-triangle variables
    int d = 0;                    // degree
    std::string sign_witness;     // the monomial A_1^d whose coefficient is positive
    GroebnerStats stats;
    double seconds = 0;

    const VarList &vars() const { return p.vars(); }
};

struct AreaPolyOptions {
    bool inner_lex = false;                 // lex instead of grevlex inside the elimination blocks
    std::optional<DrawingOrder> order;      // default: the peeling order
    bool require_sample = true;             // insist on one sampled generic drawing first
    std::uint64_t sample_seed = 0;
};

/// Living-triangle variables of a triangulation.
inline VarList living_vars(const ConstrainedTriangulation &ct) { return make_vars(living_triangles(ct)); }

/// p ≡ σ^d (mod 2), coefficientwise.
inline bool congruent_sigma_mod2(const MultiPoly &p, int d) {
    MultiPoly diff = p - sigma_power(p.vars(), static_cast<unsigned>(d));
    for (const auto &t : diff.terms())
        if (!is_integer(t.coeff) || BigInt(t.coeff.get_num()) % 2 != 0) return false;
    return true;
}

/// Drawing order and fixed-corner parameterization, with upstream failures
/// reported as NotDrawable.
inline Parameterization drawable_parameterization(const ConstrainedTriangulation &ct, const AreaPolyOptions &opt = {}) {
    require_valid(ct);
    try {
        DrawingOrder order = opt.order ? compute_alpha(ct, opt.order->sequence) : find_drawing_order(ct);
        Parameterization par = build_parameterization(ct, order, true);
        if (opt.require_sample) sample_generic_drawing(ct, par, opt.sample_seed);
        return par;
    } catch (const Reducible &e) {
        throw NotDrawable(e.what());
    } catch (const NotDrawingOrder &e) {
        throw NotDrawable(e.what());
    } catch (const PeelingStuck &e) {
        throw NotDrawable(e.what());
    } catch (const IdenticallyParallel &e) {
        throw NotDrawable(e.what());
    } catch (const DrawabilityUndecided &e) {
        throw NotDrawable(e.what());
    }
}

/// Exact check that p vanishes on the parameterized areas: with
/// W_j = M_j / L over a common denominator, p(M) must be the zero polynomial.
inline bool vanishes_on(const MultiPoly &p, const AreaSystem &sys) {
    if (sys.W.empty()) return p.is_zero();
    const VarList &params = sys.W.front().vars();
    MultiPoly L = MultiPoly::constant(params, 1);
    for (const auto &w : sys.W) L = lcm(L, w.den());
    std::vector<MultiPoly> M;
    for (const auto &w : sys.W) M.push_back(w.num() * divide_exact(L, w.den()));
    return p.substitute(M, params).is_zero();
}

inline AreaPolynomial area_polynomial(const ConstrainedTriangulation &ct, const AreaPolyOptions &opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    Parameterization par = drawable_parameterization(ct, opt);
    AreaSystem sys = area_system(ct, par);
    const std::size_t n = sys.living.size();
    if (n < 2) throw NotHyper("fewer than two living triangles");

    // Ring: living areas, parameters, Rabinowitsch variable.
    std::vector<std::string> names = sys.living;
    for (const auto &w : *par.params) names.push_back(w);
    std::string tname = "t";
    while (std::find(names.begin(), names.end(), tname) != names.end()) tname += "_";
    names.push_back(tname);
    VarList ring = make_vars(names);
    std::vector<MultiPoly> into;
    for (std::size_t i = 0; i < par.num_params(); ++i) into.push_back(MultiPoly::variable(ring, n + i));

    std::vector<MultiPoly> gens;
    std::vector<MultiPoly> dens;
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly N = sys.W[j].num().substitute(into, ring), D = sys.W[j].den().substitute(into, ring);
        gens.push_back(MultiPoly::variable(ring, j) * D - N);
        if (!D.is_constant() && std::find(dens.begin(), dens.end(), D) == dens.end()) dens.push_back(D);
    }
    std::vector<std::string> drop(par.params->begin(), par.params->end());
    if (!dens.empty()) {
        MultiPoly prod = MultiPoly::constant(ring, 1);
        for (const auto &D : dens) prod *= D;
        gens.push_back(MultiPoly::variable(ring, ring->size() - 1) * prod - MultiPoly::constant(ring, 1));
        drop.push_back(tname);
    }
    AreaPolynomial out;
    auto elim = eliminate(gens, drop, opt.inner_lex, &out.stats);

    // Dehomogenize with A_n = 1 − ΣA_{j<n} and demand a principal ideal.
    VarList avars = make_vars(sys.living);
    std::vector<std::string> short_names(sys.living.begin(), sys.living.end() - 1);
    VarList affine = make_vars(short_names);
    std::vector<MultiPoly> images;
    for (std::size_t j = 0; j + 1 < n; ++j) images.push_back(MultiPoly::variable(affine, j));
    MultiPoly last = MultiPoly::constant(affine, 1);
    for (std::size_t j = 0; j + 1 < n; ++j) last -= MultiPoly::variable(affine, j);
    images.push_back(last);
    for (std::size_t i = n; i < ring->size(); ++i) images.push_back(MultiPoly(affine));
    std::vector<MultiPoly> reduced;
    for (const auto &g : elim) {
        MultiPoly h = g.substitute(images, affine);
        if (!h.is_zero()) reduced.push_back(h);
    }
    auto gb = buchberger(reduced, TermOrder::grevlex());
    if (gb.size() != 1)
        throw NotHyper("area variety ideal needs " + std::to_string(gb.size()) + " generators after dehomogenizing");
    const MultiPoly &qt = gb.front();
    if (qt.is_constant()) throw NotHyper("area map image is empty or the ideal is trivial");

    // Rehomogenize: p = σ^d q̃(A/σ).
    const int d = qt.total_degree();
    MultiPoly sigma(avars);
    for (std::size_t j = 0; j < n; ++j) sigma += MultiPoly::variable(avars, j);
    std::vector<MultiPoly> sigma_pows{MultiPoly::constant(avars, 1)};
    for (int k = 1; k <= d; ++k) sigma_pows.push_back(sigma_pows.back() * sigma);
    MultiPoly p(avars);
    for (const auto &t : qt.terms()) {
        Monomial m;
        for (std::size_t j = 0; j + 1 < n; ++j) m.set(j, t.mono[j]);
        p += sigma_pows[static_cast<std::size_t>(d - static_cast<int>(t.mono.degree()))].times_term(m, t.coeff);
    }
    p = p.primitive_part();
    BigRational lead = p.coefficient(Monomial::variable(0, static_cast<unsigned>(d)));
    if (lead == 0) throw VerificationFailed("coefficient of " + sys.living[0] + "^d vanishes");
    if (lead < 0) p = -p;

    if (!p.is_homogeneous() || p.total_degree() != d) throw VerificationFailed("p is not homogeneous");
    if (!congruent_sigma_mod2(p, d)) throw VerificationFailed("p is not congruent to sigma^d mod 2");
    if (!vanishes_on(p, sys)) throw VerificationFailed("p does not vanish on the area map");

    out.p = std::move(p);
    out.d = d;
    out.sign_witness = render_monomial(Monomial::variable(0, static_cast<unsigned>(d)), *avars);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

/// p evaluated at the exact areas of sampled generic drawings.
inline bool verify_vanishing(const MultiPoly &p, const ConstrainedTriangulation &ct, int samples, std::uint64_t seed) {
    Parameterization par = drawable_parameterization(ct, {.require_sample = false});
    for (int i = 0; i < samples; ++i) {
        Drawing d = sample_generic_drawing(ct, par, seed + static_cast<std::uint64_t>(i));
        auto areas = living_areas(ct, d.points);
        if (p.evaluate(areas) != 0) return false;
    }
    return true;
}

struct EquidissectionObstruction {
    BigRational p_at_ones;
    bool deformable_to_equal_areas; // necessary condition only
};

inline EquidissectionObstruction equidissection_obstruction(const MultiPoly &p) {
    std::vector<BigRational> ones(p.num_vars(), BigRational(1));
    BigRational v = p.evaluate(ones);
    return {v, v == 0};
}

} // namespace monsky
