#pragma once

#include <string>
#include <vector>

#include "areapoly.hpp"

namespace monsky {

struct MonskyPair {
    MultiPoly f, f_tilde;
    int d = 0;
};

/// f = (σ^d + p)/2 and f̃ = (σ^d − p)/2.
inline MonskyPair canonical_monsky(const MultiPoly &p, int d) {
    MultiPoly s = sigma_power(p.vars(), static_cast<unsigned>(d));
    MultiPoly plus = s + p, minus = s - p;
    for (const auto *h : {&plus, &minus})
        for (const auto &t : h->terms())
            if (!is_integer(t.coeff) || BigInt(t.coeff.get_num()) % 2 != 0)
                throw NotMod2("coefficient " + to_string(t.coeff) + " of " + render_monomial(t.mono, *p.vars()) +
                              " in sigma^d +- p is odd");
    return {plus * BigRational(1, 2), minus * BigRational(1, 2), d};
}

inline MonskyPair canonical_monsky(const AreaPolynomial &ap) { return canonical_monsky(ap.p, ap.d); }

/// Whether f0 = (σ^e + p·q)/2 with q ≡ σ^{e−d} (mod 2), e = deg f0.
inline bool is_monsky_polynomial(const MultiPoly &f0, const MultiPoly &p) {
    if (f0.is_zero() || !f0.is_homogeneous()) throw NotHomogeneous("f0 must be a nonzero homogeneous polynomial");
    if (!f0.has_integer_coefficients()) return false;
    const int e = f0.total_degree(), d = p.total_degree();
    if (e < d) return false;
    MultiPoly h = f0 * BigRational(2) - sigma_power(f0.vars(), static_cast<unsigned>(e));
    auto [q, r] = divide(h, p);
    if (!r.is_zero()) return false;
    return congruent_sigma_mod2(q, e - d);
}

/// 2·f0(W) − 1 ≡ 0 for the fixed-corner areas W.
inline bool verify_monsky_identity(const MultiPoly &f0, const AreaSystem &sys) {
    if (f0.num_vars() != sys.W.size()) throw AlgebraError("f0 must have one variable per living triangle");
    const VarList &params = sys.sigma.vars();
    if (f0.is_homogeneous() && !f0.is_zero()) {
        MultiPoly L = MultiPoly::constant(params, 1);
        for (const auto &w : sys.W) L = lcm(L, w.den());
        std::vector<MultiPoly> M;
        for (const auto &w : sys.W) M.push_back(w.num() * divide_exact(L, w.den()));
        MultiPoly lhs = f0.substitute(M, params) * BigRational(2);
        return lhs == L.pow(static_cast<unsigned>(f0.total_degree()));
    }
    RationalFunction acc(params);
    for (const auto &t : f0.terms()) {
        RationalFunction term = RationalFunction::constant(params, t.coeff);
        for (std::size_t j = 0; j < sys.W.size(); ++j)
            for (unsigned k = 0; k < t.mono[j]; ++k) term *= sys.W[j];
        acc += term;
    }
    return (acc * BigRational(2) - RationalFunction::constant(params, 1)).is_zero();
}

inline bool verify_monsky_identity(const MultiPoly &f0, const ConstrainedTriangulation &ct) {
    Parameterization par = drawable_parameterization(ct, {.require_sample = false});
    return verify_monsky_identity(f0, area_system(ct, par));
}

/// Sets the dead variables to zero and drops them from the ring.
inline MultiPoly restrict_to_living(const MultiPoly &f, const std::vector<std::string> &dead) {
    std::vector<std::string> kept;
    for (const auto &v : *f.vars())
        if (std::find(dead.begin(), dead.end(), v) == dead.end()) kept.push_back(v);
    VarList target = make_vars(kept);
    std::vector<MultiPoly> images;
    for (const auto &v : *f.vars()) {
        auto it = std::find(kept.begin(), kept.end(), v);
        images.push_back(it == kept.end() ? MultiPoly(target)
                                          : MultiPoly::variable(target, static_cast<std::size_t>(it - kept.begin())));
    }
    return f.substitute(images, target);
}

struct CoefficientReport {
    bool ok = true;
    std::vector<std::string> violations; // rendered monomials
};

/// |coefficient| ≤ multinomial coefficient of σ^d, monomial by monomial.
inline CoefficientReport is_small(const MultiPoly &p) {
    if (!p.is_homogeneous()) throw NotHomogeneous("smallness needs a homogeneous polynomial");
    CoefficientReport rep;
    for (const auto &t : p.terms())
        if (abs(t.coeff) > BigRational(multinomial(t.mono, p.num_vars()))) {
            rep.ok = false;
            rep.violations.push_back(render_monomial(t.mono, *p.vars()));
        }
    return rep;
}

inline CoefficientReport is_positive(const MultiPoly &f) {
    CoefficientReport rep;
    for (const auto &t : f.terms())
        if (t.coeff < 0) {
            rep.ok = false;
            rep.violations.push_back(render_monomial(t.mono, *f.vars()));
        }
    return rep;
}

struct SplitPM {
    MultiPoly p_plus, p_minus, t;
    bool small = true;
    std::string small_witness; // empty when small
};

/// p = p₊ − p₋ with t = (σ^d − p₊ − p₋)/2, so that f = p₊ + t, f̃ = p₋ + t.
inline SplitPM split_pm(const MultiPoly &p) {
    std::vector<Term> plus, minus;
    for (const auto &t : p.terms()) (t.coeff > 0 ? plus : minus).push_back({t.mono, abs(t.coeff)});
    SplitPM out{MultiPoly::from_terms(p.vars(), std::move(plus)), MultiPoly::from_terms(p.vars(), std::move(minus)),
                MultiPoly(p.vars())};
    int d = p.is_zero() ? 0 : p.total_degree();
    out.t = (sigma_power(p.vars(), static_cast<unsigned>(d)) - out.p_plus - out.p_minus) * BigRational(1, 2);
    auto rep = is_small(p);
    out.small = rep.ok;
    if (!rep.ok) out.small_witness = rep.violations.front();
    return out;
}

/// Honest triangulation with interior chain u1..un: A_1 = p q u1,
/// A_j = q u_j u_{j−1}, A_{n+1} = q r u_n, B_1 = s p u1, B_j = s u_{j−1} u_j,
/// B_{n+1} = r s u_n.
inline ConstrainedTriangulation diagonal_case(int n) {
    if (n < 1) throw AlgebraError("diagonal_case needs n >= 1");
    ConstrainedTriangulation ct;
    ct.name = "diagonal-" + std::to_string(n);
    ct.vertices = {"p", "q", "r", "s"};
    ct.corners = {"p", "q", "r", "s"};
    auto u = [](int j) { return "u" + std::to_string(j); };
    for (int j = 1; j <= n; ++j) ct.vertices.push_back(u(j));
    auto A = [](int j) { return "A" + std::to_string(j); };
    auto B = [](int j) { return "B" + std::to_string(j); };
    ct.triangles.push_back({A(1), {"p", "q", u(1)}});
    for (int j = 2; j <= n; ++j) ct.triangles.push_back({A(j), {"q", u(j), u(j - 1)}});
    ct.triangles.push_back({A(n + 1), {"q", "r", u(n)}});
    ct.triangles.push_back({B(1), {"s", "p", u(1)}});
    for (int j = 2; j <= n; ++j) ct.triangles.push_back({B(j), {"s", u(j - 1), u(j)}});
    ct.triangles.push_back({B(n + 1), {"r", "s", u(n)}});
    return ct;
}

} // namespace monsky
