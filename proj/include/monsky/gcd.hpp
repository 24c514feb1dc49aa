#pragma once

#include <vector>

#include "poly.hpp"

namespace monsky {

namespace detail {

/// Coefficients of `a` viewed as a univariate polynomial in variable v.
inline std::vector<MultiPoly> coefficients_in(const MultiPoly &a, std::size_t v) {
    std::vector<std::vector<Term>> buckets(a.degree_in(v) + 1);
    for (const auto &t : a.terms()) {
        Monomial m = t.mono;
        unsigned e = m[v];
        m.set(v, 0);
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto &b : buckets) out.push_back(MultiPoly::from_terms(a.vars(), std::move(b)));
    return out;
}

inline MultiPoly lead_coefficient_in(const MultiPoly &a, std::size_t v) {
    return coefficients_in(a, v).back();
}

/// Pseudo-remainder of a by b with respect to variable v.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly &b, std::size_t v) {
    const unsigned db = b.degree_in(v);
    const MultiPoly lb = lead_coefficient_in(b, v);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        unsigned da = a.degree_in(v);
        MultiPoly la = lead_coefficient_in(a, v);
        MultiPoly shift = la.times_term(Monomial::variable(v, da - db), 1);
        a = lb * a - shift * b;
        a = a.primitive_part(); // the rational scale is irrelevant over ℚ
    }
    return a;
}

inline int first_variable(const MultiPoly &a, const MultiPoly &b) {
    std::uint32_t s = 0;
    for (const auto &t : a.terms()) s |= t.mono.support();
    for (const auto &t : b.terms()) s |= t.mono.support();
    return s ? __builtin_ctz(s) : -1;
}

} // namespace detail

MultiPoly gcd(const MultiPoly &a, const MultiPoly &b);

/// gcd of the coefficients of `a` as a polynomial in v.
inline MultiPoly content_in(const MultiPoly &a, std::size_t v) {
    MultiPoly g(a.vars());
    for (const auto &c : detail::coefficients_in(a, v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

/// Greatest common divisor over ℚ via content/primitive-part recursion on
/// the least variable. Normalized: integer content 1, positive leading
/// coefficient; gcd(0, 0) = 0.
inline MultiPoly gcd(const MultiPoly &a, const MultiPoly &b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), 1);
    int vi = detail::first_variable(a, b);
    auto v = static_cast<std::size_t>(vi);
    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly c = gcd(ca, cb);
    MultiPoly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (pb.degree_in(v) > 0) {
        MultiPoly r = detail::pseudo_remainder(pa, pb, v);
        if (r.is_zero()) break;
        pa = std::move(pb);
        pb = divide_exact(r, content_in(r, v));
    }
    if (pb.degree_in(v) == 0) pb = MultiPoly::constant(a.vars(), 1);
    return (c * pb).primitive_part();
}

inline MultiPoly lcm(const MultiPoly &a, const MultiPoly &b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars());
    return divide_exact(a * b, gcd(a, b)).primitive_part();
}

} // namespace monsky
