#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "poly.hpp"

namespace monsky {

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t basis_size = 0;
};

namespace detail {

struct GTerm {
    Monomial mono;
    BigInt coeff;
};

/// Polynomial with integer coefficients sorted descending under the
/// engine's order. `sugar` is the sugar degree used for pair selection.
struct GPoly {
    std::vector<GTerm> terms;
    unsigned sugar = 0;

    bool is_zero() const { return terms.empty(); }
    const Monomial &lm() const { return terms.front().mono; }
    const BigInt &lc() const { return terms.front().coeff; }
};

inline void make_primitive(std::vector<GTerm> &terms) {
    if (terms.empty()) return;
    BigInt g = 0;
    for (const auto &t : terms) {
        g = gcd_int(g, t.coeff);
        if (g == 1) break;
    }
    if (terms.front().coeff < 0) g = -g;
    if (g != 1)
        for (auto &t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

class GroebnerEngine {
public:
    explicit GroebnerEngine(TermOrder order) : order_(order) {}

    GPoly import(const MultiPoly &p) const {
        BigInt den = 1;
        for (const auto &t : p.terms()) den = lcm_int(den, BigInt(t.coeff.get_den()));
        GPoly g;
        g.terms.reserve(p.size());
        for (const auto &t : p.terms()) {
            BigInt c = t.coeff.get_num() * (den / t.coeff.get_den());
            g.terms.push_back({t.mono, std::move(c)});
        }
        sort(g.terms);
        make_primitive(g.terms);
        g.sugar = p.is_zero() ? 0 : static_cast<unsigned>(p.total_degree());
        return g;
    }

    static MultiPoly export_poly(const GPoly &g, const VarList &vars) {
        std::vector<Term> terms;
        terms.reserve(g.terms.size());
        for (const auto &t : g.terms) terms.push_back({t.mono, BigRational(t.coeff)});
        return MultiPoly::from_terms(vars, std::move(terms));
    }

    /// Reduced Gröbner basis (primitive, positive leading coefficients).
    std::vector<GPoly> basis(std::vector<GPoly> input) {
        polys_.clear();
        active_.clear();
        pairs_.clear();
        stats_ = {};
        for (auto &f : input) {
            if (f.is_zero()) continue;
            GPoly h = normal_form(std::move(f));
            if (h.is_zero()) continue;
            if (h.lm().is_one()) return {unit()};
            insert(std::move(h));
        }
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair &a, const Pair &b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                return order_.compare(a.lcm, b.lcm) < 0;
            });
            Pair pr = *best;
            *best = pairs_.back();
            pairs_.pop_back();
            ++stats_.pairs_considered;
            GPoly s = spoly(pr);
            ++stats_.pairs_reduced;
            GPoly h = normal_form(std::move(s));
            if (h.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            if (h.lm().is_one()) return {unit()};
            insert(std::move(h));
        }
        return reduced_basis();
    }

    /// Full normal form of f with respect to the current active set.
    GPoly normal_form(GPoly f) const { return reduce(std::move(f), active_); }

    GPoly reduce_against(GPoly f, const std::vector<GPoly> &basis) const {
        std::vector<std::size_t> idx;
        auto saved = std::move(polys_);
        polys_ = basis;
        for (std::size_t i = 0; i < basis.size(); ++i) idx.push_back(i);
        GPoly r = reduce(std::move(f), idx);
        polys_ = std::move(saved);
        return r;
    }

    const GroebnerStats &stats() const { return stats_; }
    const TermOrder &order() const { return order_; }

    void sort(std::vector<GTerm> &terms) const {
        std::sort(terms.begin(), terms.end(),
                  [&](const GTerm &a, const GTerm &b) { return order_.compare(a.mono, b.mono) > 0; });
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned sugar;
    };

    static GPoly unit() {
        GPoly one;
        one.terms.push_back({Monomial{}, BigInt(1)});
        return one;
    }

    // a*f - b*(m*g), skipping the leading terms of both (they cancel).
    std::vector<GTerm> combine_tail(const std::vector<GTerm> &f, const BigInt &a, const std::vector<GTerm> &g,
                                    const Monomial &m, const BigInt &b) const {
        std::vector<GTerm> out;
        out.reserve(f.size() + g.size());
        std::size_t i = 1, j = 1;
        Monomial gm;
        bool have_gm = false;
        while (i < f.size() || j < g.size()) {
            if (j < g.size() && !have_gm) {
                gm = g[j].mono * m;
                have_gm = true;
            }
            int c = i == f.size() ? -1 : j == g.size() ? 1 : order_.compare(f[i].mono, gm);
            if (c > 0) {
                out.push_back({f[i].mono, a * f[i].coeff});
                ++i;
            } else if (c < 0) {
                out.push_back({gm, -(b * g[j].coeff)});
                ++j;
                have_gm = false;
            } else {
                BigInt v = a * f[i].coeff - b * g[j].coeff;
                if (v != 0) out.push_back({gm, std::move(v)});
                ++i, ++j;
                have_gm = false;
            }
        }
        return out;
    }

    std::size_t find_reducer(const Monomial &m, const std::vector<std::size_t> &set) const {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t k : set) {
            const GPoly &g = polys_[k];
            if (g.lm().divides(m) && (best == std::numeric_limits<std::size_t>::max() ||
                                      g.terms.size() < polys_[best].terms.size()))
                best = k;
        }
        return best;
    }

    GPoly reduce(GPoly f, const std::vector<std::size_t> &set) const {
        std::vector<GTerm> rem;
        std::vector<GTerm> cur = std::move(f.terms);
        unsigned sugar = f.sugar;
        std::size_t steps = 0;
        while (!cur.empty()) {
            std::size_t k = find_reducer(cur.front().mono, set);
            if (k == std::numeric_limits<std::size_t>::max()) {
                rem.push_back(std::move(cur.front()));
                cur.erase(cur.begin());
                continue;
            }
            const GPoly &g = polys_[k];
            Monomial m = quotient(cur.front().mono, g.lm());
            BigInt gg = gcd_int(cur.front().coeff, g.lc());
            BigInt a = g.lc() / gg, b = cur.front().coeff / gg;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            cur = combine_tail(cur, a, g.terms, m, b);
            if (a != 1)
                for (auto &t : rem) t.coeff *= a;
            sugar = std::max(sugar, g.sugar + m.degree());
            if (++steps % 16 == 0) {
                BigInt c = 0;
                for (const auto &t : rem) c = gcd_int(c, t.coeff);
                for (const auto &t : cur) {
                    if (c == 1) break;
                    c = gcd_int(c, t.coeff);
                }
                if (c > 1) {
                    for (auto &t : rem) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
                    for (auto &t : cur) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
                }
            }
        }
        make_primitive(rem);
        GPoly out;
        out.terms = std::move(rem);
        out.sugar = sugar;
        return out;
    }

    GPoly spoly(const Pair &p) const {
        const GPoly &f = polys_[p.i], &g = polys_[p.j];
        Monomial mf = quotient(p.lcm, f.lm()), mg = quotient(p.lcm, g.lm());
        BigInt gg = gcd_int(f.lc(), g.lc());
        BigInt a = g.lc() / gg, b = f.lc() / gg;
        // a*mf*f - b*mg*g
        std::vector<GTerm> left;
        left.reserve(f.terms.size());
        for (const auto &t : f.terms) left.push_back({t.mono * mf, t.coeff});
        GPoly s;
        s.terms = combine_tail(left, a, g.terms, mg, b);
        make_primitive(s.terms);
        s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
        return s;
    }

    // Gebauer–Möller installation of a new basis element.
    void insert(GPoly h) {
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        const GPoly &hp = polys_[hi];
        const Monomial &hm = hp.lm();

        struct Cand {
            Pair pair;
            bool coprime;
            bool alive;
        };
        std::vector<Cand> cand;
        cand.reserve(active_.size());
        for (std::size_t g : active_) {
            const GPoly &gp = polys_[g];
            Monomial l = lcm(gp.lm(), hm);
            unsigned sugar = std::max(gp.sugar + quotient(l, gp.lm()).degree(), hp.sugar + quotient(l, hm).degree());
            cand.push_back({{g, hi, l, sugar}, coprime(gp.lm(), hm), true});
        }
        // Chain criterion among new pairs: drop (h,g1) if some other
        // (h,g2) has lcm dividing it (keep one representative of equal lcms).
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (cand[a].coprime) continue;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || !cand[b].alive) continue;
                if (cand[b].pair.lcm.divides(cand[a].pair.lcm) &&
                    (!(cand[b].pair.lcm == cand[a].pair.lcm) || b < a || cand[b].coprime)) {
                    cand[a].alive = false;
                    break;
                }
            }
        }
        // Old pairs made redundant by h.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (const auto &p : pairs_) {
            if (hm.divides(p.lcm) && !(lcm(polys_[p.i].lm(), hm) == p.lcm) && !(lcm(polys_[p.j].lm(), hm) == p.lcm))
                continue;
            kept.push_back(p);
        }
        // Product criterion.
        for (const auto &c : cand)
            if (c.alive && !c.coprime) kept.push_back(c.pair);
        pairs_ = std::move(kept);

        std::vector<std::size_t> next;
        for (std::size_t g : active_)
            if (!hm.divides(polys_[g].lm())) next.push_back(g);
        next.push_back(hi);
        active_ = std::move(next);
        stats_.basis_size = active_.size();
    }

    std::vector<GPoly> reduced_basis() {
        std::vector<std::size_t> minimal;
        for (std::size_t a : active_) {
            bool redundant = false;
            for (std::size_t b : active_)
                if (a != b && polys_[b].lm().divides(polys_[a].lm()) &&
                    (!(polys_[b].lm() == polys_[a].lm()) || b < a)) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(a);
        }
        std::vector<GPoly> out;
        for (std::size_t a : minimal) {
            std::vector<std::size_t> others;
            for (std::size_t b : minimal)
                if (b != a) others.push_back(b);
            GPoly f = polys_[a];
            // the leading term is irreducible by the others; reduce the tail
            GTerm head = f.terms.front();
            GPoly tail;
            tail.terms.assign(f.terms.begin() + 1, f.terms.end());
            tail.sugar = f.sugar;
            // reduce tail while keeping the head's scale consistent
            GPoly r = reduce_scaled(std::move(head), std::move(tail), others);
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [&](const GPoly &a, const GPoly &b) { return order_.compare(a.lm(), b.lm()) < 0; });
        return out;
    }

    // Reduces head + tail where only the tail may be rewritten.
    GPoly reduce_scaled(GTerm head, GPoly tail, const std::vector<std::size_t> &set) const {
        std::vector<GTerm> done;
        std::vector<GTerm> cur = std::move(tail.terms);
        BigInt scale = 1; // head coefficient multiplier
        while (!cur.empty()) {
            std::size_t k = find_reducer(cur.front().mono, set);
            if (k == std::numeric_limits<std::size_t>::max()) {
                done.push_back(std::move(cur.front()));
                cur.erase(cur.begin());
                continue;
            }
            const GPoly &g = polys_[k];
            Monomial m = quotient(cur.front().mono, g.lm());
            BigInt gg = gcd_int(cur.front().coeff, g.lc());
            BigInt a = g.lc() / gg, b = cur.front().coeff / gg;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            cur = combine_tail(cur, a, g.terms, m, b);
            for (auto &t : done) t.coeff *= a;
            scale *= a;
        }
        GPoly out;
        out.terms.push_back({head.mono, head.coeff * scale});
        for (auto &t : done) out.terms.push_back(std::move(t));
        make_primitive(out.terms);
        out.sugar = tail.sugar;
        return out;
    }

    TermOrder order_;
    mutable std::vector<GPoly> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    GroebnerStats stats_;
};

} // namespace detail

/// Reduced Gröbner basis of the ideal generated by `generators` (all over
/// the same variables). Elements are primitive integer polynomials with
/// positive leading coefficient, sorted by increasing leading monomial.
inline std::vector<MultiPoly> buchberger(const std::vector<MultiPoly> &generators, const TermOrder &order,
                                         GroebnerStats *stats = nullptr) {
    if (generators.empty()) return {};
    const VarList vars = generators.front().vars();
    for (const auto &g : generators)
        if (!same_vars(g.vars(), vars)) throw AlgebraError("generators live in different rings");
    detail::GroebnerEngine engine(order);
    std::vector<detail::GPoly> in;
    for (const auto &g : generators) in.push_back(engine.import(g));
    auto gb = engine.basis(std::move(in));
    if (stats) *stats = engine.stats();
    std::vector<MultiPoly> out;
    out.reserve(gb.size());
    for (const auto &g : gb) out.push_back(detail::GroebnerEngine::export_poly(g, vars));
    return out;
}

/// Normal form of f modulo `basis` (assumed to be a Gröbner basis for
/// `order`), up to a nonzero rational scalar.
inline MultiPoly normal_form(const MultiPoly &f, const std::vector<MultiPoly> &basis, const TermOrder &order) {
    detail::GroebnerEngine engine(order);
    std::vector<detail::GPoly> gb;
    for (const auto &g : basis) gb.push_back(engine.import(g));
    return detail::GroebnerEngine::export_poly(engine.reduce_against(engine.import(f), gb), f.vars());
}

inline bool ideal_contains(const std::vector<MultiPoly> &basis, const MultiPoly &f, const TermOrder &order) {
    return normal_form(f, basis, order).is_zero();
}

inline std::uint32_t variable_mask(const VarList &vars, const std::vector<std::string> &names) {
    std::uint32_t mask = 0;
    for (const auto &n : names) {
        auto it = std::find(vars->begin(), vars->end(), n);
        if (it == vars->end()) throw AlgebraError("unknown variable " + n);
        mask |= 1u << static_cast<unsigned>(it - vars->begin());
    }
    return mask;
}

/// Generators of the elimination ideal I ∩ ℚ[kept variables]: the members
/// free of `drop` in a reduced Gröbner basis under a block order with the
/// dropped variables greatest.
inline std::vector<MultiPoly> eliminate(const std::vector<MultiPoly> &generators, const std::vector<std::string> &drop,
                                        bool inner_lex = false, GroebnerStats *stats = nullptr) {
    if (generators.empty()) return {};
    std::uint32_t mask = variable_mask(generators.front().vars(), drop);
    auto gb = buchberger(generators, TermOrder::elimination(mask, inner_lex), stats);
    std::vector<MultiPoly> out;
    for (auto &g : gb) {
        bool free = std::all_of(g.terms().begin(), g.terms().end(),
                                [&](const Term &t) { return (t.mono.support() & mask) == 0; });
        if (free) out.push_back(std::move(g));
    }
    return out;
}

} // namespace monsky
