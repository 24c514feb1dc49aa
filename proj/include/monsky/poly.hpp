#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace monsky {

/// Ordered variable names of a polynomial ring. Shared between polynomials.
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    if (names.size() > kMaxVars) throw AlgebraError("at most 32 variables are supported");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw AlgebraError("duplicate variable " + names[i]);
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const VarList &a, const VarList &b) { return a == b || *a == *b; }

struct Term {
    Monomial mono;
    BigRational coeff;
};

/// Sparse multivariate polynomial over ℚ. Terms are kept in graded-lex
/// descending order with no zero coefficients.
class MultiPoly {
public:
    MultiPoly() : vars_(make_vars({})) {}
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarList vars, const BigRational &c) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static MultiPoly variable(VarList vars, std::size_t i) {
        if (i >= vars->size()) throw AlgebraError("variable index out of range");
        MultiPoly p(std::move(vars));
        p.terms_.push_back({Monomial::variable(i), BigRational(1)});
        return p;
    }
    static MultiPoly variable(VarList vars, const std::string &name) {
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end()) throw AlgebraError("unknown variable " + name);
        return variable(vars, static_cast<std::size_t>(it - vars->begin()));
    }
    /// Builds from unsorted terms; like monomials are combined.
    static MultiPoly from_terms(VarList vars, std::vector<Term> terms) {
        MultiPoly p(std::move(vars));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const VarList &vars() const { return vars_; }
    std::size_t num_vars() const { return vars_->size(); }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    BigRational constant_value() const {
        if (!is_constant()) throw AlgebraError("polynomial is not constant");
        return terms_.empty() ? BigRational(0) : terms_[0].coeff;
    }
    const Term &leading_term() const {
        if (terms_.empty()) throw AlgebraError("zero polynomial has no leading term");
        return terms_.front();
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto &t : terms_) d = std::max<unsigned>(d, t.mono[var]);
        return d;
    }

    bool is_homogeneous() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term &t) { return t.mono.degree() == terms_.front().mono.degree(); });
    }

    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return is_integer(t.coeff); });
    }

    BigRational coefficient(const Monomial &m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term &t, const Monomial &x) { return compare_grlex(t.mono, x) > 0; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return 0;
    }

    friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
        if (!same_vars(a.vars_, b.vars_) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        return true;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto &t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b) { return combine(a, b, false); }
    friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b) { return combine(a, b, true); }
    MultiPoly &operator+=(const MultiPoly &b) { return *this = *this + b; }
    MultiPoly &operator-=(const MultiPoly &b) { return *this = *this - b; }

    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
        a.check_ring(b);
        MultiPoly r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        if (b.is_constant()) return a * b.terms_[0].coeff;
        if (a.is_constant()) return b * a.terms_[0].coeff;
        std::unordered_map<Monomial, BigRational, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto &x : a.terms_)
            for (const auto &y : b.terms_) {
                auto [it, fresh] = acc.try_emplace(x.mono * y.mono, x.coeff * y.coeff);
                if (!fresh) it->second += x.coeff * y.coeff;
            }
        r.terms_.reserve(acc.size());
        for (auto &[m, c] : acc)
            if (c != 0) r.terms_.push_back({m, std::move(c)});
        r.sort_terms();
        return r;
    }
    MultiPoly &operator*=(const MultiPoly &b) { return *this = *this * b; }

    friend MultiPoly operator*(const MultiPoly &a, const BigRational &c) {
        MultiPoly r(a.vars_);
        if (c == 0) return r;
        r.terms_ = a.terms_;
        for (auto &t : r.terms_) t.coeff *= c;
        return r;
    }
    friend MultiPoly operator*(const BigRational &c, const MultiPoly &a) { return a * c; }

    /// Multiplies by a single term.
    MultiPoly times_term(const Monomial &m, const BigRational &c) const {
        MultiPoly r(vars_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto &t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r; // multiplication by a monomial preserves grlex order
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly result = constant(vars_, 1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    BigRational evaluate(std::span<const BigRational> point) const {
        if (point.size() != num_vars()) throw AlgebraError("evaluation point has wrong arity");
        BigRational sum = 0;
        std::vector<std::vector<BigRational>> powers(num_vars());
        for (const auto &t : terms_) {
            BigRational v = t.coeff;
            for (std::uint32_t s = t.mono.support(); s; s &= s - 1) {
                auto i = static_cast<std::size_t>(__builtin_ctz(s));
                auto &pw = powers[i];
                if (pw.empty()) pw.push_back(1);
                while (pw.size() <= t.mono[i]) pw.push_back(pw.back() * point[i]);
                v *= pw[t.mono[i]];
            }
            sum += v;
        }
        return sum;
    }

    /// Replaces variable i by images[i] (all in ring `target`).
    MultiPoly substitute(std::span<const MultiPoly> images, const VarList &target) const {
        if (images.size() != num_vars()) throw AlgebraError("substitution has wrong arity");
        for (const auto &im : images)
            if (!same_vars(im.vars(), target)) throw AlgebraError("substitution images live in a different ring");
        std::vector<std::vector<MultiPoly>> powers(num_vars());
        MultiPoly sum(target);
        std::vector<Term> acc;
        for (const auto &t : terms_) {
            MultiPoly v = constant(target, t.coeff);
            for (std::uint32_t s = t.mono.support(); s; s &= s - 1) {
                auto i = static_cast<std::size_t>(__builtin_ctz(s));
                auto &pw = powers[i];
                if (pw.empty()) pw.push_back(constant(target, 1));
                while (pw.size() <= t.mono[i]) pw.push_back(pw.back() * images[i]);
                v *= pw[t.mono[i]];
            }
            acc.insert(acc.end(), v.terms_.begin(), v.terms_.end());
        }
        return from_terms(target, std::move(acc));
    }

    /// Re-expresses this polynomial in `target`, matching variables by name.
    /// Variables missing from `target` must not occur.
    MultiPoly remap(const VarList &target) const {
        if (same_vars(vars_, target)) return MultiPoly(target, terms_);
        std::vector<int> where(num_vars(), -1);
        for (std::size_t i = 0; i < num_vars(); ++i) {
            auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
            if (it != target->end()) where[i] = static_cast<int>(it - target->begin());
        }
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto &t : terms_) {
            Monomial m;
            for (std::uint32_t s = t.mono.support(); s; s &= s - 1) {
                auto i = static_cast<std::size_t>(__builtin_ctz(s));
                if (where[i] < 0) throw AlgebraError("variable " + (*vars_)[i] + " missing from target ring");
                m.set(static_cast<std::size_t>(where[i]), t.mono[i]);
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(target, std::move(out));
    }

    /// gcd of numerators over lcm of denominators, signed so that
    /// this / content() has a positive leading coefficient. Zero for zero.
    BigRational content() const {
        if (terms_.empty()) return 0;
        BigInt g = 0, l = 1;
        for (const auto &t : terms_) {
            g = gcd_int(g, BigInt(t.coeff.get_num()));
            l = lcm_int(l, BigInt(t.coeff.get_den()));
        }
        BigRational c(g, l);
        c.canonicalize();
        if (terms_.front().coeff < 0) c = -c;
        return c;
    }

    /// Integer coefficients, content 1, positive leading coefficient.
    MultiPoly primitive_part() const {
        if (terms_.empty()) return *this;
        BigRational c = content();
        return *this * BigRational(1 / c);
    }

    MultiPoly map_coefficients(const auto &fn) const {
        std::vector<Term> out;
        for (const auto &t : terms_) out.push_back({t.mono, fn(t.coeff)});
        return from_terms(vars_, std::move(out));
    }

    std::string to_string() const;

private:
    MultiPoly(VarList vars, std::vector<Term> sorted) : vars_(std::move(vars)), terms_(std::move(sorted)) {}

    void check_ring(const MultiPoly &b) const {
        if (!same_vars(vars_, b.vars_)) throw AlgebraError("polynomials live in different rings");
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term &x, const Term &y) { return compare_grlex(x.mono, y.mono) > 0; });
    }

    void normalize() {
        sort_terms();
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto &t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                continue;
            }
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        terms_ = std::move(out);
    }

    static MultiPoly combine(const MultiPoly &a, const MultiPoly &b, bool subtract) {
        a.check_ring(b);
        MultiPoly r(a.vars_);
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int c = i == a.size() ? -1 : j == b.size() ? 1 : compare_grlex(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
                if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
            } else {
                BigRational s = subtract ? BigRational(a.terms_[i].coeff - b.terms_[j].coeff)
                                         : BigRational(a.terms_[i].coeff + b.terms_[j].coeff);
                if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        return r;
    }

    VarList vars_;
    std::vector<Term> terms_;
};

/// Canonical rendering: graded-lex descending, "*" between factors, "^" for
/// powers, unit coefficients omitted, "0" for the zero polynomial.
inline std::string render_monomial(const Monomial &m, const std::vector<std::string> &names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        BigRational mag = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) out += '-';
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += monsky::to_string(mag);
        } else {
            if (mag != 1) out += monsky::to_string(mag) + '*';
            out += render_monomial(t.mono, *vars_);
        }
    }
    return out;
}

/// Multivariate division by a single divisor (grlex). Returns {quotient, remainder}.
inline std::pair<MultiPoly, MultiPoly> divide(const MultiPoly &a, const MultiPoly &b) {
    if (b.is_zero()) throw AlgebraError("division by zero polynomial");
    if (!same_vars(a.vars(), b.vars())) throw AlgebraError("polynomials live in different rings");
    const Term &lt = b.leading_term();
    std::vector<Term> q_terms, r_terms;
    MultiPoly rest = a;
    while (!rest.is_zero()) {
        Term t = rest.leading_term();
        if (lt.mono.divides(t.mono)) {
            Monomial m = quotient(t.mono, lt.mono);
            BigRational c = t.coeff / lt.coeff;
            q_terms.push_back({m, c});
            rest -= b.times_term(m, c);
        } else {
            rest -= MultiPoly::from_terms(a.vars(), {t});
            r_terms.push_back(std::move(t));
        }
    }
    return {MultiPoly::from_terms(a.vars(), std::move(q_terms)), MultiPoly::from_terms(a.vars(), std::move(r_terms))};
}

/// a / b, which must be exact.
inline MultiPoly divide_exact(const MultiPoly &a, const MultiPoly &b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) throw AlgebraError("inexact polynomial division");
    return q;
}

/// Sum of the ring's variables raised to the power d.
inline MultiPoly sigma_power(const VarList &vars, unsigned d) {
    MultiPoly s(vars);
    for (std::size_t i = 0; i < vars->size(); ++i) s += MultiPoly::variable(vars, i);
    return s.pow(d);
}

/// Multinomial coefficient deg! / Π e_i! of a monomial.
inline BigInt multinomial(const Monomial &m, std::size_t nvars) {
    BigInt r = factorial(m.degree());
    for (std::size_t i = 0; i < nvars; ++i) r /= factorial(m[i]);
    return r;
}

} // namespace monsky
