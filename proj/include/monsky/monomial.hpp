#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>

#include "errors.hpp"

namespace monsky {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector over at most kMaxVars variables. Unused slots stay zero,
/// so comparisons never need to know the ring size.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;

    static Monomial variable(std::size_t i, unsigned power = 1) {
        Monomial m;
        m.set(i, power);
        return m;
    }

    static Monomial from_exponents(std::span<const unsigned> exps) {
        if (exps.size() > kMaxVars) throw AlgebraError("too many variables");
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
        return m;
    }

    Exponent operator[](std::size_t i) const { return exps_[i]; }

    void set(std::size_t i, unsigned power) {
        if (i >= kMaxVars) throw AlgebraError("variable index out of range");
        if (power > std::numeric_limits<Exponent>::max()) throw AlgebraError("exponent overflow");
        degree_ = degree_ - exps_[i] + power;
        exps_[i] = static_cast<Exponent>(power);
        if (power) support_ |= (1u << i);
        else support_ &= ~(1u << i);
    }

    unsigned degree() const { return degree_; }
    std::uint32_t support() const { return support_; }
    bool is_one() const { return degree_ == 0; }

    unsigned degree_in(std::uint32_t mask) const {
        unsigned d = 0;
        for (std::uint32_t s = support_ & mask; s; s &= s - 1)
            d += exps_[static_cast<std::size_t>(__builtin_ctz(s))];
        return d;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
            if (e > std::numeric_limits<Exponent>::max()) throw AlgebraError("exponent overflow");
            r.exps_[i] = static_cast<Exponent>(e);
        }
        r.degree_ = a.degree_ + b.degree_;
        r.support_ = a.support_ | b.support_;
        return r;
    }

    bool divides(const Monomial &b) const {
        if ((support_ & ~b.support_) != 0 || degree_ > b.degree_) return false;
        for (std::uint32_t s = support_; s; s &= s - 1) {
            auto i = static_cast<std::size_t>(__builtin_ctz(s));
            if (exps_[i] > b.exps_[i]) return false;
        }
        return true;
    }

    /// b / a; requires a | b.
    friend Monomial quotient(const Monomial &b, const Monomial &a) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.exps_[i] = static_cast<Exponent>(b.exps_[i] - a.exps_[i]);
            if (r.exps_[i]) r.support_ |= (1u << i);
        }
        r.degree_ = b.degree_ - a.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial &a, const Monomial &b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.support_ = a.support_ | b.support_;
        r.degree_ = 0;
        for (auto e : r.exps_) r.degree_ += e;
        return r;
    }

    friend bool coprime(const Monomial &a, const Monomial &b) { return (a.support_ & b.support_) == 0; }

    friend bool operator==(const Monomial &a, const Monomial &b) {
        return a.degree_ == b.degree_ && a.support_ == b.support_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const {
        std::size_t h = degree_;
        for (std::uint32_t s = support_; s; s &= s - 1) {
            auto i = static_cast<std::size_t>(__builtin_ctz(s));
            h = h * 1000003u ^ (i * 131u + exps_[i]);
        }
        return h;
    }

private:
    std::array<Exponent, kMaxVars> exps_{};
    unsigned degree_ = 0;
    std::uint32_t support_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

/// Lexicographic comparison with variable 0 largest. Returns -1/0/1.
inline int compare_lex(const Monomial &a, const Monomial &b, std::uint32_t mask = ~0u) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (!(mask & (1u << i))) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

/// Graded lexicographic: total degree first, then lex. This is the canonical
/// storage and rendering order of MultiPoly.
inline int compare_grlex(const Monomial &a, const Monomial &b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return compare_lex(a, b);
}

/// Reverse lexicographic tie-break restricted to `mask`: the monomial with the
/// smaller exponent in the last differing variable is larger.
inline int compare_revlex_tail(const Monomial &a, const Monomial &b, std::uint32_t mask = ~0u) {
    for (std::size_t i = kMaxVars; i-- > 0;) {
        if (!(mask & (1u << i))) continue;
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline int compare_grevlex(const Monomial &a, const Monomial &b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return compare_revlex_tail(a, b);
}

/// Admissible monomial order used by the Gröbner engine.
struct TermOrder {
    enum class Kind { Lex, Grevlex, Elimination };

    Kind kind = Kind::Grevlex;
    /// Elimination only: variables of the first (greater) block.
    std::uint32_t block = 0;
    /// Elimination only: order used inside each block.
    bool inner_lex = false;

    static TermOrder lex() { return {Kind::Lex, 0, true}; }
    static TermOrder grevlex() { return {Kind::Grevlex, 0, false}; }
    static TermOrder elimination(std::uint32_t drop_mask, bool inner_lex = false) {
        return {Kind::Elimination, drop_mask, inner_lex};
    }

    int compare(const Monomial &a, const Monomial &b) const {
        switch (kind) {
        case Kind::Lex: return compare_lex(a, b);
        case Kind::Grevlex: return compare_grevlex(a, b);
        case Kind::Elimination: {
            if (inner_lex) {
                int c = compare_lex(a, b, block);
                return c != 0 ? c : compare_lex(a, b, ~block);
            }
            unsigned da = a.degree_in(block), db = b.degree_in(block);
            if (da != db) return da > db ? 1 : -1;
            int c = compare_revlex_tail(a, b, block);
            if (c != 0) return c;
            unsigned ra = a.degree() - da, rb = b.degree() - db;
            if (ra != rb) return ra > rb ? 1 : -1;
            return compare_revlex_tail(a, b, ~block);
        }
        }
        return 0;
    }
};

} // namespace monsky
