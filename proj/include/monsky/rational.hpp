#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace monsky {

using BigInt = mpz_class;
/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, coprime).
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
    if (den == 0) throw AlgebraError("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a", "-a" or "a/b" (decimal integers, b != 0).
inline BigRational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return SchemaError("not an exact rational: \"" + s + "\""); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto is_int = [](const std::string &t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    if (num[0] == '+') num.erase(0, 1);
    BigInt n(num, 10), d(den, 10);
    if (d == 0) throw bad();
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const BigRational &r) { return r.get_str(10); }
inline std::string to_string(const BigInt &z) { return z.get_str(10); }

inline bool is_integer(const BigRational &r) { return r.get_den() == 1; }

/// v₂(z) for z != 0.
inline long two_adic_valuation(const BigInt &z) {
    return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

/// v₂(r) = v₂(num) − v₂(den); nullopt for r = 0 (valuation +∞).
inline std::optional<long> two_adic_valuation(const BigRational &r) {
    if (r == 0) return std::nullopt;
    return two_adic_valuation(BigInt(r.get_num())) - two_adic_valuation(BigInt(r.get_den()));
}

inline BigInt abs_int(const BigInt &z) { return abs(z); }

inline BigInt gcd_int(const BigInt &a, const BigInt &b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm_int(const BigInt &a, const BigInt &b) {
    BigInt g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace monsky
