#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "param.hpp"

namespace monsky {

/// ‖a‖ = 2^(−v₂(a)); ‖0‖ = 0. Stored as the valuation (nullopt for zero).
class TwoAdicNorm {
public:
    explicit TwoAdicNorm(const BigRational &a) : v_(two_adic_valuation(a)) {}

    bool is_zero() const { return !v_; }
    std::optional<long> valuation() const { return v_; }
    /// The norm as an exact rational.
    BigRational value() const {
        if (!v_) return 0;
        BigRational r = 1;
        if (*v_ > 0) mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(*v_));
        else mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(-*v_));
        return r;
    }

    friend bool operator==(const TwoAdicNorm &a, const TwoAdicNorm &b) { return a.v_ == b.v_; }
    friend bool operator<(const TwoAdicNorm &a, const TwoAdicNorm &b) {
        if (!b.v_) return false;
        if (!a.v_) return true;
        return *a.v_ > *b.v_;
    }
    friend bool operator<=(const TwoAdicNorm &a, const TwoAdicNorm &b) { return !(b < a); }
    friend bool operator>=(const TwoAdicNorm &a, const TwoAdicNorm &b) { return !(a < b); }
    friend bool operator>(const TwoAdicNorm &a, const TwoAdicNorm &b) { return b < a; }

    static TwoAdicNorm one() { return TwoAdicNorm(BigRational(1)); }

private:
    std::optional<long> v_;
};

enum class SpernerColor { A, B, C };

inline char to_char(SpernerColor c) { return c == SpernerColor::A ? 'A' : c == SpernerColor::B ? 'B' : 'C'; }

inline SpernerColor color(const Point &pt) {
    TwoAdicNorm nx(pt.x), ny(pt.y);
    if (nx >= ny && nx >= TwoAdicNorm::one()) return SpernerColor::A;
    if (ny >= TwoAdicNorm::one()) return SpernerColor::B;
    return SpernerColor::C;
}

enum class LemmaCheck { Holds, Fails, NotApplicable };

inline const char *to_string(LemmaCheck c) {
    return c == LemmaCheck::Holds ? "holds" : c == LemmaCheck::Fails ? "fails" : "not applicable";
}

/// For C-coloured ψ, φ and φ + ψ have the same colour.
inline LemmaCheck check_translation_lemma(const Point &phi, const Point &psi) {
    if (color(psi) != SpernerColor::C) return LemmaCheck::NotApplicable;
    return color(phi) == color(phi + psi) ? LemmaCheck::Holds : LemmaCheck::Fails;
}

inline bool is_rainbow(SpernerColor a, SpernerColor b, SpernerColor c) { return a != b && b != c && a != c; }

/// An ABC-coloured triangle has area of norm > 1.
inline LemmaCheck check_area_lemma(const Point &a, const Point &b, const Point &c) {
    if (!is_rainbow(color(a), color(b), color(c))) return LemmaCheck::NotApplicable;
    return TwoAdicNorm(triangle_area(a, b, c)) > TwoAdicNorm::one() ? LemmaCheck::Holds : LemmaCheck::Fails;
}

struct RainbowResult {
    std::string triangle;                       // first rainbow triangle in input order
    BigRational area;                           // its area after normalization
    std::size_t count = 0;                      // number of rainbow triangles
    std::map<std::string, SpernerColor> colors; // of the normalized vertices
    std::map<std::string, Point> normalized;
};

/// Normalizes the drawing so that p, q, s go to (0,0), (1,0), (0,1), colours
/// every vertex and returns the first ABC triangle.
inline RainbowResult find_rainbow_triangle(const ConstrainedTriangulation &ct, const std::map<std::string, Point> &pts) {
    if (!ct.constraints.empty()) throw InvalidTriangulation("rainbow search needs an honest triangulation");
    AffineMap m = normalizing_map(pts.at(ct.corners[P]), pts.at(ct.corners[Q]), pts.at(ct.corners[S]));
    RainbowResult res;
    res.normalized = monsky::apply(m, pts);
    for (const auto &[v, x] : res.normalized) res.colors.emplace(v, color(x));
    for (const auto &t : ct.triangles) {
        if (!is_rainbow(res.colors.at(t.verts[0]), res.colors.at(t.verts[1]), res.colors.at(t.verts[2]))) continue;
        if (res.count++ == 0) {
            res.triangle = t.id;
            res.area = triangle_area(res.normalized.at(t.verts[0]), res.normalized.at(t.verts[1]),
                                     res.normalized.at(t.verts[2]));
        }
    }
    if (res.count == 0) throw VerificationFailed("no ABC triangle found");
    return res;
}

} // namespace monsky
