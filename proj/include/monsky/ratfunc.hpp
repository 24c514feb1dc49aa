#pragma once

#include <optional>
#include <span>
#include <string>

#include "gcd.hpp"

namespace monsky {

/// Reduced quotient num/den of polynomials over ℚ. The denominator is kept
/// primitive with integer coefficients and a positive grlex-leading
/// coefficient; num and den are coprime.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(make_vars({})) {}
    explicit RationalFunction(VarList vars) : num_(vars), den_(MultiPoly::constant(vars, 1)) {}
    RationalFunction(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {} // NOLINT
    RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RationalFunction constant(VarList vars, const BigRational &c) {
        return RationalFunction(MultiPoly::constant(std::move(vars), c));
    }

    const MultiPoly &num() const { return num_; }
    const MultiPoly &den() const { return den_; }
    const VarList &vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
        if (b.is_zero()) throw AlgebraError("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator*(const RationalFunction &a, const BigRational &c) {
        return RationalFunction(a.num_ * c, a.den_, Reduced{});
    }
    RationalFunction &operator+=(const RationalFunction &b) { return *this = *this + b; }
    RationalFunction &operator-=(const RationalFunction &b) { return *this = *this - b; }
    RationalFunction &operator*=(const RationalFunction &b) { return *this = *this * b; }

    /// Value at a point, or nullopt when the denominator vanishes there.
    std::optional<BigRational> evaluate(std::span<const BigRational> point) const {
        BigRational d = den_.evaluate(point);
        if (d == 0) return std::nullopt;
        return num_.evaluate(point) / d;
    }

    RationalFunction substitute(std::span<const MultiPoly> images, const VarList &target) const {
        return RationalFunction(num_.substitute(images, target), den_.substitute(images, target));
    }

    std::string to_string() const {
        if (is_polynomial()) {
            return (num_ * BigRational(1 / den_.constant_value())).to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    struct Reduced {};
    RationalFunction(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero()) throw AlgebraError("zero denominator");
        if (!same_vars(num_.vars(), den_.vars())) throw AlgebraError("numerator and denominator rings differ");
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(num_.vars(), 1);
            return;
        }
        if (!den_.is_constant()) {
            MultiPoly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        BigRational c = den_.content();
        BigRational inv = 1 / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    MultiPoly num_;
    MultiPoly den_;
};

} // namespace monsky
