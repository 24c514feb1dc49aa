#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "poly.hpp"

namespace monsky {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, VarList vars) : s_(text), vars_(std::move(vars)) {}

    MultiPoly parse() {
        MultiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &why) const {
        throw AlgebraError("cannot parse polynomial \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) +
                           ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    // Accepts ASCII and the Unicode minus sign.
    bool eat_minus() {
        if (eat('-')) return true;
        skip();
        if (s_.substr(pos_, 3) == "\xe2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc(vars_);
        bool negate = false;
        if (eat_minus()) negate = true;
        else eat('+');
        MultiPoly t = term();
        acc = negate ? -t : t;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat_minus()) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = acc * BigRational(1 / d.constant_value());
            } else {
                skip();
                // implicit multiplication: "2A", "(A+B)(C+D)"
                if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                                         s_[pos_] == '_'))
                    acc *= factor();
                else
                    return acc;
            }
        }
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly::constant(vars_, BigRational(BigInt(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_->size(); ++i)
                if ((*vars_)[i] == name) return MultiPoly::variable(vars_, i);
            fail("unknown variable " + name);
        }
        fail("unexpected character");
    }

    std::string_view s_;
    VarList vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses expressions such as "(A+C+E)^2 - 4*A*C" over the given variables.
/// Implicit multiplication and division by constants are accepted.
inline MultiPoly parse_poly(std::string_view text, const VarList &vars) {
    return detail::PolyParser(text, vars).parse();
}

} // namespace monsky
