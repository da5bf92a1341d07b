#pragma once

#include "hyperlie/curve.hpp"

#include <cctype>
#include <set>

namespace hyperlie {

namespace detail {

/// Recursive-descent parser for polynomial curve specs like
/// "t^3+a*t+1" or "t^2 - 2*b*t". Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := number | 't' ['^' int] | ident ['^' int] | '(' expr ')'
class CurveSpecParser {
public:
    explicit CurveSpecParser(std::string text) : s_(std::move(text)) {}

    LaurentPoly parse() {
        collect_symbols();
        u_ = make_universe(std::vector<std::string>(symbols_.begin(), symbols_.end()));
        pos_ = 0;
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

    UniversePtr universe() const { return u_; }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw error("curve spec parse error at position " + std::to_string(pos_) + ": " + msg +
                    (pos_ < s_.size() ? " (near '" + s_.substr(pos_, 8) + "')" : ""));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void collect_symbols() {
        for (std::size_t i = 0; i < s_.size();) {
            if (std::isalpha(static_cast<unsigned char>(s_[i])) || s_[i] == '_') {
                std::size_t j = i;
                while (j < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                    ++j;
                std::string name = s_.substr(i, j - i);
                if (name != "t") symbols_.insert(name);
                i = j;
            } else {
                ++i;
            }
        }
    }

    LaurentPoly expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        LaurentPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    int integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    LaurentPoly factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_pow_poly(std::move(p));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num = num * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            Rational v(num, 1);
            if (eat('/')) {
                skip_ws();
                Integer den = 0;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator");
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    den = den * 10 + (s_[pos_] - '0');
                    ++pos_;
                }
                if (den == 0) fail("zero denominator");
                v = Rational(num, den);
            }
            return maybe_pow_poly(LaurentPoly::constant(u_, ParamFrac::constant(u_, v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = pos_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            std::string name = s_.substr(pos_, j - pos_);
            pos_ = j;
            int e = 1;
            if (eat('^')) e = integer();
            if (name == "t") {
                return LaurentPoly::t_power(u_, e);
            }
            if (e < 0) fail("negative parameter exponent");
            ParamFrac v = ParamFrac::variable(u_, u_->index(name));
            ParamFrac acc = ParamFrac::constant(u_, 1);
            for (int k = 0; k < e; ++k) acc *= v;
            return LaurentPoly::constant(u_, acc);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    LaurentPoly maybe_pow_poly(LaurentPoly p) {
        if (eat('^')) {
            int e = integer();
            if (e < 0) fail("negative exponent on a subexpression");
            return p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::set<std::string> symbols_;
    UniversePtr u_ = empty_universe();
};

} // namespace detail

/// Parse a curve spec string; enforces the b_{n+l} = 1 normalization and the
/// l in {0,1} / squarefree contracts via the Curve constructor.
inline Curve parse_curve(const std::string& spec) {
    detail::CurveSpecParser p(spec);
    LaurentPoly poly = p.parse();
    if (poly.is_zero()) throw error("curve spec is zero");
    if (poly.min_exp() < 0) throw error("curve spec must be a polynomial in t");
    if (!(poly.coeff(poly.max_exp()) == ParamFrac::constant(poly.universe(), 1)))
        throw error("curve must be monic (normalization b_{n+l} = 1): leading coefficient is " +
                    poly.coeff(poly.max_exp()).to_string());
    return Curve(std::move(poly));
}

} // namespace hyperlie
