#pragma once

#include "hyperlie/paramfrac.hpp"

#include <map>

namespace hyperlie {

/// Finite Laurent polynomial in t with ParamFrac coefficients.
class LaurentPoly {
public:
    using CoeffMap = std::map<int, ParamFrac>;

    explicit LaurentPoly(UniversePtr u) : u_(std::move(u)) {}

    static LaurentPoly zero(UniversePtr u) { return LaurentPoly(std::move(u)); }
    static LaurentPoly one(UniversePtr u) {
        return t_power(std::move(u), 0);
    }
    static LaurentPoly t_power(UniversePtr u, int k, ParamFrac c) {
        LaurentPoly p(std::move(u));
        p.set_coeff(k, std::move(c));
        return p;
    }
    static LaurentPoly t_power(UniversePtr u, int k, Rational c = 1) {
        LaurentPoly p(u);
        p.set_coeff(k, ParamFrac::constant(u, std::move(c)));
        return p;
    }
    static LaurentPoly constant(UniversePtr u, ParamFrac c) {
        return t_power(std::move(u), 0, std::move(c));
    }

    const UniversePtr& universe() const { return u_; }
    const CoeffMap& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    int min_exp() const {
        if (c_.empty()) throw error("exponent query on zero polynomial");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (c_.empty()) throw error("exponent query on zero polynomial");
        return c_.rbegin()->first;
    }

    ParamFrac coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? ParamFrac::zero(u_) : it->second;
    }

    void set_coeff(int k, ParamFrac c) {
        if (c.is_zero()) c_.erase(k);
        else c_.insert_or_assign(k, std::move(c));
    }

    void add_coeff(int k, const ParamFrac& c) {
        if (c.is_zero()) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.c_) add_coeff(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.c_) add_coeff(k, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [k, c] : a.c_) c = -c;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.u_);
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_)
                r.add_coeff(ka + kb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(LaurentPoly a, const ParamFrac& c) {
        if (c.is_zero()) return zero(a.u_);
        for (auto& [k, v] : a.c_) v *= c;
        return a;
    }
    friend LaurentPoly operator*(const ParamFrac& c, LaurentPoly a) { return std::move(a) * c; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) {
        if (c == 0) return zero(a.u_);
        for (auto& [k, v] : a.c_) v *= c;
        return a;
    }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return std::move(a) * c; }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const ParamFrac& c) { return *this = *this * c; }
    LaurentPoly& operator*=(const Rational& c) { return *this = *this * c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return same_universe(a.u_, b.u_) && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Formal d/dt.
    LaurentPoly derivative_t() const {
        LaurentPoly r(u_);
        for (const auto& [k, c] : c_) {
            if (k == 0) continue;
            r.set_coeff(k - 1, c * Rational(k));
        }
        return r;
    }

    /// Multiply by t^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r(u_);
        for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
        return r;
    }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly r = one(u_);
        LaurentPoly base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

    /// Substitute t -> i*t. Requires even support; i-powers collapse to signs.
    LaurentPoly substitute_it() const {
        LaurentPoly r(u_);
        for (const auto& [k, c] : c_) {
            if (k % 2 != 0) throw error("substitute_it requires even exponents");
            int half = k / 2;
            r.c_.emplace(k, (half % 2 == 0) ? c : -c);
        }
        return r;
    }

    LaurentPoly negate_var(std::size_t idx) const {
        LaurentPoly r(u_);
        for (const auto& [k, c] : c_) r.c_.emplace(k, c.negate_var(idx));
        return r;
    }

    LaurentPoly eval_var(std::size_t idx, const Rational& v) const {
        LaurentPoly r(u_);
        for (const auto& [k, c] : c_) r.set_coeff(k, c.eval_var(idx, v));
        return r;
    }

    /// Evaluate at an exact rational t (coefficients must be constant).
    Rational eval_t(const Rational& t) const {
        Rational acc = 0;
        for (const auto& [k, c] : c_) {
            Rational tp = 1;
            if (k >= 0) {
                for (int i = 0; i < k; ++i) tp *= t;
            } else {
                if (t == 0) throw error("evaluating negative power at t=0");
                for (int i = 0; i < -k; ++i) tp /= t;
            }
            acc += c.constant_value() * tp;
        }
        return acc;
    }

    /// Coefficients as plain rationals; requires every coefficient constant.
    std::map<int, Rational> constant_coeffs() const {
        std::map<int, Rational> r;
        for (const auto& [k, c] : c_) r.emplace(k, c.constant_value());
        return r;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            auto [sign, body] = term_string(it->first, it->second);
            if (first) {
                out = (sign ? "-" : "") + body;
                first = false;
            } else {
                out += (sign ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    // Renders |coeff|*t^k; returns (negative?, body).
    static std::pair<bool, std::string> term_string(int k, const ParamFrac& c) {
        std::string cs = c.to_string();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (composite && cs[0] != '(') cs = "(" + cs + ")";
        std::string tp;
        if (k != 0) tp = (k == 1) ? "t" : "t^" + std::to_string(k);
        if (tp.empty()) return {neg, cs};
        if (cs == "1") return {neg, tp};
        return {neg, cs + "*" + tp};
    }

    UniversePtr u_;
    CoeffMap c_;
};

} // namespace hyperlie
