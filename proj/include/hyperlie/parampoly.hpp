#pragma once

#include "hyperlie/universe.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hyperlie {

using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const ExpVec& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded-lexicographic order: by total degree, then exponent vector
/// left-to-right. Terms are stored ascending and printed in reverse.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        std::uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Multivariate polynomial in the parameters of a Universe with exact
/// rational coefficients. Zero coefficients are never stored.
class ParamPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GradedLexLess>;

    explicit ParamPoly(UniversePtr u) : u_(std::move(u)) {}

    static ParamPoly zero(UniversePtr u) { return ParamPoly(std::move(u)); }

    static ParamPoly constant(UniversePtr u, Rational c) {
        ParamPoly p(std::move(u));
        if (c != 0) p.terms_[ExpVec(p.u_->size(), 0)] = std::move(c);
        return p;
    }

    static ParamPoly variable(UniversePtr u, std::size_t idx, std::uint32_t exp = 1) {
        ParamPoly p(std::move(u));
        if (idx >= p.u_->size()) throw error("variable index out of range");
        ExpVec e(p.u_->size(), 0);
        e[idx] = exp;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    const UniversePtr& universe() const { return u_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw error("ParamPoly is not constant");
        return terms_.begin()->second;
    }

    std::uint64_t degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        check_universe(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        check_universe(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    ParamPoly& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }
    friend ParamPoly operator-(ParamPoly a) { a *= Rational(-1); return a; }
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { a *= c; return a; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { a *= c; return a; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        a.check_universe(b);
        ParamPoly r(a.u_);
        ExpVec e(a.u_->size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    ParamPoly pow(unsigned k) const {
        ParamPoly r = constant(u_, 1);
        ParamPoly base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return same_universe(a.u_, b.u_) && a.terms_ == b.terms_;
    }

    std::pair<ExpVec, Rational> leading() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<ParamPoly> try_divide(const ParamPoly& d) const {
        check_universe(d);
        if (d.is_zero()) throw error("division by zero polynomial");
        ParamPoly rem = *this, quo(u_);
        auto [de, dc] = d.leading();
        while (!rem.is_zero()) {
            auto [re, rc] = rem.leading();
            ExpVec diff(re.size());
            for (std::size_t i = 0; i < re.size(); ++i) {
                if (re[i] < de[i]) return std::nullopt;
                diff[i] = re[i] - de[i];
            }
            Rational qc = rc / dc;
            quo.add_term(diff, qc);
            ParamPoly m(u_);
            m.terms_[diff] = qc;
            rem -= m * d;
        }
        return quo;
    }

    /// Substitute var -> -var.
    ParamPoly negate_var(std::size_t idx) const {
        ParamPoly r(u_);
        for (const auto& [e, c] : terms_)
            r.terms_[e] = (e[idx] % 2 == 1) ? -c : c;
        return r;
    }

    /// Substitute var -> rational value; result stays in the same universe.
    ParamPoly eval_var(std::size_t idx, const Rational& v) const {
        ParamPoly r(u_);
        for (const auto& [e, c] : terms_) {
            Rational scale = 1;
            for (std::uint32_t k = 0; k < e[idx]; ++k) scale *= v;
            ExpVec e2 = e;
            e2[idx] = 0;
            r.add_term(e2, c * scale);
        }
        return r;
    }

    /// Positive rational g such that (*this)/g has integer coefficients
    /// with content 1: gcd of numerators over lcm of denominators.
    Rational content() const {
        if (terms_.empty()) return 0;
        Integer gn = 0, dl = 1;
        for (const auto& [e, c] : terms_) {
            gn = boost::multiprecision::gcd(gn, numerator(c));
            dl = boost::multiprecision::lcm(dl, denominator(c));
        }
        return Rational(boost::multiprecision::abs(gn), dl);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            std::string mono = monomial_string(it->first);
            Rational ac = c < 0 ? Rational(-c) : c;
            std::string body;
            if (mono.empty()) {
                body = hyperlie::to_string(ac);
            } else if (ac == 1) {
                body = mono;
            } else {
                body = hyperlie::to_string(ac) + "*" + mono;
            }
            if (first) {
                out = (c < 0 ? "-" : "") + body;
                first = false;
            } else {
                out += (c < 0 ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    void check_universe(const ParamPoly& o) const {
        if (!same_universe(u_, o.u_)) throw error("mixed parameter universes");
    }

    std::string monomial_string(const ExpVec& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += u_->name(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    UniversePtr u_;
    TermMap terms_;
};

/// Lift a constant (empty-universe) value into a target universe, or verify
/// the universes already agree.
inline ParamPoly lift_to(const ParamPoly& p, const UniversePtr& u) {
    if (same_universe(p.universe(), u)) return p;
    if (p.universe()->size() == 0)
        return ParamPoly::constant(u, p.is_zero() ? Rational(0) : p.constant_value());
    throw error("mixed parameter universes");
}

} // namespace hyperlie
