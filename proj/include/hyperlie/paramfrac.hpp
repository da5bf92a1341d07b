#pragma once

#include "hyperlie/parampoly.hpp"

#include <map>
#include <tuple>

namespace hyperlie {

/// Denominator atom: a parameter monomial x, or x-1 / x+1 for a parameter x.
/// These are the only polynomial denominators the formulas in scope produce
/// (b_0 powers, beta-1, beta+1; beta^2-1 splits into the last two).
struct Atom {
    enum class Kind : std::uint8_t { Var, VarMinusOne, VarPlusOne };
    Kind kind;
    std::uint32_t var;

    friend bool operator<(const Atom& a, const Atom& b) {
        return std::tie(a.var, a.kind) < std::tie(b.var, b.kind);
    }
    friend bool operator==(const Atom& a, const Atom& b) {
        return a.kind == b.kind && a.var == b.var;
    }
};

inline ParamPoly atom_poly(const UniversePtr& u, const Atom& a) {
    ParamPoly p = ParamPoly::variable(u, a.var);
    switch (a.kind) {
    case Atom::Kind::Var: return p;
    case Atom::Kind::VarMinusOne: return p + ParamPoly::constant(u, -1);
    case Atom::Kind::VarPlusOne: return p + ParamPoly::constant(u, 1);
    }
    throw error("bad atom");
}

/// Exact rational function num / prod(atom^e). Coefficients of num are
/// reduced rationals; canonical form removes every atom that divides num.
/// Equality of canonical forms is structural (atoms are pairwise coprime
/// irreducibles, so the reduced representation is unique).
class ParamFrac {
public:
    using AtomMap = std::map<Atom, std::uint32_t>;

    explicit ParamFrac(UniversePtr u) : num_(ParamPoly::zero(std::move(u))) {}
    ParamFrac(ParamPoly num) : num_(std::move(num)) {}
    ParamFrac(ParamPoly num, AtomMap den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static ParamFrac zero(UniversePtr u) { return ParamFrac(ParamPoly::zero(std::move(u))); }
    static ParamFrac constant(UniversePtr u, Rational c) {
        return ParamFrac(ParamPoly::constant(std::move(u), std::move(c)));
    }
    static ParamFrac variable(UniversePtr u, std::size_t idx) {
        return ParamFrac(ParamPoly::variable(std::move(u), idx));
    }

    const UniversePtr& universe() const { return num_.universe(); }
    const ParamPoly& num() const { return num_; }
    const AtomMap& den_atoms() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }

    Rational constant_value() const {
        if (!den_.empty()) throw error("ParamFrac is not constant");
        return num_.constant_value();
    }

    ParamPoly den_poly() const {
        ParamPoly d = ParamPoly::constant(universe(), 1);
        for (const auto& [a, e] : den_)
            d = d * atom_poly(universe(), a).pow(e);
        return d;
    }

    friend ParamFrac operator+(const ParamFrac& a, const ParamFrac& b) {
        auto [x, y] = aligned(a, b);
        AtomMap l = lcm_atoms(x.den_, y.den_);
        ParamPoly na = x.num_ * cofactor(x.universe(), l, x.den_);
        ParamPoly nb = y.num_ * cofactor(y.universe(), l, y.den_);
        return ParamFrac(na + nb, std::move(l));
    }
    friend ParamFrac operator-(const ParamFrac& a, const ParamFrac& b) { return a + (-b); }
    friend ParamFrac operator-(ParamFrac a) {
        a.num_ = -a.num_;
        return a;
    }
    friend ParamFrac operator*(const ParamFrac& a, const ParamFrac& b) {
        auto [x, y] = aligned(a, b);
        AtomMap d = x.den_;
        for (const auto& [at, e] : y.den_) d[at] += e;
        return ParamFrac(x.num_ * y.num_, std::move(d));
    }
    friend ParamFrac operator*(const ParamFrac& a, const Rational& c) {
        ParamFrac r = a;
        r.num_ *= c;
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }
    friend ParamFrac operator*(const Rational& c, const ParamFrac& a) { return a * c; }

    ParamFrac& operator+=(const ParamFrac& o) { return *this = *this + o; }
    ParamFrac& operator-=(const ParamFrac& o) { return *this = *this - o; }
    ParamFrac& operator*=(const ParamFrac& o) { return *this = *this * o; }
    ParamFrac& operator*=(const Rational& c) { return *this = *this * c; }

    /// Multiplicative inverse, defined when num factors as rational * atoms.
    std::optional<ParamFrac> try_inverse() const {
        if (num_.is_zero()) return std::nullopt;
        ParamPoly rest = num_;
        AtomMap extracted;
        const auto& u = universe();
        for (std::uint32_t v = 0; v < u->size(); ++v) {
            for (Atom::Kind k : {Atom::Kind::Var, Atom::Kind::VarMinusOne, Atom::Kind::VarPlusOne}) {
                Atom a{k, v};
                ParamPoly ap = atom_poly(u, a);
                while (true) {
                    if (rest.is_constant()) break;
                    auto q = rest.try_divide(ap);
                    if (!q) break;
                    rest = *q;
                    extracted[a] += 1;
                }
            }
        }
        if (!rest.is_constant()) return std::nullopt;
        Rational c = rest.constant_value();
        // 1 / (c * prod extracted / prod den_) = den_poly / (c * extracted)
        ParamPoly newnum = ParamPoly::constant(u, Rational(1) / c);
        for (const auto& [a, e] : den_)
            newnum = newnum * atom_poly(u, a).pow(e);
        return ParamFrac(std::move(newnum), extracted);
    }

    friend ParamFrac operator/(const ParamFrac& a, const ParamFrac& b) {
        auto inv = b.try_inverse();
        if (!inv) throw error("ParamFrac division by non-invertible value");
        return a * *inv;
    }
    friend ParamFrac operator/(const ParamFrac& a, const Rational& c) {
        if (c == 0) throw error("division by zero");
        return a * Rational(1 / c);
    }

    friend bool operator==(const ParamFrac& a, const ParamFrac& b) {
        if (same_universe(a.universe(), b.universe()))
            return a.num_ == b.num_ && a.den_ == b.den_;
        auto [x, y] = aligned(a, b);
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const ParamFrac& a, const ParamFrac& b) { return !(a == b); }

    /// Cross-multiplied equality; by canonicity it must agree with operator==.
    friend bool value_equal(const ParamFrac& a, const ParamFrac& b) {
        auto [x, y] = aligned(a, b);
        return x.num_ * y.den_poly() == y.num_ * x.den_poly();
    }

    ParamFrac negate_var(std::size_t idx) const {
        // x -> -x, x-1 -> -(x+1), x+1 -> -(x-1): swap atom kinds, track sign.
        ParamPoly n = num_.negate_var(idx);
        AtomMap d;
        unsigned flips = 0;
        for (const auto& [a, e] : den_) {
            Atom b = a;
            if (a.var == idx) {
                switch (a.kind) {
                case Atom::Kind::Var: flips += e; break;
                case Atom::Kind::VarMinusOne: b.kind = Atom::Kind::VarPlusOne; flips += e; break;
                case Atom::Kind::VarPlusOne: b.kind = Atom::Kind::VarMinusOne; flips += e; break;
                }
            }
            d[b] += e;
        }
        if (flips % 2 == 1) n = -n;
        return ParamFrac(std::move(n), std::move(d));
    }

    /// Evaluate one variable at an exact rational point.
    ParamFrac eval_var(std::size_t idx, const Rational& v) const {
        ParamPoly n = num_.eval_var(idx, v);
        AtomMap d;
        Rational scale = 1;
        for (const auto& [a, e] : den_) {
            if (a.var == idx) {
                Rational av = v;
                if (a.kind == Atom::Kind::VarMinusOne) av = v - 1;
                if (a.kind == Atom::Kind::VarPlusOne) av = v + 1;
                if (av == 0) throw error("denominator atom vanishes at evaluation point");
                for (std::uint32_t k = 0; k < e; ++k) scale /= av;
            } else {
                d[a] += e;
            }
        }
        n *= scale;
        return ParamFrac(std::move(n), std::move(d));
    }

    std::string to_string() const {
        if (num_.is_zero()) return "0";
        Integer L = 1;
        for (const auto& [e, c] : num_.terms())
            L = boost::multiprecision::lcm(L, denominator(c));
        if (den_.empty() && L == 1) return num_.to_string();
        if (den_.empty() && num_.terms().size() == 1) return num_.to_string();
        ParamPoly scaled = num_ * Rational(L);
        std::string ds = den_string(L);
        if (scaled.terms().size() == 1 && den_.empty())
            return num_.to_string();
        return "(" + scaled.to_string() + ")/" + ds;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) { den_.clear(); return; }
        for (auto it = den_.begin(); it != den_.end();) {
            ParamPoly ap = atom_poly(universe(), it->first);
            while (it->second > 0) {
                auto q = num_.try_divide(ap);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            if (it->second == 0) it = den_.erase(it);
            else ++it;
        }
    }

    static std::pair<ParamFrac, ParamFrac> aligned(const ParamFrac& a, const ParamFrac& b) {
        if (same_universe(a.universe(), b.universe())) return {a, b};
        if (a.universe()->size() == 0) {
            ParamFrac la(lift_to(a.num_, b.universe()));
            return {la, b};
        }
        if (b.universe()->size() == 0) {
            ParamFrac lb(lift_to(b.num_, a.universe()));
            return {a, lb};
        }
        throw error("mixed parameter universes");
    }

    static AtomMap lcm_atoms(const AtomMap& a, const AtomMap& b) {
        AtomMap r = a;
        for (const auto& [at, e] : b) {
            auto it = r.find(at);
            if (it == r.end()) r[at] = e;
            else it->second = std::max(it->second, e);
        }
        return r;
    }

    static ParamPoly cofactor(const UniversePtr& u, const AtomMap& lcm, const AtomMap& own) {
        ParamPoly c = ParamPoly::constant(u, 1);
        for (const auto& [at, e] : lcm) {
            std::uint32_t o = 0;
            if (auto it = own.find(at); it != own.end()) o = it->second;
            if (e > o) c = c * atom_poly(u, at).pow(e - o);
        }
        return c;
    }

    std::string den_string(const Integer& L) const {
        std::vector<std::string> parts;
        if (L != 1 || den_.empty()) {
            std::ostringstream os;
            os << L;
            parts.push_back(os.str());
        }
        for (const auto& [a, e] : den_) {
            std::string s;
            switch (a.kind) {
            case Atom::Kind::Var: s = universe()->name(a.var); break;
            case Atom::Kind::VarMinusOne: s = "(" + universe()->name(a.var) + " - 1)"; break;
            case Atom::Kind::VarPlusOne: s = "(" + universe()->name(a.var) + " + 1)"; break;
            }
            if (e > 1) s += "^" + std::to_string(e);
            parts.push_back(s);
        }
        if (parts.size() == 1) return parts[0];
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
        return out + ")";
    }

    ParamPoly num_;
    AtomMap den_;
};

} // namespace hyperlie
