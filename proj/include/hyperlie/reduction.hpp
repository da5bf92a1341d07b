#pragma once

#include "hyperlie/ring.hpp"

#include <map>
#include <vector>

namespace hyperlie {

/// Coordinates of a class in R/dR over {omega0} + the Laurent basis
/// exponents of the curve ({t^-1..t^(n-2)} for l=0, {1..t^(n-1)} for l=1).
struct ClassVector {
    UniversePtr universe;
    ParamFrac omega0;
    std::map<int, ParamFrac> coords;

    explicit ClassVector(UniversePtr u)
        : universe(std::move(u)), omega0(ParamFrac::zero(universe)) {}

    static ClassVector zero(UniversePtr u) { return ClassVector(std::move(u)); }

    static ClassVector basis_omega0(UniversePtr u) {
        ClassVector v(std::move(u));
        v.omega0 = ParamFrac::constant(v.universe, 1);
        return v;
    }
    static ClassVector basis_power(UniversePtr u, int k) {
        ClassVector v(std::move(u));
        v.coords.emplace(k, ParamFrac::constant(v.universe, 1));
        return v;
    }

    bool is_zero() const {
        if (!omega0.is_zero()) return false;
        for (const auto& [k, c] : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    ParamFrac coord(int k) const {
        auto it = coords.find(k);
        return it == coords.end() ? ParamFrac::zero(universe) : it->second;
    }

    void add_coord(int k, const ParamFrac& c) {
        if (c.is_zero()) return;
        auto it = coords.find(k);
        if (it == coords.end()) {
            coords.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }

    ClassVector& operator+=(const ClassVector& o) {
        omega0 += o.omega0;
        for (const auto& [k, c] : o.coords) add_coord(k, c);
        return *this;
    }
    ClassVector& operator-=(const ClassVector& o) {
        omega0 -= o.omega0;
        for (const auto& [k, c] : o.coords) add_coord(k, -c);
        return *this;
    }
    ClassVector& operator*=(const ParamFrac& c) {
        omega0 *= c;
        if (c.is_zero()) { coords.clear(); return *this; }
        for (auto& [k, v] : coords) v *= c;
        return *this;
    }

    friend ClassVector operator+(ClassVector a, const ClassVector& b) { a += b; return a; }
    friend ClassVector operator-(ClassVector a, const ClassVector& b) { a -= b; return a; }
    friend ClassVector operator*(ClassVector a, const ParamFrac& c) { a *= c; return a; }
    friend ClassVector operator*(ClassVector a, const Rational& c) {
        a *= ParamFrac::constant(a.universe, c);
        return a;
    }

    friend bool operator==(const ClassVector& a, const ClassVector& b) {
        ClassVector d = a;
        d -= b;
        return d.is_zero();
    }
    friend bool operator!=(const ClassVector& a, const ClassVector& b) { return !(a == b); }

    std::string to_string() const {
        std::string out = "omega0: " + omega0.to_string();
        for (const auto& [k, c] : coords)
            out += ", t^" + std::to_string(k) + ": " + c.to_string();
        return out;
    }
};

/// Reduction of Laurent classes modulo dR. For l=0 curves the paper's two
/// recursions apply directly; a windowed linear elimination over the same
/// relation family {del(t^r sqrt(P))} covers l=1 and doubles as an
/// independent cross-check (the relations are identical, only the solve
/// order differs).
class ReductionTable {
public:
    explicit ReductionTable(CurvePtr c, bool use_linear_fallback = false)
        : curve_(std::move(c)), linear_(use_linear_fallback || curve_->l() == 1) {
        if (curve_->is_scaled())
            throw error("R/dR reduction expects an unscaled (monic) curve");
    }

    const Curve& curve() const { return *curve_; }
    CurvePtr curve_ptr() const { return curve_; }

    /// Class of t^k in the basis.
    const ClassVector& reduce_power(int k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        ClassVector v = linear_ ? linear_reduce(k) : recursive_reduce(k);
        return cache_.emplace(k, std::move(v)).first->second;
    }

    /// Forward table entry p_{k,i}: coefficient of t^i in the class of t^k
    /// (k >= -1). Initial window carries p_{k,i} = delta_{k,i}.
    ParamFrac p(int k, int i) {
        if (k < -1) throw error("p-table index requires k >= -1");
        return reduce_power(k).coord(i);
    }

    /// Backward table entry q_{k,i}: coefficient of t^i in the class of t^-k.
    ParamFrac q(int k, int i) { return reduce_power(-k).coord(i); }

private:
    ClassVector recursive_reduce(int k) {
        const Curve& c = *curve_;
        const int n = c.n();
        const auto& u = c.universe();
        if (-1 <= k && k <= n - 2) return ClassVector::basis_power(u, k);
        ClassVector acc(u);
        if (k > n - 2) {
            // sum_{i=0}^{n} (r + i/2) b_i tbar^{r+i-1} = 0, top term i = n
            int r = k - n + 1;
            for (int i = 0; i < n; ++i) {
                ParamFrac bi = c.b(i);
                if (bi.is_zero()) continue;
                ClassVector sub = reduce_power(r + i - 1);
                acc -= sub * (bi * Rational(2 * r + i, 2 * r + n));
            }
            return acc;
        }
        // k <= -2: lowest term i = 0 with coefficient r b_0
        int r = k + 1;
        ParamFrac bot = c.b(0) * Rational(r);
        auto boti = bot.try_inverse();
        if (!boti) throw error("backward reduction requires invertible b_0");
        for (int i = 1; i <= n; ++i) {
            ParamFrac bi = c.b(i);
            if (bi.is_zero()) continue;
            ClassVector sub = reduce_power(r + i - 1);
            acc -= sub * (bi * Rational(2 * r + i, 2) * *boti);
        }
        return acc;
    }

    // Windowed elimination. Relations rel_r = sum_{i=l}^{n+l}(r+i/2) b_i t^{r+i-1};
    // relations with r >= 0 are solved for their top exponent, r <= -1 for the
    // bottom one. Both pivot coefficients are nonzero for in-scope curves.
    ClassVector linear_reduce(int k) {
        const Curve& c = *curve_;
        const int n = c.n(), l = c.l();
        const auto& u = c.universe();
        auto basis = c.basis_exponents();
        auto is_basis = [&](int e) {
            return e >= basis.front() && e <= basis.back();
        };
        if (is_basis(k)) return ClassVector::basis_power(u, k);

        std::map<int, ClassVector> resolved; // pivot exponent -> expression in basis
        auto expr_of = [&](int e) -> ClassVector {
            if (is_basis(e)) return ClassVector::basis_power(u, e);
            auto it = resolved.find(e);
            if (it == resolved.end()) throw error("linear reduction: unresolved exponent");
            return it->second;
        };

        if (k > basis.back()) {
            // resolve top pivots upward: relation r pivots exponent r+n+l-1
            for (int e = basis.back() + 1; e <= k; ++e) {
                int r = e - (n + l) + 1;
                Rational top(2 * r + n + l, 2);
                if (top == 0) throw error("vanishing forward pivot");
                ClassVector acc(u);
                for (int i = l; i < n + l; ++i) {
                    ParamFrac bi = c.b(i);
                    if (bi.is_zero()) continue;
                    acc -= expr_of(r + i - 1) * (bi * (Rational(2 * r + i, 2) / top));
                }
                resolved.emplace(e, std::move(acc));
            }
        } else {
            // resolve bottom pivots downward: relation r pivots exponent r+l-1
            for (int e = basis.front() - 1; e >= k; --e) {
                int r = e - l + 1;
                ParamFrac bot = c.b(l) * Rational(2 * r + l, 2);
                auto boti = bot.try_inverse();
                if (!boti) throw error("vanishing backward pivot");
                ClassVector acc(u);
                for (int i = l + 1; i <= n + l; ++i) {
                    ParamFrac bi = c.b(i);
                    if (bi.is_zero()) continue;
                    acc -= expr_of(r + i - 1) * (bi * Rational(2 * r + i, 2) * *boti);
                }
                resolved.emplace(e, std::move(acc));
            }
        }
        return expr_of(k);
    }

    CurvePtr curve_;
    bool linear_;
    std::map<int, ClassVector> cache_;
};

/// Quotient map R -> R/dR. The Laurent part reduces term by term; the u-part
/// g*sqrt(P) contributes only its t^-1 coefficient (as omega0), because
/// t^k sqrt(P) = del(t^(k+1)/(k+1)) for k != -1.
inline ClassVector class_of(const RingElement& x, ReductionTable& table) {
    ClassVector v(x.curve->universe());
    for (const auto& [k, c] : x.f.coeffs())
        v += table.reduce_power(k) * c;
    v.omega0 += x.g.coeff(-1);
    return v;
}

} // namespace hyperlie
