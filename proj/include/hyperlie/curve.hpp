#pragma once

#include "hyperlie/laurent.hpp"

#include <memory>
#include <vector>

namespace hyperlie {

namespace detail {

/// Univariate gcd over the rationals for constant-coefficient polynomials,
/// represented as dense coefficient vectors (index = exponent).
inline std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rational q = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

} // namespace detail

/// Hyperelliptic curve u^2 = scale * (sum_{i=l}^{n+l} b_i t^i) with
/// b_{n+l} = 1. The scale factor keeps the stored polynomial monic; it is 1
/// except for the DJKM normalization 1/(beta^2-1).
class Curve {
public:
    Curve(LaurentPoly monic, ParamFrac scale)
        : poly_(std::move(monic)), scale_(std::move(scale)) {
        if (poly_.is_zero()) throw error("curve polynomial is zero");
        l_ = poly_.min_exp();
        if (l_ != 0 && l_ != 1)
            throw error("curve must have l = 0 or 1 (t=0 at most a simple root)");
        n_ = poly_.max_exp() - l_;
        if (n_ < 1) throw error("curve needs at least one nonzero root");
        if (!(poly_.coeff(n_ + l_) == ParamFrac::constant(universe(), 1)))
            throw error("curve must be monic: b_{n+l} = 1");
        if (l_ == 0 && poly_.coeff(0).is_zero())
            throw error("curve with l = 0 requires b_0 != 0");
        check_squarefree();
    }

    explicit Curve(const LaurentPoly& monic)
        : Curve(monic, ParamFrac::constant(monic.universe(), 1)) {}

    /// The DJKM quartic u^2 = (t^4 - 2 beta t^2 + 1)/(beta^2 - 1) at an exact
    /// rational beta with beta^2 != 1.
    static Curve djkm(const Rational& beta) {
        if (beta == 1 || beta == -1) throw error("DJKM curve requires beta != +-1");
        UniversePtr u = empty_universe();
        LaurentPoly p(u);
        p.set_coeff(4, ParamFrac::constant(u, 1));
        p.set_coeff(2, ParamFrac::constant(u, -2 * beta));
        p.set_coeff(0, ParamFrac::constant(u, 1));
        return Curve(std::move(p), ParamFrac::constant(u, Rational(1) / (beta * beta - 1)));
    }

    /// Symbolic DJKM curve over the universe {beta}.
    static Curve djkm_symbolic() {
        UniversePtr u = make_universe({"beta"});
        LaurentPoly p(u);
        p.set_coeff(4, ParamFrac::constant(u, 1));
        p.set_coeff(2, ParamFrac::variable(u, 0) * Rational(-2));
        p.set_coeff(0, ParamFrac::constant(u, 1));
        ParamFrac::AtomMap den;
        den[Atom{Atom::Kind::VarMinusOne, 0}] = 1;
        den[Atom{Atom::Kind::VarPlusOne, 0}] = 1;
        ParamFrac scale(ParamPoly::constant(u, 1), std::move(den));
        return Curve(std::move(p), std::move(scale));
    }

    int l() const { return l_; }
    int n() const { return n_; }
    int degree() const { return n_ + l_; }
    const UniversePtr& universe() const { return poly_.universe(); }
    const LaurentPoly& monic_poly() const { return poly_; }
    const ParamFrac& scale() const { return scale_; }
    bool is_scaled() const { return !(scale_ == ParamFrac::constant(universe(), 1)); }

    /// Coefficient b_i of the monic polynomial (0 outside [l, n+l]).
    ParamFrac b(int i) const { return poly_.coeff(i); }

    /// Full u^2 value: scale * monic polynomial.
    LaurentPoly p_full() const { return poly_ * scale_; }
    LaurentPoly p_full_derivative() const { return poly_.derivative_t() * scale_; }

    /// Exponents of the Laurent part of the R/dR basis.
    std::vector<int> basis_exponents() const {
        std::vector<int> v;
        if (l_ == 0)
            for (int i = -1; i <= n_ - 2; ++i) v.push_back(i);
        else
            for (int i = 0; i <= n_ - 1; ++i) v.push_back(i);
        return v;
    }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.l_ == b.l_ && a.n_ == b.n_ && a.poly_ == b.poly_ && a.scale_ == b.scale_;
    }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

    std::string to_string() const { return poly_.to_string(); }

private:
    void check_squarefree() {
        // Only decidable here for constant coefficients; symbolic curves are
        // taken squarefree by assumption.
        for (const auto& [k, c] : poly_.coeffs())
            if (!c.is_constant()) return;
        std::vector<Rational> dense(static_cast<std::size_t>(degree()) + 1, Rational(0));
        for (const auto& [k, c] : poly_.coeffs()) dense[static_cast<std::size_t>(k)] = c.constant_value();
        std::vector<Rational> deriv;
        for (std::size_t i = 1; i < dense.size(); ++i) deriv.push_back(dense[i] * Rational(i));
        auto g = detail::poly_gcd(dense, deriv);
        if (g.size() > 1) throw error("curve has a repeated root: gcd(P, P') is not constant");
    }

    LaurentPoly poly_;
    ParamFrac scale_;
    int l_ = 0;
    int n_ = 0;
};

using CurvePtr = std::shared_ptr<const Curve>;

} // namespace hyperlie
