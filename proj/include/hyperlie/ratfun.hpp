#pragma once

#include "hyperlie/families.hpp"

namespace hyperlie {

/// Rational function num/den over Laurent polynomials in t. Not reduced;
/// equality is by cross-multiplication, which keeps the type gcd-free.
struct RatFun {
    LaurentPoly num, den;

    explicit RatFun(LaurentPoly n) : num(std::move(n)), den(LaurentPoly::one(num.universe())) {}
    RatFun(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw error("zero denominator");
    }

    static RatFun zero(const UniversePtr& u) { return RatFun(LaurentPoly::zero(u)); }
    static RatFun one(const UniversePtr& u) { return RatFun(LaurentPoly::one(u)); }

    bool is_zero() const { return num.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num * b.num, a.den * b.den);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.num.is_zero()) throw error("division by zero rational function");
        return RatFun(a.num * b.den, a.den * b.num);
    }

    RatFun derivative_t() const {
        return RatFun(num.derivative_t() * den - num * den.derivative_t(), den * den);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num * b.den == b.num * a.den;
    }
};

/// a + b*J with J^2 = p(t); J models sqrt(t^4 - 2 beta t^2 + 1) formally.
/// Differentiation uses J' = p' J / (2p).
struct SqrtExpr {
    RatFun a, b;
    LaurentPoly p;

    SqrtExpr(RatFun a_, RatFun b_, LaurentPoly p_)
        : a(std::move(a_)), b(std::move(b_)), p(std::move(p_)) {}

    static SqrtExpr j_times(RatFun r, LaurentPoly p) {
        RatFun z = RatFun::zero(r.num.universe());
        return SqrtExpr(std::move(z), std::move(r), std::move(p));
    }

    friend SqrtExpr operator+(const SqrtExpr& x, const SqrtExpr& y) {
        return SqrtExpr(x.a + y.a, x.b + y.b, x.p);
    }
    friend SqrtExpr operator-(const SqrtExpr& x, const SqrtExpr& y) {
        return SqrtExpr(x.a - y.a, x.b - y.b, x.p);
    }
    friend SqrtExpr operator*(const SqrtExpr& x, const SqrtExpr& y) {
        RatFun pj(x.p);
        return SqrtExpr(x.a * y.a + x.b * y.b * pj, x.a * y.b + x.b * y.a, x.p);
    }
    friend SqrtExpr operator*(const SqrtExpr& x, const RatFun& r) {
        return SqrtExpr(x.a * r, x.b * r, x.p);
    }

    SqrtExpr derivative_t() const {
        RatFun halfpp(p.derivative_t() * Rational(1, 2), p);
        return SqrtExpr(a.derivative_t(), b.derivative_t() + b * halfpp, p);
    }

    friend bool operator==(const SqrtExpr& x, const SqrtExpr& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// Verify the Sturm-Liouville rewrite (niceform) of the b-family ODE:
/// with I = (t^4-2 beta t^2+1)^(3/2) / ((t^2+1) t^(2n+1)), expanding
///   d/dt(I y') + (I R_n / P^1) y
/// must reproduce (I/P^1)(P^1 y'' + Q_n y' + R_n y), coefficient-wise in the
/// free symbols y, y', y''. The 3/2 power is realized as p * J with J^2 = p.
/// denom_exp_offset shifts the printed t-exponent 2n+1 (nonzero values are
/// negative controls).
inline bool sturm_liouville_check(int n, int denom_exp_offset = 0) {
    UniversePtr u = beta_universe();
    LaurentPoly p = djkm_quartic();
    LaurentPoly t2p1(u);
    t2p1.set_coeff(2, ParamFrac::constant(u, 1));
    t2p1.set_coeff(0, ParamFrac::constant(u, 1));
    LaurentPoly D = t2p1 * LaurentPoly::t_power(u, 2 * n + 1 + denom_exp_offset);
    LaurentPoly P1 = b_ode_p1();
    LaurentPoly Qn = b_ode_qn(n);
    LaurentPoly Rn = b_ode_rn(n);

    SqrtExpr I = SqrtExpr::j_times(RatFun(p, D), p);
    RatFun P1r(P1), Qnr(Qn), Rnr(Rn);
    SqrtExpr Iprime = I.derivative_t();
    SqrtExpr IoverP1 = I * (RatFun::one(u) / P1r);

    bool ypp = I == IoverP1 * P1r;                 // coefficient of y''
    bool yp = Iprime == IoverP1 * Qnr;             // coefficient of y'
    bool y0 = I * (Rnr / P1r) == IoverP1 * Rnr;    // coefficient of y
    return ypp && yp && y0;
}

} // namespace hyperlie
