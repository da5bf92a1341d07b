#pragma once

#include "hyperlie/curve.hpp"

#include <optional>

namespace hyperlie {

/// Element f + g*u of R(P), with u^2 = P(t). Reduction by u^2 happens
/// eagerly inside multiplication, so the (f, g) pair is always canonical.
struct RingElement {
    CurvePtr curve;
    LaurentPoly f;
    LaurentPoly g;

    RingElement(CurvePtr c, LaurentPoly f_, LaurentPoly g_)
        : curve(std::move(c)), f(std::move(f_)), g(std::move(g_)) {}

    static RingElement zero(CurvePtr c) {
        LaurentPoly z = LaurentPoly::zero(c->universe());
        return RingElement(std::move(c), z, z);
    }
    static RingElement one(CurvePtr c) {
        LaurentPoly o = LaurentPoly::one(c->universe());
        LaurentPoly z = LaurentPoly::zero(c->universe());
        return RingElement(std::move(c), std::move(o), std::move(z));
    }
    static RingElement t_power(CurvePtr c, int k) {
        LaurentPoly f = LaurentPoly::t_power(c->universe(), k);
        LaurentPoly z = LaurentPoly::zero(c->universe());
        return RingElement(std::move(c), std::move(f), std::move(z));
    }
    static RingElement t_power_u(CurvePtr c, int k) {
        LaurentPoly z = LaurentPoly::zero(c->universe());
        LaurentPoly g = LaurentPoly::t_power(c->universe(), k);
        return RingElement(std::move(c), std::move(z), std::move(g));
    }
    static RingElement from_laurent(CurvePtr c, LaurentPoly f) {
        LaurentPoly z = LaurentPoly::zero(c->universe());
        return RingElement(std::move(c), std::move(f), std::move(z));
    }

    bool is_zero() const { return f.is_zero() && g.is_zero(); }

    std::string to_string() const { return f.to_string() + " | " + g.to_string(); }
};

inline void check_same_curve(const RingElement& x, const RingElement& y) {
    if (x.curve != y.curve && !(*x.curve == *y.curve)) throw error("curve mismatch");
}

inline RingElement operator+(const RingElement& x, const RingElement& y) {
    check_same_curve(x, y);
    return RingElement(x.curve, x.f + y.f, x.g + y.g);
}
inline RingElement operator-(const RingElement& x, const RingElement& y) {
    check_same_curve(x, y);
    return RingElement(x.curve, x.f - y.f, x.g - y.g);
}
inline RingElement operator-(const RingElement& x) {
    return RingElement(x.curve, -x.f, -x.g);
}
inline RingElement operator*(const RingElement& x, const RingElement& y) {
    check_same_curve(x, y);
    LaurentPoly pf = x.curve->p_full();
    return RingElement(x.curve, x.f * y.f + (x.g * y.g) * pf, x.f * y.g + y.f * x.g);
}
inline RingElement operator*(const RingElement& x, const ParamFrac& c) {
    return RingElement(x.curve, x.f * c, x.g * c);
}
inline RingElement operator*(const RingElement& x, const Rational& c) {
    return RingElement(x.curve, x.f * c, x.g * c);
}
inline bool operator==(const RingElement& x, const RingElement& y) {
    return x.f == y.f && x.g == y.g;
}
inline bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

inline RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }

inline RingElement conjugate(const RingElement& x) {
    return RingElement(x.curve, x.f, -x.g);
}

/// N(f + g u) = f^2 - g^2 P; multiplicative, lands in the Laurent subring.
inline LaurentPoly norm(const RingElement& x) {
    return x.f * x.f - (x.g * x.g) * x.curve->p_full();
}

/// The derivation sqrt(P) d/dt: f + g u  |->  (g' P + g P'/2) + f' u.
inline RingElement apply_delta(const RingElement& x) {
    const Curve& c = *x.curve;
    LaurentPoly newf = x.g.derivative_t() * c.p_full() + x.g * c.p_full_derivative() * Rational(1, 2);
    return RingElement(x.curve, std::move(newf), x.f.derivative_t());
}

struct UnitWitness {
    ParamFrac c;
    int k; // norm(x) = c * t^k
};

/// A unit of R(P) is exactly an element whose norm is c * t^k with c an
/// invertible constant.
inline std::optional<UnitWitness> is_unit(const RingElement& x) {
    LaurentPoly n = norm(x);
    if (n.is_zero()) return std::nullopt;
    if (n.coeffs().size() != 1) return std::nullopt;
    auto [k, c] = *n.coeffs().begin();
    if (!c.try_inverse()) return std::nullopt;
    return UnitWitness{c, k};
}

inline RingElement unit_inverse(const RingElement& x) {
    auto w = is_unit(x);
    if (!w) throw error("inverse of a non-unit");
    auto cinv = w->c.try_inverse();
    RingElement xbar = conjugate(x);
    LaurentPoly tshift = LaurentPoly::t_power(x.curve->universe(), -w->k, *cinv);
    return RingElement(x.curve, xbar.f * tshift, xbar.g * tshift);
}

inline RingElement ring_pow(const RingElement& x, int e) {
    if (e < 0) return ring_pow(unit_inverse(x), -e);
    RingElement r = RingElement::one(x.curve);
    RingElement base = x;
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

/// DJKM unit generators at an exact rational beta for which 2(beta-1) and
/// 2(beta+1) are rational squares (so all square roots are exact), e.g.
/// beta = 17/8 with mu = 3/2, nu = 5/2.
struct DjkmGenerators {
    CurvePtr curve;
    RingElement lambda0, lambda1, lambda2;
    Rational mu;  // sqrt(2(beta-1))
    Rational nu;  // sqrt(2(beta+1))
    Rational rho; // sqrt(beta^2-1) = mu*nu/2
};

inline DjkmGenerators djkm_generators(const Rational& beta) {
    auto mu = rational_sqrt(2 * (beta - 1));
    auto nu = rational_sqrt(2 * (beta + 1));
    if (!mu || !nu || *mu == 0 || *nu == 0)
        throw error("beta does not admit exact rational radicals; "
                    "use the radical-free scaled families instead");
    Rational rho = (*mu) * (*nu) / 2;
    auto curve = std::make_shared<const Curve>(Curve::djkm(beta));
    UniversePtr u = curve->universe();
    auto lin = [&](Rational c2, Rational c0, Rational gc) {
        LaurentPoly f(u);
        f.set_coeff(2, ParamFrac::constant(u, c2));
        f.set_coeff(0, ParamFrac::constant(u, c0));
        LaurentPoly g = LaurentPoly::constant(u, ParamFrac::constant(u, gc));
        return RingElement(curve, std::move(f), std::move(g));
    };
    RingElement l0 = lin(1 / rho, -beta / rho, 1);
    RingElement l1 = lin(1 / *nu, 1 / *nu, *mu / 2);
    RingElement l2 = lin(1 / *mu, -1 / *mu, *nu / 2);
    return DjkmGenerators{curve, std::move(l0), std::move(l1), std::move(l2), *mu, *nu, rho};
}

struct UnitFactorization {
    Rational c0;
    int e_t, e1, e2; // x = c0 * t^e_t * lambda1^e1 * lambda2^e2
};

/// Bounded search for the Thm-13 factorization of a unit on the DJKM curve.
/// The norm fixes c0 up to sign and the exponent sum e_t + e1 + e2; the two
/// remaining exponents are scanned in canonical order.
inline std::optional<UnitFactorization> recognize_unit(const RingElement& x,
                                                       const DjkmGenerators& gen,
                                                       int bound) {
    auto w = is_unit(x);
    if (!w) return std::nullopt;
    if (!w->c.is_constant()) return std::nullopt;
    if (w->k % 2 != 0) return std::nullopt;
    int esum = w->k / 2;
    auto c0sq = w->c.constant_value();
    auto c0 = rational_sqrt(c0sq < 0 ? -c0sq : c0sq);
    if (!c0 || c0sq < 0) return std::nullopt;
    UniversePtr u = gen.curve->universe();
    for (int e1 = -bound; e1 <= bound; ++e1) {
        RingElement p1 = ring_pow(gen.lambda1, e1);
        for (int e2 = -bound; e2 <= bound; ++e2) {
            int et = esum - e1 - e2;
            RingElement cand = p1 * ring_pow(gen.lambda2, e2);
            LaurentPoly tp = LaurentPoly::t_power(u, et);
            cand = RingElement(cand.curve, cand.f * tp, cand.g * tp);
            for (Rational sign : {Rational(1), Rational(-1)}) {
                RingElement scaled = cand * (sign * *c0);
                if (scaled == x) return UnitFactorization{sign * *c0, et, e1, e2};
            }
        }
    }
    return std::nullopt;
}

} // namespace hyperlie
