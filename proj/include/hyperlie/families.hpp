#pragma once

#include "hyperlie/ring.hpp"

#include <array>
#include <string>
#include <vector>

namespace hyperlie {

inline UniversePtr beta_universe() {
    static const UniversePtr u = make_universe({"beta"});
    return u;
}

inline ParamFrac beta_param() { return ParamFrac::variable(beta_universe(), 0); }

/// t^4 - 2 beta t^2 + 1 over the beta universe.
inline LaurentPoly djkm_quartic() {
    UniversePtr u = beta_universe();
    LaurentPoly p(u);
    p.set_coeff(4, ParamFrac::constant(u, 1));
    p.set_coeff(2, beta_param() * Rational(-2));
    p.set_coeff(0, ParamFrac::constant(u, 1));
    return p;
}

/// Radical exponents relating a stored entry to the paper's polynomial:
/// paper = mu^mu_exp * nu^nu_exp * rho^rho_exp * stored, where
/// mu = sqrt(2(beta-1)), nu = sqrt(2(beta+1)), rho = sqrt(beta^2-1) = mu nu/2.
struct RadicalLedger {
    int mu_exp = 0, nu_exp = 0, rho_exp = 0;
};

enum class FamilyKind { u, v, a, b, c, d };

inline std::string family_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::u: return "u";
    case FamilyKind::v: return "v";
    case FamilyKind::a: return "a";
    case FamilyKind::b: return "b";
    case FamilyKind::c: return "c";
    case FamilyKind::d: return "d";
    }
    throw error("bad family kind");
}

/// Indexed family of radical-free polynomials in Q(beta)[t] with its
/// three-term recursion x_{n+1} = A x_n + B x_{n-1} and the radical ledger.
///
/// Stored entries and ledgers (entry index m):
///   u: U_m = rho^m u_m                ledger rho^-m
///   v: V_m = rho^m v_m                ledger rho^-m        (v_m pairs lambda0^(m+1))
///   a: A_m = mu^m a_m                 ledger mu^-m
///   b: W_m = (2/nu) mu^m b_m          ledger mu^-(m+1) rho (b_m pairs lambda2^(m+1))
///   c: C_m = nu^m c_m                 ledger nu^-m
///   d: D_m = (2/mu) nu^m d_m          ledger nu^-(m+1) rho (d_m pairs lambda1^(m+1))
struct PolynomialFamily {
    FamilyKind kind;
    std::vector<LaurentPoly> entries;
    LaurentPoly A, B;

    RadicalLedger ledger(int m) const {
        switch (kind) {
        case FamilyKind::u: return {0, 0, -m};
        case FamilyKind::v: return {0, 0, -m};
        case FamilyKind::a: return {-m, 0, 0};
        case FamilyKind::b: return {-(m + 1), 0, 1};
        case FamilyKind::c: return {0, -m, 0};
        case FamilyKind::d: return {0, -(m + 1), 1};
        }
        throw error("bad family kind");
    }

    /// Paper-normalized value at an admissible rational beta.
    LaurentPoly reconstruct(int m, const Rational& beta, const Rational& mu,
                            const Rational& nu, const Rational& rho) const {
        RadicalLedger l = ledger(m);
        Rational scale = 1;
        auto powr = [](const Rational& x, int e) {
            Rational r = 1;
            for (int i = 0; i < std::abs(e); ++i) {
                if (e > 0) r *= x;
                else r /= x;
            }
            return r;
        };
        scale *= powr(mu, l.mu_exp) * powr(nu, l.nu_exp) * powr(rho, l.rho_exp);
        return entries.at(static_cast<std::size_t>(m)).eval_var(0, beta) * scale;
    }
};

namespace detail {

inline PolynomialFamily run_three_term(FamilyKind kind, LaurentPoly a0, LaurentPoly a1,
                                       LaurentPoly A, LaurentPoly B, int order) {
    PolynomialFamily f{kind, {}, A, B};
    f.entries.push_back(std::move(a0));
    if (order >= 1) f.entries.push_back(std::move(a1));
    for (int m = 1; m < order; ++m)
        f.entries.push_back(f.A * f.entries[static_cast<std::size_t>(m)] +
                            f.B * f.entries[static_cast<std::size_t>(m - 1)]);
    return f;
}

} // namespace detail

/// Scaled u/v families of lambda0 powers: U_{m+1} = 2(t^2-beta) U_m - (beta^2-1) U_{m-1}.
inline std::pair<PolynomialFamily, PolynomialFamily> family_uv(int order) {
    UniversePtr u = beta_universe();
    LaurentPoly q2(u); // t^2 - beta
    q2.set_coeff(2, ParamFrac::constant(u, 1));
    q2.set_coeff(0, -beta_param());
    LaurentPoly A = q2 * Rational(2);
    ParamFrac b2m1 = beta_param() * beta_param() - ParamFrac::constant(u, 1);
    LaurentPoly B = LaurentPoly::constant(u, -b2m1);
    PolynomialFamily fu = detail::run_three_term(FamilyKind::u, LaurentPoly::one(u), q2, A, B, order);
    PolynomialFamily fv = detail::run_three_term(FamilyKind::v, LaurentPoly::one(u), A, A, B, order);
    return {std::move(fu), std::move(fv)};
}

/// Scaled a/b families of lambda2 powers:
/// W_{m+1} = 2(t^2-1) W_m - 2(beta-1) t^2 W_{m-1}.
inline std::pair<PolynomialFamily, PolynomialFamily> family_ab(int order) {
    UniversePtr u = beta_universe();
    LaurentPoly t2m1(u); // t^2 - 1
    t2m1.set_coeff(2, ParamFrac::constant(u, 1));
    t2m1.set_coeff(0, ParamFrac::constant(u, -1));
    LaurentPoly A = t2m1 * Rational(2);
    LaurentPoly B(u);
    B.set_coeff(2, (ParamFrac::constant(u, 1) - beta_param()) * Rational(2)); // -2(beta-1) t^2
    PolynomialFamily fa = detail::run_three_term(FamilyKind::a, LaurentPoly::one(u), t2m1, A, B, order);
    PolynomialFamily fb = detail::run_three_term(FamilyKind::b, LaurentPoly::one(u), A, A, B, order);
    return {std::move(fa), std::move(fb)};
}

/// Duality transform f(beta, t) -> f(-beta, i t); in-scope entries are even
/// in t, so the i-powers collapse to signs.
inline LaurentPoly duality_transform(const LaurentPoly& f) {
    return f.negate_var(0).substitute_it();
}

/// Scaled c/d families of lambda1 powers, via the duality
/// C_m = (-1)^m A_m(-beta, it), D_m = (-1)^m W_m(-beta, it);
/// equivalently the mirrored recursion x_{m+1} = 2(t^2+1) x_m - 2(beta+1) t^2 x_{m-1}.
inline std::pair<PolynomialFamily, PolynomialFamily> family_cd(int order) {
    auto [fa, fb] = family_ab(order);
    UniversePtr u = beta_universe();
    LaurentPoly A(u); // 2(t^2+1)
    A.set_coeff(2, ParamFrac::constant(u, 2));
    A.set_coeff(0, ParamFrac::constant(u, 2));
    LaurentPoly B(u); // -2(beta+1) t^2
    B.set_coeff(2, (ParamFrac::constant(u, -1) - beta_param()) * Rational(2));
    PolynomialFamily fc{FamilyKind::c, {}, A, B};
    PolynomialFamily fd{FamilyKind::d, {}, A, B};
    Rational sign = 1;
    for (std::size_t m = 0; m < fa.entries.size(); ++m) {
        fc.entries.push_back(duality_transform(fa.entries[m]) * sign);
        fd.entries.push_back(duality_transform(fb.entries[m]) * sign);
        sign = -sign;
    }
    return {std::move(fc), std::move(fd)};
}

// ------------------------------------------------------------- Chebyshev

enum class ChebyshevKind { T, U };

/// Dense coefficients of T_n or U_n from the three-term recursion.
inline std::vector<Rational> chebyshev(ChebyshevKind kind, int n) {
    if (n < 0) throw error("chebyshev index must be nonnegative");
    std::vector<Rational> prev{1};
    std::vector<Rational> cur = kind == ChebyshevKind::T ? std::vector<Rational>{0, 1}
                                                         : std::vector<Rational>{0, 2};
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        std::vector<Rational> next(cur.size() + 1, Rational(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Evaluate a dense univariate polynomial at a LaurentPoly argument.
inline LaurentPoly eval_poly_at(const std::vector<Rational>& coeffs, const LaurentPoly& x) {
    LaurentPoly acc = LaurentPoly::zero(x.universe());
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x;
        acc += LaurentPoly::constant(x.universe(), ParamFrac::constant(x.universe(), coeffs[i]));
    }
    return acc;
}

// ------------------------------------------------------- second-order ODEs

/// Coefficients of p y'' + q y' + r y; all radical-free.
struct OdeSpec {
    LaurentPoly p, q, r;
};

/// Exact residual p y'' + q y' + r y.
inline LaurentPoly ode_annihilates(const OdeSpec& spec, const LaurentPoly& y) {
    LaurentPoly y1 = y.derivative_t();
    LaurentPoly y2 = y1.derivative_t();
    return spec.p * y2 + spec.q * y1 + spec.r * y;
}

/// P^1 = t (t^2+1)(t^4 - 2 beta t^2 + 1), the b-family leading coefficient.
inline LaurentPoly b_ode_p1() {
    UniversePtr u = beta_universe();
    LaurentPoly t2p1(u);
    t2p1.set_coeff(2, ParamFrac::constant(u, 1));
    t2p1.set_coeff(0, ParamFrac::constant(u, 1));
    return LaurentPoly::t_power(u, 1) * t2p1 * djkm_quartic();
}

/// Q_n of the b-family ODE.
inline LaurentPoly b_ode_qn(int n) {
    UniversePtr u = beta_universe();
    ParamFrac beta = beta_param();
    auto C = [&](Rational v) { return ParamFrac::constant(u, std::move(v)); };
    LaurentPoly q(u);
    q.set_coeff(6, C(Rational(-(2 * n - 3))));
    q.set_coeff(4, -(beta * Rational(-4 * n) + C(Rational(2 * n - 5))));
    q.set_coeff(2, -(beta * Rational(4 - 4 * n) + C(Rational(2 * n + 3))));
    q.set_coeff(0, C(Rational(-(2 * n + 1))));
    return q;
}

/// R_n of the b-family ODE.
inline LaurentPoly b_ode_rn(int n) {
    UniversePtr u = beta_universe();
    ParamFrac beta = beta_param();
    auto C = [&](Rational v) { return ParamFrac::constant(u, std::move(v)); };
    LaurentPoly r(u);
    r.set_coeff(5, C(Rational(-4 * n)));
    r.set_coeff(3, (beta * Rational(1 + n) + C(Rational(n + 5))) * Rational(-2 * n));
    r.set_coeff(1, (beta * Rational(n - 1) + C(Rational(n + 1))) * Rational(-2 * n));
    return r;
}

/// Family ODEs, radical-free:
///  u: -2 t p y'' + (2p - 4 t^2 (t^2-beta)) y' + 8 n^2 t^3 y        (pullback of the
///  v: -2 t p y'' + (2p - 12 t^2 (t^2-beta)) y' + 8 n(n+2) t^3 y     Chebyshev ODEs,
///     cleared by rho^3; the printed displays drop powers of q')
///  b: the (firsttsquaredode) coefficients P^1, Q_n, R_n
///  d: the printed P^2, Q^2_n, R^2_n
inline OdeSpec ode_for(FamilyKind family, int n) {
    UniversePtr u = beta_universe();
    ParamFrac beta = beta_param();
    auto C = [&](Rational v) { return ParamFrac::constant(u, std::move(v)); };
    LaurentPoly p = djkm_quartic();
    switch (family) {
    case FamilyKind::u:
    case FamilyKind::v: {
        OdeSpec s{LaurentPoly::t_power(u, 1, Rational(-2)) * p, LaurentPoly::zero(u),
                  LaurentPoly::zero(u)};
        LaurentPoly t2q(u); // t^2 (t^2 - beta)
        t2q.set_coeff(4, C(1));
        t2q.set_coeff(2, -beta);
        s.q = p * Rational(2) - t2q * Rational(family == FamilyKind::u ? 4 : 12);
        Rational eig = family == FamilyKind::u ? Rational(8) * n * n
                                               : Rational(8) * n * (n + 2);
        s.r = LaurentPoly::t_power(u, 3, eig);
        return s;
    }
    case FamilyKind::b:
        return OdeSpec{b_ode_p1(), b_ode_qn(n), b_ode_rn(n)};
    case FamilyKind::d: {
        LaurentPoly p2(u); // t (1 - t^2) p
        p2.set_coeff(1, C(1));
        p2.set_coeff(3, C(-1));
        p2 = p2 * p;
        LaurentPoly q(u);
        q.set_coeff(6, C(Rational(2 * n - 3)));
        q.set_coeff(4, -(beta * Rational(4 * n) + C(Rational(2 * n - 5))));
        q.set_coeff(2, beta * Rational(4 * n - 4) + C(Rational(2 * n + 3)));
        q.set_coeff(0, C(Rational(-(2 * n + 1))));
        LaurentPoly r(u);
        r.set_coeff(5, C(Rational(4 * n)));
        r.set_coeff(3, (beta * Rational(1) + beta * Rational(n) - C(Rational(n)) - C(Rational(5))) * Rational(2 * n));
        r.set_coeff(1, (beta - beta * Rational(n) + C(Rational(n)) + C(1)) * Rational(2 * n));
        return OdeSpec{std::move(p2), std::move(q), std::move(r)};
    }
    default:
        throw error("no second-order ODE for this family");
    }
}

/// Radical-free remainder of the b-ODE induction step:
/// Rem-hat(t, n) = -8 n t (1+t^2)^2 (t^2-beta) W_n + 4 (t^2+1)^2 p W_n'
///                 + 8 (beta-1)(n+1) t (t^2+1)^3 W_{n-1}.
inline LaurentPoly rem_hat(const PolynomialFamily& w, int n) {
    UniversePtr u = beta_universe();
    ParamFrac beta = beta_param();
    LaurentPoly t2p1(u);
    t2p1.set_coeff(2, ParamFrac::constant(u, 1));
    t2p1.set_coeff(0, ParamFrac::constant(u, 1));
    LaurentPoly t2q(u);
    t2q.set_coeff(2, ParamFrac::constant(u, 1));
    t2q.set_coeff(0, -beta);
    const LaurentPoly& Wn = w.entries.at(static_cast<std::size_t>(n));
    const LaurentPoly& Wn1 = w.entries.at(static_cast<std::size_t>(n - 1));
    LaurentPoly term1 = LaurentPoly::t_power(u, 1, Rational(-8 * n)) * t2p1 * t2p1 * t2q * Wn;
    LaurentPoly term2 = t2p1 * t2p1 * djkm_quartic() * Wn.derivative_t() * Rational(4);
    LaurentPoly term3 = LaurentPoly::t_power(u, 1, Rational(8 * (n + 1))) *
                        LaurentPoly::constant(u, beta - ParamFrac::constant(u, 1)) *
                        t2p1 * t2p1 * t2p1 * Wn1;
    return term1 + term2 + term3;
}

/// Rem-hat(n+1) - 2(t^2-1) Rem-hat(n) + 2(beta-1) t^2 Rem-hat(n-1); the
/// paper's (finalreduction) says this reduces to zero.
inline LaurentPoly rem_three_term(const PolynomialFamily& w, int n) {
    UniversePtr u = beta_universe();
    LaurentPoly t2m1(u);
    t2m1.set_coeff(2, ParamFrac::constant(u, 1));
    t2m1.set_coeff(0, ParamFrac::constant(u, -1));
    LaurentPoly bt2(u);
    bt2.set_coeff(2, (beta_param() - ParamFrac::constant(u, 1)) * Rational(2));
    return rem_hat(w, n + 1) - t2m1 * Rational(2) * rem_hat(w, n) + bt2 * rem_hat(w, n - 1);
}

} // namespace hyperlie
