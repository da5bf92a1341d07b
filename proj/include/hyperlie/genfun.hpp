#pragma once

#include "hyperlie/bell.hpp"
#include "hyperlie/reduction.hpp"
#include "hyperlie/truncseries.hpp"

#include <vector>

namespace hyperlie {

enum class GenfunDirection { forward, backward };
enum class GenfunMethod { recursion, integrating_factor };

/// Data of the first-order ODE 2z A(z) y' + Q(z) y = RHS(z) satisfied by the
/// generating function of one basis column of the reduction table.
/// forward:  A = Pbar(z) = sum b_j z^(n-j), Q = z Pbar' - n Pbar,  y = P_i
/// backward: A = P(z)    = sum b_j z^j,     Q = z P' - 2(n-1) P,   y = Q_i
struct OdeData {
    CurvePtr curve;
    int i = 0;
    GenfunDirection direction = GenfunDirection::forward;
    std::vector<ParamFrac> A;   // dense in z
    std::vector<ParamFrac> Q;
    std::vector<ParamFrac> RHS; // R_i or S_i
};

namespace detail {

inline std::vector<ParamFrac> dense_zero(const UniversePtr& u, std::size_t sz) {
    return std::vector<ParamFrac>(sz, ParamFrac::zero(u));
}

inline void dense_add(std::vector<ParamFrac>& v, std::size_t k, const ParamFrac& c,
                      const UniversePtr& u) {
    if (v.size() <= k) v.resize(k + 1, ParamFrac::zero(u));
    v[k] += c;
}

inline void dense_trim(std::vector<ParamFrac>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

} // namespace detail

/// Assemble Pbar/P, Q and the right-hand side R_i or S_i. The R_i sum needs
/// table rows up to index 2n-3, i.e. beyond the delta window for n >= 3; the
/// S_i sum stays inside the initial window.
inline OdeData build_ode_data(ReductionTable& table, int i, GenfunDirection dir) {
    const Curve& c = table.curve();
    if (c.l() != 0) throw error("generating functions require an l = 0 curve");
    const int n = c.n();
    if (i < -1 || i > n - 2) throw error("basis index out of range");
    const auto& u = c.universe();
    OdeData d;
    d.curve = table.curve_ptr();
    d.i = i;
    d.direction = dir;
    if (dir == GenfunDirection::forward) {
        d.A = detail::dense_zero(u, static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) d.A[static_cast<std::size_t>(n - j)] = c.b(j);
        d.Q = detail::dense_zero(u, static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            d.Q[static_cast<std::size_t>(n - j)] = c.b(j) * Rational(-j);
        for (int j = 0; j <= n; ++j) {
            ParamFrac bj = c.b(j);
            if (bj.is_zero()) continue;
            for (int l = -j; l < n - 1; ++l) {
                if (2 * l + j == 0) continue;
                ParamFrac pv = table.p(l + j - 1, i);
                if (pv.is_zero()) continue;
                detail::dense_add(d.RHS, static_cast<std::size_t>(n + l), bj * pv * Rational(2 * l + j), u);
            }
        }
    } else {
        d.A = detail::dense_zero(u, static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) d.A[static_cast<std::size_t>(j)] = c.b(j);
        d.Q = detail::dense_zero(u, static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            d.Q[static_cast<std::size_t>(j)] = c.b(j) * Rational(j - 2 * (n - 1));
        for (int j = 0; j <= n; ++j) {
            ParamFrac bj = c.b(j);
            if (bj.is_zero()) continue;
            for (int l = j - n + 2; l < 2; ++l) {
                if (2 * l - (j + 2) == 0) continue;
                ParamFrac qv = table.q(l - j, i);
                if (qv.is_zero()) continue;
                detail::dense_add(d.RHS, static_cast<std::size_t>(l + n - 2), bj * qv * Rational(2 * l - j - 2), u);
            }
        }
    }
    detail::dense_trim(d.RHS);
    return d;
}

/// Solve the ODE as a truncated series whose z^k coefficient is p_{k-1,i}
/// (forward) or q_{k-n+2,i} (backward). The recursion method extracts the
/// coefficient rows of the ODE directly; the integrating-factor method
/// expands 1/sqrt(A) and integrates formally, solving the integration
/// constant from the initial window instead of hardcoding it.
inline TruncSeries genfun_solve(const OdeData& d, int order, GenfunMethod method) {
    const Curve& c = *d.curve;
    const int n = c.n();
    const auto& u = c.universe();
    auto rhs = [&](int e) {
        return (e >= 0 && e < static_cast<int>(d.RHS.size())) ? d.RHS[static_cast<std::size_t>(e)]
                                                              : ParamFrac::zero(u);
    };
    auto window_target = [&](int k) {
        if (d.direction == GenfunDirection::forward)
            return k - 1 == d.i ? Rational(1) : Rational(0);
        return k - n + 2 == -d.i ? Rational(1) : Rational(0);
    };

    if (method == GenfunMethod::recursion) {
        TruncSeries s(u, order);
        for (int k = 0; k <= std::min(n - 1, order); ++k)
            s.set_coeff_rel(k, ParamFrac::constant(u, window_target(k)));
        if (d.direction == GenfunDirection::forward) {
            // row e: sum_j (2(e-n)+j) b_j c_{e-n+j} = RHS_e; top j = n, coeff 2e-n
            for (int e = n; e <= order; ++e) {
                if (2 * e - n == 0) throw error("vanishing forward recursion pivot");
                ParamFrac acc = rhs(e);
                for (int j = 0; j < n; ++j) {
                    ParamFrac bj = c.b(j);
                    int idx = e - n + j;
                    if (bj.is_zero() || idx < 0 || 2 * (e - n) + j == 0) continue;
                    acc -= bj * s.coeff_rel(idx) * Rational(2 * (e - n) + j);
                }
                s.set_coeff_rel(e, acc / Rational(2 * e - n));
            }
        } else {
            // row e: sum_j (2(e-n)+2-j) b_j c_{e-j} = RHS_e; top j = 0
            for (int e = n; e <= order; ++e) {
                ParamFrac top = c.b(0) * Rational(2 * (e - n) + 2);
                auto topi = top.try_inverse();
                if (!topi) throw error("vanishing backward recursion pivot");
                ParamFrac acc = rhs(e);
                for (int j = 1; j <= n; ++j) {
                    ParamFrac bj = c.b(j);
                    int idx = e - j;
                    if (bj.is_zero() || idx < 0 || 2 * (e - n) + 2 - j == 0) continue;
                    acc -= bj * s.coeff_rel(idx) * Rational(2 * (e - n) + 2 - j);
                }
                s.set_coeff_rel(e, acc * *topi);
            }
        }
        return s;
    }

    // integrating factor
    const int work = order + n + 4;
    TruncSeries A(u, work);
    for (std::size_t k = 0; k < d.A.size(); ++k) A.set_coeff_rel(static_cast<int>(k), d.A[k]);
    if (!(A.coeff_rel(0) == ParamFrac::constant(u, 1)))
        throw error("integrating factor route requires constant term 1 "
                    "(monic reversal forward, b_0 = 1 backward)");
    TruncSeries h = series_inv_sqrt(A, work);
    TruncSeries R(u, work);
    for (std::size_t k = 0; k < d.RHS.size(); ++k) R.set_coeff_rel(static_cast<int>(k), d.RHS[k]);

    const int pre_halves = d.direction == GenfunDirection::forward ? -(n + 2) : -2 * n;
    const int post_halves = d.direction == GenfunDirection::forward ? n : 2 * (n - 1);
    TruncSeries integrand = (R * h * Rational(1, 2)).shifted_half(pre_halves);
    TruncSeries F = integrand.integrate_z(); // asserts no z^-1 term
    TruncSeries G = (h * F).shifted_half(post_halves);
    // G now has integer exponents; add the constant-of-integration sector
    // C * z^(post/2) * h and solve C from the one window row it touches.
    const int cexp = post_halves / 2;
    ParamFrac C = ParamFrac::zero(u);
    bool c_allowed = true;
    if (d.direction == GenfunDirection::forward && n % 2 != 0) {
        // half-integer sector: C must vanish (the paper's "C is zero if n is odd")
        c_allowed = false;
    }
    if (c_allowed) {
        if (cexp > n - 1)
            throw error("integration constant underdetermined by the initial window");
        C = ParamFrac::constant(u, window_target(cexp)) - G.coeff_abs(cexp);
    }
    TruncSeries out(u, order);
    for (int k = 0; k <= order; ++k) {
        ParamFrac v = G.coeff_abs(k);
        if (c_allowed && k >= cexp) v += C * h.coeff_rel(k - cexp);
        out.set_coeff_rel(k, std::move(v));
    }
    for (int k = 0; k <= std::min(n - 1, order); ++k)
        if (!(out.coeff_rel(k) == ParamFrac::constant(u, window_target(k))))
            throw error("integrating factor solution violates the initial window");
    return out;
}

/// Residual of the solved series in the ODE, 2 z A y' + Q y - RHS, exact
/// through the order the truncation supports.
inline TruncSeries genfun_residual(const OdeData& d, const TruncSeries& y) {
    const auto& u = y.universe();
    int work = y.order();
    TruncSeries A(u, work), Q(u, work), R(u, work);
    for (std::size_t k = 0; k < d.A.size() && static_cast<int>(k) <= work; ++k)
        A.set_coeff_rel(static_cast<int>(k), d.A[k]);
    for (std::size_t k = 0; k < d.Q.size() && static_cast<int>(k) <= work; ++k)
        Q.set_coeff_rel(static_cast<int>(k), d.Q[k]);
    for (std::size_t k = 0; k < d.RHS.size() && static_cast<int>(k) <= work; ++k)
        R.set_coeff_rel(static_cast<int>(k), d.RHS[k]);
    TruncSeries zyp = y.derivative_z().shifted_half(2); // z * y'
    return zyp * A * Rational(2) + Q * y - R;
}

/// h_0..h_order of 1/sqrt(Pbar) by the Bell-polynomial formula. Requires the
/// monic normalization b_n = 1 so the 1/b_n^((2l+1)/2) factors are rational.
inline std::vector<ParamFrac> h_coefficients(const Curve& c, int order) {
    if (c.l() != 0) throw error("h-coefficients defined for l = 0 curves");
    const int n = c.n();
    const auto& u = c.universe();
    std::vector<ParamPoly> z; // z_j = j! * b_{n-j}
    for (int j = 1; j <= order + 1; ++j) {
        int idx = n - j;
        ParamFrac bf = idx >= 0 ? c.b(idx) : ParamFrac::zero(u);
        if (!bf.den_atoms().empty()) throw error("h-coefficients require polynomial curve coefficients");
        z.push_back(bf.num() * Rational(factorial(static_cast<unsigned>(j)), 1));
    }
    std::vector<ParamFrac> h;
    for (int k = 0; k <= order; ++k) {
        ParamPoly acc = ParamPoly::zero(u);
        for (int l = 0; l <= k; ++l) {
            ParamPoly B = bell_polynomial(static_cast<unsigned>(k), static_cast<unsigned>(l), z);
            Rational coef(double_factorial_odd(static_cast<unsigned>(l)), 1);
            if (l % 2 == 1) coef = -coef;
            Integer p2 = 1;
            for (int t = 0; t < l; ++t) p2 *= 2;
            coef /= Rational(p2, 1);
            acc += B * coef;
        }
        h.push_back(ParamFrac(acc * Rational(Integer(1), factorial(static_cast<unsigned>(k)))));
    }
    return h;
}

// --------------------------------------------------- associated Legendre

/// Family P_l^(q/r)(b) = class of t^((l+1)r+q-1) on the curve
/// t^(2r) - 2b t^r + 1, generated by the shifted three-term recursion
///   (s + q/r + 1) rho_{s+1} = b (2s + 2q/r + 1) rho_s - (s + q/r) rho_{s-1}
/// seeded with the two basis classes at l = -1 and l = 0.
struct AssocLegendreFamily {
    int r = 1, q = 0;
    CurvePtr curve;
    std::vector<ClassVector> entries; // index l = 0..order
};

inline CurvePtr assoc_legendre_curve(int r) {
    UniversePtr u = make_universe({"b"});
    LaurentPoly p(u);
    p.set_coeff(2 * r, ParamFrac::constant(u, 1));
    p.set_coeff(r, ParamFrac::variable(u, 0) * Rational(-2));
    p.set_coeff(0, ParamFrac::constant(u, 1));
    return std::make_shared<const Curve>(Curve(std::move(p)));
}

inline AssocLegendreFamily assoc_legendre_family(int r, int q, int order) {
    if (r < 1 || q < 0 || q >= r) throw error("need r >= 1 and 0 <= q < r");
    AssocLegendreFamily fam;
    fam.r = r;
    fam.q = q;
    fam.curve = assoc_legendre_curve(r);
    const auto& u = fam.curve->universe();
    ParamFrac b = ParamFrac::variable(u, 0);
    Rational cq(q, r);
    // seeds: l = -1 -> t^(q-1), l = 0 -> t^(r+q-1); both basis exponents
    ClassVector prev = ClassVector::basis_power(u, q - 1);
    ClassVector cur = ClassVector::basis_power(u, r + q - 1);
    fam.entries.push_back(cur);
    for (int s = 0; s < order; ++s) {
        ClassVector next = cur * (b * (Rational(2 * s + 1) + 2 * cq)) - prev * (Rational(s) + cq);
        next *= ParamFrac::constant(u, Rational(1) / (Rational(s + 1) + cq));
        prev = std::move(cur);
        cur = std::move(next);
        fam.entries.push_back(cur);
    }
    return fam;
}

} // namespace hyperlie
