#pragma once

#include "hyperlie/paramfrac.hpp"

#include <vector>

namespace hyperlie {

/// Truncated power series z^(alpha) * sum_{k=0..order} c_k z^k with a
/// half-integer exponent ledger alpha (stored in half units, so shift_half=1
/// means z^(1/2)). The ledger is purely formal and additive under products.
class TruncSeries {
public:
    TruncSeries(UniversePtr u, int order, int shift_half = 0)
        : u_(std::move(u)), shift_half_(shift_half), c_(static_cast<std::size_t>(order) + 1, ParamFrac::zero(u_)) {
        if (order < 0) throw error("negative truncation order");
    }

    static TruncSeries zero(UniversePtr u, int order) { return TruncSeries(std::move(u), order); }

    static TruncSeries constant(UniversePtr u, Rational v, int order) {
        TruncSeries s(u, order);
        s.c_[0] = ParamFrac::constant(u, std::move(v));
        return s;
    }

    const UniversePtr& universe() const { return u_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    int shift_half() const { return shift_half_; }

    const ParamFrac& coeff_rel(int k) const {
        if (k < 0 || k > order()) throw error("series coefficient out of range");
        return c_[static_cast<std::size_t>(k)];
    }
    void set_coeff_rel(int k, ParamFrac v) {
        if (k < 0 || k > order()) throw error("series coefficient out of range");
        c_[static_cast<std::size_t>(k)] = std::move(v);
    }

    /// Coefficient of z^e for integer e, valid only for integer-shifted series.
    ParamFrac coeff_abs(int e) const {
        if (shift_half_ % 2 != 0) throw error("absolute coefficient of half-shifted series");
        int k = e - shift_half_ / 2;
        if (k < 0 || k > order()) return ParamFrac::zero(u_);
        return c_[static_cast<std::size_t>(k)];
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        if ((a.shift_half_ - b.shift_half_) % 2 != 0)
            throw error("adding series from different half-integer sectors");
        int sh = std::min(a.shift_half_, b.shift_half_);
        int da = (a.shift_half_ - sh) / 2, db = (b.shift_half_ - sh) / 2;
        // validity in absolute units
        int va = a.order() + da, vb = b.order() + db;
        int n = std::min(va, vb);
        TruncSeries r(a.u_, n, sh);
        for (int k = 0; k <= n; ++k) {
            ParamFrac v = ParamFrac::zero(a.u_);
            if (k - da >= 0 && k - da <= a.order()) v += a.c_[static_cast<std::size_t>(k - da)];
            if (k - db >= 0 && k - db <= b.order()) v += b.c_[static_cast<std::size_t>(k - db)];
            r.c_[static_cast<std::size_t>(k)] = std::move(v);
        }
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator-(TruncSeries a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncSeries r(a.u_, n, a.shift_half_ + b.shift_half_);
        for (int i = 0; i <= std::min(a.order(), n); ++i) {
            if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= n && j <= b.order(); ++j) {
                if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
                r.c_[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }

    friend TruncSeries operator*(TruncSeries a, const ParamFrac& c) {
        for (auto& v : a.c_) v *= c;
        return a;
    }
    friend TruncSeries operator*(TruncSeries a, const Rational& c) {
        for (auto& v : a.c_) v *= c;
        return a;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if ((a.shift_half_ - b.shift_half_) % 2 != 0) return a.is_zero() && b.is_zero();
        TruncSeries d = a - b;
        return d.is_zero();
    }

    /// Multiply by z^(halves/2).
    TruncSeries shifted_half(int halves) const {
        TruncSeries r = *this;
        r.shift_half_ += halves;
        return r;
    }

    /// Formal d/dz; the half-integer shift participates exactly.
    TruncSeries derivative_z() const {
        TruncSeries r(u_, order(), shift_half_ - 2);
        for (int k = 0; k <= order(); ++k) {
            Rational m(shift_half_ + 2 * k, 2);
            r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * m;
        }
        return r;
    }

    /// Formal term-wise integral: z^m -> z^(m+1)/(m+1). Requires that any
    /// term with m = -1 has a vanishing coefficient.
    TruncSeries integrate_z() const {
        TruncSeries r(u_, order(), shift_half_ + 2);
        for (int k = 0; k <= order(); ++k) {
            Rational m1(shift_half_ + 2 * k + 2, 2); // m + 1
            if (m1 == 0) {
                if (!c_[static_cast<std::size_t>(k)].is_zero())
                    throw error("formal integration would produce a logarithm (z^-1 term)");
                continue;
            }
            r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] / m1;
        }
        return r;
    }

    TruncSeries truncated(int order) const {
        TruncSeries r(u_, std::min(order, this->order()), shift_half_);
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
        return r;
    }

private:
    UniversePtr u_;
    int shift_half_;
    std::vector<ParamFrac> c_;
};

/// Series s with s*s*p = 1 + O(z^(order+1)), by the coefficient recursion
/// obtained from 2 s' p + s p' = 0. Requires p(0) = 1 and integer shift 0.
inline TruncSeries series_inv_sqrt(const TruncSeries& p, int order) {
    if (p.shift_half() != 0) throw error("series_inv_sqrt requires an unshifted series");
    if (p.order() < order) throw error("series_inv_sqrt: input order too small");
    const auto& u = p.universe();
    if (p.coeff_rel(0).is_zero())
        throw error("series_inv_sqrt requires a nonzero constant term");
    if (!(p.coeff_rel(0) == ParamFrac::constant(u, 1)))
        throw error("series_inv_sqrt requires constant term 1");
    TruncSeries s(u, order);
    s.set_coeff_rel(0, ParamFrac::constant(u, 1));
    for (int m = 1; m <= order; ++m) {
        ParamFrac acc = ParamFrac::zero(u);
        for (int k = 0; k < m; ++k) {
            if (s.coeff_rel(k).is_zero() || p.coeff_rel(m - k).is_zero()) continue;
            acc += s.coeff_rel(k) * p.coeff_rel(m - k) * Rational(k + m);
        }
        s.set_coeff_rel(m, acc * Rational(-1, 2 * m));
    }
    return s;
}

} // namespace hyperlie
