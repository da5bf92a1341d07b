#pragma once

#include "hyperlie/parampoly.hpp"

#include <functional>
#include <vector>

namespace hyperlie {

/// Partial Bell polynomial B_{m,k}(z_1, ..., z_{m-k+1}):
///   sum over l_1 + l_2 + ... = k, l_1 + 2 l_2 + ... = m of
///   m!/(l_1! ... l_{m-k+1}!) * prod_j (z_j / j!)^{l_j}.
inline ParamPoly bell_polynomial(unsigned m, unsigned k, const std::vector<ParamPoly>& z) {
    if (k > m) throw error("bell_polynomial requires k <= m");
    if (m == 0) {
        UniversePtr u = z.empty() ? empty_universe() : z[0].universe();
        return ParamPoly::constant(u, 1); // B_{0,0} = 1
    }
    if (k == 0) {
        // only the empty partition, impossible for m > 0
        return ParamPoly::zero(z.empty() ? empty_universe() : z[0].universe());
    }
    const unsigned len = m - k + 1;
    if (z.size() < len) throw error("bell_polynomial: not enough arguments");
    UniversePtr u = z[0].universe();
    ParamPoly result = ParamPoly::zero(u);
    std::vector<unsigned> l(len + 1, 0); // l[1..len]

    std::function<void(unsigned, unsigned, unsigned)> rec =
        [&](unsigned j, unsigned kleft, unsigned mleft) {
            if (j > len) {
                if (kleft == 0 && mleft == 0) {
                    Rational coef(factorial(m), 1);
                    ParamPoly term = ParamPoly::constant(u, 1);
                    for (unsigned i = 1; i <= len; ++i) {
                        if (l[i] == 0) continue;
                        coef /= Rational(factorial(l[i]), 1);
                        Integer jf = factorial(i);
                        Integer jfp = 1;
                        for (unsigned rep = 0; rep < l[i]; ++rep) jfp *= jf;
                        coef /= Rational(jfp, 1);
                        term = term * z[i - 1].pow(l[i]);
                    }
                    result += term * coef;
                }
                return;
            }
            for (unsigned lj = 0; lj <= kleft && lj * j <= mleft; ++lj) {
                l[j] = lj;
                rec(j + 1, kleft - lj, mleft - lj * j);
            }
            l[j] = 0;
        };
    rec(1, k, m);
    return result;
}

} // namespace hyperlie
