#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hyperlie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Library-wide error type for contract violations and unsupported inputs.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    if (denominator(q) == 1) {
        os << numerator(q);
    } else {
        os << numerator(q) << '/' << denominator(q);
    }
    return os.str();
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

/// (2l-1)!! = 1*3*5*...*(2l-1), with the empty product for l = 0.
inline Integer double_factorial_odd(unsigned l) {
    Integer r = 1;
    for (unsigned k = 1; k <= l; ++k) r *= (2 * k - 1);
    return r;
}

/// Exact square root of a nonnegative rational, if it exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = numerator(q), d = denominator(q);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace hyperlie
