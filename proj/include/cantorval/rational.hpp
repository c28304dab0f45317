#ifndef CANTORVAL_RATIONAL_HPP
#define CANTORVAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cantorval {

// The universal scalar: exact arbitrary-precision rationals, always in lowest
// terms with positive denominator. No floating point enters the core set
// computations; doubles appear only at output boundaries and in the dimension
// solvers, which are explicitly approximate.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
// malformed input or zero denominator. "q" may be negative; the result is
// canonical either way.
Rational parse_rational(std::string_view text);

// Always renders with an explicit denominator: "5/3", "-1/2", "0/1".
std::string to_fraction_string(const Rational& value);

// Fixed-point decimal with exactly `digits` fractional digits, rounded half
// away from zero. Exact integer arithmetic; no double in the path.
std::string to_decimal_string(const Rational& value, int digits);

double to_double(const Rational& value);

// value^exponent for a non-negative integer exponent.
Rational rational_pow(const Rational& value, std::size_t exponent);

// Largest integer <= value.
BigInt rational_floor(const Rational& value);

// Comparison helpers for hot loops. The general-purpose rational operators
// are an order of magnitude slower than a direct cross-multiplication, and
// the interval algebra is dominated by comparisons.
inline bool rational_less(const Rational& a, const Rational& b) {
    if (denominator(a) == denominator(b)) return numerator(a) < numerator(b);
    return numerator(a) * denominator(b) < numerator(b) * denominator(a);
}

inline bool rational_leq(const Rational& a, const Rational& b) { return !rational_less(b, a); }

// Exact equality; values are always canonical, so componentwise suffices.
inline bool rational_eq(const Rational& a, const Rational& b) {
    return numerator(a) == numerator(b) && denominator(a) == denominator(b);
}

}  // namespace cantorval

#endif
