#ifndef CRDCACHE_RATIONAL_HPP
#define CRDCACHE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace crdcache {

// Every quantity in the library is rational, so all arithmetic is exact;
// no floating point appears outside of decimal rendering for CSV output.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

BigInt ipow(const BigInt& base, unsigned exp);
Rational rational_pow(const Rational& base, unsigned exp);

// Canonical reduced form, "p/q" or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Decimal rendering with the given number of significant digits, in the
// style of printf %g (fixed when the exponent is moderate, scientific
// otherwise, trailing zeros trimmed). Exact long division, so it is
// correct for magnitudes far outside double range.
std::string to_decimal_string(const Rational& value, int significant_digits = 12);

} // namespace crdcache

#endif
