#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace gpd {

/// Exact rational coordinate. Every decimal literal and every binary64 value
/// is representable, so grid coordinates never need rounding.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "7", "-3.25", "1e-3", "2.5E2" or "5/8". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Shortest exact rendering: an integer, a terminating decimal, or "p/q".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// Exact conversion; rejects NaN and infinities.
Rational from_double(double value);

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

}  // namespace gpd
