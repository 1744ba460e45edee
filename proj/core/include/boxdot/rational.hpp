#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace boxdot {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. cpp_rational keeps the canonical form we rely
// on everywhere: gcd(num, den) == 1 and den > 0. No predicate in this
// library ever rounds.
using Rational = boost::multiprecision::cpp_rational;

/// Parse a decimal string ("-12", "0.25", ".5") into an exact rational.
/// Throws Error(BadInput) on anything else; no exponents, no fractions.
Rational rational_from_decimal(std::string_view s);

/// Exact decimal rendering when the reduced denominator is of the form
/// 2^a*5^b, otherwise "num/den". All coordinates produced by this library
/// stay decimal (inputs are decimal and repair offsets are decimal).
std::string to_decimal_string(const Rational& r);

/// Largest integer <= r.
BigInt rational_floor(const Rational& r);

/// Largest k >= 0 with k*k <= r. Requires r >= 0.
BigInt floor_sqrt(const Rational& r);

}  // namespace boxdot
