#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinhurwitz {

// Every counting formula in this library is evaluated exactly: integers are
// arbitrary precision and fractions are always kept reduced with a positive
// denominator. There is no floating-point mode.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den, reduced, sign normalized into the numerator. den == 0 is a DomainError.
Rational make_rational(Int num, Int den);

/// n! as an exact integer; n must be nonnegative.
Int factorial(int n);

/// base^exponent exactly, for exponents of either sign. 0 to a negative power
/// is a DomainError.
Rational rational_pow(const Rational& base, long long exponent);

/// Parses "p" or "p/q" with optional signs; throws std::invalid_argument on
/// malformed text and DomainError on a zero denominator.
Rational parse_rational(const std::string& text);

/// "p" when the value is integral, otherwise "p/q".
std::string format_rational(const Rational& value);

}  // namespace spinhurwitz
