#include "spinhurwitz/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // boost's rational_adaptor reduces on construction once the denominator is positive
  return Rational(std::move(num), std::move(den));
}

Int factorial(int n) {
  if (n < 0) {
    throw DomainError("factorial of negative integer");
  }
  Int result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Rational rational_pow(const Rational& base, long long exponent) {
  if (exponent == 0) {
    return Rational(1);
  }
  if (base == 0) {
    if (exponent < 0) {
      throw DomainError("zero raised to a negative power");
    }
    return Rational(0);
  }
  const unsigned long long magnitude =
      exponent < 0 ? -static_cast<unsigned long long>(exponent)
                   : static_cast<unsigned long long>(exponent);
  Int num = pow(numerator(base), static_cast<unsigned>(magnitude));
  Int den = pow(denominator(base), static_cast<unsigned>(magnitude));
  return exponent > 0 ? make_rational(std::move(num), std::move(den))
                      : make_rational(std::move(den), std::move(num));
}

namespace {

Int parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (start < text.size() && (text[start] == '+' || text[start] == '-')) {
    ++start;
  }
  if (start == text.size()) {
    throw std::invalid_argument("malformed integer: '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed integer: '" + text + "'");
    }
  }
  return Int(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  return make_rational(std::move(num), std::move(den));
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) {
    return numerator(value).str();
  }
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace spinhurwitz
