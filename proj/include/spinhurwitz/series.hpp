#pragma once

#include <vector>

#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

// Truncated formal power series over Q with exact coefficients.
// A series of order n stores coefficients of t^0 .. t^n; all arithmetic
// truncates at the smaller order of the operands.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Rational> coefficients);
  static TruncatedSeries zero(int order);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Rational& coefficient(int n) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  TruncatedSeries truncate(int order) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<Rational> coefficients_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// exp of a series with zero constant term; log of a series with constant term 1.
// Both throw DomainError otherwise.
TruncatedSeries series_exp(const TruncatedSeries& a);
TruncatedSeries series_log(const TruncatedSeries& a);

// Generating-function transform between connected and disconnected counts,
// indexed by degree: 1 + sum_{d>0} H_d t^d = exp( sum_{d>0} GW_d t^d ).
// Both functions take and return plain value vectors (index 0 <-> degree 1).
std::vector<Rational> disconnected_from_connected(const std::vector<Rational>& connected);
std::vector<Rational> connected_from_disconnected(const std::vector<Rational>& disconnected);

}  // namespace spinhurwitz
