#include "spinhurwitz/series.hpp"

#include <algorithm>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw DomainError("series needs at least the constant coefficient");
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) {
    throw DomainError("series order must be >= 0");
  }
  return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

const Rational& TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw DomainError("coefficient index out of range");
  }
  return coefficients_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  if (order < 0 || order > this->order()) {
    throw DomainError("truncate order out of range");
  }
  return TruncatedSeries(std::vector<Rational>(coefficients_.begin(),
                                               coefficients_.begin() + order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = a.coefficient(n) + b.coefficient(n);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = a.coefficient(n) - b.coefficient(n);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    if (a.coefficient(i) == 0) {
      continue;
    }
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (a.coefficient(0) != 0) {
    throw DomainError("series_exp needs a zero constant term");
  }
  const int order = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1, Rational(0));
  b[0] = 1;
  // b' = a' b  =>  n b_n = sum_{j=1..n} j a_j b_{n-j}
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) {
      acc += Rational(j) * a.coefficient(j) * b[static_cast<std::size_t>(n - j)];
    }
    b[static_cast<std::size_t>(n)] = acc / n;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a.coefficient(0) != 1) {
    throw DomainError("series_log needs constant term 1");
  }
  const int order = a.order();
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  // c = log a  =>  a c' = a'  =>  n c_n = n a_n - sum_{j=1..n-1} j c_j a_{n-j}
  for (int n = 1; n <= order; ++n) {
    Rational acc = Rational(n) * a.coefficient(n);
    for (int j = 1; j < n; ++j) {
      acc -= Rational(j) * c[static_cast<std::size_t>(j)] * a.coefficient(n - j);
    }
    c[static_cast<std::size_t>(n)] = acc / n;
  }
  return TruncatedSeries(std::move(c));
}

std::vector<Rational> disconnected_from_connected(const std::vector<Rational>& connected) {
  const int n = static_cast<int>(connected.size());
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k)] = connected[static_cast<std::size_t>(k - 1)];
  }
  const TruncatedSeries expd = series_exp(TruncatedSeries(std::move(coeffs)));
  return std::vector<Rational>(expd.coefficients().begin() + 1, expd.coefficients().end());
}

std::vector<Rational> connected_from_disconnected(const std::vector<Rational>& disconnected) {
  const int n = static_cast<int>(disconnected.size());
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[0] = 1;
  for (int k = 1; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k)] = disconnected[static_cast<std::size_t>(k - 1)];
  }
  const TruncatedSeries logd = series_log(TruncatedSeries(std::move(coeffs)));
  return std::vector<Rational>(logd.coefficients().begin() + 1, logd.coefficients().end());
}

}  // namespace spinhurwitz
