#include "spinhurwitz/spin_deg3.hpp"

#include <array>
#include <stdexcept>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

Parity parity_add(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

int parity_sign(Parity p) { return p == Parity::even ? 1 : -1; }

char parity_symbol(Parity p) { return p == Parity::even ? '+' : '-'; }

Parity parse_parity(const std::string& text) {
  if (text == "+") {
    return Parity::even;
  }
  if (text == "-") {
    return Parity::odd;
  }
  throw std::invalid_argument("parity must be '+' or '-', got '" + text + "'");
}

void SpinQuery::validate() const {
  if (genus < 0) {
    throw DomainError("genus must be >= 0");
  }
  if (insertions < 0) {
    throw DomainError("insertion count must be >= 0");
  }
  if (genus == 0 && parity == Parity::odd) {
    throw DomainError("genus 0 admits only the even theta characteristic");
  }
}

Rational closed_form(const SpinQuery& q) {
  q.validate();
  const int k_sign = (q.insertions % 2 == 0) ? 1 : -1;
  const Rational two_power =
      Rational(k_sign) * rational_pow(Rational(2), q.insertions + q.genus - 1);
  return rational_pow(Rational(3), 2 * q.genus - 2) *
         (two_power + Rational(parity_sign(q.parity)));
}

Rational genus0_even(int k) {
  if (k < 0) {
    throw DomainError("insertion count must be >= 0");
  }
  return Rational(-1, 9) * (rational_pow(Rational(-2), k - 1) - 1);
}

Rational genus1_odd(int k) {
  if (k < 0) {
    throw DomainError("insertion count must be >= 0");
  }
  return rational_pow(Rational(-2), k) - 1;
}

Rational genus1_even(int k) {
  if (k < 0) {
    throw DomainError("insertion count must be >= 0");
  }
  return rational_pow(Rational(-2), k) + 1;
}

Rational central_character_genus1_odd(int k) {
  if (k < 0) {
    throw DomainError("insertion count must be >= 0");
  }
  const Rational f21 = central_character_f3(Partition({2, 1}));
  const Rational f3 = central_character_f3(Partition({3}));
  return rational_pow(Rational(1, 2), k) * (rational_pow(f21, k) - rational_pow(f3, k));
}

Rational central_character_f3(const Partition& mu) {
  if (mu.sum() != 3 || !is_strict(mu)) {
    throw DomainError("central character is defined on strict partitions of 3, got (" +
                      mu.to_string() + ")");
  }
  return mu.length() == 1 ? Rational(2) : Rational(-4);
}

Rational supersym_p1(const Partition& m) { return Rational(m.sum()) - Rational(1, 24); }

Rational supersym_p3(const Partition& m) {
  Rational cubes(0);
  for (int part : m.parts()) {
    cubes += Rational(part) * part * part;
  }
  return cubes - Rational(1, 240);
}

Rational local_gw_deg12(int d, int h, Parity p) {
  if (h < 0) {
    throw DomainError("genus must be >= 0");
  }
  if (d == 1) {
    return Rational(parity_sign(p));
  }
  if (d == 2) {
    return Rational(parity_sign(p)) * rational_pow(Rational(2), h - 1);
  }
  throw DomainError("local invariant formula covers degrees 1 and 2 only");
}

std::vector<Partition> reduce_profiles(const std::vector<Partition>& profiles, int d) {
  std::vector<Partition> out;
  for (const Partition& m : profiles) {
    if (m.sum() != d) {
      throw DomainError("profile (" + m.to_string() + ") does not sum to " + std::to_string(d));
    }
    if (!m.is_trivial()) {
      out.push_back(m);
    }
  }
  return out;
}

namespace {

using Mat2 = std::array<std::array<Rational, 2>, 2>;

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return c;
}

Mat2 step_matrix(int j) {
  return Mat2{{{6 * genus1_even(j), 3 * genus1_even(j + 1)},
               {6 * genus1_even(j + 1), 3 * genus1_even(j + 2)}}};
}

}  // namespace

Rational transfer_matrix_eval(const SpinQuery& q) {
  q.validate();
  if (q.genus < 2) {
    throw DomainError("transfer matrix route requires genus >= 2");
  }
  Mat2 m = step_matrix(q.insertions);
  for (int step = 0; step < q.genus - 2; ++step) {
    m = multiply(m, step_matrix(0));
  }
  const Rational v0 = q.parity == Parity::even ? genus1_even(0) : genus1_odd(0);
  const Rational v1 = q.parity == Parity::even ? genus1_even(1) : genus1_odd(1);
  return m[0][0] * v0 + m[0][1] * v1;
}

Rational SpinEngine::recursion(const SpinQuery& q) {
  q.validate();
  if (q.genus == 0) {
    return genus0_even(q.insertions);
  }
  if (q.genus == 1) {
    return q.parity == Parity::even ? genus1_even(q.insertions) : genus1_odd(q.insertions);
  }
  const auto key = std::make_tuple(q.genus, parity_sign(q.parity), q.insertions);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) {
      return it->second;
    }
  }
  // split off a genus-1 even piece: h = 1 + (h-1), p = even + p, k = 0 + k
  const Rational value =
      split_eval(1, Parity::even, 0, q.genus - 1, q.parity, q.insertions);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(key, value).first->second;
}

Rational SpinEngine::split_eval(int h1, Parity p1, int k1, int h2, Parity p2, int k2) {
  const SpinQuery a{h1, p1, k1};
  const SpinQuery b{h2, p2, k2};
  const SpinQuery a1{h1, p1, k1 + 1};
  const SpinQuery b1{h2, p2, k2 + 1};
  return 6 * recursion(a) * recursion(b) + 3 * recursion(a1) * recursion(b1);
}

}  // namespace spinhurwitz
