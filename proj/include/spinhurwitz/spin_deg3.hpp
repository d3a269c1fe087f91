#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

// Theta-characteristic parity: an element of Z/2, rendered "+" (even) / "-" (odd).
enum class Parity { even, odd };

Parity parity_add(Parity a, Parity b);
int parity_sign(Parity p);  // +1 for even, -1 for odd
char parity_symbol(Parity p);
Parity parse_parity(const std::string& text);  // "+" or "-"

// A query for the degree-3 spin Hurwitz number H^{h,p} with k insertions of
// the profile (3).  Genus-0 curves carry only the even theta characteristic,
// so (h=0, odd) is invalid.
struct SpinQuery {
  int genus = 0;
  Parity parity = Parity::even;
  int insertions = 0;

  void validate() const;  // throws DomainError
};

// Closed form 3^{2h-2} [ (-1)^k 2^{k+h-1} + sign(p) ].
Rational closed_form(const SpinQuery& q);

// Genus <= 1 families in k (the recursion's base cases).
Rational genus0_even(int k);  // -(1/9) ((-1)^{k-1} 2^{k-1} - 1)
Rational genus1_odd(int k);   // (-1)^k 2^k - 1
Rational genus1_even(int k);  // (-1)^k 2^k + 1

// The genus-1 odd-parity family recovered from the degree-3 central
// character on strict partitions: 2^{-k} [ f(2,1)^k - f(3)^k ].
Rational central_character_genus1_odd(int k);

// f_{(3)} on the strict partitions of 3: (3) -> 2, (2,1) -> -4.
Rational central_character_f3(const Partition& mu);

// Supersymmetric power sums p_1(m) = d - 1/24, p_3(m) = sum m_j^3 - 1/240.
Rational supersym_p1(const Partition& m);
Rational supersym_p3(const Partition& m);

// Local invariants of degree 1 and 2: sign(p) * 1 and sign(p) * 2^{h-1}.
Rational local_gw_deg12(int d, int h, Parity p);

// Drop trivial profiles (1^d); unramified fibers do not constrain the count.
std::vector<Partition> reduce_profiles(const std::vector<Partition>& profiles, int d);

// Transfer-matrix route, valid for h >= 2: the first component of
//   M(k) . M(0)^{h-2} . (F_p(0), F_p(1))^T
// where F_p is the genus-1 family of parity p and
//   M(j) = [ 6 E(j)    3 E(j+1) ]
//          [ 6 E(j+1)  3 E(j+2) ]   with E = genus1_even.
Rational transfer_matrix_eval(const SpinQuery& q);

// Degeneration recursion with memoization.  Deterministic and safe for
// concurrent queries; the cache never changes observable results.
class SpinEngine {
 public:
  // Canonical evaluation: genus <= 1 from the family formulas, genus >= 2 by
  // splitting off a genus-1 even-parity piece with no insertions.
  Rational recursion(const SpinQuery& q);

  // Right-hand side of the degeneration formula for an arbitrary split:
  //   6 H(h1,p1,k1) H(h2,p2,k2) + 3 H(h1,p1,k1+1) H(h2,p2,k2+1)
  // with both factors evaluated by this engine.
  Rational split_eval(int h1, Parity p1, int k1, int h2, Parity p2, int k2);

 private:
  std::map<std::tuple<int, int, int>, Rational> memo_;
  std::mutex mutex_;
};

}  // namespace spinhurwitz
