#pragma once

#include <map>
#include <vector>

#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

inline constexpr int kDefaultMaxCharacterDegree = 8;

// An ordinary-Hurwitz query: degree-d covers of a genus-h curve, branched
// with the given profiles.  Counts are automorphism-weighted and include
// disconnected domains.
struct HurwitzQuery {
  int degree = 1;
  int genus = 0;
  std::vector<Partition> profiles;

  void validate() const;  // throws DomainError
};

// Complete irreducible character table of the symmetric group S_d, built by
// the Murnaghan-Nakayama border-strip recursion.  Immutable once built.
class CharacterTable {
 public:
  static CharacterTable build(int d, int max_degree = kDefaultMaxCharacterDegree);

  int degree() const { return d_; }
  const std::vector<Partition>& shapes() const { return shapes_; }

  Int chi(const Partition& lambda, const Partition& mu) const;
  Int dimension(const Partition& lambda) const;  // chi(lambda, (1^d))

 private:
  CharacterTable(int d, std::vector<Partition> shapes, std::vector<std::vector<Int>> values);
  int shape_index(const Partition& shape) const;

  int d_;
  std::vector<Partition> shapes_;
  std::vector<std::vector<Int>> values_;  // values_[lambda][mu]
};

// Independent dimension route: d! / product of hook lengths.
Int hook_length_dimension(const Partition& lambda);

// Normalized character class_size(mu) * chi(lambda, mu) / dim(lambda).
Rational central_char(const Partition& lambda, const Partition& mu, const CharacterTable& table);

// Disconnected Hurwitz number by the character sum
//   sum_{lambda |- d} (dim lambda / d!)^{2-2h} * prod_i central_char(lambda, m^i).
Rational burnside_hurwitz(const HurwitzQuery& q, const CharacterTable& table);
Rational burnside_hurwitz(const HurwitzQuery& q, int max_degree = kDefaultMaxCharacterDegree);

}  // namespace spinhurwitz
