#pragma once

#include <string>
#include <vector>

#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

/// Integer partition in canonical form: nonempty, weakly decreasing, parts >= 1.
/// Used as ramification profile, conjugacy class label, and irreducible-
/// representation shape; the canonical order makes it usable as a map key.
class Partition {
 public:
  /// Sorts the parts into canonical order; rejects empty input and parts < 1.
  explicit Partition(std::vector<int> parts);

  /// (1^d), the profile of an unramified fiber.
  static Partition trivial(int d);

  /// (part^count): `count` copies of `part`.
  static Partition rectangular(int part, int count);

  /// Accepts comma-joined parts with optional power syntax: "2,1", "1^3", "3^2,1".
  /// Throws std::invalid_argument on malformed text.
  static Partition parse(const std::string& text);

  int sum() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  bool is_trivial() const;  // all parts equal 1

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  bool operator!=(const Partition& other) const { return parts_ != other.parts_; }
  /// Lexicographic on the canonical part lists.
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

  /// Comma-joined parts, e.g. "2,1".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Multiplicity bookkeeping for one partition of d.
struct PartitionStats {
  Int aut_order;    // product over distinct parts of multiplicity!
  Int prod_parts;   // product of all parts
  Int centralizer;  // z = prod_parts * aut_order
  Int class_size;   // d! / z, the conjugacy class size in S_d
};

inline constexpr int kDefaultMaxDegree = 10;

/// All partitions of d, each once, in reverse-lexicographic order:
/// (d) first, (1^d) last. d outside [1, max_degree] is a DomainError.
std::vector<Partition> partitions_of(int d, int max_degree = kDefaultMaxDegree);

/// True iff every part is odd.
bool is_odd_partition(const Partition& m);

/// True iff all parts are pairwise distinct.
bool is_strict(const Partition& m);

PartitionStats stats(const Partition& m);

}  // namespace spinhurwitz
