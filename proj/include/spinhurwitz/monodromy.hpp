#pragma once

#include <cstdint>
#include <vector>

#include "spinhurwitz/character_table.hpp"
#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

// Permutations of {0..d-1} as image arrays.
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(x) = a(b(x))
Perm inverse_perm(const Perm& a);
Partition cycle_type(const Perm& a);

inline constexpr std::uint64_t kDefaultMonodromyBudget = 100'000'000;

struct TupleCount {
  Int count;                        // number of solution tuples
  std::uint64_t work_performed = 0;  // group multiplications actually executed
};

// Number of tuples (a_1, b_1, ..., a_h, b_h, c_1, ..., c_r) in S_d with each
// c_i of cycle type m^i and  prod [a_j, b_j] * prod c_i = identity.
// The final c_r is never enumerated: it is forced to the inverse of the
// accumulated product and only its cycle type is checked.
// Throws BudgetExceeded when the work estimate (d!)^{2h + r} exceeds the
// budget; never returns a partial count.
TupleCount count_monodromy_tuples(const HurwitzQuery& q,
                                  std::uint64_t budget = kDefaultMonodromyBudget);

// The tuple count divided by d!: the automorphism-weighted count of possibly
// disconnected degree-d covers of a genus-h curve with the given profiles.
Rational monodromy_hurwitz(const HurwitzQuery& q,
                           std::uint64_t budget = kDefaultMonodromyBudget);

}  // namespace spinhurwitz
