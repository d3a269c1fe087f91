#include "spinhurwitz/monodromy.hpp"

#include <algorithm>
#include <numeric>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

Perm identity_perm(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    c[x] = a[static_cast<std::size_t>(b[x])];
  }
  return c;
}

Perm inverse_perm(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    inv[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  }
  return inv;
}

Partition cycle_type(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    int length = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = static_cast<std::size_t>(a[x]);
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition(std::move(lengths));
}

namespace {

std::vector<Perm> all_permutations(int d) {
  std::vector<Perm> out;
  Perm p = identity_perm(d);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// precomputing one commutator per (a, b) pair trades (d!)^2 memory for a
// single multiplication per handle step; fall back to recomputing when the
// pair count would get large (reachable only with a raised budget)
constexpr std::size_t kMaxStoredCommutators = 1u << 20;

class Enumerator {
 public:
  Enumerator(const HurwitzQuery& q) : q_(q) {
    const int free_slots = 2 * q.genus + std::max(0, static_cast<int>(q.profiles.size()) - 1);
    if (free_slots > 0) {
      std::vector<Perm> all = all_permutations(q.degree);
      if (q.genus > 0 && all.size() * all.size() <= kMaxStoredCommutators) {
        commutators_.reserve(all.size() * all.size());
        for (const Perm& a : all) {
          const Perm a_inv = inverse_perm(a);
          for (const Perm& b : all) {
            commutators_.push_back(
                compose(compose(a, b), compose(a_inv, inverse_perm(b))));
            work_ += 3;
          }
        }
      }
      for (std::size_t i = 0; i + 1 < q.profiles.size(); ++i) {
        std::vector<Perm> klass;
        for (const Perm& p : all) {
          if (cycle_type(p) == q.profiles[i]) {
            klass.push_back(p);
          }
        }
        classes_.push_back(std::move(klass));
      }
      if (q.genus > 0 && commutators_.empty()) {
        all_ = std::move(all);
      }
    }
  }

  TupleCount run() {
    handles(q_.genus, identity_perm(q_.degree));
    return TupleCount{count_, work_};
  }

 private:
  void handles(int remaining, const Perm& acc) {
    if (remaining == 0) {
      profile_slots(0, acc);
      return;
    }
    if (!commutators_.empty()) {
      for (const Perm& c : commutators_) {
        work_ += 1;
        handles(remaining - 1, compose(acc, c));
      }
      return;
    }
    for (const Perm& a : all_) {
      const Perm a_inv = inverse_perm(a);
      for (const Perm& b : all_) {
        work_ += 4;
        handles(remaining - 1,
                compose(acc, compose(compose(a, b), compose(a_inv, inverse_perm(b)))));
      }
    }
  }

  void profile_slots(std::size_t index, const Perm& acc) {
    if (index < classes_.size()) {
      for (const Perm& c : classes_[index]) {
        work_ += 1;
        profile_slots(index + 1, compose(acc, c));
      }
      return;
    }
    if (q_.profiles.empty()) {
      if (acc == identity_perm(q_.degree)) {
        count_ += 1;
      }
      return;
    }
    // the last profile permutation is forced to acc^{-1}
    if (cycle_type(acc) == q_.profiles.back()) {
      count_ += 1;
    }
  }

  const HurwitzQuery& q_;
  std::vector<Perm> all_;                   // S_d, kept only for the fallback path
  std::vector<Perm> commutators_;           // [a,b] over all pairs (a,b)
  std::vector<std::vector<Perm>> classes_;  // conjugacy classes of m^1..m^{r-1}
  Int count_ = 0;
  std::uint64_t work_ = 0;
};

}  // namespace

TupleCount count_monodromy_tuples(const HurwitzQuery& q, std::uint64_t budget) {
  q.validate();
  const unsigned exponent =
      2 * static_cast<unsigned>(q.genus) + static_cast<unsigned>(q.profiles.size());
  const Int estimate = boost::multiprecision::pow(factorial(q.degree), exponent);
  if (estimate > Int(budget)) {
    throw BudgetExceeded("monodromy enumeration needs ~" + estimate.str() +
                             " multiplications, budget is " + std::to_string(budget),
                         estimate);
  }
  Enumerator enumerator(q);
  return enumerator.run();
}

Rational monodromy_hurwitz(const HurwitzQuery& q, std::uint64_t budget) {
  const TupleCount tuples = count_monodromy_tuples(q, budget);
  return make_rational(tuples.count, factorial(q.degree));
}

}  // namespace spinhurwitz
