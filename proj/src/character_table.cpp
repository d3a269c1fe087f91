#include "spinhurwitz/character_table.hpp"

#include <algorithm>
#include <utility>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

void HurwitzQuery::validate() const {
  if (degree < 1) {
    throw DomainError("degree must be >= 1");
  }
  if (genus < 0) {
    throw DomainError("genus must be >= 0");
  }
  for (const Partition& m : profiles) {
    if (m.sum() != degree) {
      throw DomainError("profile (" + m.to_string() + ") does not sum to " +
                        std::to_string(degree));
    }
  }
}

namespace {

// Murnaghan-Nakayama on beta-numbers.  A shape with rows s_0 >= ... >= s_{L-1}
// becomes the strictly decreasing set { s_i + (L-1-i) }; removing a border
// strip of size r moves one beta down by r, with sign (-1)^{betas jumped over}.
class StripRecursion {
 public:
  Int chi(const std::vector<int>& shape, const std::vector<int>& klass) {
    if (klass.empty()) {
      return 1;
    }
    const auto key = std::make_pair(shape, klass);
    const auto it = memo_.find(key);
    if (it != memo_.end()) {
      return it->second;
    }

    const int r = klass.front();
    const std::vector<int> rest(klass.begin() + 1, klass.end());
    std::vector<int> beta(shape.size());
    const int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i) {
      beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (rows - 1 - i);
    }

    Int total = 0;
    for (int i = 0; i < rows; ++i) {
      const int target = beta[static_cast<std::size_t>(i)] - r;
      if (target < 0) {
        continue;
      }
      bool occupied = false;
      int jumped = 0;
      for (int j = 0; j < rows; ++j) {
        if (j == i) {
          continue;
        }
        const int other = beta[static_cast<std::size_t>(j)];
        if (other == target) {
          occupied = true;
          break;
        }
        if (target < other && other < beta[static_cast<std::size_t>(i)]) {
          ++jumped;
        }
      }
      if (occupied) {
        continue;
      }
      std::vector<int> next = beta;
      next[static_cast<std::size_t>(i)] = target;
      const Int sub = chi(shape_from_beta(next), rest);
      total += (jumped % 2 == 0) ? sub : -sub;
    }

    memo_.emplace(key, total);
    return total;
  }

 private:
  static std::vector<int> shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int rows = static_cast<int>(beta.size());
    std::vector<int> shape;
    for (int i = 0; i < rows; ++i) {
      const int part = beta[static_cast<std::size_t>(i)] - (rows - 1 - i);
      if (part > 0) {
        shape.push_back(part);
      }
    }
    return shape;
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo_;
};

}  // namespace

CharacterTable::CharacterTable(int d, std::vector<Partition> shapes,
                               std::vector<std::vector<Int>> values)
    : d_(d), shapes_(std::move(shapes)), values_(std::move(values)) {}

CharacterTable CharacterTable::build(int d, int max_degree) {
  if (d < 1 || d > max_degree) {
    throw DomainError("character table degree out of range [1, " + std::to_string(max_degree) +
                      "]");
  }
  std::vector<Partition> shapes = partitions_of(d, std::max(d, kDefaultMaxDegree));
  StripRecursion recursion;
  std::vector<std::vector<Int>> values;
  values.reserve(shapes.size());
  for (const Partition& lambda : shapes) {
    std::vector<Int> row;
    row.reserve(shapes.size());
    for (const Partition& mu : shapes) {
      row.push_back(recursion.chi(lambda.parts(), mu.parts()));
    }
    values.push_back(std::move(row));
  }
  return CharacterTable(d, std::move(shapes), std::move(values));
}

int CharacterTable::shape_index(const Partition& shape) const {
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (shapes_[i] == shape) {
      return static_cast<int>(i);
    }
  }
  throw DomainError("partition (" + shape.to_string() + ") is not a partition of " +
                    std::to_string(d_));
}

Int CharacterTable::chi(const Partition& lambda, const Partition& mu) const {
  const int row = shape_index(lambda);
  const int col = shape_index(mu);
  return values_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

Int CharacterTable::dimension(const Partition& lambda) const {
  return chi(lambda, Partition::trivial(d_));
}

Int hook_length_dimension(const Partition& lambda) {
  const std::vector<int>& parts = lambda.parts();
  const int rows = lambda.length();
  std::vector<int> column_heights(static_cast<std::size_t>(parts.front()), 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
      ++column_heights[static_cast<std::size_t>(j)];
    }
  }
  Int hooks = 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
      const int arm = parts[static_cast<std::size_t>(i)] - 1 - j;
      const int leg = column_heights[static_cast<std::size_t>(j)] - 1 - i;
      hooks *= arm + leg + 1;
    }
  }
  const Int order = factorial(lambda.sum());
  const Int dim = order / hooks;
  if (dim * hooks != order) {
    throw DomainError("hook product does not divide the group order");  // unreachable
  }
  return dim;
}

Rational central_char(const Partition& lambda, const Partition& mu, const CharacterTable& table) {
  if (lambda.sum() != table.degree() || mu.sum() != table.degree()) {
    throw DomainError("central character arguments must be partitions of the table degree");
  }
  return make_rational(stats(mu).class_size * table.chi(lambda, mu), table.dimension(lambda));
}

Rational burnside_hurwitz(const HurwitzQuery& q, const CharacterTable& table) {
  q.validate();
  if (q.degree != table.degree()) {
    throw DomainError("query degree does not match the character table");
  }
  const Int order = factorial(q.degree);
  Rational total(0);
  for (const Partition& lambda : table.shapes()) {
    Rational term = rational_pow(make_rational(table.dimension(lambda), order),
                                 2 - 2 * static_cast<long long>(q.genus));
    for (const Partition& m : q.profiles) {
      term *= central_char(lambda, m, table);
    }
    total += term;
  }
  return total;
}

Rational burnside_hurwitz(const HurwitzQuery& q, int max_degree) {
  q.validate();
  return burnside_hurwitz(q, CharacterTable::build(q.degree, max_degree));
}

}  // namespace spinhurwitz
