#include "spinhurwitz/degeneration.hpp"

#include <algorithm>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

namespace {

int profile_length_sum(int d, const std::vector<Partition>& profiles) {
  int sum = 0;
  for (const Partition& m : profiles) {
    if (m.sum() != d) {
      throw DomainError("profile (" + m.to_string() + ") does not sum to " + std::to_string(d));
    }
    sum += m.length() - d;
  }
  return sum;
}

}  // namespace

void CoverShape::validate() const {
  if (degree < 1) {
    throw DomainError("degree must be >= 1");
  }
  if (genus < 0) {
    throw DomainError("genus must be >= 0");
  }
  if (chi != forced_chi(degree, genus, profiles)) {
    throw DomainError("Euler characteristic violates the Riemann-Hurwitz relation");
  }
}

int forced_chi(int d, int h, const std::vector<Partition>& profiles) {
  return 2 * d * (1 - h) + profile_length_sum(d, profiles);
}

int formal_dimension(int d, int h, int chi, const std::vector<Partition>& profiles) {
  return 2 * d * (1 - h) - chi + profile_length_sum(d, profiles);
}

Int middle_sphere_cover_count(const Partition& m) {
  const PartitionStats s = stats(m);
  const Int numerator = factorial(m.sum()) * s.aut_order;
  const Int count = numerator / s.prod_parts;
  if (count * s.prod_parts != numerator) {
    throw DomainError("cover count is not integral");  // unreachable
  }
  return count;
}

Int gluing_multiplicity(const Partition& m) {
  const Int prod = stats(m).prod_parts;
  return prod * prod;
}

Int schiffer_solution_count(int n, int ell) {
  if (n < 1 || n % 2 == 0) {
    throw DomainError("node order must be odd and positive");
  }
  if (ell < 1) {
    throw DomainError("node count must be >= 1");
  }
  return boost::multiprecision::pow(Int(n), static_cast<unsigned>(2 * ell));
}

Int recursion_coefficient(const Partition& m) {
  const Int order = factorial(m.sum());
  const Int numerator = gluing_multiplicity(m) * middle_sphere_cover_count(m);
  const Int coefficient = numerator / order;
  if (coefficient * order != numerator) {
    throw DomainError("coefficient is not integral");  // unreachable
  }
  if (coefficient != stats(m).centralizer) {
    throw DomainError("coefficient disagrees with the centralizer order");  // unreachable
  }
  return coefficient;
}

bool nodal_chi_check(int chi1, int chi0, int chi2, const Partition& m, int glued_chi) {
  const int ell = m.length();
  if (chi0 != 2 * ell) {
    return false;
  }
  if ((m.sum() - ell) % 2 != 0) {
    return false;
  }
  return chi1 + chi0 + chi2 - 4 * ell == glued_chi;
}

bool theta_degree_identity(int d, int h, const std::vector<Partition>& profiles) {
  int branch_sum = 0;  // sum of (m_j - 1), guaranteed even part-by-part
  for (const Partition& m : profiles) {
    if (!is_odd_partition(m)) {
      throw DomainError("theta twist needs odd profiles, got (" + m.to_string() + ")");
    }
    branch_sum += d - m.length();  // sum (m_j - 1) over the parts of m
  }
  // compare 2 * deg L_f with -chi to stay in integers
  return 2 * d * (h - 1) + branch_sum == -forced_chi(d, h, profiles);
}

bool aut_trivial_check(const std::vector<Partition>& profiles) {
  return std::any_of(profiles.begin(), profiles.end(),
                     [](const Partition& m) { return m.is_trivial(); });
}

}  // namespace spinhurwitz
