#pragma once

#include <vector>

#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

// A cover's discrete data: degree, target genus, branch profiles and the
// domain Euler characteristic the Riemann-Hurwitz relation forces on it.
struct CoverShape {
  int degree = 1;
  int genus = 0;
  std::vector<Partition> profiles;
  int chi = 2;

  void validate() const;  // throws DomainError unless chi is the forced one
};

// The unique chi with 2d(1-h) - chi + sum_i (l(m^i) - d) = 0.
int forced_chi(int d, int h, const std::vector<Partition>& profiles);

// 2d(1-h) - chi - sum_i (d - l(m^i)); zero exactly when chi is forced.
int formal_dimension(int d, int h, int chi, const std::vector<Partition>& profiles);

// Sheet-labeled covers of the middle sphere with profile m over both poles:
// d! |Aut(m)| / prod m_j.
Int middle_sphere_cover_count(const Partition& m);

// Ways to smooth the nodes over a gluing profile m: (prod m_j)^2.
Int gluing_multiplicity(const Partition& m);

// Solutions of the node-smoothing equations for ell nodes of odd order n:
// n^{2 ell}; equals gluing_multiplicity((n^ell)).
Int schiffer_solution_count(int n, int ell);

// The coefficient attached to gluing profile m in the degeneration formula:
// gluing_multiplicity * middle_sphere_cover_count / d!, which collapses to
// the centralizer order z_m = prod m_j * |Aut(m)|.  Both expressions are
// computed and must agree.
Int recursion_coefficient(const Partition& m);

// Euler-characteristic bookkeeping for a two-sided degeneration along m:
// requires chi0 = 2 l(m), d - l(m) even, and
// chi1 + chi0 + chi2 - 4 l(m) = glued_chi.
bool nodal_chi_check(int chi1, int chi0, int chi2, const Partition& m, int glued_chi);

// Degree count for the twisted bundle: d(h-1) + sum_{i,j} (m_j^i - 1)/2
// equals -forced_chi/2.  Holds identically; profiles must be odd.
bool theta_degree_identity(int d, int h, const std::vector<Partition>& profiles);

// Hypothesis under which cover automorphisms act freely on sheets: some
// profile is trivial.
bool aut_trivial_check(const std::vector<Partition>& profiles);

}  // namespace spinhurwitz
