#include "spinhurwitz/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "spinhurwitz/character_table.hpp"
#include "spinhurwitz/degeneration.hpp"
#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/series.hpp"
#include "spinhurwitz/spin_deg3.hpp"

namespace spinhurwitz {

namespace {

constexpr Parity kParities[] = {Parity::even, Parity::odd};

std::string spin_case(int h, Parity p, int k) {
  std::ostringstream out;
  out << "(h=" << h << ", " << parity_symbol(p) << ", k=" << k << ")";
  return out.str();
}

CheckResult route_equality() {
  CheckResult result{"spin/route-equality", true, ""};
  SpinEngine engine;
  for (int h = 0; h <= 6; ++h) {
    for (Parity p : kParities) {
      if (h == 0 && p == Parity::odd) {
        continue;
      }
      for (int k = 0; k <= 12; ++k) {
        const SpinQuery q{h, p, k};
        const Rational expected = closed_form(q);
        if (engine.recursion(q) != expected) {
          return {result.name, false, "recursion mismatch at " + spin_case(h, p, k)};
        }
        if (h >= 2 && transfer_matrix_eval(q) != expected) {
          return {result.name, false, "transfer mismatch at " + spin_case(h, p, k)};
        }
        if (h == 1 && p == Parity::odd && central_character_genus1_odd(k) != expected) {
          return {result.name, false, "central-character mismatch at " + spin_case(h, p, k)};
        }
      }
    }
  }
  return result;
}

CheckResult split_invariance() {
  CheckResult result{"spin/split-invariance", true, ""};
  SpinEngine engine;
  for (int h = 0; h <= 5; ++h) {
    for (Parity p : kParities) {
      if (h == 0 && p == Parity::odd) {
        continue;
      }
      for (int k = 0; k <= 8; ++k) {
        const Rational expected = closed_form(SpinQuery{h, p, k});
        for (int h1 = 0; h1 <= h; ++h1) {
          for (int k1 = 0; k1 <= k; ++k1) {
            for (Parity p1 : kParities) {
              const Parity p2 = parity_add(p, p1);  // so p1 + p2 = p
              if ((h1 == 0 && p1 == Parity::odd) || (h - h1 == 0 && p2 == Parity::odd)) {
                continue;
              }
              if (engine.split_eval(h1, p1, k1, h - h1, p2, k - k1) != expected) {
                return {result.name, false,
                        "split (" + std::to_string(h1) + "," + parity_symbol(p1) + "," +
                            std::to_string(k1) + ") fails at " + spin_case(h, p, k)};
              }
            }
          }
        }
      }
    }
  }
  return result;
}

CheckResult parity_gap() {
  CheckResult result{"spin/parity-gap", true, ""};
  for (int h = 1; h <= 6; ++h) {
    const Rational gap = 2 * rational_pow(Rational(3), 2 * h - 2);
    for (int k = 0; k <= 12; ++k) {
      const Rational diff = closed_form(SpinQuery{h, Parity::even, k}) -
                            closed_form(SpinQuery{h, Parity::odd, k});
      if (diff != gap) {
        return {result.name, false, "gap mismatch at h=" + std::to_string(h) +
                                        ", k=" + std::to_string(k)};
      }
    }
  }
  return result;
}

CheckResult central_character_difference() {
  CheckResult result{"spin/central-character-difference", true, ""};
  const Partition two_one({2, 1});
  const Partition three({3});
  const Rational char_diff = central_character_f3(two_one) - central_character_f3(three);
  const Rational power_sum_diff = (supersym_p3(two_one) - supersym_p3(three)) / 3;
  if (char_diff != Rational(-6) || power_sum_diff != Rational(-6)) {
    result.passed = false;
    result.detail = "difference is " + format_rational(char_diff) + " vs " +
                    format_rational(power_sum_diff);
  }
  if (supersym_p1(two_one) != supersym_p1(three)) {
    result.passed = false;
    result.detail = "p1 differs across partitions of 3";
  }
  return result;
}

CheckResult golden_values() {
  CheckResult result{"spin/golden-values", true, ""};
  struct Golden {
    int h;
    Parity p;
    int k;
    Rational value;
  };
  const Golden table[] = {
      {0, Parity::even, 0, Rational(1, 6)}, {0, Parity::even, 3, Rational(-1, 3)},
      {1, Parity::even, 0, Rational(2)},    {1, Parity::odd, 0, Rational(0)},
      {1, Parity::odd, 1, Rational(-3)},    {1, Parity::odd, 2, Rational(3)},
      {1, Parity::even, 1, Rational(-1)},   {1, Parity::even, 2, Rational(5)},
      {2, Parity::even, 0, Rational(27)},   {2, Parity::even, 1, Rational(-27)},
  };
  SpinEngine engine;
  for (const Golden& g : table) {
    const SpinQuery q{g.h, g.p, g.k};
    if (closed_form(q) != g.value || engine.recursion(q) != g.value) {
      return {result.name, false, "value mismatch at " + spin_case(g.h, g.p, g.k)};
    }
    if (g.h >= 2 && transfer_matrix_eval(q) != g.value) {
      return {result.name, false, "transfer mismatch at " + spin_case(g.h, g.p, g.k)};
    }
    if (g.h == 1 && g.p == Parity::odd && central_character_genus1_odd(g.k) != g.value) {
      return {result.name, false, "central-character mismatch at " + spin_case(g.h, g.p, g.k)};
    }
  }
  return result;
}

CheckResult character_table_invariants() {
  CheckResult result{"oracle/character-table", true, ""};
  for (int d = 1; d <= kDefaultMaxCharacterDegree; ++d) {
    const CharacterTable table = CharacterTable::build(d);
    const std::vector<Partition>& shapes = table.shapes();
    Int dim_square_sum = 0;
    for (const Partition& lambda : shapes) {
      const Int dim = table.dimension(lambda);
      if (dim <= 0 || dim != hook_length_dimension(lambda)) {
        return {result.name, false,
                "dimension mismatch at lambda=(" + lambda.to_string() + "), d=" +
                    std::to_string(d)};
      }
      dim_square_sum += dim * dim;
    }
    if (dim_square_sum != factorial(d)) {
      return {result.name, false, "sum of squared dimensions wrong for d=" + std::to_string(d)};
    }
    for (const Partition& mu : shapes) {
      for (const Partition& nu : shapes) {
        Int dot = 0;
        for (const Partition& lambda : shapes) {
          dot += table.chi(lambda, mu) * table.chi(lambda, nu);
        }
        const Int expected = (mu == nu) ? stats(mu).centralizer : Int(0);
        if (dot != expected) {
          return {result.name, false,
                  "orthogonality fails at mu=(" + mu.to_string() + "), nu=(" + nu.to_string() +
                      "), d=" + std::to_string(d)};
        }
      }
    }
  }
  return result;
}

void append_profile_lists(const std::vector<Partition>& pool, int max_size,
                          std::vector<std::vector<Partition>>& out) {
  std::vector<Partition> current;
  const auto grow = [&](auto&& self) -> void {
    out.push_back(current);
    if (static_cast<int>(current.size()) >= max_size) {
      return;
    }
    for (const Partition& m : pool) {
      current.push_back(m);
      self(self);
      current.pop_back();
    }
  };
  grow(grow);
}

CheckResult burnside_vs_monodromy(std::uint64_t budget) {
  CheckResult result{"oracle/burnside-vs-monodromy", true, ""};
  struct Grid {
    int d;
    int max_genus;
    int max_profiles;
  };
  const Grid grids[] = {{3, 2, 3}, {4, 1, 2}, {1, 3, 4}, {2, 3, 4}};
  for (const Grid& grid : grids) {
    const CharacterTable table = CharacterTable::build(grid.d);
    std::vector<std::vector<Partition>> profile_sets;
    append_profile_lists(partitions_of(grid.d), grid.max_profiles, profile_sets);
    for (int h = 0; h <= grid.max_genus; ++h) {
      for (const std::vector<Partition>& profiles : profile_sets) {
        const HurwitzQuery q{grid.d, h, profiles};
        const Rational via_characters = burnside_hurwitz(q, table);
        const Rational via_tuples = monodromy_hurwitz(q, budget);
        if (via_characters != via_tuples) {
          std::ostringstream detail;
          detail << "d=" << grid.d << ", h=" << h << ", profiles=[";
          for (const Partition& m : profiles) {
            detail << "(" << m.to_string() << ")";
          }
          detail << "]: " << format_rational(via_characters) << " vs "
                 << format_rational(via_tuples);
          return {result.name, false, detail.str()};
        }
      }
    }
  }
  return result;
}

CheckResult burnside_profile_invariance() {
  CheckResult result{"oracle/profile-invariance", true, ""};
  const CharacterTable table = CharacterTable::build(3);
  const Partition three({3});
  const Partition two_one({2, 1});
  const Partition ones({1, 1, 1});
  for (int h = 0; h <= 2; ++h) {
    const Rational forward = burnside_hurwitz(HurwitzQuery{3, h, {three, two_one}}, table);
    const Rational reversed = burnside_hurwitz(HurwitzQuery{3, h, {two_one, three}}, table);
    const Rational padded = burnside_hurwitz(HurwitzQuery{3, h, {three, ones, two_one}}, table);
    if (forward != reversed || forward != padded) {
      return {result.name, false, "profile order or padding changes the value at h=" +
                                      std::to_string(h)};
    }
    const std::vector<Partition> reduced = reduce_profiles({three, ones, two_one}, 3);
    if (reduced != std::vector<Partition>{three, two_one}) {
      return {result.name, false, "reduce_profiles did not drop the trivial profile"};
    }
  }
  return result;
}

CheckResult oracle_golden_values(std::uint64_t budget) {
  CheckResult result{"oracle/golden-values", true, ""};
  const Partition three({3});
  struct Golden {
    HurwitzQuery query;
    Rational value;
  };
  const Golden table[] = {
      {HurwitzQuery{3, 0, {three, three, three}}, Rational(1, 3)},
      {HurwitzQuery{3, 0, {}}, Rational(1, 6)},
      {HurwitzQuery{3, 1, {}}, Rational(3)},
      {HurwitzQuery{2, 1, {}}, Rational(2)},
  };
  for (const Golden& g : table) {
    if (burnside_hurwitz(g.query) != g.value || monodromy_hurwitz(g.query, budget) != g.value) {
      return {result.name, false,
              "oracle value mismatch at d=" + std::to_string(g.query.degree) +
                  ", h=" + std::to_string(g.query.genus)};
    }
  }
  return result;
}

Partition random_odd_partition(int d, std::mt19937& rng) {
  std::vector<int> parts;
  int remaining = d;
  while (remaining > 0) {
    std::uniform_int_distribution<int> pick(0, (remaining + 1) / 2 - 1);
    const int part = 2 * pick(rng) + 1;
    parts.push_back(part);
    remaining -= part;
  }
  return Partition(std::move(parts));
}

CheckResult recursion_coefficients() {
  CheckResult result{"identity/recursion-coefficients", true, ""};
  if (recursion_coefficient(Partition({1, 1, 1})) != 6 ||
      recursion_coefficient(Partition({3})) != 3) {
    return {result.name, false, "degree-3 coefficients are not 6 and 3"};
  }
  for (int d = 1; d <= 8; ++d) {
    for (const Partition& m : partitions_of(d)) {
      // recursion_coefficient checks gluing * covers / d! == z_m internally
      if (recursion_coefficient(m) != stats(m).centralizer) {
        return {result.name, false, "coefficient mismatch at (" + m.to_string() + ")"};
      }
    }
  }
  if (middle_sphere_cover_count(Partition({1, 1, 1})) != 36 ||
      middle_sphere_cover_count(Partition({3})) != 2) {
    return {result.name, false, "degree-3 middle-sphere counts are not 36 and 2"};
  }
  return result;
}

CheckResult schiffer_vs_gluing() {
  CheckResult result{"identity/schiffer-vs-gluing", true, ""};
  for (int n = 1; n <= 7; n += 2) {
    for (int ell = 1; ell <= 4; ++ell) {
      if (schiffer_solution_count(n, ell) != gluing_multiplicity(Partition::rectangular(n, ell))) {
        return {result.name, false,
                "count mismatch at n=" + std::to_string(n) + ", ell=" + std::to_string(ell)};
      }
    }
  }
  return result;
}

CheckResult theta_degree_random() {
  CheckResult result{"identity/theta-degree", true, ""};
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> degree_dist(1, 9);
  std::uniform_int_distribution<int> genus_dist(0, 4);
  std::uniform_int_distribution<int> count_dist(0, 4);
  for (int sample = 0; sample < 500; ++sample) {
    const int d = degree_dist(rng);
    const int h = genus_dist(rng);
    std::vector<Partition> profiles;
    const int n_profiles = count_dist(rng);
    for (int i = 0; i < n_profiles; ++i) {
      profiles.push_back(random_odd_partition(d, rng));
    }
    if (!theta_degree_identity(d, h, profiles)) {
      return {result.name, false,
              "identity fails at d=" + std::to_string(d) + ", h=" + std::to_string(h)};
    }
  }
  return result;
}

CheckResult nodal_chi_identities() {
  CheckResult result{"identity/nodal-chi", true, ""};
  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> degree_dist(1, 9);
  std::uniform_int_distribution<int> chi_dist(-10, 10);
  for (int sample = 0; sample < 200; ++sample) {
    const Partition m = random_odd_partition(degree_dist(rng), rng);
    const int ell = m.length();
    const int chi1 = 2 * chi_dist(rng);
    const int chi2 = 2 * chi_dist(rng);
    const int glued = chi1 + 2 * ell + chi2 - 4 * ell;
    if (!nodal_chi_check(chi1, 2 * ell, chi2, m, glued)) {
      return {result.name, false, "valid configuration rejected at (" + m.to_string() + ")"};
    }
    if (nodal_chi_check(chi1, 2 * ell + 2, chi2, m, glued + 2)) {
      return {result.name, false, "wrong middle characteristic accepted"};
    }
  }
  if (nodal_chi_check(0, 2, 0, Partition({2, 1}), -2)) {
    return {result.name, false, "even-part profile accepted"};
  }
  if (!nodal_chi_check(2, 6, 2, Partition({1, 1, 1}), -2)) {
    return {result.name, false, "trivial profile configuration rejected"};
  }
  return result;
}

CheckResult series_round_trip() {
  CheckResult result{"identity/series-round-trip", true, ""};
  std::mt19937 rng(161803);
  std::uniform_int_distribution<int> order_dist(1, 8);
  std::uniform_int_distribution<int> num_dist(-30, 30);
  std::uniform_int_distribution<int> den_dist(1, 12);
  for (int sample = 0; sample < 200; ++sample) {
    const int order = order_dist(rng);
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int n = 1; n <= order; ++n) {
      coeffs[static_cast<std::size_t>(n)] = make_rational(num_dist(rng), den_dist(rng));
    }
    const TruncatedSeries s(coeffs);
    if (series_log(series_exp(s)) != s) {
      return {result.name, false, "log(exp(s)) != s at sample " + std::to_string(sample)};
    }
  }
  const std::vector<Rational> gw = {Rational(1), Rational(1, 2), Rational(4, 3)};
  const std::vector<Rational> expected = {Rational(1), Rational(1), Rational(2)};
  if (disconnected_from_connected(gw) != expected ||
      connected_from_disconnected(expected) != gw) {
    return {result.name, false, "connected/disconnected transform mismatch"};
  }
  return result;
}

}  // namespace

std::vector<CheckResult> run_spin_checks() {
  return {golden_values(), route_equality(), split_invariance(), parity_gap(),
          central_character_difference()};
}

std::vector<CheckResult> run_oracle_checks(std::uint64_t budget) {
  return {character_table_invariants(), burnside_vs_monodromy(budget),
          burnside_profile_invariance(), oracle_golden_values(budget)};
}

std::vector<CheckResult> run_identity_checks() {
  return {recursion_coefficients(), schiffer_vs_gluing(), theta_degree_random(),
          nodal_chi_identities(), series_round_trip()};
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace spinhurwitz
