#include "spinhurwitz/spin_deg3.hpp"

#include "doctest.h"
#include "spinhurwitz/errors.hpp"

using namespace spinhurwitz;

TEST_CASE("parity arithmetic") {
  CHECK(parity_add(Parity::even, Parity::even) == Parity::even);
  CHECK(parity_add(Parity::even, Parity::odd) == Parity::odd);
  CHECK(parity_add(Parity::odd, Parity::odd) == Parity::even);
  for (Parity a : {Parity::even, Parity::odd}) {
    for (Parity b : {Parity::even, Parity::odd}) {
      CHECK(parity_add(a, b) == parity_add(b, a));
      for (Parity c : {Parity::even, Parity::odd}) {
        CHECK(parity_add(parity_add(a, b), c) == parity_add(a, parity_add(b, c)));
      }
    }
  }
  CHECK(parity_sign(Parity::even) == 1);
  CHECK(parity_sign(Parity::odd) == -1);
  CHECK(parity_symbol(Parity::even) == '+');
  CHECK(parity_symbol(Parity::odd) == '-');
  CHECK(parse_parity("+") == Parity::even);
  CHECK(parse_parity("-") == Parity::odd);
  CHECK_THROWS_AS(parse_parity("even"), std::invalid_argument);
}

TEST_CASE("query validation") {
  CHECK_NOTHROW((SpinQuery{0, Parity::even, 5}).validate());
  CHECK_THROWS_AS((SpinQuery{0, Parity::odd, 0}).validate(), DomainError);
  CHECK_THROWS_AS((SpinQuery{-1, Parity::even, 0}).validate(), DomainError);
  CHECK_THROWS_AS((SpinQuery{1, Parity::even, -1}).validate(), DomainError);
}

TEST_CASE("closed form on the golden set") {
  CHECK(closed_form({0, Parity::even, 0}) == Rational(1, 6));
  CHECK(closed_form({0, Parity::even, 3}) == Rational(-1, 3));
  CHECK(closed_form({1, Parity::even, 0}) == 2);
  CHECK(closed_form({1, Parity::odd, 0}) == 0);
  CHECK(closed_form({1, Parity::odd, 1}) == -3);
  CHECK(closed_form({1, Parity::odd, 2}) == 3);
  CHECK(closed_form({1, Parity::even, 1}) == -1);
  CHECK(closed_form({1, Parity::even, 2}) == 5);
  CHECK(closed_form({2, Parity::even, 0}) == 27);
  CHECK(closed_form({2, Parity::even, 1}) == -27);
  CHECK(closed_form({2, Parity::odd, 0}) == 9);
  CHECK(closed_form({3, Parity::even, 0}) == 405);
  CHECK_THROWS_AS(closed_form({0, Parity::odd, 0}), DomainError);
}

TEST_CASE("family formulas") {
  CHECK(genus0_even(0) == Rational(1, 6));
  CHECK(genus0_even(1) == 0);
  CHECK(genus0_even(3) == Rational(-1, 3));
  CHECK(genus1_odd(0) == 0);
  CHECK(genus1_odd(1) == -3);
  CHECK(genus1_odd(2) == 3);
  CHECK(genus1_even(0) == 2);
  CHECK(genus1_even(1) == -1);
  CHECK(genus1_even(2) == 5);
  CHECK_THROWS_AS(genus0_even(-1), DomainError);
}

TEST_CASE("central character route reproduces the genus-1 odd family") {
  CHECK(central_character_genus1_odd(0) == 0);
  CHECK(central_character_genus1_odd(1) == -3);
  CHECK(central_character_genus1_odd(3) == -9);
  for (int k = 0; k <= 12; ++k) {
    CHECK(central_character_genus1_odd(k) == genus1_odd(k));
  }
}

TEST_CASE("central character table") {
  CHECK(central_character_f3(Partition({3})) == 2);
  CHECK(central_character_f3(Partition({2, 1})) == -4);
  CHECK_THROWS_AS(central_character_f3(Partition({1, 1, 1})), DomainError);
  CHECK_THROWS_AS(central_character_f3(Partition({4})), DomainError);
}

TEST_CASE("supersymmetric power sums") {
  CHECK(supersym_p1(Partition({3})) == Rational(71, 24));
  CHECK(supersym_p1(Partition({2, 1})) == Rational(71, 24));
  CHECK(supersym_p3(Partition({3})) == Rational(6479, 240));
  CHECK(supersym_p3(Partition({2, 1})) == Rational(2159, 240));
  // the difference that pins f_{(3)} up to the p1-dependent part
  const Rational diff =
      (supersym_p3(Partition({2, 1})) - supersym_p3(Partition({3}))) / 3;
  CHECK(diff == -6);
  CHECK(central_character_f3(Partition({2, 1})) - central_character_f3(Partition({3})) == -6);
}

TEST_CASE("degree 1 and 2 local invariants") {
  CHECK(local_gw_deg12(1, 3, Parity::even) == 1);
  CHECK(local_gw_deg12(1, 5, Parity::odd) == -1);
  CHECK(local_gw_deg12(2, 3, Parity::odd) == -4);
  CHECK(local_gw_deg12(2, 0, Parity::even) == Rational(1, 2));
  CHECK_THROWS_AS(local_gw_deg12(3, 1, Parity::even), DomainError);
  CHECK_THROWS_AS(local_gw_deg12(0, 1, Parity::even), DomainError);
}

TEST_CASE("reduce_profiles drops trivial profiles only") {
  const Partition three({3});
  const Partition ones({1, 1, 1});
  CHECK(reduce_profiles({three, ones, three}, 3) == std::vector<Partition>{three, three});
  CHECK(reduce_profiles({ones}, 3).empty());
  CHECK(reduce_profiles({}, 3).empty());
  CHECK_THROWS_AS(reduce_profiles({Partition({2})}, 3), DomainError);
}

TEST_CASE("recursion equals closed form") {
  SpinEngine engine;
  CHECK(engine.recursion({2, Parity::even, 1}) == -27);
  CHECK(engine.recursion({1, Parity::odd, 2}) == 3);
  CHECK(engine.recursion({3, Parity::even, 0}) == 405);
  for (int h = 0; h <= 6; ++h) {
    for (Parity p : {Parity::even, Parity::odd}) {
      if (h == 0 && p == Parity::odd) {
        continue;
      }
      for (int k = 0; k <= 12; ++k) {
        CHECK(engine.recursion({h, p, k}) == closed_form({h, p, k}));
      }
    }
  }
  CHECK_THROWS_AS(engine.recursion({0, Parity::odd, 2}), DomainError);
}

TEST_CASE("split evaluation matches the worked degenerations") {
  SpinEngine engine;
  // two odd genus-1 pieces
  CHECK(engine.split_eval(1, Parity::odd, 0, 1, Parity::odd, 0) == 27);
  // two even genus-1 pieces
  CHECK(engine.split_eval(1, Parity::even, 0, 1, Parity::even, 0) == 27);
  // sphere plus genus-2
  CHECK(engine.split_eval(0, Parity::even, 0, 2, Parity::even, 0) == 27);
  CHECK_THROWS_AS(engine.split_eval(0, Parity::odd, 0, 2, Parity::odd, 0), DomainError);
}

TEST_CASE("split value is independent of the decomposition") {
  SpinEngine engine;
  for (int h = 0; h <= 5; ++h) {
    for (Parity p : {Parity::even, Parity::odd}) {
      if (h == 0 && p == Parity::odd) {
        continue;
      }
      for (int k = 0; k <= 8; ++k) {
        const Rational expected = closed_form({h, p, k});
        for (int h1 = 0; h1 <= h; ++h1) {
          for (int k1 = 0; k1 <= k; ++k1) {
            for (Parity p1 : {Parity::even, Parity::odd}) {
              const Parity p2 = parity_add(p, p1);
              if ((h1 == 0 && p1 == Parity::odd) || (h - h1 == 0 && p2 == Parity::odd)) {
                continue;
              }
              CHECK(engine.split_eval(h1, p1, k1, h - h1, p2, k - k1) == expected);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("transfer matrix route") {
  CHECK(transfer_matrix_eval({2, Parity::even, 0}) == 27);
  CHECK(transfer_matrix_eval({2, Parity::odd, 0}) == 9);
  // closed form at (3,+,1): 81 * ((-1) * 2^3 + 1) = -567
  CHECK(transfer_matrix_eval({3, Parity::even, 1}) == -567);
  CHECK(closed_form({3, Parity::even, 1}) == -567);
  for (int h = 2; h <= 6; ++h) {
    for (Parity p : {Parity::even, Parity::odd}) {
      for (int k = 0; k <= 12; ++k) {
        CHECK(transfer_matrix_eval({h, p, k}) == closed_form({h, p, k}));
      }
    }
  }
  CHECK_THROWS_AS(transfer_matrix_eval({1, Parity::even, 0}), DomainError);
}

TEST_CASE("parity gap is 2 * 3^(2h-2)") {
  for (int h = 1; h <= 6; ++h) {
    const Rational gap = 2 * rational_pow(Rational(3), 2 * h - 2);
    for (int k = 0; k <= 12; ++k) {
      CHECK(closed_form({h, Parity::even, k}) - closed_form({h, Parity::odd, k}) == gap);
    }
  }
}

TEST_CASE("memoized engine stays consistent across repeated queries") {
  SpinEngine engine;
  const Rational first = engine.recursion({6, Parity::odd, 12});
  CHECK(engine.recursion({6, Parity::odd, 12}) == first);
  CHECK(first == closed_form({6, Parity::odd, 12}));
}
