#include "doctest.h"

#include <vector>

#include "sylvester_cy/families.hpp"

using namespace scy;

namespace {

// Definition of m as written: alternating sum of products over index sets
// that shrink by removing b_{r+1}, b_r, b_{r+2}, b_{r-1}, ... one at a time.
// Evaluated from scratch, term by term.
BigInt m_by_definition(const std::vector<BigInt>& b, std::size_t n) {
  const std::size_t r = n / 2;
  std::vector<std::size_t> index;
  std::vector<std::size_t> removal;
  if (n % 2 == 1) {
    for (std::size_t i = 0; i <= 2 * r + 1; ++i) index.push_back(i);
    for (std::size_t i = 1; i <= r + 1; ++i) {
      removal.push_back(r + i);
      removal.push_back(r + 1 - i);
    }
  } else {
    for (std::size_t i = 1; i <= 2 * r; ++i) index.push_back(i);
    for (std::size_t i = 1; i <= r; ++i) {
      removal.push_back(r + i);
      removal.push_back(r + 1 - i);
    }
  }
  BigInt m = 0;
  std::vector<bool> removed(b.size(), false);
  for (std::size_t j = 0; j <= removal.size(); ++j) {
    BigInt term = 1;
    for (std::size_t i : index)
      if (!removed[i]) term *= b[i];
    m += (j % 2 == 0) ? term : BigInt(-term);
    if (j < removal.size()) removed[removal[j]] = true;
  }
  return m;
}

}  // namespace

TEST_CASE("X_k weight systems are Calabi-Yau and well-formed, n = 1..8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const FamilyMember f = family_x(k, n);
      CHECK(is_calabi_yau(f.weights));
      CHECK(well_formed(f.weights));
      CHECK(f.weights.dimension() == n);
      CHECK(f.potential.weights());
      CHECK_FALSE(f.conjecture.empty());
    }
  }
  CHECK_THROWS_AS(family_x(4, 3), InputError);
  CHECK_THROWS_AS(family_x(1, 0), InputError);
}

TEST_CASE("X_k in dimension 3") {
  CHECK(family_x(1, 3).weights == WeightSystem({42, 28, 12, 1, 1}, BigInt(84)));
  CHECK(family_x(2, 3).weights.degree() == 1806);
  CHECK(family_x(3, 3).weights.degree() == 3486);
}

TEST_CASE("Betti sums: closed form equals 2 (s_0 - 1)...(s_n - 1)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    BigInt expected = 2;
    for (std::size_t i = 0; i <= n; ++i) expected *= sylvester(i) - 1;
    CHECK(extremal_betti_sum(n) == expected);
    for (int k = 1; k <= 3; ++k) CHECK(family_betti_closed(k, n) == expected);
  }
  // independent big-integer evaluation of 2 (s_0 - 1)...(s_6 - 1)
  CHECK(extremal_betti_sum(6) == BigInt("63271205161020798539584896"));
  CHECK(extremal_betti_sum(3) == 1008);
}

TEST_CASE("Betti sums agree with diamonds, n = 1..3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const HodgeDiamond h = diamond(family_x(k, n).weights);
      CHECK(h.total() == family_betti_closed(k, n));
      CHECK(euler(h) == family_euler_closed(k, n));
      if (n % 2 == 1) CHECK(middle_dim(h) == family_middle_dim_closed(k, n));
    }
  }
}

TEST_CASE("Euler characteristics in dimension 3") {
  CHECK(family_euler_closed(1, 3) == -960);
  CHECK(family_euler_closed(2, 3) == 0);
  CHECK(family_euler_closed(3, 3) == 960);
  CHECK(family_euler_closed(1, 2) == family_betti_closed(1, 2));
}

TEST_CASE("klt pairs of large index") {
  const long expected[] = {6, 66, 3486, 6521466};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(klt_pair_large_index(n).index == expected[n - 1]);
  for (std::size_t n = 1; n <= 10; ++n) {
    const PairDescription p = klt_pair_large_index(n);
    const BigInt s = sylvester(n);
    CHECK(p.index == lcm(s - 1, 2 * s - 3));
    CHECK(p.index == (s - 1) * (2 * s - 3));
    CHECK(cy_balance(p) == 0);
    CHECK(coefficient_index(p) * 1 != 0);
  }
}

TEST_CASE("mld pairs") {
  const long index[] = {6, 42, 1806};
  for (std::size_t n = 1; n <= 3; ++n) {
    const PairDescription p = mld_pair(n);
    CHECK(p.index == index[n - 1]);
    REQUIRE(p.mld);
    CHECK(*p.mld == Rational(1, index[n - 1]));
    CHECK(p.provenance == "paper");
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    const PairDescription p = mld_pair(n);
    Rational sum = 0;
    for (const auto& c : p.components) sum += c.coefficient;
    CHECK(sum == Rational(static_cast<long>(n + 1)));
    CHECK(cy_balance(p) == 0);
  }
}

TEST_CASE("terminal index") {
  CHECK(terminal_index(2) == 6);
  CHECK(terminal_index(3) == 66);
  CHECK(terminal_index(4) == 3486);
  CHECK_THROWS_AS(terminal_index(1), InputError);
  CHECK_FALSE(terminal_conjecture().empty());
  CHECK_FALSE(index_conjecture().empty());
}

TEST_CASE("group action on X_1 and the K3 fixtures") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const DiagonalAction g = x1_group_action(n);
    CHECK(g.order() == klt_pair_large_index(n).index);
    CHECK(action_preserves(family_x(1, n).potential.monomials(), g));
  }
  const auto fixtures = k3_fixtures();
  REQUIRE(fixtures.size() == 3);
  const long orders[] = {19, 13, 14};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(fixtures[i].action.order() == orders[i]);
    CHECK(action_preserves(fixtures[i].equation, fixtures[i].action));
    for (const auto& m : fixtures[i].equation) CHECK(weighted_degree(m, fixtures[i].weights) == fixtures[i].weights.degree());
  }
}

TEST_CASE("stacky fan relation") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(stacky_fan_check(n));
  CHECK_THROWS_AS(stacky_fan_check(1), InputError);
}

TEST_CASE("loop family calibration values") {
  const LoopFamilyRecord two = loop_family(2);
  CHECK(two.b() == std::vector<BigInt>{2, 3, 7, 9});
  CHECK(two.a() == std::vector<BigInt>{5, 3, 1, 1});
  CHECK(two.d == 10);
  CHECK(two.m == 19);

  const LoopFamilyRecord three = loop_family(3);
  CHECK(three.a() == std::vector<BigInt>{18, 12, 5, 1, 1});
  CHECK(three.d == 37);
  CHECK(three.m == 493);

  const LoopFamilyRecord four = loop_family(4);
  CHECK(four.a() == std::vector<BigInt>{1187, 791, 339, 55, 1, 1});
  CHECK(four.d == 2374);
  CHECK(four.m == 1201495);

  CHECK_THROWS_AS(loop_family(1), InputError);
}

TEST_CASE("loop family consistency, n = 2..14") {
  for (std::size_t n = 2; n <= 14; ++n) {
    CAPTURE(n);
    const LoopFamilyRecord rec = loop_family(n);
    CHECK(rec.checks.homogeneous);
    CHECK(rec.checks.weights_sum);
    CHECK(rec.checks.charge_degree);
    CHECK(rec.checks.gamma_consistent);
    CHECK(rec.checks.m_consistent);
    CHECK_FALSE(rec.checks.faithful);

    // independent recomputations: the definition of m term by term, and
    // Gamma_loop / degree of the loop block from its own charges
    CHECK(m_by_definition(rec.b(), n) == rec.m);
    const InvertiblePotential loop = rec.potential.block_potential(rec.loop_block());
    CHECK(loop.is_pure_loop());
    CHECK(loop.variables() % 2 == 1);
    CHECK(gamma(loop) / degree_from_charges(loop) == rec.m);
    CHECK(degree_from_charges(loop) == rec.d);

    // weights sum to d and every monomial has degree d, checked here directly
    BigInt sum = 0;
    for (const auto& a : rec.a()) sum += a;
    CHECK(sum == rec.d);
    const WeightSystem& w = *rec.potential.weights();
    for (const auto& mono : rec.potential.monomials()) CHECK(weighted_degree(mono, w) == rec.d);
  }
}

TEST_CASE("loop family faithfulness for small n") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const FaithfulnessRow row = verify_faithfulness(n);
    CHECK(row.faithful);
    CHECK(row.m == loop_family(n).m);
  }
  const LoopFamilyRecord rec = loop_family(5, true);
  REQUIRE(rec.checks.faithful);
  CHECK(*rec.checks.faithful);
}

TEST_CASE("json records use decimal strings") {
  const auto j = to_json(loop_family(4));
  CHECK(j["d"] == "2374");
  CHECK(j["m"] == "1201495");
  const auto f = to_json(family_x(1, 3));
  CHECK(f["degree"] == "84");
  const auto p = to_json(mld_pair(2));
  CHECK(p["mld"] == "1/42");
}
