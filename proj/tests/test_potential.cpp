#include "doctest.h"

#include <random>
#include <vector>

#include "sylvester_cy/families.hpp"
#include "sylvester_cy/potential.hpp"

using namespace scy;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Laplace expansion along the first row; fine for the tiny matrices here.
BigInt laplace_det(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  BigInt det = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const BigInt term = m(0, c) * laplace_det(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

// A q = (1, ..., 1): every monomial has charge degree one.
bool charges_solve(const InvertiblePotential& p, const std::vector<Rational>& q) {
  const IntMatrix& a = p.matrix();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += Rational(a(i, j)) * q[j];
    if (s != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction rejects bad matrices") {
  CHECK_THROWS_AS(InvertiblePotential(from_rows({{1, 1}, {1, 1}})), InputError);
  CHECK_THROWS_AS(InvertiblePotential(from_rows({{2, -1}, {0, 3}})), InputError);
  IntMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(InvertiblePotential{rect}, InputError);
  // weights must make every monomial homogeneous
  CHECK_THROWS_AS(InvertiblePotential(from_rows({{2, 0}, {0, 3}}), WeightSystem({3, 2, 1}, BigInt(6))), InputError);
}

TEST_CASE("block detection") {
  const auto f = InvertiblePotential::fermat({2, 3, 7});
  REQUIRE(f.blocks().size() == 3);
  CHECK(f.blocks()[0].kind == BlockKind::Fermat);
  const auto l = InvertiblePotential::loop({2, 3, 7, 9});
  REQUIRE(l.blocks().size() == 1);
  CHECK(l.blocks()[0].kind == BlockKind::Loop);
  CHECK(l.is_pure_loop());
  const auto s = InvertiblePotential::direct_sum(f, l);
  CHECK(s.variables() == 7);
  CHECK(s.blocks().size() == 4);
  // a chain is neither Fermat nor loop
  const auto chain = InvertiblePotential(from_rows({{3, 1}, {0, 4}}));
  REQUIRE(chain.blocks().size() == 1);
  CHECK(chain.blocks()[0].kind == BlockKind::Other);
  // round trip through monomials
  CHECK(InvertiblePotential::from_monomials(s.monomials()) == s);
}

TEST_CASE("Gamma: closed forms against Laplace expansion") {
  for (const auto& b : std::vector<std::vector<BigInt>>{{2, 3}, {3, 3, 3}, {2, 3, 7, 9}, {4, 2, 5, 2, 3}}) {
    const auto l = InvertiblePotential::loop(b);
    BigInt prod = 1;
    for (const auto& x : b) prod *= x;
    const BigInt expected = prod + ((b.size() % 2 == 1) ? 1 : -1);
    CHECK(laplace_det(l.matrix()) == expected);
    CHECK(gamma(l) == expected);
    CHECK(gamma_exact(l) == expected);
    CHECK(loop_gamma(b) == expected);
  }
  CHECK(gamma(InvertiblePotential::fermat({2, 3, 7})) == 42);
  const auto chain = InvertiblePotential(from_rows({{3, 1, 0}, {0, 4, 1}, {0, 0, 5}}));
  CHECK(gamma(chain) == 60);
}

TEST_CASE("charges solve A q = 1") {
  const auto l = InvertiblePotential::loop({2, 3, 7, 9});
  const auto q = charges(l);
  CHECK(charges_solve(l, q));
  CHECK(q == charges_exact(l));
  // Fermat quintic: all charges 1/5
  const auto f = InvertiblePotential::fermat({5, 5, 5, 5, 5});
  for (const auto& x : charges(f)) CHECK(x == Rational(1, 5));
  CHECK(degree_from_charges(f) == 5);
}

TEST_CASE("the loop x0^2 x1 + x1^3 x2 + x2^7 x3 + x3^9 x0") {
  // reference values from an independent exact inversion
  const auto l = InvertiblePotential::loop({2, 3, 7, 9});
  CHECK(gamma(l) == 377);
  CHECK(charges(l) == std::vector<Rational>{Rational(134, 377), Rational(109, 377), Rational(50, 377), Rational(27, 377)});
  CHECK(degree_from_charges(l) == 377);
  CHECK(transpose_degree(l) == 377);
  const auto sd = faithfulness(l);
  CHECK(sd.gamma == 377);
  CHECK_FALSE(sd.faithful);
}

TEST_CASE("loop closed forms are verified identities") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(2, 6), entry(2, 9);
  for (int t = 0; t < 20; ++t) {
    std::vector<BigInt> b(len(rng));
    for (auto& x : b) x = entry(rng);
    const auto f = loop_closed_forms(b);
    CHECK(f.verified);
    CHECK(f.determinant == loop_gamma(b));
    const auto l = InvertiblePotential::loop(b);
    const auto q = charges_exact(l);
    CHECK(q[0] == make_rational(f.charge_numerator, f.determinant));
  }
  CHECK_THROWS_AS(loop_closed_forms({1, 3}), InputError);
}

TEST_CASE("BHK transpose") {
  const auto chain = InvertiblePotential(from_rows({{3, 1, 0}, {0, 4, 1}, {0, 0, 5}}));
  const auto t = transpose(chain);
  CHECK(t.matrix() == chain.matrix().transpose());
  CHECK(transpose(t) == chain);
  CHECK(gamma(t) == gamma(chain));
  CHECK(transpose_degree(chain) == degree_from_charges(t));
}

TEST_CASE("faithfulness: Gamma = d * d^T") {
  // Fermat quintic: Gamma = 3125, d = d^T = 5
  const auto quintic = InvertiblePotential::fermat({5, 5, 5, 5, 5});
  const auto q = faithfulness(quintic);
  CHECK(q.gamma == 3125);
  CHECK(q.degree == 5);
  CHECK(q.transpose_degree == 5);
  CHECK_FALSE(q.faithful);
  CHECK(q.sl_order == 625);

  // extremal K3 surface x^2 + y^3 + z^7 + w^42: Gamma = 1764 = 42 * 42
  const auto k3 = InvertiblePotential::fermat({2, 3, 7, 42});
  const auto s = faithfulness(k3);
  CHECK(s.degree == 42);
  CHECK(s.transpose_degree == 42);
  CHECK(s.faithful);
}

TEST_CASE("the fast faithfulness routes agree with the generic one") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const LoopFamilyRecord rec = loop_family(n);
    const SymmetryData slow = faithfulness(rec.potential);
    const SymmetryData w = faithfulness_from_weights(rec.potential);
    const SymmetryData fast = faithfulness_with_degree(rec.potential, rec.d);
    CHECK(slow.gamma == fast.gamma);
    CHECK(slow.degree == rec.d);
    CHECK(w.degree == rec.d);
    CHECK(slow.transpose_degree == fast.transpose_degree);
    CHECK(slow.transpose_degree == w.transpose_degree);
    CHECK(slow.sl_order == fast.sl_order);
    CHECK(slow.faithful == fast.faithful);
    CHECK(slow.faithful);
  }
  for (int k = 1; k <= 3; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const FamilyMember f = family_x(k, n);
      const SymmetryData slow = faithfulness(f.potential);
      const SymmetryData w = faithfulness_from_weights(f.potential);
      CHECK(slow.transpose_degree == w.transpose_degree);
      CHECK(slow.faithful == w.faithful);
    }
  }
  CHECK_THROWS_AS(faithfulness_from_weights(InvertiblePotential::fermat({2, 3})), InputError);
}

TEST_CASE("detach_weights leaves an unweighted potential") {
  LoopFamilyRecord rec = loop_family(3);
  auto w = rec.potential.detach_weights();
  REQUIRE(w);
  CHECK(w->degree() == 37);
  CHECK_FALSE(rec.potential.weights());
}

TEST_CASE("freeness in codimension one") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const LoopFamilyRecord rec = loop_family(n);
    CHECK(free_in_codim1(rec.potential).verdict == Verdict::Free);
  }
  CHECK_THROWS_AS(free_in_codim1(InvertiblePotential::fermat({2, 3, 7})), InputError);
}

TEST_CASE("json uses decimal strings") {
  const auto j = to_json(InvertiblePotential::loop({2, 3, 7, 9}));
  CHECK(j.dump().find("\"9\"") != std::string::npos);
}
