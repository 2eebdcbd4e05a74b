// Randomised and exhaustive property checks across modules.

#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "sylvester_cy/families.hpp"
#include "sylvester_cy/hodge.hpp"
#include "sylvester_cy/matrix.hpp"
#include "sylvester_cy/potential.hpp"

using namespace scy;

TEST_CASE("counting sum vanishes on 200 random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> size(1, 4), entry(2, 40), mult(1, 5);
  int done = 0;
  while (done < 200) {
    std::vector<long> c;
    long l = 1;
    const long want = size(rng);
    for (int attempt = 0; attempt < 60 && static_cast<long>(c.size()) < want; ++attempt) {
      const long x = entry(rng);
      if (std::gcd(x, l) != 1 || l * x > 100000) continue;
      c.push_back(x);
      l *= x;
    }
    const long d = l * mult(rng);
    long brute = 0;
    for (long j = 0; j < d; ++j) {
      long term = 1;
      for (long x : c) term *= (j % x == 0) ? x - 1 : -1;
      brute += term;
    }
    std::vector<BigInt> cb(c.begin(), c.end());
    CAPTURE(d);
    CHECK(brute == 0);
    CHECK(counting_sum(cb, d) == 0);
    ++done;
  }
}

TEST_CASE("loop closed forms match exact inversion on 100 random loops") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(2, 8), entry(2, 30);
  for (int t = 0; t < 100; ++t) {
    std::vector<BigInt> b(len(rng));
    for (auto& x : b) x = entry(rng);
    CAPTURE(t);
    const InvertiblePotential p = InvertiblePotential::loop(b);
    const IntMatrix& a = p.matrix();
    const RatMatrix inv = exact_inverse(a);
    const Eigen::Index k = a.rows();

    // the inverse really is one
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        Rational s = 0;
        for (Eigen::Index l = 0; l < k; ++l) s += Rational(a(i, l)) * inv(l, j);
        CHECK(s == (i == j ? 1 : 0));
      }
    }

    const LoopInverseForms f = loop_closed_forms(b);
    CHECK(f.verified);
    BigInt prod = 1;
    for (const auto& x : b) prod *= x;
    CHECK(f.determinant == prod + (k % 2 == 1 ? 1 : -1));
    CHECK(bareiss_determinant(a) * (k % 2 == 1 ? 1 : -1) == f.determinant * (k % 2 == 1 ? 1 : -1));
    for (Eigen::Index i = 0; i < k; ++i) {
      CHECK(f.last_column[i] == inv(i, k - 1));
      CHECK(f.first_row[i] == inv(0, i));
    }
    // charge numerators against row/column sums of the exact inverse
    Rational row0 = 0, colk = 0;
    for (Eigen::Index j = 0; j < k; ++j) row0 += inv(0, j);
    for (Eigen::Index i = 0; i < k; ++i) colk += inv(i, k - 1);
    CHECK(row0 == make_rational(f.charge_numerator, f.determinant));
    CHECK(colk == make_rational(f.transpose_charge_numerator, f.determinant));
    CHECK(charges(p) == charges_exact(p));
    CHECK(gamma(p) == gamma_exact(p));
  }
}

TEST_CASE("charges equal a_i / d on every constructed potential") {
  auto check = [](const InvertiblePotential& p) {
    REQUIRE(p.weights());
    const WeightSystem& w = *p.weights();
    const auto q = charges(p);
    REQUIRE(q.size() == w.size());
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(q[i] == w.charge(i));
  };
  for (std::size_t n = 1; n <= 8; ++n)
    for (int k = 1; k <= 3; ++k) check(family_x(k, n).potential);
  for (std::size_t n = 2; n <= 12; ++n) check(loop_family(n).potential);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto rec = loop_family(n);
    const auto q = charges_exact(rec.potential);
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(q[i] == rec.potential.weights()->charge(i));
  }
}

TEST_CASE("Betti sums agree across the three families") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(family_betti_closed(1, n) == family_betti_closed(2, n));
    CHECK(family_betti_closed(2, n) == family_betti_closed(3, n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const BigInt h1 = betti_sum(family_x(1, n).weights);
    CHECK(betti_sum(family_x(2, n).weights) == h1);
    CHECK(betti_sum(family_x(3, n).weights) == h1);
  }
}

TEST_CASE("Hodge diamonds of random Fermat-type Calabi-Yau weights have the symmetries") {
  // weights 1,...: d a multiple of each weight summing to d
  const std::vector<std::pair<std::vector<BigInt>, long>> systems = {
      {{1, 1, 1, 1}, 4}, {{1, 1, 2, 2, 2}, 8}, {{1, 1, 1, 1, 4}, 8}, {{1, 1, 1, 3}, 6},
      {{1, 1, 1, 1, 2}, 6}, {{2, 2, 3, 3, 2}, 12}, {{1, 2, 3, 6}, 12}, {{1, 1, 2, 2, 6}, 12}};
  for (const auto& [w, d] : systems) {
    const WeightSystem ws(w, BigInt(d));
    if (!is_calabi_yau(ws) || !well_formed(ws)) continue;
    const HodgeDiamond h = diamond(ws);
    CAPTURE(format_weight_system(ws));
    CHECK(h.has_symmetries());
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(ws.dimension(), 0) == 1);
    CHECK(h.total() == betti_sum(ws));
    // mirror orientation is the flip
    const HodgeDiamond m = diamond(ws, Orientation::OfMirror);
    for (std::size_t p = 0; p <= ws.dimension(); ++p)
      for (std::size_t q = 0; q <= ws.dimension(); ++q) CHECK(m.at(p, q) == h.at(ws.dimension() - p, q));
  }
}
