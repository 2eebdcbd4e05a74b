#include "doctest.h"

#include <cstdint>
#include <vector>

#include "sylvester_cy/families.hpp"
#include "sylvester_cy/hodge.hpp"

using namespace scy;

namespace {

WeightSystem ws(std::vector<BigInt> a, long d) { return WeightSystem(std::move(a), BigInt(d)); }

// Direct int64 evaluation of sum_{j<d} prod_{c in C} (c - 1 if c | j else -1).
long brute_counting(const std::vector<long>& c, long d) {
  long total = 0;
  for (long j = 0; j < d; ++j) {
    long term = 1;
    for (long x : c) term *= (j % x == 0) ? x - 1 : -1;
    total += term;
  }
  return total;
}

bool same_entries(const HodgeDiamond& a, const HodgeDiamond& b) {
  if (a.dimension() != b.dimension()) return false;
  for (std::size_t p = 0; p <= a.dimension(); ++p)
    for (std::size_t q = 0; q <= a.dimension(); ++q)
      if (a.at(p, q) != b.at(p, q)) return false;
  return true;
}

}  // namespace

TEST_CASE("f_c") {
  CHECK(f_c(3, 0) == 2);
  CHECK(f_c(3, 6) == 2);
  CHECK(f_c(3, 7) == -1);
}

TEST_CASE("counting sum against direct int64 evaluation") {
  const std::vector<std::pair<std::vector<long>, long>> cases = {
      {{2}, 2}, {{2, 3}, 6}, {{2, 3}, 12}, {{2, 3, 7}, 42}, {{5, 7, 9}, 630}, {{4, 9, 25}, 900}, {{3, 11}, 66}};
  for (const auto& [c, d] : cases) {
    std::vector<BigInt> cb(c.begin(), c.end());
    CHECK(counting_sum(cb, d) == brute_counting(c, d));
    CHECK(counting_sum(cb, d) == 0);
  }
  CHECK_THROWS_AS(counting_sum({}, 5), InputError);
  CHECK_THROWS_AS(counting_sum({2, 4}, 8), InputError);
  CHECK_THROWS_AS(counting_sum({3}, 10), InputError);
  CHECK_THROWS_AS(counting_sum({1, 3}, 3), InputError);
}

TEST_CASE("elliptic curve: plane cubic") {
  const HodgeDiamond h = diamond(ws({1, 1, 1}, 3));
  for (std::size_t p = 0; p <= 1; ++p)
    for (std::size_t q = 0; q <= 1; ++q) CHECK(h.at(p, q) == 1);
  CHECK(euler(h) == 0);
}

TEST_CASE("K3 surfaces have h11 = 20") {
  for (const auto& w : {ws({1, 1, 1, 1}, 4), ws({1, 1, 1, 3}, 6), ws({21, 14, 6, 1}, 42), ws({5, 3, 1, 1}, 10)}) {
    const HodgeDiamond h = diamond(w);
    CHECK(h.at(1, 1) == 20);
    CHECK(h.at(2, 0) == 1);
    CHECK(h.at(1, 0) == 0);
    CHECK(euler(h) == 24);
  }
}

TEST_CASE("classical Calabi-Yau threefolds") {
  struct Case {
    WeightSystem w;
    long h11, h21;
  };
  const std::vector<Case> cases = {{ws({1, 1, 1, 1, 1}, 5), 1, 101},
                                   {ws({1, 1, 1, 1, 2}, 6), 1, 103},
                                   {ws({1, 1, 2, 2, 2}, 8), 2, 86},
                                   {ws({1, 1, 1, 1, 4}, 8), 1, 149}};
  for (const auto& c : cases) {
    const HodgeDiamond h = diamond(c.w);
    CHECK(h.at(1, 1) == c.h11);
    CHECK(h.at(2, 1) == c.h21);
    CHECK(euler(h) == 2 * (c.h11 - c.h21));
    CHECK(h.has_symmetries());
    // mirror orientation swaps h11 and h21
    const HodgeDiamond m = diamond(c.w, Orientation::OfMirror);
    CHECK(m.at(1, 1) == c.h21);
    CHECK(same_entries(m, h.flipped()));
  }
}

TEST_CASE("sextic fourfold") {
  const HodgeDiamond h = diamond(ws({1, 1, 1, 1, 1, 1}, 6));
  CHECK(h.at(1, 1) == 1);
  CHECK(h.at(2, 1) == 0);
  CHECK(h.at(3, 1) == 426);
  CHECK(h.at(2, 2) == 1752);
  CHECK(euler(h) == 2610);
}

TEST_CASE("off-diagonal classes on X_12 in P(3,3,3,1,1,1)") {
  const HodgeDiamond h = diamond(ws({3, 3, 3, 1, 1, 1}, 12));
  CHECK(h.at(1, 2) == 3);
  CHECK(h.at(2, 1) == 3);
  CHECK_FALSE(h.vanishes_off_diagonals());
  CHECK(h.has_symmetries());
  CHECK(betti_sum(ws({3, 3, 3, 1, 1, 1}, 12)) == h.total());
}

TEST_CASE("Betti sum: fixed-set count equals the diamond total") {
  for (const auto& w : {ws({1, 1, 1, 1, 1}, 5), ws({1, 1, 1, 1, 2}, 6), ws({42, 28, 12, 1, 1}, 84),
                        ws({1, 1, 1, 1, 1, 1}, 6), ws({3, 3, 3, 1, 1, 1}, 12)}) {
    CHECK(betti_sum_fast(w) == diamond(w).total());
  }
  CHECK(betti_sum_fast(ws({1, 1, 1, 1, 1}, 5)) == 208);
  CHECK_THROWS_AS(betti_sum_fast(ws({5, 3, 1, 1}, 10)), UnsupportedError);
  // non-divisible weights fall back to the diamond
  CHECK(betti_sum(ws({5, 3, 1, 1}, 10)) == 24);
}

TEST_CASE("middle dimension") {
  CHECK(middle_dim(ws({1, 1, 1, 1, 1}, 5)) == 204);
  CHECK(middle_dim(diamond(ws({1, 1, 1}, 3))) == 2);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(diamond(ws({1, 1, 1, 1}, 5)), InputError);
  DiamondBudget tight;
  tight.max_series_span = 10;
  CHECK_THROWS_AS(diamond(ws({1, 1, 1, 1, 1}, 5), Orientation::OfX, tight), UnsupportedError);
  CHECK_THROWS_AS(parse_orientation("sideways"), InputError);
  CHECK(parse_orientation("of-mirror") == Orientation::OfMirror);
}

TEST_CASE("rendering") {
  const HodgeDiamond h = diamond(ws({42, 28, 12, 1, 1}, 84));
  CHECK(render_text(h).find("491") != std::string::npos);
  const auto j = to_json(h);
  CHECK(j["dimension"] == 3);
  CHECK(j["orientation"] == "of-X");
}

TEST_CASE("family diamonds: symmetries, vanishing, mirror pairing (n = 2, 3)") {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<HodgeDiamond> hs;
    for (int k = 1; k <= 3; ++k) {
      hs.push_back(diamond(family_x(k, n).weights));
      CHECK(hs.back().has_symmetries());
      CHECK(hs.back().vanishes_off_diagonals());
    }
    CHECK(same_entries(hs[0], hs[2].flipped()));
    CHECK(same_entries(hs[1], hs[1].flipped()));
  }
}
