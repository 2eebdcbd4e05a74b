#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "sylvester_cy/arith.hpp"
#include "sylvester_cy/wps.hpp"

namespace scy {

/// The orbifold Hodge formula natively produces the diamond of the mirror;
/// "of-X" is obtained by the flip p -> n - p.
enum class Orientation { OfX, OfMirror };

std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& text);

class HodgeDiamond {
 public:
  HodgeDiamond(std::size_t dimension, Orientation orientation);

  std::size_t dimension() const { return n_; }
  Orientation orientation() const { return orientation_; }

  const BigInt& at(std::size_t p, std::size_t q) const { return table_.at(index(p, q)); }
  BigInt& at(std::size_t p, std::size_t q) { return table_.at(index(p, q)); }

  /// Same numbers viewed from the other side of the mirror (p -> n - p).
  HodgeDiamond flipped() const;

  /// h^{p,q} = h^{q,p} = h^{n-p,n-q} for all p, q.
  bool has_symmetries() const;
  /// h^{p,q} = 0 unless p = q or p + q = n.
  bool vanishes_off_diagonals() const;

  BigInt total() const;

  bool operator==(const HodgeDiamond&) const = default;

 private:
  std::size_t index(std::size_t p, std::size_t q) const;
  std::size_t n_;
  Orientation orientation_;
  std::vector<BigInt> table_;
};

/// c - 1 if c divides j, else -1.
BigInt f_c(const BigInt& c, const BigInt& j);

/// sum_{j<d} prod_{c in C} f_c(j) by direct summation. C must be pairwise
/// coprime integers >= 2 dividing d (InputError otherwise); d must fit the
/// brute-force budget (UnsupportedError otherwise).
BigInt counting_sum(const std::vector<BigInt>& c, const BigInt& d);

/// Contribution S_l = sum_j prod_{i : d | l a_i} f_{d/a_i}(j) of the l-th term
/// to the Betti sum. Requires every weight to divide d (UnsupportedError).
BigInt s_ell(const WeightSystem& ws, const BigInt& l);

/// Shape of the l-th term of the Hodge formula.
struct EllTerm {
  struct Moving {
    std::size_t coordinate;
    BigInt x_exponent;  // d theta - a_i
    BigInt y_exponent;  // d (1 - theta) - a_i
  };
  struct Fixed {
    std::size_t coordinate;
    BigInt stride;     // a_i: denominator (1 - u^{a_i})
    BigInt numerator;  // d - a_i: numerator (1 - u^{d - a_i})
    BigInt degree;     // d - 2 a_i
  };
  BigInt ell;
  std::vector<Moving> moving;
  std::vector<Fixed> fixed;
};

EllTerm ell_term(const WeightSystem& ws, const BigInt& l);

struct DiamondBudget {
  /// Largest n*d the dense per-term series may span.
  std::int64_t max_series_span = std::int64_t{1} << 28;
  /// Largest coordinate count (term grouping enumerates all subsets).
  std::size_t max_coordinates = 16;
};

/// Orbifold Hodge diamond of a Calabi-Yau weight system (caller asserts
/// quasi-smoothness). InputError if not Calabi-Yau, UnsupportedError if over
/// budget, DomainError if some term is not a polynomial.
HodgeDiamond diamond(const WeightSystem& ws, Orientation orientation = Orientation::OfX,
                     const DiamondBudget& budget = {});

/// Sum of orbifold Betti numbers: closed fixed-set count when every weight
/// divides d, otherwise the total of the diamond.
BigInt betti_sum(const WeightSystem& ws, const DiamondBudget& budget = {});

/// The divisible-weights path only (UnsupportedError otherwise).
BigInt betti_sum_fast(const WeightSystem& ws);

BigInt euler(const HodgeDiamond& h);

/// Dimension of the middle cohomology; InputError for even n.
BigInt middle_dim(const HodgeDiamond& h);
BigInt middle_dim(const WeightSystem& ws, const DiamondBudget& budget = {});

/// Classical diamond layout, top row h^{0,0}, row r listing p + q = r.
std::string render_text(const HodgeDiamond& h);

nlohmann::json to_json(const HodgeDiamond& h);

}  // namespace scy
