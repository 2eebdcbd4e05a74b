#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sylvester_cy/arith.hpp"

namespace scy {

/// Weights a_0..a_{n+1} and degree d of a hypersurface X_d in P(a_0,...,a_{n+1}).
/// Weights are kept in the caller's order; every predicate is permutation safe.
class WeightSystem {
 public:
  /// Throws InputError unless there are at least three weights, every weight
  /// is positive and the degree is at least the largest weight.
  WeightSystem(std::vector<BigInt> weights, BigInt degree);

  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& weight(std::size_t i) const { return weights_.at(i); }
  const BigInt& degree() const { return degree_; }
  std::size_t size() const { return weights_.size(); }
  /// Dimension n of the hypersurface: number of weights minus two.
  std::size_t dimension() const { return weights_.size() - 2; }

  /// Charge q_i = a_i / d.
  Rational charge(std::size_t i) const;

  bool operator==(const WeightSystem&) const = default;

 private:
  std::vector<BigInt> weights_;
  BigInt degree_;
};

/// True iff every n+1 of the weights are coprime.
bool well_formed(const WeightSystem& ws);

/// True iff the weights sum to the degree.
bool is_calabi_yau(const WeightSystem& ws);

/// True iff every weight divides the degree.
bool weights_divide_degree(const WeightSystem& ws);

/// Fractional part of l * a_i / d.
Rational theta(const WeightSystem& ws, std::size_t i, const BigInt& l);

/// A monomial as its exponent vector.
using Monomial = std::vector<BigInt>;
using Polynomial = std::vector<Monomial>;

/// Weighted degree of a monomial.
BigInt weighted_degree(const Monomial& m, const WeightSystem& ws);

/// mu_order acting by x_i -> zeta^{e_i} x_i.
class DiagonalAction {
 public:
  /// Exponents are reduced into [0, order). Throws InputError if order < 1.
  DiagonalAction(BigInt order, std::vector<BigInt> exponents);

  const BigInt& order() const { return order_; }
  const std::vector<BigInt>& exponents() const { return exponents_; }

 private:
  BigInt order_;
  std::vector<BigInt> exponents_;
};

/// True iff every monomial picks up the same character under the action.
/// Throws InputError on an empty polynomial or mismatched arity.
bool action_preserves(const Polynomial& polynomial, const DiagonalAction& action);

/// Parses one `d : a_0,a_1,...` record. Returns nullopt for blank and
/// '#'-comment lines; throws InputError on malformed text.
std::optional<WeightSystem> parse_weight_system_line(const std::string& line);

std::string format_weight_system(const WeightSystem& ws);

}  // namespace scy
