#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sylvester_cy/arith.hpp"
#include "sylvester_cy/matrix.hpp"
#include "sylvester_cy/wps.hpp"

namespace scy {

enum class BlockKind { Fermat, Loop, Other };

std::string to_string(BlockKind kind);

/// One indecomposable summand of a potential.
///
/// For Fermat and loop blocks the variables are listed in canonical order:
/// row rows[t] is the monomial x_{v_t}^{b_t} x_{v_{t+1}} (indices cyclic), so a
/// loop block reads x_{v_0}^{b_0} x_{v_1} + ... + x_{v_{k-1}}^{b_{k-1}} x_{v_0}.
/// Other blocks (chains and anything else) list variables and rows ascending.
struct PotentialBlock {
  BlockKind kind;
  std::vector<Eigen::Index> variables;
  std::vector<Eigen::Index> rows;
  std::vector<BigInt> exponents;  // b_t; empty for Other blocks
};

/// Sum of n monomials in n variables with an invertible exponent matrix
/// (row = monomial, column = variable).
class InvertiblePotential {
 public:
  /// Throws InputError if the matrix is not square, has negative entries or
  /// is singular.
  explicit InvertiblePotential(IntMatrix matrix);
  /// Also attaches weights; throws InputError unless every monomial has
  /// weighted degree d.
  InvertiblePotential(IntMatrix matrix, WeightSystem weights);

  static InvertiblePotential from_monomials(const Polynomial& monomials);
  /// Canonical loop x_0^{b_0} x_1 + x_1^{b_1} x_2 + ... + x_{k-1}^{b_{k-1}} x_0.
  static InvertiblePotential loop(const std::vector<BigInt>& b);
  /// Fermat sum x_0^{b_0} + ... + x_{k-1}^{b_{k-1}}.
  static InvertiblePotential fermat(const std::vector<BigInt>& b);
  /// Block-diagonal sum in fresh variables (left variables first).
  static InvertiblePotential direct_sum(const InvertiblePotential& left,
                                        const InvertiblePotential& right);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t variables() const { return static_cast<std::size_t>(matrix_.rows()); }
  Polynomial monomials() const;
  const std::vector<PotentialBlock>& blocks() const { return blocks_; }
  const std::optional<WeightSystem>& weights() const { return weights_; }

  InvertiblePotential with_weights(WeightSystem weights) const;
  InvertiblePotential without_weights() const;
  /// Moves the attached weights out, leaving the potential unweighted.
  std::optional<WeightSystem> detach_weights();

  /// Restriction to the variables of one block (weights dropped).
  InvertiblePotential block_potential(std::size_t block) const;

  bool is_pure_loop() const;

 private:
  IntMatrix matrix_;
  std::optional<WeightSystem> weights_;
  std::vector<PotentialBlock> blocks_;
};

bool operator==(const InvertiblePotential& a, const InvertiblePotential& b);

/// |det A| from the block structure (closed forms for Fermat and loop blocks).
BigInt gamma(const InvertiblePotential& p);
/// |det A| by fraction-free elimination of the whole matrix.
BigInt gamma_exact(const InvertiblePotential& p);

/// Row sums of A^{-1}, using the loop closed forms where they apply.
std::vector<Rational> charges(const InvertiblePotential& p);
/// Row sums of the exact inverse of the whole matrix.
std::vector<Rational> charges_exact(const InvertiblePotential& p);

/// Order of the charge vector in (Q/Z)^n: the lcm of charge denominators.
BigInt degree_from_charges(const InvertiblePotential& p);
/// Same quantity for the transposed matrix (column sums of A^{-1}).
BigInt transpose_degree(const InvertiblePotential& p);

/// Transposed exponent matrix. Attached weights are not carried over.
InvertiblePotential transpose(const InvertiblePotential& p);

struct SymmetryData {
  BigInt gamma;
  std::vector<Rational> charges;
  BigInt degree;
  BigInt transpose_degree;
  BigInt sl_order;
  bool faithful = false;
};

SymmetryData faithfulness(const InvertiblePotential& p);

/// Same data without the charges, reading the charge degree off the attached
/// weights (InputError if there are none).
SymmetryData faithfulness_from_weights(const InvertiblePotential& p);

/// Same data without the charges, for a Fermat/loop potential whose charge
/// degree d is already known: with M = Gamma/d the transposed charges scaled
/// by M are integers, and d^T = M / gcd(M, scaled charges). Falls back to
/// transpose_degree for other block shapes.
SymmetryData faithfulness_with_degree(const InvertiblePotential& p, const BigInt& degree);

/// Closed-form rows/columns of the inverse of a canonical loop matrix.
struct LoopInverseForms {
  BigInt determinant;                // b_1...b_k + (-1)^{k+1}
  std::vector<Rational> last_column;  // v_k: A v_k = e_k
  std::vector<Rational> first_row;    // w_1: w_1 A = e_1
  BigInt charge_numerator;           // q_1 = charge_numerator / determinant
  BigInt transpose_charge_numerator;  // column sum k = transpose_charge_numerator / determinant
  bool verified = false;              // both identities checked exactly
};

/// Requires every b_i >= 2 (InputError otherwise).
LoopInverseForms loop_closed_forms(const std::vector<BigInt>& b);

/// Loop determinant b_1...b_k + (-1)^{k+1} without building a matrix.
BigInt loop_gamma(const std::vector<BigInt>& b);
/// sum_k (-1)^{k-1} b_{k+1}...b_m: numerator of the first charge.
BigInt loop_charge_numerator(const std::vector<BigInt>& b);
/// sum_k (-1)^{m-k} b_1...b_{k-1}: numerator of the last column sum.
BigInt loop_transpose_charge_numerator(const std::vector<BigInt>& b);

enum class Verdict { Free, NotFree, Undecided };

std::string to_string(Verdict v);

struct FreenessOptions {
  /// Largest |Aut(W)| the brute-force oracle may enumerate.
  BigInt enumeration_budget = 2000000;
  /// Restrict to the elements of Aut(W)/J whose order divides this value.
  /// When unset and the potential has exactly one loop block, the subgroup of
  /// order Gamma_loop/d is used; otherwise the whole group.
  std::optional<BigInt> subgroup_order;
};

struct FreenessResult {
  Verdict verdict = Verdict::Undecided;
  std::string justification;
};

/// Whether the diagonal symmetry group acts on X = {W = 0} freely in
/// codimension 1. Requires attached weights.
FreenessResult free_in_codim1(const InvertiblePotential& p, const FreenessOptions& options = {});

nlohmann::json to_json(const InvertiblePotential& p);

}  // namespace scy
