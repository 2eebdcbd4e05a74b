#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sylvester_cy/arith.hpp"
#include "sylvester_cy/hodge.hpp"
#include "sylvester_cy/matrix.hpp"
#include "sylvester_cy/potential.hpp"
#include "sylvester_cy/wps.hpp"

namespace scy {

/// One of the three extremal Calabi-Yau hypersurfaces X_k^{(n)}, k = 1, 2, 3.
struct FamilyMember {
  int k = 1;
  std::size_t n = 1;
  WeightSystem weights;
  InvertiblePotential potential;  // carries the same weights
  std::string conjecture;         // metadata only, never checked
};

FamilyMember family_x(int k, std::size_t n);

/// Betti sum of X_k^{(n)} from the fixed-set decomposition H = (A + B)/d.
BigInt family_betti_closed(int k, std::size_t n);
/// 2 (s_0 - 1) ... (s_n - 1).
BigInt extremal_betti_sum(std::size_t n);
/// Middle cohomology dimension of X_k^{(n)}, odd n only.
BigInt family_middle_dim_closed(int k, std::size_t n);
/// Orbifold Euler characteristic of X_k^{(n)}; for even n every class sits in
/// even degree and this is the Betti sum.
BigInt family_euler_closed(int k, std::size_t n);

struct PairComponent {
  std::string label;
  BigInt degree;         // in units of O(1) on the ambient space
  Rational coefficient;  // 1 - 1/b
};

/// A klt Calabi-Yau pair (X, D) with standard coefficients.
struct PairDescription {
  std::string ambient_label;
  std::vector<BigInt> ambient_weights;  // all ones for P^n
  std::vector<PairComponent> components;
  BigInt index;
  std::optional<Rational> mld;  // reported value, not computed
  std::string provenance;
  std::string conjecture;  // metadata only
};

/// deg K_X + sum coefficient * deg D_i; zero for a Calabi-Yau pair.
Rational cy_balance(const PairDescription& pair);
/// Smallest m with every m * coefficient integral.
BigInt coefficient_index(const PairDescription& pair);

PairDescription klt_pair_large_index(std::size_t n);
PairDescription mld_pair(std::size_t n);

/// (s_{n-1} - 1)(2 s_{n-1} - 3), n >= 2.
BigInt terminal_index(std::size_t n);

/// The mu_m action on the X_1^{(n)} equation with m = (s_n - 1)(2 s_n - 3).
DiagonalAction x1_group_action(std::size_t n);

/// Stacky-fan relation sum (d/s_i) v_i + v_n + v_{n+1} = 0 for X_1^{(n)}.
bool stacky_fan_check(std::size_t n);

struct LoopFamilyChecks {
  bool homogeneous = false;     // every monomial has weighted degree d
  bool weights_sum = false;     // sum a_i = d
  bool charge_degree = false;   // degree of the loop block's charges is d
  bool gamma_consistent = false;  // d divides Gamma_loop, m = Gamma_loop / d
  bool m_consistent = false;    // alternating telescoping product equals m
  std::optional<bool> faithful;  // filled by verify_faithfulness
  std::string degree_route;     // how the charge degree was certified
};

/// The large-index loop-potential family in dimension n.
class LoopFamilyRecord {
 public:
  explicit LoopFamilyRecord(InvertiblePotential p) : potential(std::move(p)) {}

  std::size_t n = 0;
  std::size_t r = 0;
  BigInt d;
  BigInt m;
  InvertiblePotential potential;  // with weights a_0..a_{n+1} attached
  LoopFamilyChecks checks;
  std::string conjecture;

  /// Exponents b_0..b_{n+1}: the diagonal of the exponent matrix.
  std::vector<BigInt> b() const;
  /// Weights a_0..a_{n+1} (stored once, inside the potential).
  const std::vector<BigInt>& a() const { return potential.weights()->weights(); }
  /// Index of the loop block inside the potential.
  std::size_t loop_block() const;
};

/// Evaluates the inductive definitions and runs every consistency check;
/// throws DomainError naming the first identity that fails.
/// With check_faithful the faithfulness flag is filled in as well.
LoopFamilyRecord loop_family(std::size_t n, bool check_faithful = false);

struct FaithfulnessRow {
  std::size_t n;
  bool faithful;
  BigInt m;
  double seconds;
};

/// Builds loop_family(n) and checks d * d^T = Gamma for the full potential.
FaithfulnessRow verify_faithfulness(std::size_t n);
/// verify_faithfulness for n = 2..n_max, in order.
std::vector<FaithfulnessRow> verify_faithfulness_range(std::size_t n_max);

/// Hypersurface equations with a diagonal cyclic action, used as invariance
/// fixtures (the K3 examples Y_10, S_11 and S_7).
struct K3Fixture {
  std::string name;
  WeightSystem weights;
  Polynomial equation;
  DiagonalAction action;
};

std::vector<K3Fixture> k3_fixtures();

std::string index_conjecture();
std::string terminal_conjecture();

nlohmann::json to_json(const FamilyMember& f);
nlohmann::json to_json(const PairDescription& p);
nlohmann::json to_json(const LoopFamilyRecord& rec);

}  // namespace scy
