#include "sylvester_cy/families.hpp"

#include <algorithm>
#include <chrono>
#include <span>
#include <utility>

namespace scy {

namespace {

using Eigen::Index;

const char* const kHodgeSumConjecture =
    "Hodgesumconj: in dimension n the largest sum of orbifold Betti numbers of a projective variety "
    "with quotient singularities and trivial canonical class is 2(s_0-1)...(s_n-1); for odd n the "
    "orbifold Euler characteristic lies between -/+ (s_0-1)...(s_{n-1}-1)(2s_n-6).";
const char* const kPairConjecture =
    "kltpairconj: the index (s_n-1)(2s_n-3) is the largest index of a klt Calabi-Yau pair of "
    "dimension n with standard coefficients.";
const char* const kMldConjecture =
    "mldconj: the mld 1/(s_{n+1}-1) is the smallest mld of a klt Calabi-Yau pair of dimension n with "
    "standard coefficients.";
const char* const kTerminalConjecture =
    "can-term-conj: (s_{n-1}-1)(2s_{n-1}-3) is the largest index of a terminal, and of a canonical, "
    "Calabi-Yau variety of dimension n.";
const char* const kLoopConjecture =
    "kltCYconj: the quotient of the loop hypersurface by its cyclic group of order m has index m, the "
    "largest index of a klt Calabi-Yau variety of dimension n.";
const char* const kIndexConjecture =
    "indexconj: for DCC coefficient sets the index of klt Calabi-Yau pairs of dimension n is bounded.";

// Above this many bits of Gamma the charge degree is certified from the
// weights instead of by a gcd with the structural determinant.
constexpr std::size_t kStructuralDegreeBits = 1u << 18;

BigInt sq(const BigInt& x) { return x * x; }

BigInt to_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw DomainError(std::string("non-integral ") + what + ": " + to_string(q));
  return q.get_num();
}

std::vector<std::string> strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

void require_dimension(std::size_t n, std::size_t least, const char* what) {
  if (n < least) throw InputError(std::string(what) + " needs n >= " + std::to_string(least));
}

std::string where(std::size_t n) { return "loop family n=" + std::to_string(n) + ": "; }

}  // namespace

// ---------------------------------------------------------------------------
// X_1, X_2, X_3

FamilyMember family_x(int k, std::size_t n) {
  require_dimension(n, 1, "family_x");
  const Index N = static_cast<Index>(n + 2);
  const BigInt& sn = sylvester(n);
  IntMatrix A = IntMatrix::Zero(N, N);
  std::vector<BigInt> w;
  BigInt d;
  switch (k) {
    case 1: {
      d = 2 * sn - 2;
      for (std::size_t i = 0; i < n; ++i) w.push_back(d / sylvester(i));
      w.push_back(1);
      w.push_back(1);
      for (Index i = 0; i < Index(n); ++i) A(i, i) = sylvester(i);
      A(N - 2, N - 2) = d - 1;
      A(N - 2, N - 1) = 1;
      A(N - 1, N - 1) = d;
      break;
    }
    case 2: {
      d = sylvester(n + 1) - 1;
      for (std::size_t i = 0; i <= n; ++i) w.push_back(d / sylvester(i));
      w.push_back(1);
      for (Index i = 0; i <= Index(n); ++i) A(i, i) = sylvester(i);
      A(N - 1, N - 1) = d;
      break;
    }
    case 3: {
      d = (sn - 1) * (2 * sn - 3);
      for (std::size_t i = 0; i < n; ++i) w.push_back(d / sylvester(i));
      w.push_back(sn - 1);
      w.push_back(sn - 2);
      for (Index i = 0; i < Index(n); ++i) A(i, i) = sylvester(i);
      A(N - 2, N - 2) = 2 * sn - 3;
      A(N - 1, N - 2) = 1;
      A(N - 1, N - 1) = 2 * sn - 2;
      break;
    }
    default:
      throw InputError("family index must be 1, 2 or 3, got " + std::to_string(k));
  }
  WeightSystem ws(std::move(w), d);
  InvertiblePotential p(std::move(A), ws);
  return FamilyMember{k, n, std::move(ws), std::move(p), kHodgeSumConjecture};
}

BigInt extremal_betti_sum(std::size_t n) { return 2 * sylvester_shifted_product(n + 1); }

BigInt family_betti_closed(int k, std::size_t n) {
  require_dimension(n, 1, "family_betti_closed");
  // A counts the l = 0 term, B the terms where no s_i divides l; in both
  // cases the contribution is a multiple of d.
  const BigInt lower = sylvester_shifted_product(n);  // (s_0-1)...(s_{n-1}-1)
  const BigInt d1 = 2 * sylvester(n) - 2;
  BigInt a_over_d, b_over_d;
  switch (k) {
    case 1:
      a_over_d = (d1 - 2) * lower;
      b_over_d = 2 * lower;
      break;
    case 2:
      a_over_d = sylvester_shifted_product(n + 1);
      b_over_d = a_over_d;
      break;
    case 3:
      a_over_d = 2 * lower;
      b_over_d = (d1 - 2) * lower;
      break;
    default:
      throw InputError("family index must be 1, 2 or 3, got " + std::to_string(k));
  }
  return a_over_d + b_over_d;
}

BigInt family_middle_dim_closed(int k, std::size_t n) {
  require_dimension(n, 1, "family_middle_dim_closed");
  if (n % 2 == 0) throw InputError("middle dimension closed form needs odd n");
  const BigInt lower = sylvester_shifted_product(n);
  const BigInt& sn = sylvester(n);
  switch (k) {
    case 1: return lower * (2 * sn - 4);
    case 2: return sylvester_shifted_product(n + 1);
    case 3: return 2 * lower;
    default: throw InputError("family index must be 1, 2 or 3, got " + std::to_string(k));
  }
}

BigInt family_euler_closed(int k, std::size_t n) {
  require_dimension(n, 1, "family_euler_closed");
  if (k < 1 || k > 3) throw InputError("family index must be 1, 2 or 3, got " + std::to_string(k));
  // Even n: all cohomology sits in even degrees.
  if (n % 2 == 0) return extremal_betti_sum(n);
  const BigInt e = sylvester_shifted_product(n) * (2 * sylvester(n) - 6);
  if (k == 1) return -e;
  if (k == 2) return 0;
  return e;
}

// ---------------------------------------------------------------------------
// Pairs and indices

Rational cy_balance(const PairDescription& pair) {
  Rational total = 0;
  for (const auto& w : pair.ambient_weights) total -= w;
  for (const auto& c : pair.components) total += c.coefficient * c.degree;
  return total;
}

BigInt coefficient_index(const PairDescription& pair) {
  BigInt l = 1;
  for (const auto& c : pair.components) l = lcm(l, c.coefficient.get_den());
  return l;
}

PairDescription klt_pair_large_index(std::size_t n) {
  require_dimension(n, 1, "klt_pair_large_index");
  PairDescription pair;
  pair.provenance = "constructed";
  pair.conjecture = kPairConjecture;
  if (n == 1) {
    pair.ambient_label = "P^1";
    pair.ambient_weights = {1, 1};
    for (std::size_t i = 0; i < 3; ++i) {
      const BigInt b = i == 2 ? BigInt(6) : sylvester(i);
      pair.components.push_back({"p" + std::to_string(i + 1), 1, Rational(b - 1, b)});
    }
  } else {
    const BigInt d = 2 * sylvester(n) - 2;
    pair.ambient_label = "P^" + std::to_string(n) + "(d^(" + std::to_string(n - 1) + "), d-1, 1), d=" + to_string(d);
    pair.ambient_weights.assign(n - 1, d);
    pair.ambient_weights.push_back(d - 1);
    pair.ambient_weights.push_back(1);
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt& s = sylvester(i);
      pair.components.push_back({"D" + std::to_string(i), d, Rational(s - 1, s)});
    }
    pair.components.push_back({"D" + std::to_string(n), d - 1, Rational(d - 2, d - 1)});
  }
  for (auto& c : pair.components) c.coefficient.canonicalize();
  if (cy_balance(pair) != 0) throw DomainError("klt pair is not Calabi-Yau: balance " + to_string(cy_balance(pair)));
  pair.index = coefficient_index(pair);
  const BigInt& s = sylvester(n);
  if (pair.index != (s - 1) * (2 * s - 3)) throw DomainError("klt pair index disagrees with (s_n-1)(2s_n-3)");
  return pair;
}

PairDescription mld_pair(std::size_t n) {
  require_dimension(n, 1, "mld_pair");
  PairDescription pair;
  pair.ambient_label = "P^" + std::to_string(n);
  pair.ambient_weights.assign(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt& s = sylvester(i);
    pair.components.push_back({"H" + std::to_string(i), 1, Rational(s - 1, s)});
  }
  const BigInt top = sylvester(n + 1) - 1;
  pair.components.push_back({"H" + std::to_string(n + 1), 1, Rational(top - 1, top)});
  for (auto& c : pair.components) c.coefficient.canonicalize();
  Rational sum = 0;
  for (const auto& c : pair.components) sum += c.coefficient;
  if (sum != static_cast<long>(n + 1)) throw DomainError("mld pair coefficients do not sum to n+1");
  pair.index = coefficient_index(pair);
  pair.mld = Rational(BigInt(1), top);
  pair.mld->canonicalize();
  pair.provenance = "paper";
  pair.conjecture = kMldConjecture;
  return pair;
}

BigInt terminal_index(std::size_t n) {
  require_dimension(n, 2, "terminal_index");
  const BigInt& s = sylvester(n - 1);
  return (s - 1) * (2 * s - 3);
}

DiagonalAction x1_group_action(std::size_t n) {
  require_dimension(n, 1, "x1_group_action");
  const BigInt& sn = sylvester(n);
  const BigInt d = 2 * sn - 2;
  std::vector<BigInt> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(divide_exact(d, 2 * sylvester(i), "group action exponent"));
  e.push_back(0);
  e.push_back(divide_exact(d, 2, "group action exponent"));
  return DiagonalAction((sn - 1) * (2 * sn - 3), std::move(e));
}

bool stacky_fan_check(std::size_t n) {
  require_dimension(n, 2, "stacky_fan_check");
  const Index dim = static_cast<Index>(n + 1);
  const BigInt d = 2 * sylvester(n) - 2;
  std::vector<IntVector> v(n + 2, IntVector::Zero(dim));
  for (std::size_t i = 0; i < n; ++i) v[i](Index(i)) = sylvester(i);
  v[n](Index(n)) = d - 1;
  for (std::size_t i = 0; i < n; ++i) v[n + 1](Index(i)) = -d;
  v[n + 1](Index(n)) = -(d - 1);

  std::vector<BigInt> coeff;
  for (std::size_t i = 0; i < n; ++i) coeff.push_back(d / sylvester(i));
  coeff.push_back(1);
  coeff.push_back(1);
  if (coeff != family_x(1, n).weights.weights()) return false;

  IntVector total = IntVector::Zero(dim);
  for (std::size_t i = 0; i < v.size(); ++i) total += coeff[i] * v[i];
  return std::all_of(total.data(), total.data() + total.size(), [](const BigInt& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Loop family

std::vector<BigInt> LoopFamilyRecord::b() const {
  const IntMatrix& A = potential.matrix();
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(A.rows()));
  for (Index i = 0; i < A.rows(); ++i) out.push_back(A(i, i));
  return out;
}

std::size_t LoopFamilyRecord::loop_block() const {
  const auto& blocks = potential.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].kind == BlockKind::Loop) return i;
  }
  throw DomainError(where(n) + "potential has no loop block");
}

namespace {

// The numbers of the family are huge (Gamma has about 2^(n+1) bits), so the
// construction runs in phases and the weights a_0..a_r, which make up most of
// the memory, are only produced after the determinant checks.
struct LoopData {
  std::size_t n, r;
  bool odd;
  std::vector<BigInt> b;  // b_0..b_{n+1}
  std::vector<BigInt> a;  // a_0..a_{n+1}
  BigInt d;
};

Rational one_minus_inverse(std::size_t j) {
  const BigInt& s = sylvester(j);
  Rational q(s - 1, s);
  q.canonicalize();
  return q;
}

// b_i = s_i for i <= r, then b_{r+i} = 1 + (b_{r+1-i} - 1)^2 B(i-1), where the
// bracket B(i) = 1 + sum_{k<=i} (b_{r+1-k} - 1) b_{r+2-k} ... b_{r+k} is kept
// incrementally together with its window product W. Ends with d and the
// exponent fixed by d (b_{2r+1} for odd n, b_{2r} for even n).
void loop_exponents(LoopData& x) {
  const std::size_t r = x.r;
  auto& b = x.b;
  b.assign(x.n + 2, BigInt(0));
  for (std::size_t i = 0; i <= r; ++i) b[i] = sylvester(i);

  const std::size_t top = x.odd ? r : r - 1;
  BigInt bracket = 1, window;
  for (std::size_t i = 1; i <= top; ++i) {
    b[r + i] = 1 + sq(b[r + 1 - i] - 1) * bracket;
    if (i == 1) {
      window = b[r + 1];
    } else {
      window *= b[r + 2 - i];
      window *= b[r + i];
    }
    bracket += (b[r + 1 - i] - 1) * window;
  }

  if (x.odd) {
    x.d = sq(b[0] - 1) * b[1] * window + (b[1] - 1) * bracket;
    b[2 * r + 1] = divide_exact(x.d + 1, 2, "b_{2r+1} = (d+1)/2");
  } else if (r == 1) {
    // d and b_2 are determined jointly by d = 3(b_1-1)^2 - 2, b_2 = (2d+1)/3.
    x.d = 3 * sq(b[1] - 1) - 2;
    b[2] = divide_exact(2 * x.d + 1, 3, "b_{2r} = (2d+1)/3");
  } else {
    x.d = sq(b[1] - 1) * b[2] * window + (b[2] - 1) * bracket;
    b[2 * r] = divide_exact(2 * x.d + 1, 3, "b_{2r} = (2d+1)/3");
  }
}

// Weights a_{r+1}..a_{n+1} from the rational recursion, then the last
// exponent b_{n+1} = d - a_{r+1}.
//   odd:  a_{2r-i}   = a_{2r-i+1}/s_{i+1} + (s_{r+1}-1)(1-1/s_{i+1}) C_i b_{r+1}...b_{2r-i-1}
//   even: a_{2r-1-i} = a_{2r-i}/s_{i+2}   + (s_{r+1}-1)(1-1/s_{i+2}) C_i b_{r+1}...b_{2r-i-2}
// where C_i sums the already known top weights against 1 - 1/s_j.
void upper_weights(LoopData& x) {
  const std::size_t r = x.r;
  const std::size_t top = x.odd ? 2 * r + 1 : 2 * r;  // the two weights equal to 1
  const std::size_t steps = x.odd ? r : r - 1;
  const std::size_t shift = x.odd ? 1 : 2;
  const BigInt s_mid = sylvester(r + 1) - 1;
  auto& a = x.a;
  a.assign(x.n + 2, BigInt(0));
  a[top] = 1;
  a[top + 1] = 1;

  // prefix[k] = b_{r+1} ... b_{r+k}, k = 0..steps-1, consumed from the back
  std::vector<BigInt> prefix;
  prefix.reserve(steps);
  if (steps > 0) prefix.push_back(1);
  for (std::size_t k = 1; k < steps; ++k) prefix.push_back(prefix.back() * x.b[r + k]);

  Rational bracket = Rational(a[top + 1]) * one_minus_inverse(shift - 1) + Rational(a[top]) * one_minus_inverse(shift);
  for (std::size_t i = 0; i < steps; ++i) {
    if (i > 0) bracket += Rational(a[top - i]) * one_minus_inverse(i + shift);
    Rational value(a[top - i], sylvester(i + shift));
    value.canonicalize();
    Rational step = bracket * one_minus_inverse(i + shift);
    step *= s_mid;
    step *= prefix.back();
    prefix.pop_back();
    value += step;
    a[top - 1 - i] = to_integer(value, "weight a_j");
  }
  x.b[x.n + 1] = x.d - a[r + 1];
  for (std::size_t i = 0; i < x.n + 2; ++i) {
    if (x.b[i] <= 0) throw DomainError(where(x.n) + "exponent b_" + std::to_string(i) + " is not positive");
  }
}

// a_i = d - a_{2r+1-i} b_{2r+1-i} (i <= r, odd), a_i = d - b_{2r+1-i} a_{2r+1-i}
// (1 <= i <= r, even) and a_0 = d/2 for even n.
void lower_weights(LoopData& x) {
  const std::size_t r = x.r;
  auto& a = x.a;
  const auto& b = x.b;
  if (x.odd) {
    for (std::size_t i = 0; i <= r; ++i) a[i] = x.d - a[2 * r + 1 - i] * b[2 * r + 1 - i];
  } else {
    for (std::size_t i = 1; i <= r; ++i) a[i] = x.d - b[2 * r + 1 - i] * a[2 * r + 1 - i];
    a[0] = divide_exact(x.d, 2, "a_0 = d/2");
  }
  for (std::size_t i = 0; i < x.n + 2; ++i) {
    if (a[i] <= 0) throw DomainError(where(x.n) + "weight a_" + std::to_string(i) + " is not positive");
  }
}

// Exponent matrix of the displayed potential; the exponents are moved in.
IntMatrix loop_matrix(LoopData& x) {
  const std::size_t r = x.r;
  const Index N = static_cast<Index>(x.n + 2);
  IntMatrix A = IntMatrix::Zero(N, N);
  if (x.odd) {
    for (std::size_t i = 0; i <= r; ++i) A(Index(i), Index(2 * r + 2 - i)) = 1;
    for (std::size_t i = r + 1; i <= 2 * r + 1; ++i) A(Index(i), Index(2 * r + 1 - i)) = 1;
  } else {
    for (std::size_t i = 1; i <= r; ++i) A(Index(i), Index(2 * r + 2 - i)) = 1;
    for (std::size_t i = r + 1; i <= 2 * r; ++i) A(Index(i), Index(2 * r + 1 - i)) = 1;
  }
  A(N - 1, Index(r + 1)) = 1;
  for (Index i = 0; i < N; ++i) A(i, i) = std::move(x.b[std::size_t(i)]);
  x.b.clear();
  return A;
}

// The loop has an odd number of variables (all of them for odd n, all but
// x_0 for even n), so Gamma_loop = product of its exponents + 1.
BigInt family_loop_gamma(const LoopData& x) {
  const std::size_t first = x.odd ? 0 : 1;
  BigInt g = product_of(std::span<const BigInt>(x.b).subspan(first));
  g += 1;
  return g;
}

// Alternating sum of products of b over shrinking index sets: start from all
// of the loop, then drop r+1, r, r+2, r-1, ... one at a time, ending at the
// empty product. Evaluated by Horner's rule in the order of removal.
BigInt telescoping_m(const LoopData& x) {
  const std::size_t r = x.r;
  const std::size_t pairs = x.odd ? r + 1 : r;
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < pairs; ++k) {
    order.push_back(r + 1 + k);
    order.push_back(r - k);
  }
  BigInt h = 1;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    h *= x.b[order[k - 1]];
    if (k % 2 == 0) {
      h += 1;
    } else {
      h -= 1;
    }
  }
  return h;
}

}  // namespace

LoopFamilyRecord loop_family(std::size_t n, bool check_faithful) {
  require_dimension(n, 2, "loop_family");
  LoopData x{n, n / 2, n % 2 == 1, {}, {}, 0};
  loop_exponents(x);
  upper_weights(x);

  LoopFamilyChecks checks;
  // m is the telescoping value; Gamma_loop = d m certifies both d | Gamma_loop
  // with quotient m and the agreement of the two definitions of m.
  BigInt m = telescoping_m(x);
  {
    const BigInt gamma_loop = family_loop_gamma(x);
    checks.degree_route =
        mpz_sizeinbase(gamma_loop.get_mpz_t(), 2) <= kStructuralDegreeBits ? "structural" : "weights";
    if (gamma_loop != x.d * m) {
      if (!mpz_divisible_p(gamma_loop.get_mpz_t(), x.d.get_mpz_t())) {
        throw DomainError(where(n) + "d does not divide Gamma_loop");
      }
      throw DomainError(where(n) + "telescoping sum differs from Gamma_loop/d");
    }
    checks.gamma_consistent = true;
    checks.m_consistent = true;
  }

  lower_weights(x);
  BigInt d = x.d;
  std::optional<InvertiblePotential> p;
  try {
    p.emplace(loop_matrix(x), WeightSystem(std::move(x.a), std::move(x.d)));
  } catch (const InputError& e) {
    throw DomainError(where(n) + "homogeneity failed: " + e.what());
  }
  checks.homogeneous = true;

  LoopFamilyRecord rec(std::move(*p));
  p.reset();
  rec.n = n;
  rec.r = n / 2;
  rec.d = std::move(d);
  rec.m = std::move(m);
  rec.conjecture = kLoopConjecture;

  checks.weights_sum = is_calabi_yau(*rec.potential.weights());
  if (!checks.weights_sum) throw DomainError(where(n) + "weights do not sum to d");

  if (checks.degree_route == "structural") {
    checks.charge_degree = degree_from_charges(rec.potential) == rec.d;
  } else {
    // Homogeneity says A (a/d) = 1 with A invertible, so the charges are a/d;
    // a weight equals 1, hence their order in (Q/Z)^N is exactly d.
    checks.charge_degree = std::any_of(rec.a().begin(), rec.a().end(), [](const BigInt& w) { return w == 1; });
  }
  if (!checks.charge_degree) throw DomainError(where(n) + "degree of the charges differs from d");

  rec.checks = std::move(checks);
  if (check_faithful) rec.checks.faithful = faithfulness_with_degree(rec.potential, rec.d).faithful;
  return rec;
}

FaithfulnessRow verify_faithfulness(std::size_t n) {
  const auto start = std::chrono::steady_clock::now();
  LoopFamilyRecord rec = loop_family(n);
  // d is certified by the record's checks; the weights are not needed for
  // the transposed degree and are the bulk of the memory, so drop them.
  rec.potential.detach_weights();
  const SymmetryData s = faithfulness_with_degree(rec.potential, rec.d);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  return {n, s.faithful, std::move(rec.m), took.count()};
}

std::vector<FaithfulnessRow> verify_faithfulness_range(std::size_t n_max) {
  require_dimension(n_max, 2, "verify_faithfulness_range");
  std::vector<FaithfulnessRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) rows.push_back(verify_faithfulness(n));
  return rows;
}

// ---------------------------------------------------------------------------
// K3 fixtures

std::vector<K3Fixture> k3_fixtures() {
  auto mono = [](std::initializer_list<long> e) {
    Monomial m;
    for (long x : e) m.emplace_back(x);
    return m;
  };
  std::vector<K3Fixture> out;
  out.push_back({"Y_10", WeightSystem({5, 3, 1, 1}, 10),
                 {mono({2, 0, 0, 0}), mono({0, 3, 0, 1}), mono({0, 0, 1, 9}), mono({0, 1, 7, 0})},
                 DiagonalAction(19, {1, 7, 2, 0})});
  out.push_back({"S_11", WeightSystem({5, 3, 2, 1}, 11),
                 {mono({2, 0, 0, 1}), mono({0, 3, 1, 0}), mono({1, 0, 3, 0}), mono({0, 1, 0, 8})},
                 DiagonalAction(13, {1, 2, -4, 0})});
  out.push_back({"S_7", WeightSystem({3, 2, 1, 1}, 7),
                 {mono({2, 0, 0, 1}), mono({0, 3, 1, 0}), mono({0, 1, 5, 0}), mono({0, 0, 0, 7})},
                 DiagonalAction(14, {1, 1, -3, -2})});
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const FamilyMember& f) {
  return {{"family", "X_" + std::to_string(f.k)},
          {"n", f.n},
          {"degree", to_string(f.weights.degree())},
          {"weights", strings(f.weights.weights())},
          {"potential", to_json(f.potential)},
          {"conjecture", f.conjecture}};
}

nlohmann::json to_json(const PairDescription& p) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : p.components) {
    comps.push_back({{"label", c.label}, {"degree", to_string(c.degree)}, {"coefficient", to_string(c.coefficient)}});
  }
  nlohmann::json j = {{"ambient", p.ambient_label},
                      {"ambient_weights", strings(p.ambient_weights)},
                      {"components", comps},
                      {"index", to_string(p.index)},
                      {"provenance", p.provenance},
                      {"conjecture", p.conjecture}};
  if (p.mld) j["mld"] = to_string(*p.mld);
  return j;
}

nlohmann::json to_json(const LoopFamilyRecord& rec) {
  nlohmann::json checks = {{"homogeneous", rec.checks.homogeneous},
                           {"weights_sum", rec.checks.weights_sum},
                           {"charge_degree", rec.checks.charge_degree},
                           {"degree_route", rec.checks.degree_route},
                           {"gamma_consistent", rec.checks.gamma_consistent},
                           {"m_consistent", rec.checks.m_consistent}};
  checks["faithful"] = rec.checks.faithful ? nlohmann::json(*rec.checks.faithful) : nlohmann::json(nullptr);
  return {{"n", rec.n},
          {"r", rec.r},
          {"b", strings(rec.b())},
          {"a", strings(rec.a())},
          {"d", to_string(rec.d)},
          {"m", to_string(rec.m)},
          {"checks", checks},
          {"conjecture", rec.conjecture}};
}

std::string index_conjecture() { return kIndexConjecture; }
std::string terminal_conjecture() { return kTerminalConjecture; }

}  // namespace scy
