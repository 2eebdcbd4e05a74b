#include "sylvester_cy/potential.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace scy {

using Eigen::Index;

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Fermat: return "fermat";
    case BlockKind::Loop: return "loop";
    case BlockKind::Other: return "other";
  }
  return "other";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Free: return "free";
    case Verdict::NotFree: return "not-free";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

IntMatrix sub_matrix(const IntMatrix& m, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  IntMatrix s(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  }
  return s;
}

// Tries to read the block as a single loop cycle; returns false otherwise.
bool read_loop(const IntMatrix& m, PotentialBlock& block) {
  const auto& vars = block.variables;
  std::map<Index, std::pair<Index, Index>> owner;  // variable -> (row, target)
  for (Index r : block.rows) {
    std::vector<Index> support;
    for (Index v : vars) {
      if (m(r, v) != 0) support.push_back(v);
    }
    if (support.size() != 2) return false;
    Index a = support[0], b = support[1];
    bool a_one = m(r, a) == 1, b_one = m(r, b) == 1;
    Index own, target;
    if (b_one && !a_one) {
      own = a, target = b;
    } else if (a_one && !b_one) {
      own = b, target = a;
    } else {
      return false;  // both exponents 1 (or neither): not a loop row
    }
    if (owner.count(own)) return false;
    owner[own] = {r, target};
  }
  if (owner.size() != vars.size()) return false;
  std::vector<Index> order, rows;
  std::vector<BigInt> exps;
  Index v = vars.front();
  for (std::size_t step = 0; step < vars.size(); ++step) {
    auto it = owner.find(v);
    if (it == owner.end()) return false;
    order.push_back(v);
    rows.push_back(it->second.first);
    exps.push_back(m(it->second.first, v));
    v = it->second.second;
  }
  if (v != vars.front()) return false;
  std::set<Index> seen(order.begin(), order.end());
  if (seen.size() != vars.size()) return false;
  block.kind = BlockKind::Loop;
  block.variables = order;
  block.rows = rows;
  block.exponents = exps;
  return true;
}

std::vector<PotentialBlock> classify(const IntMatrix& m) {
  const Index n = m.rows();
  DisjointSets ds(n);
  for (Index r = 0; r < n; ++r) {
    Index first = -1;
    bool any = false;
    for (Index c = 0; c < n; ++c) {
      if (m(r, c) < 0) throw InputError("exponents must be nonnegative");
      if (m(r, c) != 0) {
        if (first < 0) first = c;
        ds.unite(first, c);
        any = true;
      }
    }
    if (!any) throw InputError("singular exponent matrix: a monomial is constant");
  }
  std::map<Index, PotentialBlock> by_root;
  for (Index c = 0; c < n; ++c) by_root[ds.find(c)].variables.push_back(c);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      if (m(r, c) != 0) {
        by_root[ds.find(c)].rows.push_back(r);
        break;
      }
    }
  }
  std::vector<PotentialBlock> blocks;
  for (auto& [root, block] : by_root) {
    if (block.rows.size() != block.variables.size()) {
      throw InputError("singular exponent matrix: block is not square");
    }
    if (block.variables.size() == 1) {
      block.kind = BlockKind::Fermat;
      block.exponents = {m(block.rows[0], block.variables[0])};
    } else if (!read_loop(m, block)) {
      block.kind = BlockKind::Other;
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

BigInt block_gamma_signed(const IntMatrix& m, const PotentialBlock& block) {
  switch (block.kind) {
    case BlockKind::Fermat: return block.exponents[0];
    case BlockKind::Loop: return loop_gamma(block.exponents);
    case BlockKind::Other: return bareiss_determinant<BigInt>(sub_matrix(m, block.rows, block.variables));
  }
  return 0;
}

void check_invertible(const IntMatrix& m, const std::vector<PotentialBlock>& blocks) {
  for (const auto& block : blocks) {
    bool zero = false;
    if (block.kind == BlockKind::Loop) {
      // b_1...b_k + (-1)^{k+1} vanishes only for all-ones exponents with k even.
      bool all_one = std::all_of(block.exponents.begin(), block.exponents.end(),
                                 [](const BigInt& b) { return b == 1; });
      zero = all_one && block.exponents.size() % 2 == 0;
    } else {
      zero = block_gamma_signed(m, block) == 0;
    }
    if (zero) throw InputError("singular exponent matrix");
  }
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt denominator_lcm(const RatVector& v) {
  BigInt l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, v(i).get_den());
  return l;
}

RatVector column_sums(const RatMatrix& m) { return row_sums(RatMatrix(m.transpose())); }

}  // namespace

InvertiblePotential::InvertiblePotential(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw InputError("exponent matrix must be square");
  if (matrix_.rows() == 0) throw InputError("exponent matrix must be nonempty");
  blocks_ = classify(matrix_);
  check_invertible(matrix_, blocks_);
}

InvertiblePotential::InvertiblePotential(IntMatrix matrix, WeightSystem weights)
    : InvertiblePotential(std::move(matrix)) {
  if (weights.size() != variables()) throw InputError("weight count does not match variable count");
  for (Index r = 0; r < matrix_.rows(); ++r) {
    BigInt deg = 0;
    for (Index c = 0; c < matrix_.cols(); ++c) {
      if (matrix_(r, c) != 0) deg += matrix_(r, c) * weights.weight(static_cast<std::size_t>(c));
    }
    if (deg != weights.degree()) {
      throw InputError("monomial " + std::to_string(r) + " has weighted degree " + to_string(deg) +
                       ", expected " + to_string(weights.degree()));
    }
  }
  weights_ = std::move(weights);
}

InvertiblePotential InvertiblePotential::from_monomials(const Polynomial& monomials) {
  const Index n = static_cast<Index>(monomials.size());
  IntMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    if (static_cast<Index>(monomials[r].size()) != n) {
      throw InputError("an invertible potential needs as many monomials as variables");
    }
    for (Index c = 0; c < n; ++c) m(r, c) = monomials[r][c];
  }
  return InvertiblePotential(std::move(m));
}

InvertiblePotential InvertiblePotential::loop(const std::vector<BigInt>& b) {
  const Index k = static_cast<Index>(b.size());
  if (k < 2) throw InputError("a loop needs at least two variables");
  IntMatrix m = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    m(i, i) = b[i];
    m(i, (i + 1) % k) = 1;
  }
  return InvertiblePotential(std::move(m));
}

InvertiblePotential InvertiblePotential::fermat(const std::vector<BigInt>& b) {
  const Index k = static_cast<Index>(b.size());
  IntMatrix m = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) m(i, i) = b[i];
  return InvertiblePotential(std::move(m));
}

InvertiblePotential InvertiblePotential::direct_sum(const InvertiblePotential& left,
                                                    const InvertiblePotential& right) {
  const Index a = left.matrix().rows(), b = right.matrix().rows();
  IntMatrix m = IntMatrix::Zero(a + b, a + b);
  m.topLeftCorner(a, a) = left.matrix();
  m.bottomRightCorner(b, b) = right.matrix();
  return InvertiblePotential(std::move(m));
}

Polynomial InvertiblePotential::monomials() const {
  Polynomial out;
  for (Index r = 0; r < matrix_.rows(); ++r) {
    Monomial mono(static_cast<std::size_t>(matrix_.cols()));
    for (Index c = 0; c < matrix_.cols(); ++c) mono[c] = matrix_(r, c);
    out.push_back(std::move(mono));
  }
  return out;
}

InvertiblePotential InvertiblePotential::with_weights(WeightSystem weights) const {
  return InvertiblePotential(matrix_, std::move(weights));
}

InvertiblePotential InvertiblePotential::without_weights() const { return InvertiblePotential(matrix_); }

std::optional<WeightSystem> InvertiblePotential::detach_weights() {
  std::optional<WeightSystem> out = std::move(weights_);
  weights_.reset();
  return out;
}

InvertiblePotential InvertiblePotential::block_potential(std::size_t block) const {
  const auto& b = blocks_.at(block);
  return InvertiblePotential(sub_matrix(matrix_, b.rows, b.variables));
}

bool InvertiblePotential::is_pure_loop() const {
  return blocks_.size() == 1 && blocks_[0].kind == BlockKind::Loop;
}

bool operator==(const InvertiblePotential& a, const InvertiblePotential& b) {
  return a.matrix().rows() == b.matrix().rows() && a.matrix() == b.matrix();
}

BigInt loop_gamma(const std::vector<BigInt>& b) {
  BigInt g = product_of(b);
  if (b.size() % 2 == 1) {
    g += 1;
  } else {
    g -= 1;
  }
  return g;
}

BigInt loop_charge_numerator(const std::vector<BigInt>& b) {
  // U_1 = 1, U_j = b_j U_{j-1} + (-1)^{j-1}
  BigInt u = 1;
  for (std::size_t j = 1; j < b.size(); ++j) {
    u *= b[j];
    if (j % 2 == 0) {
      u += 1;
    } else {
      u -= 1;
    }
  }
  return u;
}

BigInt loop_transpose_charge_numerator(const std::vector<BigInt>& b) {
  // (-1)^{m-1} (1 - b_1 (1 - b_2 (... (1 - b_{m-1}))))
  BigInt h = 1;
  for (std::size_t j = b.size() - 1; j-- > 0;) {
    h *= b[j];
    h = 1 - h;
  }
  if (b.size() % 2 == 0) h = -h;
  return h;
}

BigInt gamma(const InvertiblePotential& p) {
  std::vector<BigInt> parts;
  for (const auto& block : p.blocks()) parts.push_back(abs_big(block_gamma_signed(p.matrix(), block)));
  return product_of(parts);
}

BigInt gamma_exact(const InvertiblePotential& p) { return abs_big(bareiss_determinant<BigInt>(p.matrix())); }

std::vector<Rational> charges(const InvertiblePotential& p) {
  std::vector<Rational> q(p.variables());
  for (const auto& block : p.blocks()) {
    switch (block.kind) {
      case BlockKind::Fermat:
        q[block.variables[0]] = make_rational(1, block.exponents[0]);
        break;
      case BlockKind::Loop: {
        Rational cur = make_rational(loop_charge_numerator(block.exponents), loop_gamma(block.exponents));
        for (std::size_t t = 0; t < block.variables.size(); ++t) {
          q[block.variables[t]] = cur;
          cur = 1 - Rational(block.exponents[t]) * cur;
        }
        break;
      }
      case BlockKind::Other: {
        RatVector s = row_sums(exact_inverse<BigInt>(sub_matrix(p.matrix(), block.rows, block.variables)));
        for (std::size_t t = 0; t < block.variables.size(); ++t) q[block.variables[t]] = s(t);
        break;
      }
    }
  }
  return q;
}

std::vector<Rational> charges_exact(const InvertiblePotential& p) {
  RatVector s = row_sums(exact_inverse<BigInt>(p.matrix()));
  return std::vector<Rational>(s.data(), s.data() + s.size());
}

BigInt degree_from_charges(const InvertiblePotential& p) {
  BigInt d = 1;
  for (const auto& block : p.blocks()) {
    BigInt part;
    switch (block.kind) {
      case BlockKind::Fermat: part = block.exponents[0]; break;
      case BlockKind::Loop: {
        // every loop charge has the same denominator as q_1 (b_t q_t + q_{t+1} = 1)
        BigInt g = abs_big(loop_gamma(block.exponents));
        part = g / gcd(g, loop_charge_numerator(block.exponents));
        break;
      }
      case BlockKind::Other:
        part = denominator_lcm(row_sums(exact_inverse<BigInt>(sub_matrix(p.matrix(), block.rows, block.variables))));
        break;
    }
    d = lcm(d, part);
  }
  return d;
}

BigInt transpose_degree(const InvertiblePotential& p) {
  BigInt d = 1;
  for (const auto& block : p.blocks()) {
    BigInt part;
    switch (block.kind) {
      case BlockKind::Fermat: part = block.exponents[0]; break;
      case BlockKind::Loop: {
        BigInt g = abs_big(loop_gamma(block.exponents));
        part = g / gcd(g, loop_transpose_charge_numerator(block.exponents));
        break;
      }
      case BlockKind::Other:
        part = denominator_lcm(column_sums(exact_inverse<BigInt>(sub_matrix(p.matrix(), block.rows, block.variables))));
        break;
    }
    d = lcm(d, part);
  }
  return d;
}

InvertiblePotential transpose(const InvertiblePotential& p) { return InvertiblePotential(IntMatrix(p.matrix().transpose())); }

SymmetryData faithfulness(const InvertiblePotential& p) {
  SymmetryData s;
  s.gamma = gamma(p);
  s.charges = charges(p);
  s.degree = degree_from_charges(p);
  s.transpose_degree = transpose_degree(p);
  s.sl_order = divide_exact(s.gamma, s.transpose_degree, "SL order");
  s.faithful = s.degree * s.transpose_degree == s.gamma;
  return s;
}

SymmetryData faithfulness_from_weights(const InvertiblePotential& p) {
  if (!p.weights()) throw InputError("faithfulness_from_weights needs attached weights");
  const WeightSystem& ws = *p.weights();
  BigInt common = ws.degree();
  for (const auto& w : ws.weights()) {
    if (common == 1) break;
    common = gcd(common, w);
  }
  // homogeneity makes the charges a_i/d
  return faithfulness_with_degree(p, ws.degree() / common);
}

SymmetryData faithfulness_with_degree(const InvertiblePotential& p, const BigInt& degree) {
  if (degree <= 0) throw InputError("charge degree must be positive");
  SymmetryData s;
  s.gamma = gamma(p);
  s.degree = degree;
  const BigInt M = divide_exact(s.gamma, s.degree, "Gamma / d");

  // g = gcd of M and every transposed charge scaled by M.
  BigInt g = M;
  bool scaled = true;
  for (const auto& block : p.blocks()) {
    if (block.kind == BlockKind::Fermat) {
      if (!mpz_divisible_p(M.get_mpz_t(), block.exponents[0].get_mpz_t())) {
        scaled = false;
        break;
      }
      g = gcd(g, M / block.exponents[0]);
    } else if (block.kind == BlockKind::Loop) {
      const BigInt gl = loop_gamma(block.exponents);
      BigInt last = loop_transpose_charge_numerator(block.exponents);
      if (gl != s.gamma) last *= s.gamma / gl;
      BigInt rem;
      mpz_tdiv_qr(last.get_mpz_t(), rem.get_mpz_t(), last.get_mpz_t(), s.degree.get_mpz_t());
      if (rem != 0) {
        scaled = false;
        break;
      }
      BigInt first = M - last;
      mpz_tdiv_qr(first.get_mpz_t(), rem.get_mpz_t(), first.get_mpz_t(), block.exponents[0].get_mpz_t());
      if (rem != 0) {
        scaled = false;
        break;
      }
      // every other scaled charge of the block is an integer combination of
      // M and `last`, and M = b_0 first + last, so this gcd is the block's.
      g = gcd(g, gcd(last, first));
    } else {
      scaled = false;
      break;
    }
  }
  if (scaled) {
    s.transpose_degree = M / g;
    s.sl_order = s.degree * g;
  } else {
    s.transpose_degree = transpose_degree(p);
    s.sl_order = divide_exact(s.gamma, s.transpose_degree, "SL order");
  }
  s.faithful = s.degree * s.transpose_degree == s.gamma;
  return s;
}

LoopInverseForms loop_closed_forms(const std::vector<BigInt>& b) {
  if (b.size() < 2) throw InputError("a loop needs at least two variables");
  for (const auto& x : b) {
    if (x < 2) throw InputError("loop exponents must be at least 2");
  }
  const std::size_t m = b.size();
  LoopInverseForms f;
  f.determinant = loop_gamma(b);
  f.charge_numerator = loop_charge_numerator(b);
  f.transpose_charge_numerator = loop_transpose_charge_numerator(b);

  // v_k = (-1)^{m-k} b_1...b_{k-1} / Gamma
  BigInt prefix = 1;
  for (std::size_t k = 0; k < m; ++k) {
    BigInt num = ((m - 1 - k) % 2 == 0) ? prefix : BigInt(-prefix);
    f.last_column.push_back(make_rational(num, f.determinant));
    prefix *= b[k];
  }
  // w_k = (-1)^{k-1} b_{k+1}...b_m / Gamma
  f.first_row.assign(m, Rational(0));
  BigInt suffix = 1;
  for (std::size_t k = m; k-- > 0;) {
    BigInt num = (k % 2 == 0) ? suffix : BigInt(-suffix);
    f.first_row[k] = make_rational(num, f.determinant);
    suffix *= b[k];
  }

  const IntMatrix a = InvertiblePotential::loop(b).matrix();
  RatVector v(static_cast<Index>(m)), w(static_cast<Index>(m));
  for (std::size_t k = 0; k < m; ++k) v(k) = f.last_column[k], w(k) = f.first_row[k];
  RatVector av = apply(a, v);
  RatVector wa = apply(IntMatrix(a.transpose()), w);
  bool ok = true;
  for (std::size_t k = 0; k < m; ++k) {
    ok = ok && av(k) == (k + 1 == m ? 1 : 0) && wa(k) == (k == 0 ? 1 : 0);
  }
  Rational wsum = 0, vsum = 0;
  for (std::size_t k = 0; k < m; ++k) wsum += f.first_row[k], vsum += f.last_column[k];
  ok = ok && wsum == make_rational(f.charge_numerator, f.determinant);
  ok = ok && vsum == make_rational(f.transpose_charge_numerator, f.determinant);
  f.verified = ok;
  return f;
}

namespace {

using Residues = std::vector<std::int64_t>;

struct ResidueHash {
  std::size_t operator()(const Residues& r) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : r) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// Coordinate strata {x_k = 0, k in Z} whose intersection with X is a divisor.
std::vector<std::vector<std::size_t>> divisorial_strata(const InvertiblePotential& p) {
  const std::size_t n = p.variables();
  const auto& m = p.matrix();
  auto surviving = [&](const std::vector<std::size_t>& zero) {
    int count = 0;
    for (Index r = 0; r < m.rows(); ++r) {
      bool survives = true;
      for (auto z : zero) survives = survives && m(r, static_cast<Index>(z)) == 0;
      count += survives;
    }
    return count;
  };
  std::vector<std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < n; ++i) {
    int c = surviving({i});
    if (c == 0) throw InputError("hypersurface contains a coordinate hyperplane");
    if (c >= 2) strata.push_back({i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (surviving({i, j}) == 0) strata.push_back({i, j});
    }
  }
  return strata;
}

}  // namespace

FreenessResult free_in_codim1(const InvertiblePotential& p, const FreenessOptions& options) {
  if (!p.weights()) throw InputError("freeness check needs attached weights");
  const WeightSystem& ws = *p.weights();
  const std::size_t n = p.variables();
  if (p.is_pure_loop() && ws.dimension() >= 3) {
    return {Verdict::Free, "structural: loop potential, dimension >= 3"};
  }

  const BigInt big_gamma = gamma(p);
  const BigInt& d = ws.degree();
  if (big_gamma == d) return {Verdict::Free, "trivial group: Gamma = d"};
  if (big_gamma > options.enumeration_budget) {
    return {Verdict::Undecided, "group order " + to_string(big_gamma) + " exceeds enumeration budget"};
  }

  BigInt subgroup = divide_exact(big_gamma, d, "quotient group order");
  if (options.subgroup_order) {
    subgroup = *options.subgroup_order;
  } else {
    std::size_t loops = 0;
    BigInt loop_g;
    for (const auto& block : p.blocks()) {
      if (block.kind == BlockKind::Loop) ++loops, loop_g = abs_big(loop_gamma(block.exponents));
    }
    if (loops == 1) subgroup = divide_exact(loop_g, d, "loop subgroup order");
  }

  const std::int64_t G = to_int64(big_gamma);
  std::vector<std::int64_t> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = to_int64(ws.weight(k));
  const std::int64_t s = to_int64(subgroup);

  // Aut(W) = A^{-1} Z^n / Z^n, written as residue vectors mod Gamma.
  RatMatrix inv = exact_inverse<BigInt>(p.matrix());
  std::vector<Residues> generators;
  for (Index c = 0; c < inv.cols(); ++c) {
    Residues g(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational x = inv(static_cast<Index>(k), c) * Rational(big_gamma);
      if (x.get_den() != 1) throw DomainError("inverse entries are not multiples of 1/Gamma");
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), big_gamma.get_mpz_t());
      g[k] = to_int64(r);
    }
    generators.push_back(std::move(g));
  }
  std::unordered_set<Residues, ResidueHash> group;
  std::vector<Residues> frontier{Residues(n, 0)};
  group.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Residues> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Residues y(n);
        for (std::size_t k = 0; k < n; ++k) y[k] = (x[k] + g[k]) % G;
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  if (static_cast<std::int64_t>(group.size()) != G) throw DomainError("enumerated group has the wrong order");

  // J = <q>, q_k = a_k / d.
  const std::int64_t dd = to_int64(d);
  Residues qres(n);
  for (std::size_t k = 0; k < n; ++k) {
    qres[k] = to_int64(divide_exact(BigInt(a[k]) * big_gamma, d, "grading element in Aut(W)") % big_gamma);
  }
  std::unordered_set<Residues, ResidueHash> j_group;
  for (std::int64_t j = 0; j < dd; ++j) {
    Residues y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = static_cast<std::int64_t>((static_cast<__int128>(j) * qres[k]) % G);
    j_group.insert(std::move(y));
  }

  const auto strata = divisorial_strata(p);
  std::size_t tested = 0;
  for (const auto& g : group) {
    if (j_group.count(g)) continue;
    Residues sg(n);
    for (std::size_t k = 0; k < n; ++k) sg[k] = static_cast<std::int64_t>((static_cast<__int128>(s) * g[k]) % G);
    if (!j_group.count(sg)) continue;
    ++tested;
    for (const auto& zero : strata) {
      // Is there rho with rho a_k = g_k / Gamma (mod 1) for every k outside zero?
      std::size_t k0 = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (std::find(zero.begin(), zero.end(), k) != zero.end()) continue;
        if (k0 == n || a[k] < a[k0]) k0 = k;
      }
      const __int128 mod = static_cast<__int128>(G) * a[k0];
      for (std::int64_t t = 0; t < a[k0]; ++t) {
        const __int128 base = g[k0] + static_cast<__int128>(t) * G;  // rho = base / (G a_k0)
        bool fixes = true;
        for (std::size_t k = 0; k < n && fixes; ++k) {
          if (std::find(zero.begin(), zero.end(), k) != zero.end()) continue;
          __int128 lhs = base * a[k] - static_cast<__int128>(g[k]) * a[k0];
          fixes = lhs % mod == 0;
        }
        if (fixes) {
          std::string where = "x" + std::to_string(zero[0]);
          if (zero.size() > 1) where += "=x" + std::to_string(zero[1]);
          return {Verdict::NotFree, "brute force: a nontrivial element fixes the stratum " + where + "=0"};
        }
      }
    }
  }
  return {Verdict::Free, "brute force: " + std::to_string(tested) + " nontrivial elements of a subgroup of order " +
                             to_string(subgroup) + " checked against " + std::to_string(strata.size()) + " strata"};
}

nlohmann::json to_json(const InvertiblePotential& p) {
  nlohmann::json j;
  j["variables"] = p.variables();
  nlohmann::json monos = nlohmann::json::array();
  for (const auto& mono : p.monomials()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& e : mono) row.push_back(to_string(e));
    monos.push_back(row);
  }
  j["monomials"] = monos;
  if (p.weights()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& a : p.weights()->weights()) w.push_back(to_string(a));
    j["weights"] = w;
    j["degree"] = to_string(p.weights()->degree());
  } else {
    j["weights"] = nullptr;
    j["degree"] = nullptr;
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& block : p.blocks()) {
    nlohmann::json b;
    b["kind"] = to_string(block.kind);
    b["variables"] = block.variables;
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : block.exponents) e.push_back(to_string(x));
    b["exponents"] = e;
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  return j;
}

}  // namespace scy
