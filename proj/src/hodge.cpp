#include "sylvester_cy/hodge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace scy {

std::string to_string(Orientation o) { return o == Orientation::OfX ? "of-X" : "of-mirror"; }

Orientation parse_orientation(const std::string& text) {
  if (text == "of-X" || text == "of-x" || text == "x") return Orientation::OfX;
  if (text == "of-mirror" || text == "mirror") return Orientation::OfMirror;
  throw InputError("unknown orientation '" + text + "' (expected of-X or of-mirror)");
}

HodgeDiamond::HodgeDiamond(std::size_t dimension, Orientation orientation)
    : n_(dimension), orientation_(orientation), table_((dimension + 1) * (dimension + 1), BigInt(0)) {}

std::size_t HodgeDiamond::index(std::size_t p, std::size_t q) const {
  if (p > n_ || q > n_) throw InputError("Hodge index out of range");
  return p * (n_ + 1) + q;
}

HodgeDiamond HodgeDiamond::flipped() const {
  HodgeDiamond out(n_, orientation_ == Orientation::OfX ? Orientation::OfMirror : Orientation::OfX);
  for (std::size_t p = 0; p <= n_; ++p) {
    for (std::size_t q = 0; q <= n_; ++q) out.at(n_ - p, q) = at(p, q);
  }
  return out;
}

bool HodgeDiamond::has_symmetries() const {
  for (std::size_t p = 0; p <= n_; ++p) {
    for (std::size_t q = 0; q <= n_; ++q) {
      if (at(p, q) != at(q, p) || at(p, q) != at(n_ - p, n_ - q)) return false;
    }
  }
  return true;
}

bool HodgeDiamond::vanishes_off_diagonals() const {
  for (std::size_t p = 0; p <= n_; ++p) {
    for (std::size_t q = 0; q <= n_; ++q) {
      if (p != q && p + q != n_ && at(p, q) != 0) return false;
    }
  }
  return true;
}

BigInt HodgeDiamond::total() const {
  BigInt s = 0;
  for (const auto& x : table_) s += x;
  return s;
}

BigInt f_c(const BigInt& c, const BigInt& j) {
  if (c < 1) throw InputError("f_c needs c >= 1");
  return mpz_divisible_p(j.get_mpz_t(), c.get_mpz_t()) ? BigInt(c - 1) : BigInt(-1);
}

BigInt counting_sum(const std::vector<BigInt>& c, const BigInt& d) {
  if (c.empty()) throw InputError("counting sum needs a nonempty set");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 2) throw InputError("counting sum entries must be at least 2");
    if (!mpz_divisible_p(d.get_mpz_t(), c[i].get_mpz_t())) throw InputError("entries must divide d");
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (gcd(c[i], c[j]) != 1) throw InputError("entries must be pairwise coprime");
    }
  }
  if (d > 100000000) throw UnsupportedError("counting sum over more than 1e8 terms");
  const std::int64_t dd = to_int64(d);
  std::vector<std::int64_t> cc;
  for (const auto& x : c) cc.push_back(to_int64(x));
  BigInt total = 0;
  for (std::int64_t j = 0; j < dd; ++j) {
    // entries can reach d, so the running product stays in BigInt
    BigInt term = 1;
    for (auto ci : cc) term *= (j % ci == 0) ? ci - 1 : -1;
    total += term;
  }
  return total;
}

namespace {

// sum_j prod_{i in fixed} f_{c_i}(j) over j in [0, d), by expanding the
// product over subsets: prod (c [c | j] - 1) = sum_T (-1)^{|F \ T|} prod_T c [lcm_T | j].
BigInt fixed_set_sum(const std::vector<BigInt>& c, const BigInt& d) {
  const std::size_t k = c.size();
  if (k > 24) throw UnsupportedError("too many fixed coordinates");
  BigInt total = 0;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << k); ++t) {
    BigInt prod = 1, l = 1;
    std::size_t size = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (t >> i & 1) prod *= c[i], l = lcm(l, c[i]), ++size;
    }
    BigInt term = prod * (d / l);
    if ((k - size) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

void require_divisible(const WeightSystem& ws) {
  if (!weights_divide_degree(ws)) throw UnsupportedError("some weight does not divide the degree");
}

}  // namespace

BigInt s_ell(const WeightSystem& ws, const BigInt& l) {
  require_divisible(ws);
  std::vector<BigInt> c;
  for (const auto& a : ws.weights()) {
    BigInt la = l * a;
    if (mpz_divisible_p(la.get_mpz_t(), ws.degree().get_mpz_t())) c.push_back(ws.degree() / a);
  }
  return fixed_set_sum(c, ws.degree());
}

EllTerm ell_term(const WeightSystem& ws, const BigInt& l) {
  EllTerm t;
  t.ell = l;
  const BigInt& d = ws.degree();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const BigInt& a = ws.weight(i);
    BigInt r;
    BigInt la = l * a;
    mpz_fdiv_r(r.get_mpz_t(), la.get_mpz_t(), d.get_mpz_t());
    if (r == 0) {
      t.fixed.push_back({i, a, d - a, d - 2 * a});
    } else {
      t.moving.push_back({i, r - a, d - r - a});
    }
  }
  return t;
}

BigInt betti_sum_fast(const WeightSystem& ws) {
  require_divisible(ws);
  const std::size_t N = ws.size();
  if (N > 16) throw UnsupportedError("too many coordinates for the fixed-set count");
  const BigInt& d = ws.degree();
  std::vector<BigInt> c(N);
  for (std::size_t i = 0; i < N; ++i) c[i] = d / ws.weight(i);  // l fixes i iff c_i | l

  const std::size_t masks = std::size_t{1} << N;
  // at_least[M] = #{l in [0,d) : every i in M is fixed} = d / lcm(c_M)
  std::vector<BigInt> at_least(masks);
  for (std::size_t m = 0; m < masks; ++m) {
    BigInt l = 1;
    for (std::size_t i = 0; i < N; ++i) {
      if (m >> i & 1) l = lcm(l, c[i]);
    }
    at_least[m] = d / l;
  }
  // Moebius inversion over supersets gives the exact fixed-set counts.
  std::vector<BigInt> exact = at_least;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t m = 0; m < masks; ++m) {
      if (!(m >> i & 1)) exact[m] -= exact[m | (std::size_t{1} << i)];
    }
  }
  BigInt total = 0;
  for (std::size_t m = 0; m < masks; ++m) {
    if (exact[m] == 0) continue;
    std::vector<BigInt> cm;
    for (std::size_t i = 0; i < N; ++i) {
      if (m >> i & 1) cm.push_back(c[i]);
    }
    total += exact[m] * fixed_set_sum(cm, d);
  }
  return divide_exact(total, d, "Betti sum");
}

namespace {

inline bool checked_add(std::int64_t& x, std::int64_t y) { return !__builtin_add_overflow(x, y, &x); }
inline bool checked_sub(std::int64_t& x, std::int64_t y) { return !__builtin_sub_overflow(x, y, &x); }
inline bool checked_add(BigInt& x, const BigInt& y) {
  x += y;
  return true;
}
inline bool checked_sub(BigInt& x, const BigInt& y) {
  x -= y;
  return true;
}

// Multiply by (1 - u^e), truncated at the array length.
template <typename T>
bool mul_binomial(std::vector<T>& c, std::int64_t e) {
  const std::int64_t len = static_cast<std::int64_t>(c.size());
  for (std::int64_t k = len - 1; k >= e; --k) {
    if (!checked_sub(c[k], c[k - e])) return false;
  }
  return true;
}

// Divide by (1 - u^a): stride-a prefix sum.
template <typename T>
bool div_binomial(std::vector<T>& c, std::int64_t a) {
  const std::int64_t len = static_cast<std::int64_t>(c.size());
  for (std::int64_t k = a; k < len; ++k) {
    if (!checked_add(c[k], c[k - a])) return false;
  }
  return true;
}

// Coefficients 0..len-1 of prod_i (1 - u^{d - a_i}) / (1 - u^{a_i}).
template <typename T>
bool build_series(std::vector<T>& c, const std::vector<std::int64_t>& a, std::int64_t d) {
  std::fill(c.begin(), c.end(), T(0));
  c[0] = 1;
  std::vector<std::int64_t> rest;
  for (auto ai : a) {
    if (d % ai == 0) {
      // geometric factor 1 + u^a + ... + u^{d - 2a}: stays polynomial and nonnegative
      if (!div_binomial(c, ai) || !mul_binomial(c, d - ai)) return false;
    } else {
      rest.push_back(ai);
    }
  }
  for (auto ai : rest) {
    if (!mul_binomial(c, d - ai)) return false;
  }
  for (auto ai : rest) {
    if (!div_binomial(c, ai)) return false;
  }
  return true;
}

std::vector<std::int64_t> divisors_above_one(std::int64_t x) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 1; p * p <= x; ++p) {
    if (x % p == 0) {
      if (p > 1) out.push_back(p);
      if (p != x / p) out.push_back(x / p);
    }
  }
  return out;
}

// Certificate that the fixed-set factor is a polynomial: every cyclotomic
// factor of the denominators appears at least as often in the numerators.
void check_no_pole(const std::vector<std::int64_t>& a, std::int64_t d) {
  std::set<std::int64_t> candidates;
  for (auto ai : a) {
    for (auto m : divisors_above_one(ai)) candidates.insert(m);
  }
  for (auto m : candidates) {
    int den = 0, num = 0;
    for (auto ai : a) {
      den += ai % m == 0;
      num += (d - ai) % m == 0;
    }
    if (den > num) {
      throw DomainError("pole in a Hodge term: cyclotomic factor of order " + std::to_string(m) +
                        " does not cancel (input is not a quasi-smooth Calabi-Yau weight system?)");
    }
  }
}

struct Accumulator {
  std::size_t n;
  std::vector<BigInt> native;  // (n+1)^2, orientation of-mirror
  explicit Accumulator(std::size_t dim) : n(dim), native((dim + 1) * (dim + 1), BigInt(0)) {}
};

// Palindromic series of degree D, stored up to D/2.
template <typename T>
struct HalfSeries {
  std::vector<T> c;
  std::int64_t degree = 0;
  const T& at(std::int64_t k) const { return k < static_cast<std::int64_t>(c.size()) ? c[k] : c[degree - k]; }
};

}  // namespace

HodgeDiamond diamond(const WeightSystem& ws, Orientation orientation, const DiamondBudget& budget) {
  if (!is_calabi_yau(ws)) throw InputError("weights do not sum to the degree: not Calabi-Yau");
  const std::size_t N = ws.size();
  const std::size_t n = N - 2;
  if (N > budget.max_coordinates) throw UnsupportedError("too many coordinates");
  if (!fits_int64(ws.degree()) || ws.degree() > (std::int64_t{1} << 40)) {
    throw UnsupportedError("degree too large for the dense series");
  }
  const std::int64_t d = to_int64(ws.degree());
  if (static_cast<__int128>(d) * static_cast<__int128>(n) > budget.max_series_span) {
    throw UnsupportedError("n*d = " + std::to_string(static_cast<long long>(d) * static_cast<long long>(n)) +
                           " exceeds the series budget");
  }
  std::vector<std::int64_t> a(N), c(N);
  for (std::size_t i = 0; i < N; ++i) {
    a[i] = to_int64(ws.weight(i));
    c[i] = d / std::gcd(d, a[i]);  // l fixes coordinate i iff c_i | l
  }

  Accumulator acc(n);
  auto add = [&](std::int64_t p, std::int64_t q, const BigInt& v) {
    acc.native[static_cast<std::size_t>(p) * (n + 1) + static_cast<std::size_t>(q)] += v;
  };

  std::vector<std::int64_t> fixed_a;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << N); ++mask) {
    std::int64_t step = 1;
    std::int64_t D = 0;
    fixed_a.clear();
    for (std::size_t i = 0; i < N; ++i) {
      if (mask >> i & 1) {
        step = std::lcm(step, c[i]);
        D += d - 2 * a[i];
        fixed_a.push_back(a[i]);
      }
    }
    const std::int64_t span = static_cast<std::int64_t>(n) * d - D;  // X + Y for every l of this mask

    std::optional<HalfSeries<std::int64_t>> small;
    std::optional<HalfSeries<BigInt>> big;
    auto ensure_series = [&] {
      if (small || big) return;
      check_no_pole(fixed_a, d);
      const std::int64_t len = D / 2 + 1;
      HalfSeries<std::int64_t> s;
      s.degree = D;
      s.c.resize(static_cast<std::size_t>(len));
      if (build_series(s.c, fixed_a, d)) {
        small = std::move(s);
      } else {
        HalfSeries<BigInt> b;
        b.degree = D;
        b.c.resize(static_cast<std::size_t>(len));
        build_series(b.c, fixed_a, d);
        big = std::move(b);
      }
    };

    for (std::int64_t l = 0; l < d; l += step) {
      bool exact = true;
      for (std::size_t i = 0; i < N && exact; ++i) {
        if (!(mask >> i & 1) && l % c[i] == 0) exact = false;
      }
      if (!exact) continue;
      std::int64_t X = 0;
      for (std::size_t i = 0; i < N; ++i) {
        if (mask >> i & 1) continue;
        auto t = static_cast<std::int64_t>((static_cast<__int128>(l) * a[i]) % d);
        X += t - a[i];
      }
      const std::int64_t Y = span - X;
      if (mask == 0) {
        if (X % d == 0 && Y % d == 0) add(X / d, Y / d, 1);
        continue;
      }
      ensure_series();
      for (std::int64_t p = 0; p <= static_cast<std::int64_t>(n); ++p) {
        const std::int64_t k = p * d - X;
        if (k < 0 || k > D) continue;
        if ((Y + k) % d != 0) continue;
        const std::int64_t q = (Y + k) / d;
        if (q < 0 || q > static_cast<std::int64_t>(n)) continue;
        if (small) {
          std::int64_t v = small->at(k);
          if (v != 0) add(p, q, BigInt(static_cast<long>(v)));
        } else {
          const BigInt& v = big->at(k);
          if (v != 0) add(p, q, v);
        }
      }
    }
  }

  HodgeDiamond native(n, Orientation::OfMirror);
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t q = 0; q <= n; ++q) {
      const BigInt& v = acc.native[p * (n + 1) + q];
      if (v < 0) throw DomainError("negative Hodge number: input is not quasi-smooth");
      native.at(p, q) = v;
    }
  }
  return orientation == Orientation::OfMirror ? native : native.flipped();
}

BigInt betti_sum(const WeightSystem& ws, const DiamondBudget& budget) {
  if (weights_divide_degree(ws) && ws.size() <= 16) return betti_sum_fast(ws);
  return diamond(ws, Orientation::OfX, budget).total();
}

BigInt euler(const HodgeDiamond& h) {
  BigInt e = 0;
  for (std::size_t p = 0; p <= h.dimension(); ++p) {
    for (std::size_t q = 0; q <= h.dimension(); ++q) {
      if ((p + q) % 2 == 0) {
        e += h.at(p, q);
      } else {
        e -= h.at(p, q);
      }
    }
  }
  return e;
}

BigInt middle_dim(const HodgeDiamond& h) {
  const std::size_t n = h.dimension();
  if (n % 2 == 0) throw InputError("middle cohomology dimension is only defined here for odd n");
  BigInt s = 0;
  for (std::size_t p = 0; p <= n; ++p) s += h.at(p, n - p);
  return s;
}

BigInt middle_dim(const WeightSystem& ws, const DiamondBudget& budget) {
  if (ws.dimension() % 2 == 0) throw InputError("middle cohomology dimension is only defined here for odd n");
  return middle_dim(diamond(ws, Orientation::OfX, budget));
}

std::string render_text(const HodgeDiamond& h) {
  const std::size_t n = h.dimension();
  std::size_t width = 1;
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t q = 0; q <= n; ++q) width = std::max(width, to_string(h.at(p, q)).size());
  }
  if (width % 2 == 0) ++width;
  auto centered = [&](const std::string& s) {
    std::size_t pad = width - s.size();
    return std::string(pad / 2, ' ') + s + std::string(pad - pad / 2, ' ');
  };
  std::ostringstream out;
  for (std::size_t r = 0; r <= 2 * n; ++r) {
    std::size_t hi = std::min(r, n), lo = r > n ? r - n : 0;
    std::size_t count = hi - lo + 1;
    std::string line(((n + 1) - count) * width, ' ');
    for (std::size_t p = hi + 1; p-- > lo;) {
      line += centered(to_string(h.at(p, r - p)));
      if (p > lo) line += std::string(width, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const HodgeDiamond& h) {
  nlohmann::json j;
  j["dimension"] = h.dimension();
  j["orientation"] = to_string(h.orientation());
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t p = 0; p <= h.dimension(); ++p) {
    for (std::size_t q = 0; q <= h.dimension(); ++q) {
      entries.push_back(nlohmann::json::array({p, q, to_string(h.at(p, q))}));
    }
  }
  j["entries"] = entries;
  return j;
}

}  // namespace scy
