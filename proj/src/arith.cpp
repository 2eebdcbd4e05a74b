#include "sylvester_cy/arith.hpp"

#include <limits>
#include <memory>
#include <mutex>

namespace scy {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw InputError("expected an integer, got '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw InputError("expected an integer, got '" + text + "'");
  }
  BigInt x;
  x.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return x;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x) { return x.get_str(10); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt gcd_of(std::span<const BigInt> xs) {
  BigInt g = 0;
  for (const auto& x : xs) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

BigInt lcm_of(std::span<const BigInt> xs) {
  BigInt l = 1;
  for (const auto& x : xs) l = lcm(l, x);
  return l;
}

namespace {
// Balanced product tree keeps the multiplications roughly equal-sized, which
// matters once the factors reach millions of bits.
BigInt product_range(std::span<const BigInt> xs) {
  if (xs.empty()) return 1;
  if (xs.size() == 1) return xs[0];
  auto half = xs.size() / 2;
  BigInt left = product_range(xs.first(half));
  BigInt right = product_range(xs.subspan(half));
  return left * right;
}
}  // namespace

BigInt product_of(std::span<const BigInt> xs) { return product_range(xs); }

BigInt divide_exact(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0) throw DomainError(std::string(what) + ": division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw DomainError(std::string(what) + ": division is not exact");
  return q;
}

bool fits_int64(const BigInt& x) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return x >= lo && x <= hi;
}

std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw UnsupportedError("integer " + to_string(x) + " exceeds 64 bits");
  return std::stoll(x.get_str());
}

namespace {
std::mutex g_sylvester_mutex;
std::size_t g_sylvester_cap = kDefaultSylvesterCap;
// Deque-like storage: elements are never moved once built so references
// handed out stay valid.
std::vector<std::unique_ptr<BigInt>> g_sylvester{};
}  // namespace

void set_sylvester_cap(std::size_t cap) {
  std::lock_guard lock(g_sylvester_mutex);
  g_sylvester_cap = cap;
}

std::size_t sylvester_cap() {
  std::lock_guard lock(g_sylvester_mutex);
  return g_sylvester_cap;
}

const BigInt& sylvester(std::size_t n) {
  std::lock_guard lock(g_sylvester_mutex);
  if (n > g_sylvester_cap) {
    throw InputError("sylvester index " + std::to_string(n) + " exceeds memo cap " +
                     std::to_string(g_sylvester_cap));
  }
  if (g_sylvester.empty()) g_sylvester.push_back(std::make_unique<BigInt>(2));
  while (g_sylvester.size() <= n) {
    const BigInt& prev = *g_sylvester.back();
    g_sylvester.push_back(std::make_unique<BigInt>(prev * (prev - 1) + 1));
  }
  return *g_sylvester[n];
}

Rational sylvester_deficit(std::size_t n) {
  Rational r = 1;
  for (std::size_t i = 0; i < n; ++i) r -= Rational(BigInt(1), sylvester(i));
  r.canonicalize();
  return r;
}

BigInt sylvester_shifted_product(std::size_t k) {
  BigInt p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= sylvester(i) - 1;
  return p;
}

}  // namespace scy
