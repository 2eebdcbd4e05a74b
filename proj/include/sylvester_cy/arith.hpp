#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace scy {

using BigInt = mpz_class;
using Rational = mpq_class;

// Error taxonomy shared by every module. The CLI maps these onto exit codes.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an input is valid but lies outside what the computation can
// certify (a pole in a Hodge term, a failed consistency identity, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when a computation would exceed a configured budget.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical rational num/den; throws InputError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt parse_bigint(const std::string& text);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd_of(std::span<const BigInt> xs);
BigInt lcm_of(std::span<const BigInt> xs);
BigInt product_of(std::span<const BigInt> xs);

/// Exact quotient a/b; throws DomainError if b does not divide a.
BigInt divide_exact(const BigInt& a, const BigInt& b, const char* what);

bool fits_int64(const BigInt& x);
std::int64_t to_int64(const BigInt& x);

// Sylvester's sequence s_0 = 2, s_n = s_{n-1}(s_{n-1}-1) + 1.
//
// Terms are memoized lazily up to the cap; s_n has roughly 2^(n-1) bits, so
// terms are only ever built on demand.
constexpr std::size_t kDefaultSylvesterCap = 34;

void set_sylvester_cap(std::size_t cap);
std::size_t sylvester_cap();

/// s_n. Throws InputError when n exceeds the memo cap.
const BigInt& sylvester(std::size_t n);

/// 1 - sum_{i<n} 1/s_i, which equals 1/(s_n - 1).
Rational sylvester_deficit(std::size_t n);

/// (s_0 - 1)(s_1 - 1)...(s_{k-1} - 1); twice this is the extremal Betti sum.
BigInt sylvester_shifted_product(std::size_t k);

}  // namespace scy
