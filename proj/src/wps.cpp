#include "sylvester_cy/wps.hpp"

#include <algorithm>
#include <sstream>

namespace scy {

WeightSystem::WeightSystem(std::vector<BigInt> weights, BigInt degree)
    : weights_(std::move(weights)), degree_(std::move(degree)) {
  if (weights_.size() < 3) throw InputError("a weight system needs at least three weights");
  for (const auto& a : weights_) {
    if (a < 1) throw InputError("weights must be positive, got " + to_string(a));
  }
  if (degree_ < 1) throw InputError("degree must be positive");
  if (degree_ < *std::max_element(weights_.begin(), weights_.end())) {
    throw InputError("degree " + to_string(degree_) + " is smaller than the largest weight");
  }
}

Rational WeightSystem::charge(std::size_t i) const { return make_rational(weight(i), degree_); }

bool well_formed(const WeightSystem& ws) {
  const auto& w = ws.weights();
  const std::size_t n = w.size();
  // prefix[i] = gcd(w_0..w_{i-1}), suffix[i] = gcd(w_i..w_{n-1})
  std::vector<BigInt> prefix(n + 1, 0), suffix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = gcd(prefix[i], w[i]);
  for (std::size_t i = n; i-- > 0;) suffix[i] = gcd(suffix[i + 1], w[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (gcd(prefix[i], suffix[i + 1]) != 1) return false;
  }
  return true;
}

bool is_calabi_yau(const WeightSystem& ws) {
  BigInt sum = 0;
  for (const auto& a : ws.weights()) sum += a;
  return sum == ws.degree();
}

bool weights_divide_degree(const WeightSystem& ws) {
  return std::all_of(ws.weights().begin(), ws.weights().end(), [&](const BigInt& a) {
    return mpz_divisible_p(ws.degree().get_mpz_t(), a.get_mpz_t()) != 0;
  });
}

Rational theta(const WeightSystem& ws, std::size_t i, const BigInt& l) {
  if (i >= ws.size()) throw InputError("coordinate index out of range");
  BigInt r;
  BigInt prod = l * ws.weight(i);
  mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), ws.degree().get_mpz_t());
  return make_rational(r, ws.degree());
}

BigInt weighted_degree(const Monomial& m, const WeightSystem& ws) {
  if (m.size() != ws.size()) throw InputError("monomial arity does not match the weight system");
  BigInt deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * ws.weight(i);
  return deg;
}

DiagonalAction::DiagonalAction(BigInt order, std::vector<BigInt> exponents)
    : order_(std::move(order)), exponents_(std::move(exponents)) {
  if (order_ < 1) throw InputError("group order must be positive");
  for (auto& e : exponents_) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), order_.get_mpz_t());
    e = r;
  }
}

bool action_preserves(const Polynomial& polynomial, const DiagonalAction& action) {
  if (polynomial.empty()) throw InputError("empty polynomial");
  std::optional<BigInt> character;
  for (const auto& mono : polynomial) {
    if (mono.size() != action.exponents().size()) {
      throw InputError("monomial arity does not match the action");
    }
    BigInt c = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) c += mono[i] * action.exponents()[i];
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), action.order().get_mpz_t());
    if (!character) {
      character = r;
    } else if (*character != r) {
      return false;
    }
  }
  return true;
}

namespace {
std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

std::optional<WeightSystem> parse_weight_system_line(const std::string& line) {
  std::string body = trim(line);
  if (body.empty() || body[0] == '#') return std::nullopt;
  auto colon = body.find(':');
  if (colon == std::string::npos) throw InputError("expected 'd : a_0,a_1,...', got '" + body + "'");
  BigInt degree = parse_bigint(trim(body.substr(0, colon)));
  std::vector<BigInt> weights;
  std::stringstream rest(body.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) weights.push_back(parse_bigint(trim(item)));
  return WeightSystem(std::move(weights), std::move(degree));
}

std::string format_weight_system(const WeightSystem& ws) {
  std::string out = to_string(ws.degree()) + " :";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    out += (i == 0 ? " " : ",") + to_string(ws.weight(i));
  }
  return out;
}

}  // namespace scy
