#include "suites.hpp"

#include <random>
#include <sstream>

namespace scy::suites {

std::vector<CountingInstance> counting_instances(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, 4), entry_dist(2, 40), mult_dist(1, 6);
  std::vector<CountingInstance> out;
  while (out.size() < trials) {
    CountingInstance inst;
    const int want = size_dist(rng);
    BigInt l = 1;
    for (int attempt = 0; attempt < 50 && static_cast<int>(inst.c.size()) < want; ++attempt) {
      BigInt c = entry_dist(rng);
      if (gcd(c, l) != 1 || l * c > 200000) continue;
      l *= c;
      inst.c.push_back(c);
    }
    BigInt d = l * mult_dist(rng);
    if (d > 200000) d = l;
    inst.d = d;
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Check> verify_counting(std::size_t trials, std::uint64_t seed) {
  std::vector<Check> out;
  for (const auto& inst : counting_instances(trials, seed)) {
    std::ostringstream name;
    name << "counting C={";
    for (std::size_t i = 0; i < inst.c.size(); ++i) name << (i ? "," : "") << inst.c[i];
    name << "} d=" << inst.d;
    const BigInt v = counting_sum(inst.c, inst.d);
    out.push_back({name.str(), v == 0, "sum = " + to_string(v)});
  }
  return out;
}

HodgeDiamond golden_diamond(int k, std::size_t n) {
  HodgeDiamond h(n, Orientation::OfX);
  h.at(0, 0) = h.at(n, n) = h.at(n, 0) = h.at(0, n) = 1;
  auto set_sym = [&](std::size_t p, std::size_t q, long v) {
    h.at(p, q) = h.at(q, p) = h.at(n - p, n - q) = h.at(n - q, n - p) = v;
  };
  if (n == 3) {
    const long h11[] = {11, 251, 491}, h21[] = {491, 251, 11};
    set_sym(1, 1, h11[k - 1]);
    set_sym(2, 1, h21[k - 1]);
    return h;
  }
  if (n == 4) {
    const long h11[] = {252, 151700, 303148}, h31[] = {303148, 151700, 252};
    set_sym(1, 1, h11[k - 1]);
    set_sym(3, 1, h31[k - 1]);
    h.at(2, 2) = 1213644;
    return h;
  }
  throw InputError("no published diamond in dimension " + std::to_string(n));
}

std::vector<Check> verify_figures() {
  std::vector<Check> out;
  for (std::size_t n : {3u, 4u}) {
    for (int k = 1; k <= 3; ++k) {
      const FamilyMember f = family_x(k, n);
      const HodgeDiamond got = diamond(f.weights);
      const HodgeDiamond want = golden_diamond(k, n);
      std::ostringstream detail;
      detail << "h11=" << got.at(1, 1) << " h" << n - 1 << "1=" << got.at(n - 1, 1);
      if (n == 4) detail << " h22=" << got.at(2, 2);
      out.push_back({"figure X_" + std::to_string(k) + "^(" + std::to_string(n) + ")", got == want, detail.str()});
    }
  }
  return out;
}

std::vector<Check> verify_faithfulness(std::size_t max_dim, const std::function<void(const Check&)>& progress) {
  if (max_dim < 2) throw InputError("faithfulness suite needs --max-dim >= 2");
  std::vector<Check> out;
  for (std::size_t n = 2; n <= max_dim; ++n) {
    const FaithfulnessRow row = scy::verify_faithfulness(n);
    std::ostringstream detail;
    const std::size_t digits = mpz_sizeinbase(row.m.get_mpz_t(), 10);
    if (digits <= 30) {
      detail << "m=" << row.m;
    } else {
      detail << "m has ~" << digits << " digits";
    }
    detail << " (" << row.seconds << " s)";
    out.push_back({"faithful n=" + std::to_string(n), row.faithful, detail.str()});
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace scy::suites
