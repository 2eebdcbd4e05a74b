#pragma once

// Verification suites shared by the command-line tool and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sylvester_cy/families.hpp"
#include "sylvester_cy/hodge.hpp"

namespace scy::suites {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CountingInstance {
  std::vector<BigInt> c;
  BigInt d;
};

/// Random pairwise-coprime sets C (entries 2..40, up to four of them) and a
/// multiple d of every entry, capped at 200000. Deterministic in the seed.
std::vector<CountingInstance> counting_instances(std::size_t trials, std::uint64_t seed);

/// counting_sum(C, d) == 0 for every random instance.
std::vector<Check> verify_counting(std::size_t trials, std::uint64_t seed);

/// The six published diamonds of X_1, X_2, X_3 in dimensions 3 and 4.
HodgeDiamond golden_diamond(int k, std::size_t n);
std::vector<Check> verify_figures();

/// Loop family faithfulness for n = 2..max_dim; one check per dimension.
/// The callback (optional) sees each row as soon as it is computed.
std::vector<Check> verify_faithfulness(std::size_t max_dim,
                                       const std::function<void(const Check&)>& progress = {});

}  // namespace scy::suites
