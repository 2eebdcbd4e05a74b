// sylvester-cy: command-line front end.
//
//   sylvester-cy hodge --weights 42,28,12,1,1 --degree 84 [--orientation of-X] [--format text|json]
//   sylvester-cy family <x1|x2|x3|klt-pair|mld-pair|terminal-index|loop> --dim N
//   sylvester-cy verify <faithfulness|counting|figures> [--max-dim 30] [--trials 200] [--seed 7]
//   sylvester-cy sweep --input FILE [--output FILE] [--jobs K] [--budget B] [--with-diamond]
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 domain or
// internal error. SYLVESTER_CY_THREADS overrides the sweep parallelism.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "suites.hpp"
#include "sylvester_cy/families.hpp"
#include "sylvester_cy/hodge.hpp"
#include "sylvester_cy/wps.hpp"

using nlohmann::json;
using namespace scy;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_bigint(item));
  return out;
}

DiamondBudget make_budget(long long budget) {
  DiamondBudget b;
  if (budget > 0) b.max_series_span = budget;
  return b;
}

// --- hodge -----------------------------------------------------------------

struct HodgeArgs {
  std::string weights, degree, orientation = "of-X", format = "text";
  long long budget = 0;
};

int run_hodge(const HodgeArgs& a) {
  WeightSystem ws(parse_list(a.weights), parse_bigint(a.degree));
  if (!well_formed(ws)) throw InputError("weight system is not well-formed");
  const HodgeDiamond h = diamond(ws, parse_orientation(a.orientation), make_budget(a.budget));
  if (a.format == "json") {
    json j = to_json(h);
    j["weights"] = format_weight_system(ws);
    j["betti_sum"] = to_string(h.total());
    j["euler"] = to_string(euler(h));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << render_text(h);
  }
  return 0;
}

// --- family ----------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  std::size_t dim = 1;
  std::string format = "json";
};

int run_family(const FamilyArgs& a) {
  json j;
  if (a.name == "x1" || a.name == "x2" || a.name == "x3") {
    const int k = a.name[1] - '0';
    const FamilyMember f = family_x(k, a.dim);
    j = to_json(f);
    j["well_formed"] = well_formed(f.weights);
    j["calabi_yau"] = is_calabi_yau(f.weights);
    j["betti_sum_closed"] = to_string(family_betti_closed(k, a.dim));
    j["euler_closed"] = to_string(family_euler_closed(k, a.dim));
    if (a.dim % 2 == 1) j["middle_dim_closed"] = to_string(family_middle_dim_closed(k, a.dim));
  } else if (a.name == "klt-pair") {
    const PairDescription p = klt_pair_large_index(a.dim);
    j = to_json(p);
    j["cy_balance"] = to_string(cy_balance(p));
    if (a.dim >= 2) j["stacky_fan"] = stacky_fan_check(a.dim);
    j["group_action_preserves"] = action_preserves(family_x(1, a.dim).potential.monomials(), x1_group_action(a.dim));
  } else if (a.name == "mld-pair") {
    const PairDescription p = mld_pair(a.dim);
    j = to_json(p);
    j["cy_balance"] = to_string(cy_balance(p));
  } else if (a.name == "terminal-index") {
    j = {{"n", a.dim}, {"index", to_string(terminal_index(a.dim))}, {"conjecture", terminal_conjecture()}};
  } else if (a.name == "loop") {
    const LoopFamilyRecord rec = loop_family(a.dim, true);
    j = to_json(rec);
    if (!*rec.checks.faithful) {
      std::cout << j.dump() << '\n';
      return kExitVerify;
    }
  } else {
    throw InputError("unknown family '" + a.name + "'");
  }
  if (a.format == "text") {
    for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
  return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::size_t max_dim = 30;
  std::size_t trials = 200;
  std::uint64_t seed = 7;
};

int run_verify(const VerifyArgs& a) {
  auto print = [](const suites::Check& c) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail << std::endl;
  };
  std::vector<suites::Check> checks;
  if (a.suite == "faithfulness") {
    checks = suites::verify_faithfulness(a.max_dim, print);
  } else if (a.suite == "counting") {
    checks = suites::verify_counting(a.trials, a.seed);
    for (const auto& c : checks) print(c);
  } else if (a.suite == "figures") {
    checks = suites::verify_figures();
    for (const auto& c : checks) print(c);
  } else {
    throw InputError("unknown suite '" + a.suite + "'");
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; });
  std::cout << (failed == 0 ? "PASS" : "FAIL") << ": " << checks.size() - failed << "/" << checks.size() << " checks\n";
  if (failed) {
    std::cerr << "failed checks:\n";
    for (const auto& c : checks) {
      if (!c.pass) std::cerr << "  " << c.name << "  " << c.detail << '\n';
    }
    return kExitVerify;
  }
  return 0;
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string input, output;
  unsigned jobs = 0;
  long long budget = 0;
  bool with_diamond = false;
};

struct SweepRecord {
  std::size_t line = 0;
  std::string text;
  std::optional<WeightSystem> ws;
  std::string status = "error";
  std::optional<BigInt> betti, euler;
  std::optional<HodgeDiamond> diamond;
  std::string message;
};

void process(SweepRecord& rec, const DiamondBudget& budget, bool keep_diamond) {
  try {
    rec.ws = parse_weight_system_line(rec.text);
    if (!rec.ws) throw InputError("empty record");
    if (!is_calabi_yau(*rec.ws)) {
      rec.status = "not-CY";
      return;
    }
    if (!well_formed(*rec.ws)) {
      rec.status = "not-well-formed";
      return;
    }
    HodgeDiamond h = diamond(*rec.ws, Orientation::OfX, budget);
    rec.betti = h.total();
    rec.euler = euler(h);
    if (keep_diamond) rec.diamond = std::move(h);
    rec.status = "ok";
  } catch (const UnsupportedError& e) {
    rec.status = "unsupported";
    rec.message = e.what();
    // the fixed-set count needs no series, so the Betti sum may still be known
    try {
      if (rec.ws && weights_divide_degree(*rec.ws)) rec.betti = betti_sum_fast(*rec.ws);
    } catch (const std::exception&) {
    }
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.message = e.what();
  }
}

json record_json(const SweepRecord& r) {
  json j = {{"line", r.line}, {"status", r.status}};
  if (r.ws) {
    std::vector<std::string> w;
    for (const auto& x : r.ws->weights()) w.push_back(to_string(x));
    j["weights"] = w;
    j["degree"] = to_string(r.ws->degree());
  } else {
    j["input"] = r.text;
  }
  if (r.betti) j["betti_sum"] = to_string(*r.betti);
  if (r.euler) j["euler"] = to_string(*r.euler);
  if (r.diamond) j["diamond"] = to_json(*r.diamond);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

unsigned sweep_threads(unsigned requested) {
  if (const char* env = std::getenv("SYLVESTER_CY_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SYLVESTER_CY_THREADS must be a positive integer, got '") + env + "'");
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_sweep(const SweepArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw InputError("cannot read " + a.input);
  std::vector<SweepRecord> records;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    SweepRecord r;
    r.line = no;
    r.text = line;
    records.push_back(std::move(r));
  }

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw InputError("cannot write " + a.output);
  }
  std::ostream& out = a.output.empty() ? std::cout : file;

  // Bounded pool: workers claim records by index; the main thread emits them
  // in input order as soon as each one is finished.
  const DiamondBudget budget = make_budget(a.budget);
  const unsigned nthreads = std::min<std::size_t>(sweep_threads(a.jobs), std::max<std::size_t>(records.size(), 1));
  std::vector<char> done(records.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < records.size();) {
        process(records[i], budget, a.with_diamond);
        {
          std::lock_guard<std::mutex> lock(mu);
          done[i] = 1;
        }
        cv.notify_all();
      }
    });
  }

  std::optional<std::size_t> max_betti, min_euler, max_euler;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return done[i] != 0; });
    }
    const SweepRecord& r = records[i];
    out << record_json(r).dump() << '\n';
    if (r.status == "ok") {
      ++ok;
      if (!max_betti || *r.betti > *records[*max_betti].betti) max_betti = i;
      if (!min_euler || *r.euler < *records[*min_euler].euler) min_euler = i;
      if (!max_euler || *r.euler > *records[*max_euler].euler) max_euler = i;
    }
  }
  for (auto& th : pool) th.join();

  if (!records.empty()) {
    auto row = [&](const std::optional<std::size_t>& i, bool betti) -> json {
      if (!i) return nullptr;
      const auto& r = records[*i];
      return {{"line", r.line}, {"value", to_string(betti ? *r.betti : *r.euler)}};
    };
    json footer = {{"summary",
                    {{"records", records.size()},
                     {"ok", ok},
                     {"max_betti_sum", row(max_betti, true)},
                     {"min_euler", row(min_euler, false)},
                     {"max_euler", row(max_euler, false)}}}};
    out << footer.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal Calabi-Yau hypersurfaces from Sylvester's sequence"};
  app.require_subcommand(1);

  HodgeArgs hodge;
  auto* hc = app.add_subcommand("hodge", "orbifold Hodge diamond of a Calabi-Yau weight system");
  hc->add_option("--weights", hodge.weights, "comma-separated weights")->required();
  hc->add_option("--degree", hodge.degree, "degree d")->required();
  hc->add_option("--orientation", hodge.orientation, "of-X (default) or of-mirror");
  hc->add_option("--format", hodge.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  hc->add_option("--budget", hodge.budget, "largest n*d the series may span");

  FamilyArgs family;
  auto* fc = app.add_subcommand("family", "construct a named family member and its checks");
  fc->add_option("name", family.name, "x1, x2, x3, klt-pair, mld-pair, terminal-index or loop")->required();
  fc->add_option("--dim", family.dim, "dimension n")->required();
  fc->add_option("--format", family.format, "json or text")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* vc = app.add_subcommand("verify", "run a verification suite");
  vc->add_option("suite", verify.suite, "faithfulness, counting or figures")->required();
  vc->add_option("--max-dim", verify.max_dim, "largest loop family dimension");
  vc->add_option("--trials", verify.trials, "random counting instances");
  vc->add_option("--seed", verify.seed, "random seed");

  SweepArgs sweep;
  auto* sc = app.add_subcommand("sweep", "Hodge data for every record of a weight-system file");
  sc->add_option("--input", sweep.input, "input file, one 'd : a0,a1,...' per line")->required();
  sc->add_option("--output", sweep.output, "output file (default stdout)");
  sc->add_option("--jobs", sweep.jobs, "worker threads");
  sc->add_option("--budget", sweep.budget, "largest n*d a diamond may span");
  sc->add_flag("--with-diamond", sweep.with_diamond, "include each diamond in the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*hc) return run_hodge(hodge);
    if (*fc) return run_family(family);
    if (*vc) return run_verify(verify);
    if (*sc) return run_sweep(sweep);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
