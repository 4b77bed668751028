#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balanced/balanced.hpp"

namespace balanced::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kVerifyCap = 300;
constexpr std::uint64_t kOracleGridCap = 12;

struct Settings {
  std::string format = "text";
  std::string alphabet = "AB";
  bool canonical = false;
  bool verbose = false;

  bool machine() const { return format == "machine"; }
  Alphabet letters() const { return alphabet == "01" ? Alphabet::ZeroOne : Alphabet::AB; }
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<WindowReport>& profile) {
  std::string out;
  for (const auto& w : profile) {
    if (!out.empty()) out += ' ';
    out += std::to_string(w.weight);
  }
  return out;
}

json weights(const std::vector<WindowReport>& profile) {
  json out = json::array();
  for (const auto& w : profile) out.push_back(w.weight);
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values, const char* sep = ", ") {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

Word presented(const Word& w, const Settings& settings) {
  return settings.canonical ? canonical_rotation(w).word : w;
}

int cmd_plan(std::uint64_t n, std::uint64_t k, std::uint64_t s, std::uint64_t t,
             const Settings& settings, std::ostream& out) {
  const AdmissibilityQuery query = [&] {
    try {
      return AdmissibilityQuery(n, k, s, t);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const std::uint64_t nt = n * t;
  const std::uint64_t ks = k * s;
  const auto arrangement = construct_admissible(query);

  json record{{"command", "plan"}, {"n", n}, {"k", k}, {"s", s}, {"t", t}, {"nt", nt}, {"ks", ks}};
  if (!arrangement) {
    record["verdict"] = "impossible";
    if (settings.machine())
      out << record.dump() << '\n';
    else
      out << "IMPOSSIBLE: nt = " << nt << " > ks = " << ks << '\n';
    return kNegative;
  }

  const Configuration shown(presented(arrangement->spots(), settings));
  const auto profile = window_weight_profile(shown, s);
  const AdmissibilityVerdict verdict = is_admissible(shown, s, t);
  if (!verdict.admissible) throw std::logic_error("constructed arrangement failed its own check");

  record["verdict"] = "admissible";
  record["word"] = shown.spots().str(settings.letters());
  record["profile"] = weights(profile);
  record["witness_start"] = verdict.min_window.start;
  record["witness_weight"] = verdict.min_window.weight;
  if (settings.machine()) {
    out << record.dump() << '\n';
    return kPass;
  }
  if (t == 0)
    out << "ADMISSIBLE (t = 0 holds trivially): nt = 0 <= ks = " << ks << '\n';
  else
    out << "ADMISSIBLE: nt = " << nt << " <= ks = " << ks << '\n';
  out << "arrangement: " << shown.spots().str(settings.letters()) << '\n';
  out << "window weights (s = " << s << "): " << join(profile) << '\n';
  out << "min window weight: " << verdict.min_window.weight << " (start "
      << verdict.min_window.start << ")\n";
  return kPass;
}

int cmd_generate(std::uint64_t n, std::uint64_t k, const std::string& method,
                 const Settings& settings, std::ostream& out) {
  if (k == 0 || k >= n)
    throw InputError("need 1 <= k < n (got n = " + std::to_string(n) + ", k = " +
                     std::to_string(k) + ")");
  json record{{"command", "generate"}, {"n", n}, {"k", k}, {"method", method}};
  std::vector<std::string> notes;
  Word word;

  if (method == "mechanical") {
    word = mechanical_word(Slope(k, n));
  } else if (method == "euclid") {
    const Arrangement run = arrange_traced(n, k);
    word = run.configuration.spots();
    record["quotients"] = run.trace.quotients();
    record["remainders"] = run.trace.remainders();
    record["gcd"] = run.trace.gcd();
    notes.push_back("quotients: " + join_numbers(run.trace.quotients()));
    notes.push_back("remainders: " + join_numbers(run.trace.remainders()));
    notes.push_back("terminal index: " + std::to_string(run.trace.terminal_index()) +
                    ", gcd " + std::to_string(run.trace.gcd()));
    json stages = json::array();
    for (const auto& stage : run.stages) {
      notes.push_back(stage.label + ": " + stage.symbols.str());
      stages.push_back({{"stage", stage.label}, {"symbols", stage.symbols.str()}});
    }
    if (settings.verbose) record["stages"] = stages;
  } else if (method == "smith") {
    if (const auto g = std::gcd(n, k); g != 1)
      throw InputError("n and k not coprime (gcd " + std::to_string(g) + ")");
    const auto expansion = cf_expansion(n, k);
    const auto decremented = expansion.with_first_decremented();
    const auto ladder = smith_ladder(std::span<const std::uint64_t>(decremented));
    word = ladder.back();
    record["expansion"] = expansion.quotients();
    notes.push_back("expansion: [" + join_numbers(expansion.quotients()) + "], used [" +
                    join_numbers(decremented) + "]");
    json rungs = json::array();
    for (std::size_t j = 0; j < ladder.size(); ++j) {
      notes.push_back("S_" + std::to_string(j + 1) + " = " + ladder[j].str(settings.letters()));
      rungs.push_back(ladder[j].str(settings.letters()));
    }
    if (settings.verbose) record["ladder"] = rungs;
  } else {
    throw InputError("unknown method '" + method + "'");
  }

  const std::string rendered = presented(word, settings).str(settings.letters());
  record["word"] = rendered;
  if (settings.machine()) {
    out << record.dump() << '\n';
    return kPass;
  }
  if (settings.verbose)
    for (const auto& line : notes) out << line << '\n';
  out << rendered << '\n';
  return kPass;
}

int cmd_check(const std::string& text, std::uint64_t s, std::uint64_t t, const Settings& settings,
              std::ostream& out) {
  const Word word = [&] {
    try {
      return Word::parse(text, settings.letters());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  if (word.empty()) throw InputError("empty word");
  if (s == 0 || s > word.size())
    throw InputError("s = " + std::to_string(s) + " outside [1, " + std::to_string(word.size()) +
                     "]");
  const Configuration c(word);
  const auto profile = window_weight_profile(c, s);
  const AdmissibilityVerdict verdict = is_admissible(c, s, t);

  json record{{"command", "check"},
              {"n", c.n()},
              {"k", c.k()},
              {"s", s},
              {"t", t},
              {"word", word.str(settings.letters())},
              {"verdict", verdict.admissible ? "admissible" : "inadmissible"},
              {"witness_start", verdict.min_window.start},
              {"witness_weight", verdict.min_window.weight},
              {"profile", weights(profile)}};
  if (settings.machine()) {
    out << record.dump() << '\n';
  } else {
    out << (verdict.admissible ? "ADMISSIBLE" : "NOT ADMISSIBLE") << ": min window weight "
        << verdict.min_window.weight << " at start " << verdict.min_window.start << " (t = " << t
        << ")\n";
    if (settings.verbose) out << "window weights (s = " << s << "): " << join(profile) << '\n';
  }
  return verdict.admissible ? kPass : kNegative;
}

int cmd_verify(std::uint64_t n_max, const Settings& settings, std::ostream& out) {
  if (n_max < 2 || n_max > kVerifyCap)
    throw InputError("n_max must lie in [2, " + std::to_string(kVerifyCap) + "] (got " +
                     std::to_string(n_max) + ")");
  const SweepResult equivalence = equivalence_sweep(n_max);
  const SweepResult grid = oracle_grid_sweep(std::min(n_max, kOracleGridCap));
  const SweepResult balance = balance_sweep(n_max);
  const bool ok = equivalence.ok() && grid.ok() && balance.ok();

  if (settings.machine()) {
    json record{{"command", "verify"},
                {"n_max", n_max},
                {"verdict", ok ? "pass" : "fail"},
                {"equivalence_cases", equivalence.cases},
                {"oracle_cases", grid.cases},
                {"balance_cases", balance.cases}};
    json failures = json::array();
    for (const auto* r : {&equivalence, &grid, &balance})
      if (r->counterexample) failures.push_back(*r->counterexample);
    record["counterexamples"] = failures;
    out << record.dump() << '\n';
    return ok ? kPass : kNegative;
  }

  out << "equivalence: " << equivalence.cases << " coprime pairs "
      << (equivalence.ok() ? "OK" : "FAILED") << "; oracle grid: "
      << (grid.ok() ? "all cells OK" : "FAILED") << " (" << grid.cases << " cells); balance: "
      << (balance.ok() ? "OK" : "FAILED") << " (" << balance.cases << " cases)\n";
  for (const auto* r : {&equivalence, &grid, &balance})
    if (r->counterexample) out << "counterexample: " << *r->counterexample << '\n';
  return ok ? kPass : kNegative;
}

int cmd_discrepancy(std::uint64_t n, std::uint64_t k, std::uint64_t m, const Settings& settings,
                    std::ostream& out) {
  if (k == 0 || k >= n)
    throw InputError("need 1 <= k < n (got n = " + std::to_string(n) + ", k = " +
                     std::to_string(k) + ")");
  if (m == 0 || m > n)
    throw InputError("m = " + std::to_string(m) + " outside [1, " + std::to_string(n) + "]");
  const Configuration c(mechanical_word(Slope(k, n)));
  const std::size_t value = discrepancy(c, m);
  const std::int64_t bound = discrepancy_bound(n, k, m);
  const bool applies = discrepancy_bound_applies(n, k);
  const bool within = static_cast<std::int64_t>(value) <= bound;

  if (settings.machine()) {
    json record{{"command", "discrepancy"},
                {"n", n},
                {"k", k},
                {"m", m},
                {"word", presented(c.spots(), settings).str(settings.letters())},
                {"discrepancy", value},
                {"bound", bound},
                {"bound_applies", applies},
                {"within_bound", within}};
    out << record.dump() << '\n';
  } else {
    out << "discrepancy: " << value << '\n';
    out << "bound: m - 2*floor(mk/n) = " << bound;
    if (applies)
      out << (within ? " (holds)" : " (VIOLATED)") << '\n';
    else
      out << " (bound not asserted for k > n/2)\n";
  }
  return applies && !within ? kNegative : kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced circular arrangements of two letters", "balanced"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--alphabet", settings.alphabet, "Letter rendering (AB or 01, with 1 = A)")
      ->check(CLI::IsMember({"AB", "01"}));
  app.add_flag("--canonical", settings.canonical, "Print the least rotation of each word");
  app.add_flag("--verbose", settings.verbose, "Print intermediate stages and full profiles");

  std::uint64_t n = 0, k = 0, s = 0, t = 0, m = 0, n_max = 50;
  std::string method = "mechanical";
  std::string word;

  auto* plan = app.add_subcommand("plan", "Decide whether a t-admissible arrangement exists");
  plan->add_option("n", n, "Spots on the circle")->required();
  plan->add_option("k", k, "Letters A")->required();
  plan->add_option("s", s, "Window length")->required();
  plan->add_option("t", t, "Required letters A per window")->required();

  auto* generate = app.add_subcommand("generate", "Build a balanced word with k letters A");
  generate->add_option("n", n, "Word length")->required();
  generate->add_option("k", k, "Letters A")->required();
  generate->add_option("--method", method, "mechanical, euclid or smith")
      ->check(CLI::IsMember({"mechanical", "euclid", "smith"}));

  auto* check = app.add_subcommand("check", "Check a circular word for t-admissibility");
  check->add_option("word", word, "Word over the chosen alphabet")->required();
  check->add_option("s", s, "Window length")->required();
  check->add_option("t", t, "Required letters A per window")->required();

  auto* verify = app.add_subcommand("verify", "Run the exhaustive cross-checks up to n_max");
  auto* n_max_positional = verify->add_option("n_max", n_max, "Largest circle size");
  verify->add_option("--n-max", n_max, "Largest circle size (default 50)")->excludes(n_max_positional);

  auto* disc = app.add_subcommand("discrepancy", "Discrepancy of the mechanical word");
  disc->add_option("n", n, "Word length")->required();
  disc->add_option("k", k, "Letters A")->required();
  disc->add_option("m", m, "Window length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (plan->parsed()) return cmd_plan(n, k, s, t, settings, out);
    if (generate->parsed()) return cmd_generate(n, k, method, settings, out);
    if (check->parsed()) return cmd_check(word, s, t, settings, out);
    if (verify->parsed()) return cmd_verify(n_max, settings, out);
    if (disc->parsed()) return cmd_discrepancy(n, k, m, settings, out);
  } catch (const InputError& e) {
    if (settings.machine())
      out << json{{"command", app.get_subcommands().front()->get_name()}, {"error", e.what()}}.dump()
          << '\n';
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace balanced::cli
