#include "invext/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "invext/forcing.hpp"
#include "invext/scenarios.hpp"

namespace invext {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool resolve_strong(StrongMode mode, const Scenario& s) {
  switch (mode) {
    case StrongMode::off: return false;
    case StrongMode::automatic: return strong_mode_admissible(s);
    case StrongMode::on:
      if (!strong_mode_admissible(s))
        throw UsageError("--strong on requires a scenario declared commutative with no witnessed violation");
      return true;
  }
  return false;
}

void fill_closure(RunReport& r, const Scenario& s) {
  const auto base = seed(s);
  const auto closed = saturate(base, s, r.strong);
  r.seed_facts = facts_of(base);
  r.closure_facts = facts_of(closed);
  r.conflict = conflict_witness(closed);
  r.consistent = !r.conflict.has_value();
}

std::string pair_text(const Scenario& s, ElementId a, ElementId b) {
  return "{" + s.label(a) + ", " + s.label(b) + "}";
}

// Compares solver outputs to brute force; returns human-readable differences.
OracleSummary compare_with_oracle(const Scenario& s, bool strong, unsigned cap, bool serial) {
  const auto oracle = serial ? oracle_extensions(s, cap) : oracle_extensions_parallel(s, cap);
  const auto solved = complete_extension(s, strong);
  OracleSummary o;
  o.candidates = oracle.candidates_examined;
  o.extensions = oracle.extensions.size();
  o.solver_sat = solved.sat;
  if (solved.sat != !oracle.extensions.empty()) {
    o.mismatches.push_back(std::string("existence: solver ") + (solved.sat ? "SAT" : "UNSAT") + ", oracle found " +
                           std::to_string(oracle.extensions.size()) + " extensions");
    return o;
  }
  if (!solved.sat) return o;
  if (!verify_extension(s, solved.extension).all_passed())
    o.mismatches.push_back("solver extension fails verification");
  const auto exact = serial ? forced_set_exact(s, strong) : forced_set_exact_parallel(s, strong);
  const auto brute = oracle_forced_set(s.size(), oracle.extensions);
  for (std::size_t i = 0; i < exact.verdicts.size(); ++i) {
    const auto& a = exact.verdicts[i];
    const auto& b = brute.verdicts[i];
    if (a.status != b.status)
      o.mismatches.push_back("pair " + pair_text(s, a.first, a.second) + ": solver " + to_string(a.status) +
                             ", oracle " + to_string(b.status));
  }
  if (!(exact.forced == brute.forced)) o.mismatches.push_back("forced relations differ");
  return o;
}

}  // namespace

CommandResult execute(const CommandOptions& options, const Scenario& s) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  RunReport& r = result.report;
  r.command = options.command;
  r.scenario = summarize(s);
  r.strong = resolve_strong(options.strong, s);
  r.violations = check_commutativity(s);
  fill_closure(r, s);

  if (options.command == "check") {
    // closure and consistency only
  } else if (options.command == "forced") {
    if (!r.consistent) {
      r.extension = summarize(s, complete_extension(s, r.strong));
      result.exit_code = kUnsat;
    } else {
      try {
        const auto exact = options.serial ? forced_set_exact(s, r.strong) : forced_set_exact_parallel(s, r.strong);
        r.forced_facts = facts_of(exact.forced);
        r.novel_facts = novel_pairs(exact.forced, s, r.strong);
        for (const auto& v : exact.verdicts) r.verdicts.push_back({v.first, v.second, v.status});
      } catch (const UnsatScenarioError&) {
        r.extension = summarize(s, complete_extension(s, r.strong));
        result.exit_code = kUnsat;
      }
    }
    if (options.oracle) {
      r.oracle = compare_with_oracle(s, r.strong, options.cap, options.serial);
      if (!r.oracle->mismatches.empty()) result.exit_code = kOracleMismatch;
    }
  } else if (options.command == "extend") {
    const auto ext = complete_extension(s, r.strong);
    r.extension = summarize(s, ext);
    if (ext.sat) {
      result.dot = render_dot(s, ext.extension);
    } else {
      result.exit_code = kUnsat;
    }
  } else if (options.command == "oracle") {
    r.oracle = compare_with_oracle(s, r.strong, options.cap, options.serial);
    if (!r.oracle->mismatches.empty()) result.exit_code = kOracleMismatch;
  } else {
    throw UsageError("unknown command '" + options.command + "'");
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

Scenario load(const CommandOptions& options) {
  if (options.scenario_path.has_value() == options.gen.has_value())
    throw UsageError("give exactly one of --scenario or --gen");
  if (options.scenario_path) return load_scenario_file(*options.scenario_path);
  return generate(parse_generator_spec(*options.gen), options.seed);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Scenario s = load(options);
    if (options.command == "dump") {
      if (options.json_path)
        write_file(*options.json_path, serialize(s));
      else
        out << serialize(s);
      return kOk;
    }
    auto result = execute(options, s);
    out << render_text(result.report, s);
    if (options.json_path) write_file(*options.json_path, to_json(result.report).dump(2) + "\n");
    if (options.dot_path) {
      if (result.dot)
        write_file(*options.dot_path, *result.dot);
      else
        err << "no extension to draw; " << *options.dot_path << " not written\n";
    }
    return result.exit_code;
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap)\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace invext
