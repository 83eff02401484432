#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "invext/closure.hpp"
#include "invext/scenario.hpp"
#include "invext/solver.hpp"

namespace invext {

struct ScenarioSummary {
  std::string name;
  std::size_t elements = 0;
  std::size_t generators = 0;
  bool commutative = false;

  friend bool operator==(const ScenarioSummary&, const ScenarioSummary&) = default;
};

struct VerdictEntry {
  ElementId first = 0;
  ElementId second = 0;
  PairStatus status = PairStatus::free;

  friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
};

struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string detail;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct ExtensionSummary {
  bool sat = false;
  std::vector<std::vector<ElementId>> levels;  // best class first, when sat
  std::vector<IdPair> certificate;             // when unsat
  std::optional<ElementId> seed_conflict;
  std::vector<CheckEntry> checks;

  friend bool operator==(const ExtensionSummary&, const ExtensionSummary&) = default;
};

struct OracleSummary {
  std::uint64_t candidates = 0;
  std::size_t extensions = 0;
  bool solver_sat = false;
  std::vector<std::string> mismatches;

  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

// Outcome of one CLI command. The machine-readable form omits elapsed_ms so
// identical runs serialize identically.
struct RunReport {
  std::string command;
  ScenarioSummary scenario;
  bool strong = false;
  std::vector<CommutativityViolation> violations;
  bool consistent = true;
  std::optional<ElementId> conflict;
  std::vector<Fact> seed_facts;
  std::vector<Fact> closure_facts;
  std::optional<std::vector<Fact>> forced_facts;
  std::optional<std::vector<Fact>> novel_facts;
  std::vector<VerdictEntry> verdicts;
  std::optional<ExtensionSummary> extension;
  std::optional<OracleSummary> oracle;
  double elapsed_ms = 0.0;

  friend bool operator==(const RunReport& a, const RunReport& b) {
    return a.command == b.command && a.scenario == b.scenario && a.strong == b.strong &&
           a.violations == b.violations && a.consistent == b.consistent && a.conflict == b.conflict &&
           a.seed_facts == b.seed_facts && a.closure_facts == b.closure_facts && a.forced_facts == b.forced_facts &&
           a.novel_facts == b.novel_facts && a.verdicts == b.verdicts && a.extension == b.extension &&
           a.oracle == b.oracle;
  }
};

ScenarioSummary summarize(const Scenario& s);
ExtensionSummary summarize(const Scenario& s, const ExtensionResult& r);

nlohmann::json to_json(const RunReport& r);
// Throws std::runtime_error when the document is malformed or its counts
// disagree with the listed sets.
RunReport report_from_json(const nlohmann::json& j);

std::string render_text(const RunReport& r, const Scenario& s);

// Hasse diagram of a complete extension's strict order, one node per
// indifference class.
std::string render_dot(const Scenario& s, const RelationState& complete);

}  // namespace invext
