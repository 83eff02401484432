#include "invext/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace invext {

using nlohmann::json;

ScenarioSummary summarize(const Scenario& s) {
  return {s.name, s.size(), s.generators.size(), s.commutative};
}

ExtensionSummary summarize(const Scenario& s, const ExtensionResult& r) {
  ExtensionSummary e;
  e.sat = r.sat;
  e.seed_conflict = r.seed_conflict;
  if (r.sat) {
    e.levels = levels_of(r.extension);
    for (const auto& c : verify_extension(s, r.extension).checks) e.checks.push_back({c.name, c.passed, c.detail});
  } else {
    e.certificate = r.certificate;
  }
  return e;
}

namespace {

const char* relation_symbol(FactKind k) { return k == FactKind::strict ? ">" : ">="; }

json facts_json(const std::vector<Fact>& facts) {
  json a = json::array();
  for (const auto& f : facts) a.push_back(json::array({f.x, relation_symbol(f.kind), f.y}));
  return a;
}

std::vector<Fact> facts_from(const json& a) {
  std::vector<Fact> out;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 3) throw std::runtime_error("fact must be [x, rel, y]");
    const auto rel = e[1].get<std::string>();
    if (rel != ">" && rel != ">=") throw std::runtime_error("unknown relation '" + rel + "'");
    out.push_back({e[0].get<ElementId>(), e[2].get<ElementId>(), rel == ">" ? FactKind::strict : FactKind::weak});
  }
  return out;
}

// Machine-facing status names. Free verdicts only hold within the window.
const char* status_name(PairStatus s) {
  switch (s) {
    case PairStatus::forced_first_over_second:
    case PairStatus::forced_second_over_first: return "forced_strict";
    case PairStatus::forced_indifferent: return "forced_indifferent";
    case PairStatus::free: return "free_within_window";
    case PairStatus::locally_unextendable: return "locally_unextendable";
  }
  return "?";
}

json verdict_json(const VerdictEntry& v) {
  json j{{"pair", {v.first, v.second}}, {"status", status_name(v.status)}};
  if (v.status == PairStatus::forced_first_over_second) j["above"] = v.first;
  if (v.status == PairStatus::forced_second_over_first) j["above"] = v.second;
  return j;
}

VerdictEntry verdict_from(const json& j) {
  VerdictEntry v;
  v.first = j.at("pair").at(0).get<ElementId>();
  v.second = j.at("pair").at(1).get<ElementId>();
  const auto status = j.at("status").get<std::string>();
  if (status == "forced_strict") {
    const auto above = j.at("above").get<ElementId>();
    if (above == v.first)
      v.status = PairStatus::forced_first_over_second;
    else if (above == v.second)
      v.status = PairStatus::forced_second_over_first;
    else
      throw std::runtime_error("verdict 'above' is not a member of its pair");
  } else if (status == "forced_indifferent") {
    v.status = PairStatus::forced_indifferent;
  } else if (status == "free_within_window") {
    v.status = PairStatus::free;
  } else if (status == "locally_unextendable") {
    v.status = PairStatus::locally_unextendable;
  } else {
    throw std::runtime_error("unknown verdict status '" + status + "'");
  }
  return v;
}

void expect_count(const json& counts, const char* key, std::size_t actual) {
  if (counts.contains(key) && counts.at(key).get<std::size_t>() != actual)
    throw std::runtime_error(std::string("count '") + key + "' disagrees with its list");
}

}  // namespace

json to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["scenario"] = {{"name", r.scenario.name},
                   {"elements", r.scenario.elements},
                   {"generators", r.scenario.generators},
                   {"commutative", r.scenario.commutative}};
  j["window_relative"] = true;
  j["strong"] = r.strong;
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"first", v.first},
                          {"second", v.second},
                          {"point", v.point},
                          {"first_after_second", v.first_after_second},
                          {"second_after_first", v.second_after_first}});
  j["commutativity_violations"] = std::move(violations);
  j["consistent"] = r.consistent;
  if (r.conflict) j["conflict_at"] = *r.conflict;

  json counts{{"seed", r.seed_facts.size()}, {"closure_forced", r.closure_facts.size()}};
  j["seed"] = facts_json(r.seed_facts);
  j["closure_forced"] = facts_json(r.closure_facts);
  if (r.forced_facts) {
    counts["exactly_forced"] = r.forced_facts->size();
    j["exactly_forced"] = facts_json(*r.forced_facts);
  }
  if (r.novel_facts) {
    counts["novel"] = r.novel_facts->size();
    j["novel"] = facts_json(*r.novel_facts);
  }
  j["counts"] = std::move(counts);

  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = std::move(verdicts);

  if (r.extension) {
    const auto& e = *r.extension;
    json je{{"outcome", e.sat ? "sat" : "unsat"}};
    je["levels"] = e.levels;
    json cert = json::array();
    for (const auto& [a, b] : e.certificate) cert.push_back({a, b});
    je["certificate"] = std::move(cert);
    if (e.seed_conflict) je["seed_conflict_at"] = *e.seed_conflict;
    json checks = json::array();
    for (const auto& c : e.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    je["checks"] = std::move(checks);
    j["extension"] = std::move(je);
  }
  if (r.oracle) {
    const auto& o = *r.oracle;
    j["oracle"] = {{"candidates", o.candidates},
                   {"extensions", o.extensions},
                   {"solver_sat", o.solver_sat},
                   {"mismatches", o.mismatches}};
  }
  return j;
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    const auto& sc = j.at("scenario");
    r.scenario = {sc.at("name").get<std::string>(), sc.at("elements").get<std::size_t>(),
                  sc.at("generators").get<std::size_t>(), sc.at("commutative").get<bool>()};
    r.strong = j.at("strong").get<bool>();
    for (const auto& v : j.at("commutativity_violations"))
      r.violations.push_back({v.at("first").get<std::size_t>(), v.at("second").get<std::size_t>(),
                              v.at("point").get<ElementId>(), v.at("first_after_second").get<ElementId>(),
                              v.at("second_after_first").get<ElementId>()});
    r.consistent = j.at("consistent").get<bool>();
    if (j.contains("conflict_at")) r.conflict = j["conflict_at"].get<ElementId>();
    r.seed_facts = facts_from(j.at("seed"));
    r.closure_facts = facts_from(j.at("closure_forced"));
    if (j.contains("exactly_forced")) r.forced_facts = facts_from(j["exactly_forced"]);
    if (j.contains("novel")) r.novel_facts = facts_from(j["novel"]);

    const auto& counts = j.at("counts");
    expect_count(counts, "seed", r.seed_facts.size());
    expect_count(counts, "closure_forced", r.closure_facts.size());
    if (r.forced_facts) expect_count(counts, "exactly_forced", r.forced_facts->size());
    if (r.novel_facts) expect_count(counts, "novel", r.novel_facts->size());

    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from(v));

    if (j.contains("extension")) {
      const auto& je = j["extension"];
      ExtensionSummary e;
      e.sat = je.at("outcome").get<std::string>() == "sat";
      e.levels = je.at("levels").get<std::vector<std::vector<ElementId>>>();
      for (const auto& p : je.at("certificate")) e.certificate.push_back({p.at(0).get<ElementId>(), p.at(1).get<ElementId>()});
      if (je.contains("seed_conflict_at")) e.seed_conflict = je["seed_conflict_at"].get<ElementId>();
      for (const auto& c : je.at("checks"))
        e.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
      r.extension = std::move(e);
    }
    if (j.contains("oracle")) {
      const auto& jo = j["oracle"];
      r.oracle = OracleSummary{jo.at("candidates").get<std::uint64_t>(), jo.at("extensions").get<std::size_t>(),
                               jo.at("solver_sat").get<bool>(), jo.at("mismatches").get<std::vector<std::string>>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string fact_text(const Scenario& s, const Fact& f) {
  return s.label(f.x) + (f.kind == FactKind::strict ? " > " : " >= ") + s.label(f.y);
}

void list_facts(std::ostream& out, const Scenario& s, const char* title, const std::vector<Fact>& facts,
                std::size_t limit) {
  out << title << " (" << facts.size() << ")\n";
  for (std::size_t i = 0; i < facts.size() && i < limit; ++i) out << "    " << fact_text(s, facts[i]) << "\n";
  if (facts.size() > limit) out << "    ... " << facts.size() - limit << " more\n";
}

}  // namespace

std::string render_text(const RunReport& r, const Scenario& s) {
  std::ostringstream out;
  out << "scenario " << r.scenario.name << ": " << r.scenario.elements << " elements, " << r.scenario.generators
      << " generators, " << (r.scenario.commutative ? "declared commutative" : "not declared commutative") << "\n";
  out << "backward coherency rule: " << (r.strong ? "on" : "off") << "\n";
  if (r.violations.empty()) {
    out << "commutativity: no violation witnessed on the window\n";
  } else {
    out << "commutativity: " << r.violations.size() << " violations, e.g. " << s.generators[r.violations[0].first].name()
        << " and " << s.generators[r.violations[0].second].name() << " at " << s.label(r.violations[0].point) << "\n";
  }
  out << "seed closure: " << (r.consistent ? "consistent" : "INCONSISTENT");
  if (r.conflict) out << " (" << s.label(*r.conflict) << " forced above itself)";
  out << "\n";
  out << "counts: seed " << r.seed_facts.size() << ", closure-forced " << r.closure_facts.size();
  if (r.forced_facts) out << ", exactly-forced " << r.forced_facts->size();
  if (r.novel_facts) out << ", novel " << r.novel_facts->size();
  out << "\n";

  constexpr std::size_t kLimit = 40;
  if (r.novel_facts) list_facts(out, s, "novel predictions", *r.novel_facts, kLimit);
  if (!r.verdicts.empty()) {
    std::size_t free = 0;
    out << "pair verdicts (free verdicts hold within the window only)\n";
    for (const auto& v : r.verdicts) {
      if (v.status == PairStatus::free) {
        ++free;
        continue;
      }
      out << "    {" << s.label(v.first) << ", " << s.label(v.second) << "}: ";
      switch (v.status) {
        case PairStatus::forced_first_over_second: out << s.label(v.first) << " > " << s.label(v.second); break;
        case PairStatus::forced_second_over_first: out << s.label(v.second) << " > " << s.label(v.first); break;
        case PairStatus::forced_indifferent: out << "indifferent"; break;
        default: out << to_string(v.status); break;
      }
      out << "\n";
    }
    out << "    " << free << " pairs free-within-window\n";
  }
  if (r.extension) {
    const auto& e = *r.extension;
    if (e.sat) {
      out << "extension: SAT, " << e.levels.size() << " indifference classes\n";
      for (std::size_t i = 0; i < e.levels.size(); ++i) {
        out << "    " << i << ":";
        for (auto x : e.levels[i]) out << " " << s.label(x);
        out << "\n";
      }
      for (const auto& c : e.checks)
        out << "    check " << c.name << ": " << (c.passed ? "ok" : "FAILED " + c.detail) << "\n";
    } else {
      out << "extension: UNSAT";
      if (e.seed_conflict) out << " (seed already cyclic at " << s.label(*e.seed_conflict) << ")";
      out << "\n";
      for (const auto& [a, b] : e.certificate)
        out << "    every option fails at {" << s.label(a) << ", " << s.label(b) << "}\n";
    }
  }
  if (r.oracle) {
    const auto& o = *r.oracle;
    out << "oracle: " << o.candidates << " weak orders examined, " << o.extensions << " coherent extensions; solver "
        << (o.solver_sat ? "SAT" : "UNSAT") << "\n";
    if (o.mismatches.empty()) out << "    oracle agrees with solver\n";
    for (const auto& m : o.mismatches) out << "    MISMATCH " << m << "\n";
  }
  out << "elapsed: " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  return out.str();
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_dot(const Scenario& s, const RelationState& complete) {
  const auto levels = levels_of(complete);
  std::ostringstream out;
  out << "digraph \"" << dot_escape(s.name.empty() ? "extension" : s.name) << "\" {\n";
  out << "  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out << "  c" << i << " [label=\"";
    for (std::size_t k = 0; k < levels[i].size(); ++k) out << (k ? "\\n" : "") << dot_escape(s.label(levels[i][k]));
    out << "\"];\n";
  }
  // A weak order's quotient is a chain; its covering edges join consecutive classes.
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) out << "  c" << i << " -> c" << i + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace invext
