#include "invext/solver.hpp"

#include <algorithm>
#include <set>

namespace invext {

const char* to_string(Option o) {
  switch (o) {
    case Option::first_over_second: return "first>second";
    case Option::second_over_first: return "second>first";
    case Option::indifferent: return "indifferent";
  }
  return "?";
}

const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::forced_first_over_second: return "forced_first_over_second";
    case PairStatus::forced_second_over_first: return "forced_second_over_first";
    case PairStatus::forced_indifferent: return "forced_indifferent";
    case PairStatus::free: return "free";
    case PairStatus::locally_unextendable: return "locally_unextendable";
  }
  return "?";
}

void assert_option(RelationState& state, ElementId first, ElementId second, Option o) {
  switch (o) {
    case Option::first_over_second: state.assert_strict(first, second); break;
    case Option::second_over_first: state.assert_strict(second, first); break;
    case Option::indifferent: state.assert_indifferent(first, second); break;
  }
}

PairStatus status_from_survivors(const std::array<bool, 3>& survives) {
  const auto alive = std::count(survives.begin(), survives.end(), true);
  if (alive == 0) return PairStatus::locally_unextendable;
  if (alive > 1) return PairStatus::free;
  if (survives[0]) return PairStatus::forced_first_over_second;
  if (survives[1]) return PairStatus::forced_second_over_first;
  return PairStatus::forced_indifferent;
}

bool PairVerdict::survives(Option o) const {
  return std::none_of(eliminated.begin(), eliminated.end(), [o](const Elimination& e) { return e.option == o; });
}

namespace {

Option flip(Option o) {
  switch (o) {
    case Option::first_over_second: return Option::second_over_first;
    case Option::second_over_first: return Option::first_over_second;
    case Option::indifferent: return Option::indifferent;
  }
  return o;
}

PairStatus flip(PairStatus s) {
  switch (s) {
    case PairStatus::forced_first_over_second: return PairStatus::forced_second_over_first;
    case PairStatus::forced_second_over_first: return PairStatus::forced_first_over_second;
    default: return s;
  }
}

}  // namespace

PairVerdict mirrored(const PairVerdict& v) {
  PairVerdict m{v.second, v.first, flip(v.status), {}};
  for (auto e : v.eliminated) {
    e.option = flip(e.option);
    m.eliminated.push_back(e);
  }
  std::sort(m.eliminated.begin(), m.eliminated.end(),
            [](const Elimination& a, const Elimination& b) { return a.option < b.option; });
  return m;
}

PairVerdict classify_pair(const RelationState& state, const Scenario& s, ElementId first, ElementId second,
                          bool strong) {
  if (first == second) throw PreconditionError("classify_pair needs two distinct elements");
  if (state.weak.test(first, second))
    throw PreconditionError("pair already related: " + s.label(first) + " >= " + s.label(second));
  if (state.weak.test(second, first))
    throw PreconditionError("pair already related: " + s.label(second) + " >= " + s.label(first));

  PairVerdict v{first, second, PairStatus::free, {}};
  std::array<bool, 3> survives{};
  for (std::size_t i = 0; i < kOptions.size(); ++i) {
    RelationState trial = state;
    assert_option(trial, first, second, kOptions[i]);
    saturate_in_place(trial, s, Rules::full(strong));
    if (auto x = conflict_witness(trial))
      v.eliminated.push_back({kOptions[i], EliminationKind::cycle, x});
    else
      survives[i] = true;
  }
  v.status = status_from_survivors(survives);
  return v;
}

namespace {

class Search {
 public:
  Search(const Scenario& s, bool strong) : s_(s), rules_(Rules::full(strong)) {}

  bool run(RelationState state, RelationState& out) {
    ++stats.nodes;
    const auto next = first_undetermined(state);
    if (!next) {
      out = std::move(state);
      return true;
    }
    const auto [w, z] = *next;
    bool any_consistent = false;
    for (Option o : kOptions) {
      RelationState child = state;
      assert_option(child, w, z, o);
      ++stats.saturations;
      saturate_in_place(child, s_, rules_, /*stop_on_conflict=*/true);
      if (!is_consistent(child)) continue;
      any_consistent = true;
      if (run(std::move(child), out)) return true;
      ++stats.backtracks;
    }
    if (!any_consistent) failed_pairs.insert({w, z});
    return false;
  }

  SearchStats stats;
  std::set<IdPair> failed_pairs;

 private:
  std::optional<IdPair> first_undetermined(const RelationState& st) const {
    const auto n = static_cast<ElementId>(st.size());
    for (ElementId w = 0; w < n; ++w)
      for (ElementId z = w + 1; z < n; ++z)
        if (!st.determined(w, z)) return IdPair{w, z};
    return std::nullopt;
  }

  const Scenario& s_;
  Rules rules_;
};

}  // namespace

ExtensionResult complete_extension_from(const RelationState& start, const Scenario& s, bool strong) {
  ExtensionResult result;
  RelationState root = start;
  saturate_in_place(root, s, Rules::full(strong));
  if (auto x = conflict_witness(root)) {
    result.seed_conflict = x;
    return result;
  }
  Search search(s, strong);
  result.sat = search.run(std::move(root), result.extension);
  result.stats = search.stats;
  if (!result.sat) result.certificate.assign(search.failed_pairs.begin(), search.failed_pairs.end());
  return result;
}

ExtensionResult complete_extension(const Scenario& s, bool strong) {
  return complete_extension_from(seed(s), s, strong);
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport verify_extension(const Scenario& s, const RelationState& e) {
  const auto n = static_cast<ElementId>(s.size());
  VerificationReport report;
  auto lbl = [&](ElementId id) { return s.label(id); };
  auto ge = [&](ElementId x, ElementId y) { return e.weak.test(x, y); };
  auto gt = [&](ElementId x, ElementId y) { return e.weak.test(x, y) && !e.weak.test(y, x); };

  if (e.size() != n) {
    report.checks.push_back({"size", false, "relation has " + std::to_string(e.size()) + " elements, window has " +
                                                std::to_string(n)});
    return report;
  }

  Check reflexive{"reflexive", true, {}};
  for (ElementId x = 0; x < n && reflexive.passed; ++x)
    if (!ge(x, x)) reflexive = {"reflexive", false, "missing " + lbl(x) + " >= " + lbl(x)};
  report.checks.push_back(reflexive);

  Check complete{"complete", true, {}};
  for (ElementId x = 0; x < n && complete.passed; ++x)
    for (ElementId y = x + 1; y < n && complete.passed; ++y)
      if (!ge(x, y) && !ge(y, x)) complete = {"complete", false, lbl(x) + " and " + lbl(y) + " unranked"};
  report.checks.push_back(complete);

  Check transitive{"transitive", true, {}};
  for (ElementId x = 0; x < n && transitive.passed; ++x)
    for (ElementId y = 0; y < n && transitive.passed; ++y)
      if (ge(x, y))
        for (ElementId z = 0; z < n; ++z)
          if (ge(y, z) && !ge(x, z)) {
            transitive = {"transitive", false, lbl(x) + " >= " + lbl(y) + " >= " + lbl(z) + " but not " + lbl(x) +
                                                   " >= " + lbl(z)};
            break;
          }
  report.checks.push_back(transitive);

  Check strict_layer{"strict-layer", true, {}};
  for (ElementId x = 0; x < n && strict_layer.passed; ++x)
    for (ElementId y = 0; y < n && strict_layer.passed; ++y)
      if (e.strict.test(x, y) != gt(x, y))
        strict_layer = {"strict-layer", false,
                        "strict layer disagrees with asymmetric part at (" + lbl(x) + ", " + lbl(y) + ")"};
  report.checks.push_back(strict_layer);

  Check consistent{"consistent", true, {}};
  if (auto x = conflict_witness(e)) consistent = {"consistent", false, lbl(*x) + " is ranked above itself"};
  report.checks.push_back(consistent);

  Check seed_weak{"extends-seed-weak", true, {}};
  for (const auto& [x, y] : s.base_weak)
    if (!ge(x, y)) {
      seed_weak = {"extends-seed-weak", false, "drops " + lbl(x) + " >= " + lbl(y)};
      break;
    }
  report.checks.push_back(seed_weak);

  Check seed_strict{"extends-seed-strict", true, {}};
  for (const auto& [x, y] : s.base_strict)
    if (!gt(x, y)) {
      seed_strict = {"extends-seed-strict", false, "drops " + lbl(x) + " > " + lbl(y)};
      break;
    }
  report.checks.push_back(seed_strict);

  Check coherent{"coherent", true, {}};
  Check strongly{"strongly-coherent", true, {}};
  for (const auto& g : s.generators) {
    const auto dom = g.domain();
    for (ElementId x : dom)
      for (ElementId y : dom) {
        const ElementId gx = g(x), gy = g(y);
        if (coherent.passed && ((ge(x, y) && !ge(gx, gy)) || (gt(x, y) && !gt(gx, gy))))
          coherent = {"coherent", false,
                      g.name() + " does not preserve (" + lbl(x) + ", " + lbl(y) + ") -> (" + lbl(gx) + ", " +
                          lbl(gy) + ")"};
        if (strongly.passed && ((ge(gx, gy) && !ge(x, y)) || (gt(gx, gy) && !gt(x, y))))
          strongly = {"strongly-coherent", false,
                      g.name() + " does not reflect (" + lbl(gx) + ", " + lbl(gy) + ") back to (" + lbl(x) + ", " +
                          lbl(y) + ")"};
      }
  }
  report.checks.push_back(coherent);
  report.checks.push_back(strongly);
  return report;
}

std::vector<std::vector<ElementId>> levels_of(const RelationState& complete) {
  const auto n = static_cast<ElementId>(complete.size());
  // In a complete preorder, the number of elements strictly above x fixes its class.
  std::vector<std::pair<std::size_t, ElementId>> keyed;
  for (ElementId x = 0; x < n; ++x) {
    std::size_t above = 0;
    for (ElementId y = 0; y < n; ++y)
      if (complete.weak.test(y, x) && !complete.weak.test(x, y)) ++above;
    keyed.push_back({above, x});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<ElementId>> levels;
  std::size_t current = static_cast<std::size_t>(-1);
  for (const auto& [above, x] : keyed) {
    if (levels.empty() || above != current) {
      levels.emplace_back();
      current = above;
    }
    levels.back().push_back(x);
  }
  return levels;
}

}  // namespace invext
