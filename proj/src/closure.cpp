#include "invext/closure.hpp"

namespace invext {

RelationState::RelationState(std::size_t n) : weak(n), strict(n) {
  for (std::size_t i = 0; i < n; ++i) weak.set(i, i);
}

RelationState seed(const Scenario& s) {
  RelationState st(s.size());
  for (const auto& [x, y] : s.base_weak) st.assert_weak(x, y);
  for (const auto& [x, y] : s.base_strict) st.assert_strict(x, y);
  return st;
}

namespace {

// Warshall on the weak layer, then strict = weak · strict · weak. Since weak
// is reflexive and transitive afterwards, one sandwich pass closes the strict layer.
bool close_transitive(RelationState& st) {
  const auto n = st.size();
  bool changed = st.weak.merge(st.strict);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && st.weak.test(i, k)) changed |= st.weak.or_row(i, st.weak, k);

  BitMatrix left(n);
  for (std::size_t i = 0; i < n; ++i)
    st.weak.for_each_in_row(i, [&](std::size_t j) { left.or_row(i, st.strict, j); });
  BitMatrix both(n);
  for (std::size_t i = 0; i < n; ++i)
    left.for_each_in_row(i, [&](std::size_t j) { both.or_row(i, st.weak, j); });
  changed |= st.strict.merge(both);
  return changed;
}

bool apply_forward(RelationState& st, const Scenario& s) {
  bool changed = false;
  for (const auto& g : s.generators) {
    const auto dom = g.domain();
    for (ElementId x : dom) {
      const ElementId gx = g(x);
      for (ElementId y : dom) {
        if (st.weak.test(x, y)) changed |= st.weak.set(gx, g(y));
        if (st.strict.test(x, y)) changed |= st.strict.set(gx, g(y));
      }
    }
  }
  return changed;
}

bool apply_backward(RelationState& st, const Scenario& s) {
  bool changed = false;
  for (const auto& g : s.generators) {
    const auto dom = g.domain();
    for (ElementId x : dom) {
      const ElementId gx = g(x);
      for (ElementId y : dom) {
        if (st.weak.test(gx, g(y))) changed |= st.weak.set(x, y);
        if (st.strict.test(gx, g(y))) changed |= st.strict.set(x, y);
      }
    }
  }
  return changed;
}

}  // namespace

void saturate_in_place(RelationState& state, const Scenario& s, Rules rules, bool stop_on_conflict) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (rules.transitivity) changed |= close_transitive(state);
    if (stop_on_conflict && !is_consistent(state)) return;
    if (rules.forward) changed |= apply_forward(state, s);
    if (rules.backward) changed |= apply_backward(state, s);
    if (stop_on_conflict && !is_consistent(state)) return;
  }
}

RelationState saturate(RelationState state, const Scenario& s, bool strong) {
  saturate_in_place(state, s, Rules::full(strong));
  return state;
}

RelationState saturate(RelationState state, const Scenario& s, Rules rules) {
  saturate_in_place(state, s, rules);
  return state;
}

std::optional<ElementId> conflict_witness(const RelationState& state) {
  for (ElementId x = 0; x < state.size(); ++x)
    if (state.strict.test(x, x)) return x;
  return std::nullopt;
}

bool is_consistent(const RelationState& state) { return !conflict_witness(state).has_value(); }

bool strong_mode_admissible(const Scenario& s) { return s.commutative && check_commutativity(s).empty(); }

std::vector<Fact> facts_of(const RelationState& state) {
  std::vector<Fact> out;
  const auto n = static_cast<ElementId>(state.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (x == y) continue;
      if (state.strict.test(x, y))
        out.push_back({x, y, FactKind::strict});
      else if (state.weak.test(x, y))
        out.push_back({x, y, FactKind::weak});
    }
  return out;
}

bool holds(const RelationState& state, const Fact& f) {
  return f.kind == FactKind::strict ? state.strict.test(f.x, f.y) : state.weak.test(f.x, f.y);
}

std::vector<Fact> novel_pairs(const RelationState& forced, const Scenario& s, bool strong) {
  const auto base = seed(s);
  const auto by_transitivity = saturate(base, s, Rules::transitivity_only());
  const auto by_coherency = saturate(base, s, Rules::coherency_only(strong));
  std::vector<Fact> out;
  for (const auto& f : facts_of(forced))
    if (!holds(by_transitivity, f) && !holds(by_coherency, f)) out.push_back(f);
  return out;
}

}  // namespace invext
