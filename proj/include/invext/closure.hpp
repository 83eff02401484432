#pragma once

#include <optional>
#include <vector>

#include "invext/bit_matrix.hpp"
#include "invext/scenario.hpp"

namespace invext {

// The forcing state all closure rules rewrite. weak(x,y) means "x ≽ y is
// forced", strict(x,y) means "x ≻ y is forced".
struct RelationState {
  BitMatrix weak;
  BitMatrix strict;

  RelationState() = default;
  explicit RelationState(std::size_t n);

  std::size_t size() const noexcept { return weak.size(); }

  void assert_weak(ElementId x, ElementId y) { weak.set(x, y); }
  void assert_strict(ElementId x, ElementId y) {
    weak.set(x, y);
    strict.set(x, y);
  }
  void assert_indifferent(ElementId x, ElementId y) {
    weak.set(x, y);
    weak.set(y, x);
  }

  bool related(ElementId x, ElementId y) const { return weak.test(x, y) || weak.test(y, x); }
  // The pair's ranking is settled: one side strictly forced, or both weak directions.
  bool determined(ElementId x, ElementId y) const {
    return strict.test(x, y) || strict.test(y, x) || (weak.test(x, y) && weak.test(y, x));
  }

  // Both layers of *this contained in other.
  bool subset_of(const RelationState& other) const {
    return weak.subset_of(other.weak) && strict.subset_of(other.strict);
  }

  friend bool operator==(const RelationState&, const RelationState&) = default;
};

// Which inference rules a saturation may fire.
struct Rules {
  bool transitivity = true;  // weak and mixed strict chaining
  bool forward = true;       // x >= y gives g(x) >= g(y)
  bool backward = false;     // g(x) >= g(y) gives x >= y

  static Rules full(bool strong) { return {true, true, strong}; }
  static Rules transitivity_only() { return {true, false, false}; }
  static Rules coherency_only(bool strong) { return {false, true, strong}; }
};

// weak = reflexive diagonal ∪ base_weak ∪ base_strict; strict = base_strict.
RelationState seed(const Scenario& s);

// Least fixpoint of the enabled rules containing state. With stop_on_conflict
// the iteration returns as soon as a strict self-loop appears; the result is
// then inconsistent but not necessarily closed.
void saturate_in_place(RelationState& state, const Scenario& s, Rules rules, bool stop_on_conflict = false);

RelationState saturate(RelationState state, const Scenario& s, bool strong);
RelationState saturate(RelationState state, const Scenario& s, Rules rules);

// No element is forced strictly above itself.
bool is_consistent(const RelationState& state);

// Smallest x with strict(x,x), if any.
std::optional<ElementId> conflict_witness(const RelationState& state);

// Whether the backward rule is admissible: the scenario is declared
// commutative and no violation is witnessed on the window.
bool strong_mode_admissible(const Scenario& s);

enum class FactKind { weak, strict };

// An ordered fact "x ≽ y" or "x ≻ y".
struct Fact {
  ElementId x = 0;
  ElementId y = 0;
  FactKind kind = FactKind::weak;

  friend auto operator<=>(const Fact&, const Fact&) = default;
};

// Off-diagonal facts of a state, strongest per ordered pair, in (x, y) order.
std::vector<Fact> facts_of(const RelationState& state);

bool holds(const RelationState& state, const Fact& f);

// Facts of forced that neither transitivity alone nor coherency alone derives
// from the scenario's seed.
std::vector<Fact> novel_pairs(const RelationState& forced, const Scenario& s, bool strong);

}  // namespace invext
