#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invext/closure.hpp"
#include "invext/scenario.hpp"

namespace invext {

// The three ways to settle an unranked pair {first, second}, in search order.
enum class Option : std::uint8_t { first_over_second, second_over_first, indifferent };
inline constexpr std::array<Option, 3> kOptions{Option::first_over_second, Option::second_over_first,
                                                Option::indifferent};

enum class PairStatus : std::uint8_t {
  forced_first_over_second,
  forced_second_over_first,
  forced_indifferent,
  free,
  locally_unextendable,
};

const char* to_string(Option o);
const char* to_string(PairStatus s);

void assert_option(RelationState& state, ElementId first, ElementId second, Option o);

// Status from the set of surviving options.
PairStatus status_from_survivors(const std::array<bool, 3>& survives);

enum class EliminationKind : std::uint8_t {
  cycle,         // asserting the option and saturating closed a strict self-loop
  no_completion  // consistent locally but no complete coherent extension exists
};

struct Elimination {
  Option option = Option::first_over_second;
  EliminationKind kind = EliminationKind::cycle;
  std::optional<ElementId> cycle_at;  // the element with strict(x,x), for kind == cycle

  friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct PairVerdict {
  ElementId first = 0;
  ElementId second = 0;
  PairStatus status = PairStatus::free;
  std::vector<Elimination> eliminated;

  bool survives(Option o) const;
  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

// The verdict for (second, first) given the verdict for (first, second).
PairVerdict mirrored(const PairVerdict& v);

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Tries each option on a copy of a saturated, consistent state. Throws
// PreconditionError when the pair is already related.
PairVerdict classify_pair(const RelationState& state, const Scenario& s, ElementId first, ElementId second,
                          bool strong);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t saturations = 0;
  std::uint64_t backtracks = 0;
};

struct ExtensionResult {
  bool sat = false;
  RelationState extension;                     // complete when sat
  std::vector<IdPair> certificate;             // pairs whose every option failed, ascending
  std::optional<ElementId> seed_conflict;      // set when the seed alone is inconsistent
  SearchStats stats;
};

// Propagate-and-backtrack search for a complete, transitive, coherent
// relation on the window extending start. Pairs are visited in (min, max) id
// order and options in kOptions order, so the result is deterministic.
ExtensionResult complete_extension_from(const RelationState& start, const Scenario& s, bool strong);
ExtensionResult complete_extension(const Scenario& s, bool strong);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_passed() const;
  const Check* find(const std::string& name) const;
};

// Independent audit of a candidate extension against the scenario. The strict
// part examined is the asymmetric part of e.weak; e.strict must agree with it.
VerificationReport verify_extension(const Scenario& s, const RelationState& e);

// Indifference classes of a complete extension, best class first.
std::vector<std::vector<ElementId>> levels_of(const RelationState& complete);

}  // namespace invext
