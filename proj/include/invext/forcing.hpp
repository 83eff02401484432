#pragma once

#include <stdexcept>
#include <vector>

#include "invext/closure.hpp"
#include "invext/solver.hpp"

namespace invext {

class UnsatScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact forcing on the window: one verdict per unordered pair (first < second),
// in lexicographic order, plus the forced relation itself.
struct ForcedSet {
  std::vector<PairVerdict> verdicts;
  // weak(x,y): every complete coherent extension ranks x ≽ y;
  // strict(x,y): every one ranks x ≻ y.
  RelationState forced;

  const PairVerdict& at(ElementId first, ElementId second) const;
};

// Rebuilds the forced relation from per-pair verdicts over n elements.
RelationState forced_relation(const std::vector<PairVerdict>& verdicts, std::size_t n);

// Serial reference. Every complete extension found along the way is kept as
// a witness, so options it realizes on other pairs need no further search.
// Throws UnsatScenarioError when the scenario has no complete extension.
ForcedSet forced_set_exact(const Scenario& s, bool strong);

// OpenMP fan-out over pairs sharing one witness cache. Produces the same
// ForcedSet as the serial reference.
ForcedSet forced_set_exact_parallel(const Scenario& s, bool strong);

}  // namespace invext
