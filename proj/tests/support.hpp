#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "invext/closure.hpp"
#include "invext/oracle.hpp"
#include "invext/scenario.hpp"
#include "invext/scenarios.hpp"

namespace invext::testing {

// Mixed corpus: commutative/non-commutative, total/partial, n <= max_n, k <= 2.
inline RandomSpec corpus_spec(std::uint64_t i, unsigned max_n = 6) {
  RandomSpec r;
  r.seed = 1000 + i;
  r.n = 2 + static_cast<unsigned>(i % (max_n - 1));
  r.k = static_cast<unsigned>((i / 3) % 3);
  r.density = 0.15 + 0.1 * static_cast<double>(i % 4);
  r.commutative = (i / 2) % 2 == 0;
  r.total = (i / 4) % 2 == 0;
  return r;
}

// Seed relation plus random extra weak/strict entries.
inline RelationState random_state(const Scenario& s, double density, std::mt19937_64& rng) {
  RelationState st = seed(s);
  std::bernoulli_distribution coin(density);
  for (ElementId x = 0; x < s.size(); ++x)
    for (ElementId y = 0; y < s.size(); ++y) {
      if (x == y) continue;
      if (coin(rng)) st.assert_weak(x, y);
      if (coin(rng) && coin(rng)) st.assert_strict(x, y);
    }
  return st;
}

// Reference transitive closure by repeated squaring on plain bool matrices.
inline std::vector<std::vector<bool>> naive_closure(std::vector<std::vector<bool>> r) {
  const auto n = r.size();
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (r[j][k] && !r[i][k]) {
              r[i][k] = true;
              grew = true;
            }
  }
  return r;
}

inline bool extension_contains(const WeakOrderCandidate& e, const RelationState& st) {
  const auto n = st.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (st.weak.test(x, y) && !(e.level[x] <= e.level[y])) return false;
      if (st.strict.test(x, y) && !(e.level[x] < e.level[y])) return false;
    }
  return true;
}

// Transitivity and forward coherency of the weak/strict layers, by direct scan.
inline bool transitive_and_forward_coherent(const RelationState& st, const Scenario& s) {
  const auto n = st.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) {
        if (st.weak.test(x, y) && st.weak.test(y, z) && !st.weak.test(x, z)) return false;
        if (st.strict.test(x, y) && st.weak.test(y, z) && !st.strict.test(x, z)) return false;
        if (st.weak.test(x, y) && st.strict.test(y, z) && !st.strict.test(x, z)) return false;
      }
  for (const auto& g : s.generators)
    for (ElementId x : g.domain())
      for (ElementId y : g.domain()) {
        if (st.weak.test(x, y) && !st.weak.test(g(x), g(y))) return false;
        if (st.strict.test(x, y) && !st.strict.test(g(x), g(y))) return false;
      }
  return true;
}

}  // namespace invext::testing
