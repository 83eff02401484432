#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "invext/closure.hpp"
#include "invext/scenario.hpp"
#include "invext/solver.hpp"

namespace invext {

inline constexpr unsigned kDefaultOracleCap = 7;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A weak order as a rank function; level 0 is the top class. Levels are
// contiguous from 0.
struct WeakOrderCandidate {
  std::vector<std::uint8_t> level;

  bool weakly_above(ElementId x, ElementId y) const { return level[x] <= level[y]; }
  friend auto operator<=>(const WeakOrderCandidate&, const WeakOrderCandidate&) = default;
};

// Ordered Bell (Fubini) number by a(n) = sum_{k=1..n} C(n,k) a(n-k).
std::uint64_t ordered_bell(unsigned n);

// Set partitions of n points as restricted growth strings.
std::vector<std::vector<std::uint8_t>> set_partitions(unsigned n);

// Every ordered set partition of n points exactly once: for each set partition
// (restricted growth order), every ordering of its blocks.
template <typename F>
void for_each_weak_order(unsigned n, F&& visit);

std::vector<WeakOrderCandidate> enumerate_weak_orders(unsigned n, unsigned cap = kDefaultOracleCap);

struct OracleResult {
  std::vector<WeakOrderCandidate> extensions;
  std::uint64_t candidates_examined = 0;
};

// Brute force: all weak orders on the window that extend the seed and are
// coherent under every generator wherever both images are defined.
OracleResult oracle_extensions(const Scenario& s, unsigned cap = kDefaultOracleCap);
OracleResult oracle_extensions_parallel(const Scenario& s, unsigned cap = kDefaultOracleCap);

struct OracleVerdict {
  ElementId first = 0;
  ElementId second = 0;
  PairStatus status = PairStatus::free;

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

struct OracleForcedSet {
  std::vector<OracleVerdict> verdicts;  // one per pair first < second, lexicographic
  RelationState forced;
};

// Intersects the rankings of all surviving extensions. Throws
// std::runtime_error when extensions is empty.
OracleForcedSet oracle_forced_set(std::size_t n, const std::vector<WeakOrderCandidate>& extensions);
OracleForcedSet oracle_forced_set(const Scenario& s, unsigned cap = kDefaultOracleCap);

RelationState to_relation(const WeakOrderCandidate& c);

// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
void for_each_block_order(const std::vector<std::uint8_t>& blocks, F& visit) {
  std::uint8_t k = 0;
  for (auto b : blocks) k = std::max<std::uint8_t>(k, static_cast<std::uint8_t>(b + 1));
  std::vector<std::uint8_t> perm(k);
  for (std::uint8_t i = 0; i < k; ++i) perm[i] = i;
  WeakOrderCandidate c{std::vector<std::uint8_t>(blocks.size())};
  do {
    for (std::size_t x = 0; x < blocks.size(); ++x) c.level[x] = perm[blocks[x]];
    visit(static_cast<const WeakOrderCandidate&>(c));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

template <typename F>
void for_each_weak_order(unsigned n, F&& visit) {
  for (const auto& rgs : set_partitions(n)) detail::for_each_block_order(rgs, visit);
}

}  // namespace invext
