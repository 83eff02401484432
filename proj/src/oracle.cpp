#include "invext/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>

namespace invext {

std::uint64_t ordered_bell(unsigned n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;  // C(m, k)
    for (unsigned k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

std::vector<std::vector<std::uint8_t>> set_partitions(unsigned n) {
  std::vector<std::vector<std::uint8_t>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint8_t> rgs(n, 0);
  // Depth-first over restricted growth strings: rgs[i] <= 1 + max(rgs[0..i)).
  auto rec = [&](auto&& self, unsigned i, std::uint8_t max_so_far) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::uint8_t b = 0; b <= max_so_far + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max_so_far, b));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

namespace {

void check_cap(std::size_t n, unsigned cap) {
  if (n > cap)
    throw CapExceeded("window has " + std::to_string(n) + " elements, oracle cap is " + std::to_string(cap));
  if (n > 16) throw CapExceeded("oracle enumeration is limited to 16 elements");
}

// Precomputed constraint lists; a candidate survives iff all hold.
class Filter {
 public:
  explicit Filter(const Scenario& s) : weak_(s.base_weak), strict_(s.base_strict) {
    for (const auto& g : s.generators) {
      const auto dom = g.domain();
      for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j)
          quads_.push_back({dom[i], dom[j], g(dom[i]), g(dom[j])});
    }
  }

  bool accepts(const WeakOrderCandidate& c) const {
    const auto& l = c.level;
    for (const auto& [x, y] : strict_)
      if (!(l[x] < l[y])) return false;
    for (const auto& [x, y] : weak_)
      if (!(l[x] <= l[y])) return false;
    for (const auto& q : quads_)
      if (sign(l[q[0]], l[q[1]]) != sign(l[q[2]], l[q[3]])) return false;
    return true;
  }

 private:
  static int sign(std::uint8_t a, std::uint8_t b) { return (a > b) - (a < b); }

  std::vector<IdPair> weak_;
  std::vector<IdPair> strict_;
  std::vector<std::array<ElementId, 4>> quads_;
};

}  // namespace

std::vector<WeakOrderCandidate> enumerate_weak_orders(unsigned n, unsigned cap) {
  check_cap(n, cap);
  std::vector<WeakOrderCandidate> out;
  out.reserve(static_cast<std::size_t>(ordered_bell(n)));
  for_each_weak_order(n, [&](const WeakOrderCandidate& c) { out.push_back(c); });
  return out;
}

OracleResult oracle_extensions(const Scenario& s, unsigned cap) {
  check_cap(s.size(), cap);
  const Filter filter(s);
  OracleResult r;
  for_each_weak_order(static_cast<unsigned>(s.size()), [&](const WeakOrderCandidate& c) {
    ++r.candidates_examined;
    if (filter.accepts(c)) r.extensions.push_back(c);
  });
  return r;
}

OracleResult oracle_extensions_parallel(const Scenario& s, unsigned cap) {
  check_cap(s.size(), cap);
  const Filter filter(s);
  const auto partitions = set_partitions(static_cast<unsigned>(s.size()));
  const auto count = static_cast<std::ptrdiff_t>(partitions.size());

  // Survivors are kept per set partition so the merged order matches the serial walk.
  std::vector<std::vector<WeakOrderCandidate>> found(partitions.size());
  std::uint64_t examined = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : examined)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    auto& bucket = found[static_cast<std::size_t>(p)];
    auto visit = [&](const WeakOrderCandidate& c) {
      ++examined;
      if (filter.accepts(c)) bucket.push_back(c);
    };
    detail::for_each_block_order(partitions[static_cast<std::size_t>(p)], visit);
  }

  OracleResult r;
  r.candidates_examined = examined;
  for (auto& bucket : found)
    r.extensions.insert(r.extensions.end(), std::make_move_iterator(bucket.begin()),
                        std::make_move_iterator(bucket.end()));
  return r;
}

OracleForcedSet oracle_forced_set(std::size_t n, const std::vector<WeakOrderCandidate>& extensions) {
  if (extensions.empty()) throw std::runtime_error("no coherent extension exists; forcing is vacuous");
  OracleForcedSet out;
  for (ElementId w = 0; w < n; ++w)
    for (ElementId z = w + 1; z < n; ++z) {
      std::array<bool, 3> seen{};
      for (const auto& c : extensions) {
        if (c.level[w] < c.level[z])
          seen[0] = true;
        else if (c.level[z] < c.level[w])
          seen[1] = true;
        else
          seen[2] = true;
      }
      out.verdicts.push_back({w, z, status_from_survivors(seen)});
    }

  out.forced = RelationState(n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool all_weak = std::all_of(extensions.begin(), extensions.end(),
                                        [&](const WeakOrderCandidate& c) { return c.level[x] <= c.level[y]; });
      const bool all_strict = std::all_of(extensions.begin(), extensions.end(),
                                          [&](const WeakOrderCandidate& c) { return c.level[x] < c.level[y]; });
      if (all_weak) out.forced.weak.set(x, y);
      if (all_strict) out.forced.strict.set(x, y);
    }
  return out;
}

OracleForcedSet oracle_forced_set(const Scenario& s, unsigned cap) {
  return oracle_forced_set(s.size(), oracle_extensions(s, cap).extensions);
}

RelationState to_relation(const WeakOrderCandidate& c) {
  const auto n = c.level.size();
  RelationState r(n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (c.level[x] <= c.level[y]) r.weak.set(x, y);
      if (c.level[x] < c.level[y]) r.strict.set(x, y);
    }
  return r;
}

}  // namespace invext
