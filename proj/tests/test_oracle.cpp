#include <set>

#include "doctest.h"

#include "invext/oracle.hpp"
#include "invext/scenarios.hpp"
#include "invext/solver.hpp"
#include "support.hpp"

using namespace invext;

namespace {

// Weak orders as surjections onto {0..k-1}, counted over all n^n maps.
std::uint64_t brute_weak_orders(unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= n;
  std::uint64_t count = 0;
  std::vector<unsigned> f(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    std::vector<bool> hit(n, false);
    unsigned top = 0;
    for (unsigned x = 0; x < n; ++x) {
      f[x] = static_cast<unsigned>(c % n);
      c /= n;
      hit[f[x]] = true;
      top = std::max(top, f[x]);
    }
    bool contiguous = true;
    for (unsigned v = 0; v <= top; ++v) contiguous = contiguous && hit[v];
    count += contiguous;
  }
  return count;
}

Scenario plain(unsigned n) {
  Scenario s;
  for (ElementId i = 0; i < n; ++i) s.elements.push_back({i, "e" + std::to_string(i), std::nullopt});
  return s;
}

}  // namespace

TEST_CASE("ordered Bell numbers") {
  CHECK(ordered_bell(0) == 1);
  CHECK(ordered_bell(1) == 1);
  CHECK(ordered_bell(3) == 13);
  CHECK(ordered_bell(4) == 75);
  CHECK(ordered_bell(7) == 47293);
  for (unsigned n = 1; n <= 6; ++n) CHECK(ordered_bell(n) == brute_weak_orders(n));
}

TEST_CASE("enumeration yields each weak order once") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto all = enumerate_weak_orders(n);
    CHECK(all.size() == ordered_bell(n));
    std::set<WeakOrderCandidate> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (const auto& c : all) {
      std::vector<bool> used(n, false);
      for (auto l : c.level) used[l] = true;
      std::size_t k = 0;
      while (k < n && used[k]) ++k;
      for (std::size_t rest = k; rest < n; ++rest) CHECK(!used[rest]);
    }
  }
  const auto two = enumerate_weak_orders(2);
  CHECK(two.size() == 3);
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(enumerate_weak_orders(8), CapExceeded);
  CHECK_NOTHROW(enumerate_weak_orders(8, 8).size());
  CHECK_THROWS_AS(oracle_extensions(plain(17), 20), CapExceeded);
  CHECK_THROWS_AS(oracle_extensions(gen_koopmans(1)), CapExceeded);
}

TEST_CASE("two-track N=1: every extension ranks (a,0) above (b,0)") {
  const auto s = gen_two_track(1);
  const auto r = oracle_extensions(s);
  CHECK(r.candidates_examined == 4683);
  REQUIRE(!r.extensions.empty());
  const auto a0 = s.id_of("(a,0)"), b0 = s.id_of("(b,0)");
  for (const auto& e : r.extensions) CHECK(e.level[a0] < e.level[b0]);
  const auto f = oracle_forced_set(s);
  CHECK(f.forced.strict.test(a0, b0));
}

TEST_CASE("Koopmans window has no coherent weak order") {
  const auto r = oracle_extensions_parallel(gen_koopmans(1), 10);
  CHECK(r.candidates_examined == ordered_bell(10));
  CHECK(r.extensions.empty());
  CHECK_THROWS_AS(oracle_forced_set(10, r.extensions), std::runtime_error);
}

TEST_CASE("serial and parallel oracle agree") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto s = gen_random(testing::corpus_spec(i, 7));
    const auto a = oracle_extensions(s);
    const auto b = oracle_extensions_parallel(s);
    CHECK(a.candidates_examined == b.candidates_examined);
    CHECK(a.extensions == b.extensions);
  }
}

TEST_CASE("surviving candidates pass the independent audit and contain the closure") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const auto s = gen_random(testing::corpus_spec(i));
    const auto exts = oracle_extensions(s).extensions;
    for (const auto& e : exts) CHECK(verify_extension(s, to_relation(e)).all_passed());
    if (exts.empty()) continue;
    const auto closed = saturate(seed(s), s, false);
    CHECK(closed.subset_of(oracle_forced_set(s.size(), exts).forced));
  }
}

TEST_CASE("to_relation examples") {
  const auto r = to_relation(WeakOrderCandidate{{1, 0, 1}});
  CHECK(r.strict.test(1, 0));
  CHECK(r.strict.test(1, 2));
  CHECK(r.weak.test(0, 2));
  CHECK(r.weak.test(2, 0));
  CHECK(!r.strict.test(0, 2));
  CHECK(!r.weak.test(0, 1));
}
