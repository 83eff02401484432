#include "doctest.h"

#include "invext/forcing.hpp"
#include "invext/oracle.hpp"
#include "invext/scenarios.hpp"
#include "support.hpp"

using namespace invext;

namespace {

Scenario plain(unsigned n) {
  Scenario s;
  for (ElementId i = 0; i < n; ++i) s.elements.push_back({i, "e" + std::to_string(i), std::nullopt});
  return s;
}

}  // namespace

TEST_CASE("two-track: every (a,z) is forced above (b,z)") {
  const auto s = gen_two_track(5);
  const auto f = forced_set_exact(s, true);
  CHECK(f.verdicts.size() == 22 * 21 / 2);
  for (int z = -5; z <= 5; ++z) {
    const auto a = s.id_of("(a," + std::to_string(z) + ")");
    const auto b = s.id_of("(b," + std::to_string(z) + ")");
    CHECK(f.forced.strict.test(a, b));
    const auto& v = f.at(std::min(a, b), std::max(a, b));
    CHECK(v.status == (a < b ? PairStatus::forced_first_over_second : PairStatus::forced_second_over_first));
  }
  const auto novel = novel_pairs(f.forced, s, true);
  CHECK(novel.size() == 11);
  for (const auto& fact : novel) {
    CHECK(fact.kind == FactKind::strict);
    CHECK(s.label(fact.x).substr(0, 3) == "(a,");
    CHECK(s.label(fact.y).substr(0, 3) == "(b,");
    CHECK(s.label(fact.x).substr(3) == s.label(fact.y).substr(3));
  }
}

TEST_CASE("empty relation on two points is free") {
  const auto f = forced_set_exact(plain(2), false);
  REQUIRE(f.verdicts.size() == 1);
  CHECK(f.verdicts[0].status == PairStatus::free);
  CHECK(f.verdicts[0].eliminated.empty());
  CHECK(f.forced == RelationState(2));
}

TEST_CASE("unextendable scenarios throw") {
  CHECK_THROWS_AS(forced_set_exact(gen_koopmans(1), false), UnsatScenarioError);
  CHECK_THROWS_AS(forced_set_exact_parallel(gen_koopmans(1), false), UnsatScenarioError);
  auto cyclic = plain(2);
  cyclic.base_weak = {{0, 1}};
  cyclic.base_strict = {{1, 0}};
  CHECK_THROWS_WITH_AS(forced_set_exact(cyclic, false), doctest::Contains("inconsistent"), UnsatScenarioError);
}

TEST_CASE("serial and parallel forcing agree") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const auto s = gen_random(testing::corpus_spec(i, 9));
    const bool strong = strong_mode_admissible(s);
    if (!complete_extension(s, strong).sat) continue;
    const auto a = forced_set_exact(s, strong);
    const auto b = forced_set_exact_parallel(s, strong);
    CHECK(a.forced == b.forced);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t k = 0; k < a.verdicts.size(); ++k) CHECK(a.verdicts[k].status == b.verdicts[k].status);
  }
}

TEST_CASE("exact forcing refines the one-step classification") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const auto s = gen_random(testing::corpus_spec(i, 8));
    const bool strong = strong_mode_admissible(s);
    if (!complete_extension(s, strong).sat) continue;
    const auto closed = saturate(seed(s), s, strong);
    const auto f = forced_set_exact(s, strong);
    CHECK(closed.subset_of(f.forced));
    for (const auto& v : f.verdicts) {
      if (closed.related(v.first, v.second)) continue;
      const auto local = classify_pair(closed, s, v.first, v.second, strong);
      for (auto o : kOptions)
        if (!local.survives(o)) CHECK(!v.survives(o));
    }
  }
}

TEST_CASE("exact forcing matches brute force") {
  int compared = 0;
  for (std::uint64_t i = 0; i < 150; ++i) {
    const auto s = gen_random(testing::corpus_spec(i));
    const bool strong = strong_mode_admissible(s);
    const auto exts = oracle_extensions(s).extensions;
    CHECK(complete_extension(s, strong).sat == !exts.empty());
    if (exts.empty()) continue;
    ++compared;
    const auto f = forced_set_exact(s, strong);
    const auto o = oracle_forced_set(s.size(), exts);
    CHECK(f.forced == o.forced);
    for (std::size_t k = 0; k < f.verdicts.size(); ++k) CHECK(f.verdicts[k].status == o.verdicts[k].status);
  }
  CHECK(compared > 50);
}
