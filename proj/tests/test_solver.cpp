#include <random>

#include "doctest.h"

#include "invext/oracle.hpp"
#include "invext/scenarios.hpp"
#include "invext/solver.hpp"
#include "support.hpp"

using namespace invext;

namespace {

Scenario plain(unsigned n) {
  Scenario s;
  for (ElementId i = 0; i < n; ++i) s.elements.push_back({i, "e" + std::to_string(i), std::nullopt});
  return s;
}

RelationState closed(const Scenario& s, bool strong) { return saturate(seed(s), s, strong); }

}  // namespace

TEST_CASE("classify_pair: two-track forces (a,0) above (b,0)") {
  const auto s = gen_two_track(5);
  const auto a0 = s.id_of("(a,0)"), b0 = s.id_of("(b,0)");
  const auto v = classify_pair(closed(s, true), s, a0, b0, true);
  CHECK(v.status == PairStatus::forced_first_over_second);
  CHECK(v.survives(Option::first_over_second));
  CHECK(!v.survives(Option::second_over_first));
  CHECK(!v.survives(Option::indifferent));
  for (const auto& e : v.eliminated) {
    CHECK(e.kind == EliminationKind::cycle);
    CHECK(e.cycle_at.has_value());
  }
}

TEST_CASE("classify_pair: Koopmans pair {x*, y*} is locally unextendable") {
  const auto s = gen_koopmans(1);
  const auto v = classify_pair(closed(s, false), s, s.id_of("x*"), s.id_of("y*"), false);
  CHECK(v.status == PairStatus::locally_unextendable);
  CHECK(v.eliminated.size() == 3);
}

TEST_CASE("classify_pair: unconstrained pair is free; related pair is rejected") {
  const auto s = plain(3);
  CHECK(classify_pair(closed(s, false), s, 0, 2, false).status == PairStatus::free);

  auto r = plain(2);
  r.base_strict = {{0, 1}};
  CHECK_THROWS_WITH_AS(classify_pair(closed(r, false), r, 0, 1, false), doctest::Contains("e0 >= e1"),
                       PreconditionError);
}

TEST_CASE("classify_pair verdicts mirror") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const auto s = gen_random(testing::corpus_spec(i, 8));
    const bool strong = strong_mode_admissible(s);
    const auto st = closed(s, strong);
    if (!is_consistent(st)) continue;
    for (ElementId w = 0; w < s.size(); ++w)
      for (ElementId z = w + 1; z < s.size(); ++z) {
        if (st.related(w, z)) continue;
        CHECK(classify_pair(st, s, z, w, strong) == mirrored(classify_pair(st, s, w, z, strong)));
      }
  }
}

TEST_CASE("complete_extension examples") {
  const auto tt = gen_two_track(5);
  const auto r = complete_extension(tt, true);
  REQUIRE(r.sat);
  const auto a0 = tt.id_of("(a,0)"), b0 = tt.id_of("(b,0)");
  CHECK(r.extension.strict.test(a0, b0));
  CHECK(verify_extension(tt, r.extension).all_passed());

  const auto k = gen_koopmans(1);
  const auto u = complete_extension(k, false);
  CHECK(!u.sat);
  CHECK(!u.seed_conflict);
  CHECK(u.certificate == std::vector<IdPair>{{k.id_of("x*"), k.id_of("y*")}});

  // Options are tried strict-first, so the empty relation completes to 0 > 1 > 2.
  const auto e = complete_extension(plain(3), false);
  REQUIRE(e.sat);
  CHECK(levels_of(e.extension) == std::vector<std::vector<ElementId>>{{0}, {1}, {2}});
}

TEST_CASE("complete_extension reports a cyclic seed") {
  auto s = plain(3);
  s.base_weak = {{0, 1}, {1, 2}};
  s.base_strict = {{2, 0}};
  const auto r = complete_extension(s, false);
  CHECK(!r.sat);
  CHECK(r.seed_conflict.has_value());
}

TEST_CASE("verify_extension examples") {
  const auto tt = gen_two_track(2);
  CHECK(verify_extension(tt, complete_extension(tt, true).extension).all_passed());

  const auto id2 = verify_extension(plain(2), RelationState(2));
  CHECK(!id2.find("complete")->passed);

  auto s = plain(2);
  s.base_strict = {{0, 1}};
  RelationState flipped(2);
  flipped.assert_strict(1, 0);
  const auto rep = verify_extension(s, flipped);
  CHECK(rep.find("complete")->passed);
  CHECK(!rep.find("extends-seed-strict")->passed);

  // A complete order that a generator does not preserve.
  auto g = plain(4);
  g.generators.emplace_back("g", std::vector<ElementId>{2, 3, kUndefined, kUndefined});
  RelationState order(4);
  order.assert_strict(0, 1);
  order.assert_strict(3, 2);
  order.assert_strict(0, 2);
  order.assert_strict(0, 3);
  order.assert_strict(1, 2);
  order.assert_strict(1, 3);
  const auto bad = verify_extension(g, order);
  CHECK(bad.find("transitive")->passed);
  CHECK(!bad.find("coherent")->passed);
}

TEST_CASE("eliminated options are never realized by an oracle extension") {
  for (std::uint64_t i = 0; i < 120; ++i) {
    const auto s = gen_random(testing::corpus_spec(i));
    const bool strong = strong_mode_admissible(s);
    const auto st = closed(s, strong);
    if (!is_consistent(st)) continue;
    const auto exts = oracle_extensions(s).extensions;
    for (ElementId w = 0; w < s.size(); ++w)
      for (ElementId z = w + 1; z < s.size(); ++z) {
        if (st.related(w, z)) continue;
        const auto v = classify_pair(st, s, w, z, strong);
        for (const auto& e : exts) {
          const Option realized = e.level[w] < e.level[z]   ? Option::first_over_second
                                  : e.level[z] < e.level[w] ? Option::second_over_first
                                                            : Option::indifferent;
          CHECK(v.survives(realized));
        }
      }
  }
}

TEST_CASE("total commuting generators with a consistent closure always extend") {
  int tried = 0;
  for (std::uint64_t i = 0; tried < 60; ++i) {
    RandomSpec spec{4 + static_cast<unsigned>(i % 5), 1 + static_cast<unsigned>(i % 2), 0.3, 9000 + i, true, true};
    const auto s = gen_random(spec);
    if (!is_consistent(closed(s, true))) continue;
    ++tried;
    const auto r = complete_extension(s, true);
    REQUIRE(r.sat);
    CHECK(verify_extension(s, r.extension).all_passed());
  }
}

TEST_CASE("transitive closure extends the seed exactly when no strict self-loop appears") {
  int cyclic = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto s = gen_random(testing::corpus_spec(i, 8));
    if (i % 4 == 0 && s.size() >= 3) {
      // Close a ring x0 ≽ x1 ≽ ... ≽ x_{m-1} ≻ x0.
      s.base_weak.clear();
      s.base_strict.clear();
      for (ElementId x = 0; x + 1 < s.size(); ++x) s.base_weak.push_back({x, x + 1});
      s.base_strict.push_back({static_cast<ElementId>(s.size() - 1), 0});
      ++cyclic;
    }
    const auto t = saturate(seed(s), s, Rules::transitivity_only());
    bool extends = true;
    for (auto [x, y] : s.base_strict) extends = extends && !t.weak.test(y, x);
    CHECK(extends == is_consistent(t));
  }
  CHECK(cyclic > 10);
}
