#include "invext/forcing.hpp"

#include <array>
#include <atomic>
#include <cstddef>

namespace invext {

const PairVerdict& ForcedSet::at(ElementId first, ElementId second) const {
  for (const auto& v : verdicts)
    if (v.first == first && v.second == second) return v;
  throw std::out_of_range("no verdict for pair (" + std::to_string(first) + ", " + std::to_string(second) + ")");
}

RelationState forced_relation(const std::vector<PairVerdict>& verdicts, std::size_t n) {
  RelationState r(n);
  for (const auto& v : verdicts) {
    const bool a = v.survives(Option::first_over_second);
    const bool b = v.survives(Option::second_over_first);
    const bool c = v.survives(Option::indifferent);
    if (!b) r.weak.set(v.first, v.second);
    if (!a) r.weak.set(v.second, v.first);
    if (!b && !c) r.strict.set(v.first, v.second);
    if (!a && !c) r.strict.set(v.second, v.first);
  }
  return r;
}

namespace {

std::vector<IdPair> all_pairs(std::size_t n) {
  std::vector<IdPair> pairs;
  if (n > 1) pairs.reserve(n * (n - 1) / 2);
  for (ElementId w = 0; w < n; ++w)
    for (ElementId z = w + 1; z < n; ++z) pairs.push_back({w, z});
  return pairs;
}

Option realized(const RelationState& complete, ElementId w, ElementId z) {
  if (complete.weak.test(w, z) && complete.weak.test(z, w)) return Option::indifferent;
  return complete.weak.test(w, z) ? Option::first_over_second : Option::second_over_first;
}

struct Prepared {
  RelationState root;
  RelationState first_witness;
};

Prepared prepare(const Scenario& s, bool strong) {
  RelationState root = saturate(seed(s), s, strong);
  if (auto x = conflict_witness(root))
    throw UnsatScenarioError("seed is inconsistent: " + s.label(*x) + " is forced above itself");
  auto base = complete_extension_from(root, s, strong);
  if (!base.sat) throw UnsatScenarioError("scenario has no complete coherent extension on the window");
  return {std::move(root), std::move(base.extension)};
}

// Settles one option of one pair. Returns the elimination, or nothing if the
// option is realizable; a realizing extension is written to witness.
std::optional<Elimination> try_option(const RelationState& root, const Scenario& s, bool strong, ElementId w,
                                      ElementId z, Option o, RelationState* witness) {
  RelationState trial = root;
  assert_option(trial, w, z, o);
  saturate_in_place(trial, s, Rules::full(strong));
  if (auto x = conflict_witness(trial)) return Elimination{o, EliminationKind::cycle, x};
  auto r = complete_extension_from(trial, s, strong);
  if (!r.sat) return Elimination{o, EliminationKind::no_completion, std::nullopt};
  if (witness) *witness = std::move(r.extension);
  return std::nullopt;
}

PairVerdict finish(ElementId w, ElementId z, std::vector<Elimination> eliminated) {
  PairVerdict v{w, z, PairStatus::free, std::move(eliminated)};
  std::array<bool, 3> survives{};
  for (std::size_t i = 0; i < kOptions.size(); ++i) survives[i] = v.survives(kOptions[i]);
  v.status = status_from_survivors(survives);
  return v;
}

}  // namespace

ForcedSet forced_set_exact(const Scenario& s, bool strong) {
  const auto n = s.size();
  const auto prepared = prepare(s, strong);
  const auto pairs = all_pairs(n);

  // known[p][o]: option o of pair p is realized by some witness already found.
  std::vector<std::array<bool, 3>> known(pairs.size());
  auto absorb = [&](const RelationState& witness) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      known[p][static_cast<std::size_t>(realized(witness, pairs[p].first, pairs[p].second))] = true;
  };
  absorb(prepared.first_witness);

  ForcedSet out;
  out.verdicts.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [w, z] = pairs[p];
    std::vector<Elimination> eliminated;
    for (std::size_t i = 0; i < kOptions.size(); ++i) {
      if (known[p][i]) continue;
      RelationState witness;
      if (auto e = try_option(prepared.root, s, strong, w, z, kOptions[i], &witness))
        eliminated.push_back(*e);
      else
        absorb(witness);
    }
    out.verdicts.push_back(finish(w, z, std::move(eliminated)));
  }
  out.forced = forced_relation(out.verdicts, n);
  return out;
}

ForcedSet forced_set_exact_parallel(const Scenario& s, bool strong) {
  const auto n = s.size();
  const auto prepared = prepare(s, strong);
  const auto pairs = all_pairs(n);
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());

  // Shared witness cache: bit i of known[p] set once option kOptions[i] of
  // pair p is realized. Verdicts do not depend on which thread fills it.
  std::vector<std::atomic<std::uint8_t>> known(pairs.size());
  auto absorb = [&](const RelationState& witness) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto o = static_cast<unsigned>(realized(witness, pairs[p].first, pairs[p].second));
      const auto bit = static_cast<std::uint8_t>(1u << o);
      if (!(known[p].load(std::memory_order_relaxed) & bit)) known[p].fetch_or(bit, std::memory_order_relaxed);
    }
  };
  absorb(prepared.first_witness);

  ForcedSet out;
  out.verdicts.resize(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const auto [w, z] = pairs[static_cast<std::size_t>(p)];
    std::vector<Elimination> eliminated;
    for (std::size_t i = 0; i < kOptions.size(); ++i) {
      if (known[static_cast<std::size_t>(p)].load(std::memory_order_relaxed) & (1u << i)) continue;
      RelationState witness;
      if (auto e = try_option(prepared.root, s, strong, w, z, kOptions[i], &witness))
        eliminated.push_back(*e);
      else
        absorb(witness);
    }
    out.verdicts[static_cast<std::size_t>(p)] = finish(w, z, std::move(eliminated));
  }
  out.forced = forced_relation(out.verdicts, n);
  return out;
}

}  // namespace invext
