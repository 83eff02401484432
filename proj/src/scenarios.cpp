#include "invext/scenarios.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace invext {

namespace {

std::string pt(const std::string& base, std::int64_t z) { return "(" + base + "," + std::to_string(z) + ")"; }

void add_element(Scenario& s, std::string label, std::optional<Coords> coords = std::nullopt) {
  s.elements.push_back({static_cast<ElementId>(s.elements.size()), std::move(label), std::move(coords)});
}

}  // namespace

Scenario gen_two_track(int half_width) {
  if (half_width < 0) throw ScenarioError("two_track: N must be >= 0");
  Scenario s;
  s.name = "two_track_N" + std::to_string(half_width);
  s.description = "Tracks a and b over an integer window under the unit shift; (a,z) beats (b,z-1) and (b,z+1).";
  s.commutative = true;
  const int width = 2 * half_width + 1;
  auto id = [&](int track, int z) { return static_cast<ElementId>(track * width + (z + half_width)); };
  for (int track = 0; track < 2; ++track)
    for (int z = -half_width; z <= half_width; ++z) {
      const std::string base = track == 0 ? "a" : "b";
      add_element(s, pt(base, z), Coords{base, {z}});
    }
  std::vector<ElementId> shift(s.size(), kUndefined);
  for (int track = 0; track < 2; ++track)
    for (int z = -half_width; z < half_width; ++z) shift[id(track, z)] = id(track, z + 1);
  s.generators.emplace_back("shift", std::move(shift));
  for (int z = -half_width; z <= half_width; ++z) {
    if (z + 1 <= half_width) s.base_strict.push_back({id(0, z), id(1, z + 1)});
    if (z - 1 >= -half_width) s.base_strict.push_back({id(0, z), id(1, z - 1)});
  }
  validate(s);
  return s;
}

Scenario gen_koopmans(int horizon) {
  if (horizon < 1) throw ScenarioError("koopmans: L must be >= 1");
  static const std::vector<std::string> letters{"a", "b", "a'", "b'"};
  static const std::vector<std::string> tails{"x", "y"};

  Scenario s;
  s.name = "koopmans_L" + std::to_string(horizon);
  s.description =
      "Prepend-stationarity on streams; a/b rankings block y* >= x*, a'/b' rankings block x* >= y*.";
  s.commutative = false;

  // Prefixes by length, then lexicographically in letter order; tail x before y.
  std::vector<std::vector<int>> prefixes{{}};
  for (std::size_t start = 0, len = 0; len < static_cast<std::size_t>(horizon); ++len) {
    const std::size_t end = prefixes.size();
    for (std::size_t i = start; i < end; ++i)
      for (int c = 0; c < static_cast<int>(letters.size()); ++c) {
        auto p = prefixes[i];
        p.push_back(c);
        prefixes.push_back(std::move(p));
      }
    start = end;
  }
  std::map<std::pair<std::vector<int>, int>, ElementId> index;
  for (const auto& p : prefixes)
    for (int t = 0; t < 2; ++t) {
      std::string label;
      for (int c : p) label += letters[static_cast<std::size_t>(c)] + ".";
      label += tails[static_cast<std::size_t>(t)] + "*";
      index[{p, t}] = static_cast<ElementId>(s.size());
      add_element(s, label, Coords{tails[static_cast<std::size_t>(t)], std::vector<std::int64_t>(p.begin(), p.end())});
    }

  auto lookup = [&](const std::vector<int>& p, int t) -> ElementId {
    auto it = index.find({p, t});
    return it == index.end() ? kUndefined : it->second;
  };
  for (std::size_t c = 0; c < letters.size(); ++c) {
    std::vector<ElementId> table(s.size(), kUndefined);
    for (const auto& [key, id] : index) {
      auto p = key.first;
      p.insert(p.begin(), static_cast<int>(c));
      table[id] = lookup(p, key.second);
    }
    s.generators.emplace_back(letters[c], std::move(table));
  }
  // Prepending the tail's own prize to the bare constant stream leaves it unchanged.
  for (int t = 0; t < 2; ++t) {
    std::vector<ElementId> table(s.size(), kUndefined);
    table[lookup({}, t)] = lookup({}, t);
    s.generators.emplace_back(tails[static_cast<std::size_t>(t)], std::move(table));
  }

  struct Base {
    int hi_letter, hi_tail, lo_letter, lo_tail;
  };
  const std::vector<Base> base{{0, 0, 1, 1}, {1, 0, 0, 1}, {2, 1, 3, 0}, {3, 1, 2, 0}};
  for (const auto& u : prefixes) {
    if (u.size() + 1 > static_cast<std::size_t>(horizon)) continue;
    for (const auto& r : base) {
      auto hi = u;
      hi.push_back(r.hi_letter);
      auto lo = u;
      lo.push_back(r.lo_letter);
      s.base_strict.push_back({lookup(hi, r.hi_tail), lookup(lo, r.lo_tail)});
    }
  }
  validate(s);
  return s;
}

Scenario gen_homothetic_grid(int dims, int depth) {
  if (dims < 1 || depth < 1) throw ScenarioError("homothetic: dims and depth must be >= 1");
  const std::int64_t side = std::int64_t{1} << depth;
  std::int64_t total = 1;
  for (int d = 0; d < dims; ++d) {
    total *= side;
    if (total > 4096) throw ScenarioError("homothetic: grid larger than 4096 points");
  }
  Scenario s;
  s.name = "homothetic_d" + std::to_string(dims) + "_e" + std::to_string(depth);
  s.description = "Positive integer grid under doubling; rankings preserved by scaling.";
  s.commutative = true;

  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::int64_t> v(static_cast<std::size_t>(dims), 1);
  for (std::int64_t i = 0; i < total; ++i) {
    points.push_back(v);
    for (std::size_t d = v.size(); d-- > 0;) {
      if (++v[d] <= side) break;
      v[d] = 1;
    }
  }
  std::map<std::vector<std::int64_t>, ElementId> index;
  for (const auto& p : points) {
    std::string label = "(";
    for (std::size_t d = 0; d < p.size(); ++d) label += (d ? "," : "") + std::to_string(p[d]);
    label += ")";
    index[p] = static_cast<ElementId>(s.size());
    add_element(s, label, Coords{"v", p});
  }
  std::vector<ElementId> doubling(s.size(), kUndefined);
  for (const auto& p : points) {
    auto q = p;
    for (auto& c : q) c *= 2;
    if (auto it = index.find(q); it != index.end()) doubling[index[p]] = it->second;
  }
  s.generators.emplace_back("double", std::move(doubling));
  validate(s);
  return s;
}

Scenario gen_dated_rewards(const std::vector<std::string>& rewards, int horizon) {
  if (rewards.empty() || horizon < 1) throw ScenarioError("dated: need at least one reward and horizon >= 1");
  Scenario s;
  s.name = "dated_rewards_h" + std::to_string(horizon);
  s.description = "Dated rewards under a unit delay; stationary rankings.";
  s.commutative = true;
  for (const auto& y : rewards)
    for (int t = 0; t <= horizon; ++t) add_element(s, pt(y, t), Coords{y, {t}});
  std::vector<ElementId> delay(s.size(), kUndefined);
  const auto stride = static_cast<ElementId>(horizon + 1);
  for (ElementId r = 0; r < rewards.size(); ++r)
    for (ElementId t = 0; t + 1 < stride; ++t) delay[r * stride + t] = r * stride + t + 1;
  s.generators.emplace_back("delay", std::move(delay));
  validate(s);
  return s;
}

namespace {

// Portable draws from a seeded 64-bit engine.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : eng_() % m; }
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  std::vector<ElementId> permutation(std::size_t n) {
    std::vector<ElementId> p(n);
    std::iota(p.begin(), p.end(), ElementId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

std::vector<ElementId> compose_power(const std::vector<ElementId>& f, unsigned e) {
  std::vector<ElementId> out(f.size());
  std::iota(out.begin(), out.end(), ElementId{0});
  for (unsigned i = 0; i < e; ++i)
    for (auto& y : out) y = f[y];
  return out;
}

}  // namespace

Scenario gen_random(const RandomSpec& spec) {
  if (spec.n < 1 || spec.n > 4096) throw ScenarioError("random: n must be in [1, 4096]");
  if (spec.k > 16) throw ScenarioError("random: k must be <= 16");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw ScenarioError("random: density must be in [0, 1]");

  Draw draw(spec.seed);
  const auto n = spec.n;
  Scenario s;
  s.name = "random_n" + std::to_string(n) + "_k" + std::to_string(spec.k) + "_s" + std::to_string(spec.seed);
  s.description = std::string(spec.commutative ? "commutative" : "arbitrary") + (spec.total ? " total" : " partial") +
                  " random generators";
  s.commutative = spec.commutative;
  for (ElementId i = 0; i < n; ++i) add_element(s, "e" + std::to_string(i));

  if (spec.commutative && spec.total) {
    std::vector<ElementId> f;
    if (draw.chance(0.5)) {
      f = draw.permutation(n);
    } else {
      f.resize(n);
      for (auto& y : f) y = static_cast<ElementId>(draw.below(n));
    }
    for (unsigned g = 0; g < spec.k; ++g)
      s.generators.emplace_back("g" + std::to_string(g),
                                compose_power(f, 1 + static_cast<unsigned>(draw.below(3))));
  } else if (spec.commutative) {
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    const unsigned rows = divisors[draw.below(divisors.size())];
    const unsigned cols = n / rows;
    const auto place = draw.permutation(n);  // grid cell -> element id
    for (unsigned g = 0; g < spec.k; ++g) {
      bool along_rows = draw.chance(0.5);
      if (rows == 1) along_rows = false;
      if (cols == 1) along_rows = true;
      const unsigned step = 1 + static_cast<unsigned>(draw.below(2));
      std::vector<ElementId> table(n, kUndefined);
      for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < cols; ++c) {
          const unsigned r2 = along_rows ? r + step : r;
          const unsigned c2 = along_rows ? c : c + step;
          if (r2 < rows && c2 < cols) table[place[r * cols + c]] = place[r2 * cols + c2];
        }
      s.generators.emplace_back("g" + std::to_string(g), std::move(table));
    }
  } else {
    for (unsigned g = 0; g < spec.k; ++g) {
      std::vector<ElementId> table(n, kUndefined);
      for (auto& y : table)
        if (spec.total || draw.chance(0.75)) y = static_cast<ElementId>(draw.below(n));
      s.generators.emplace_back("g" + std::to_string(g), std::move(table));
    }
  }

  // At most one ranking per unordered pair, so the seed never contradicts itself.
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y) {
      if (!draw.chance(spec.density)) continue;
      const bool flip = draw.chance(0.5);
      const IdPair p = flip ? IdPair{y, x} : IdPair{x, y};
      if (draw.chance(0.5))
        s.base_strict.push_back(p);
      else
        s.base_weak.push_back(p);
    }
  validate(s);
  return s;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) return spec;
  std::stringstream rest{std::string(text.substr(colon + 1))};
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ScenarioError("generator parameter '" + item + "' is not key=value");
    spec.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

namespace {

class Params {
 public:
  explicit Params(const GeneratorSpec& spec) : spec_(spec) {}

  long long integer(const std::string& key, long long fallback) {
    used_.push_back(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument(it->second);
      return v;
    } catch (const std::exception&) {
      throw ScenarioError(spec_.family + ": parameter " + key + "='" + it->second + "' is not an integer");
    }
  }

  double real(const std::string& key, double fallback) {
    used_.push_back(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw ScenarioError(spec_.family + ": parameter " + key + "='" + it->second + "' is not a number");
    }
  }

  std::optional<std::string> text(const std::string& key) {
    used_.push_back(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return std::nullopt;
    return it->second;
  }

  void finish() const {
    for (const auto& [key, _] : spec_.params)
      if (std::find(used_.begin(), used_.end(), key) == used_.end())
        throw ScenarioError(spec_.family + ": unknown parameter '" + key + "'");
  }

 private:
  const GeneratorSpec& spec_;
  std::vector<std::string> used_;
};

}  // namespace

Scenario generate(const GeneratorSpec& spec, std::optional<std::uint64_t> seed_override) {
  Params p(spec);
  Scenario s;
  if (spec.family == "two_track") {
    const auto n = p.integer("N", 5);
    p.finish();
    s = gen_two_track(static_cast<int>(n));
  } else if (spec.family == "koopmans") {
    const auto l = p.integer("L", 1);
    p.finish();
    s = gen_koopmans(static_cast<int>(l));
  } else if (spec.family == "homothetic") {
    const auto dims = p.integer("dims", 1);
    const auto depth = p.integer("depth", 2);
    p.finish();
    s = gen_homothetic_grid(static_cast<int>(dims), static_cast<int>(depth));
  } else if (spec.family == "dated") {
    std::vector<std::string> rewards;
    const auto r = p.text("rewards").value_or("2");
    if (!r.empty() && std::all_of(r.begin(), r.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      for (int i = 0; i < std::stoi(r); ++i) rewards.push_back("r" + std::to_string(i));
    } else {
      std::stringstream names(r);
      std::string name;
      while (std::getline(names, name, '/'))
        if (!name.empty()) rewards.push_back(name);
    }
    const auto horizon = p.integer("horizon", 2);
    p.finish();
    s = gen_dated_rewards(rewards, static_cast<int>(horizon));
  } else if (spec.family == "random") {
    RandomSpec r;
    const auto n = p.integer("n", 5);
    const auto k = p.integer("k", 2);
    if (n < 1 || k < 0) throw ScenarioError("random: n must be >= 1 and k >= 0");
    r.n = static_cast<unsigned>(n);
    r.k = static_cast<unsigned>(k);
    r.density = p.real("density", 0.3);
    r.seed = static_cast<std::uint64_t>(p.integer("seed", 1));
    r.total = p.integer("total", 0) != 0;
    r.commutative = p.integer("commutative", 0) != 0;
    p.finish();
    if (seed_override) r.seed = *seed_override;
    s = gen_random(r);
  } else {
    throw ScenarioError("unknown generator family '" + spec.family + "'");
  }
  return s;
}

}  // namespace invext
