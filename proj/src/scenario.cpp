#include "invext/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace invext {

bool Generator::is_total() const noexcept {
  return std::none_of(table_.begin(), table_.end(), [](ElementId y) { return y == kUndefined; });
}

std::vector<ElementId> Generator::domain() const {
  std::vector<ElementId> dom;
  for (ElementId x = 0; x < table_.size(); ++x)
    if (table_[x] != kUndefined) dom.push_back(x);
  return dom;
}

Word Word::from_exponents(const std::vector<unsigned>& exponents) {
  Word w;
  for (std::size_t g = 0; g < exponents.size(); ++g)
    w.letters.insert(w.letters.end(), exponents[g], g);
  return w;
}

std::vector<unsigned> Word::exponents(std::size_t num_generators) const {
  std::vector<unsigned> e(num_generators, 0);
  for (std::size_t g : letters) ++e.at(g);
  return e;
}

Word Word::then(const Word& inner) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), inner.letters.begin(), inner.letters.end());
  return w;
}

std::optional<ElementId> Scenario::find(std::string_view label) const {
  for (const auto& e : elements)
    if (e.label == label) return e.id;
  return std::nullopt;
}

ElementId Scenario::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw ScenarioError("no element labelled '" + std::string(label) + "'");
}

std::vector<CommutativityViolation> check_commutativity(const Scenario& s) {
  std::vector<CommutativityViolation> out;
  const auto k = s.generators.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& f = s.generators[i];
      const auto& g = s.generators[j];
      for (ElementId x = 0; x < s.size(); ++x) {
        const ElementId gx = g(x);
        const ElementId fx = f(x);
        if (gx == kUndefined || fx == kUndefined) continue;
        const ElementId fg = f(gx);
        const ElementId gf = g(fx);
        if (fg == kUndefined || gf == kUndefined) continue;
        if (fg != gf) out.push_back({i, j, x, fg, gf});
      }
    }
  }
  return out;
}

ElementId apply_word(const Scenario& s, const Word& w, ElementId x) {
  if (x >= s.size()) return kUndefined;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    x = s.generators.at(*it)(x);
    if (x == kUndefined) return kUndefined;
  }
  return x;
}

namespace {

std::string pair_text(const Scenario& s, IdPair p) {
  auto name = [&](ElementId id) {
    return id < s.size() ? s.elements[id].label : "#" + std::to_string(id);
  };
  return "(" + name(p.first) + ", " + name(p.second) + ")";
}

}  // namespace

void validate(const Scenario& s) {
  const auto n = s.size();
  std::set<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = s.elements[i];
    if (e.id != i)
      throw ScenarioError("element '" + e.label + "' has id " + std::to_string(e.id) + ", expected " +
                          std::to_string(i) + " (ids must be contiguous from 0)");
    if (!labels.insert(e.label).second) throw ScenarioError("duplicate element label '" + e.label + "'");
  }

  std::set<std::string> names;
  for (const auto& g : s.generators) {
    if (!names.insert(g.name()).second) throw ScenarioError("duplicate generator name '" + g.name() + "'");
    if (g.window_size() != n)
      throw ScenarioError("generator '" + g.name() + "' table covers " + std::to_string(g.window_size()) +
                          " points, window has " + std::to_string(n));
    for (ElementId x = 0; x < n; ++x) {
      const ElementId y = g(x);
      if (y != kUndefined && y >= n)
        throw ScenarioError("generator '" + g.name() + "' maps " + s.elements[x].label + " to unknown id " +
                            std::to_string(y));
    }
  }

  auto check_ids = [&](const std::vector<IdPair>& pairs, const char* kind) {
    for (const auto& p : pairs)
      if (p.first >= n || p.second >= n)
        throw ScenarioError(std::string(kind) + " pair [" + std::to_string(p.first) + ", " +
                            std::to_string(p.second) + "] references an unknown id");
  };
  check_ids(s.base_weak, "weak");
  check_ids(s.base_strict, "strict");

  std::set<IdPair> strict(s.base_strict.begin(), s.base_strict.end());
  for (const auto& p : s.base_strict) {
    if (p.first == p.second) throw ScenarioError("strict pair " + pair_text(s, p) + " ranks an element above itself");
    if (strict.count({p.second, p.first}))
      throw ScenarioError("strict pairs " + pair_text(s, p) + " and " + pair_text(s, {p.second, p.first}) +
                          " contradict each other");
  }

  if (s.commutative) {
    const auto violations = check_commutativity(s);
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw ScenarioError("scenario declared commutative but generators '" + s.generators[v.first].name() +
                          "' and '" + s.generators[v.second].name() + "' disagree at " +
                          s.elements[v.point].label);
    }
  }
}

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) throw ScenarioError(where + " must be an object");
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ScenarioError("unknown field '" + key + "' in " + where);
}

ElementId read_id(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() >= static_cast<std::int64_t>(kUndefined))
    throw ScenarioError(where + ": expected a non-negative integer id");
  return j.get<ElementId>();
}

IdPair read_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError(where + ": expected a [x, y] pair");
  return {read_id(j[0], where), read_id(j[1], where)};
}

std::vector<IdPair> read_pairs(const json& j, const std::string& field) {
  std::vector<IdPair> out;
  if (!j.contains(field)) return out;
  if (!j[field].is_array()) throw ScenarioError("'" + field + "' must be an array");
  for (std::size_t i = 0; i < j[field].size(); ++i)
    out.push_back(read_pair(j[field][i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  reject_unknown(j, {"name", "description", "commutative", "elements", "generators", "weak", "strict"},
                 "scenario");
  Scenario s;
  try {
    s.name = j.value("name", std::string{});
    s.description = j.value("description", std::string{});
    s.commutative = j.value("commutative", false);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("bad scenario header: ") + e.what());
  }
  if (!j.contains("elements") || !j["elements"].is_array()) throw ScenarioError("'elements' array is required");

  for (const auto& je : j["elements"]) {
    reject_unknown(je, {"id", "label", "coords"}, "element");
    Element e;
    if (!je.contains("id")) throw ScenarioError("element without 'id'");
    e.id = read_id(je["id"], "element id");
    if (!je.contains("label") || !je["label"].is_string())
      throw ScenarioError("element " + std::to_string(e.id) + " needs a string 'label'");
    e.label = je["label"].get<std::string>();
    if (je.contains("coords")) {
      const auto& jc = je["coords"];
      reject_unknown(jc, {"base", "vec"}, "coords of '" + e.label + "'");
      try {
        e.coords = Coords{jc.value("base", std::string{}), jc.value("vec", std::vector<std::int64_t>{})};
      } catch (const json::exception& ex) {
        throw ScenarioError("bad coords on '" + e.label + "': " + ex.what());
      }
    }
    s.elements.push_back(std::move(e));
  }
  std::sort(s.elements.begin(), s.elements.end(), [](const Element& a, const Element& b) { return a.id < b.id; });

  const auto n = s.elements.size();
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw ScenarioError("'generators' must be an array");
    for (const auto& jg : j["generators"]) {
      reject_unknown(jg, {"name", "map"}, "generator");
      if (!jg.contains("name") || !jg["name"].is_string()) throw ScenarioError("generator needs a string 'name'");
      const auto name = jg["name"].get<std::string>();
      std::vector<ElementId> table(n, kUndefined);
      if (jg.contains("map")) {
        if (!jg["map"].is_array()) throw ScenarioError("generator '" + name + "': 'map' must be an array");
        for (const auto& jm : jg["map"]) {
          const auto [src, dst] = read_pair(jm, "generator '" + name + "' map entry");
          if (src >= n) throw ScenarioError("generator '" + name + "' maps unknown id " + std::to_string(src));
          if (dst >= n)
            throw ScenarioError("generator '" + name + "' maps to unknown id " + std::to_string(dst));
          if (table[src] != kUndefined)
            throw ScenarioError("generator '" + name + "' assigns two images to id " + std::to_string(src));
          table[src] = dst;
        }
      }
      s.generators.emplace_back(name, std::move(table));
    }
  }
  s.base_weak = read_pairs(j, "weak");
  s.base_strict = read_pairs(j, "strict");
  validate(s);
  return s;
}

Scenario load_scenario(std::string_view document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("parse error: ") + e.what());
  }
  return scenario_from_json(j);
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

json to_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  j["description"] = s.description;
  j["commutative"] = s.commutative;
  j["elements"] = json::array();
  for (const auto& e : s.elements) {
    json je{{"id", e.id}, {"label", e.label}};
    if (e.coords) je["coords"] = json{{"base", e.coords->base}, {"vec", e.coords->vec}};
    j["elements"].push_back(std::move(je));
  }
  j["generators"] = json::array();
  for (const auto& g : s.generators) {
    json map = json::array();
    for (ElementId x = 0; x < g.window_size(); ++x)
      if (g.defined_at(x)) map.push_back({x, g(x)});
    j["generators"].push_back(json{{"name", g.name()}, {"map", std::move(map)}});
  }
  auto pairs = [](const std::vector<IdPair>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back({p.first, p.second});
    return a;
  };
  j["weak"] = pairs(s.base_weak);
  j["strict"] = pairs(s.base_strict);
  return j;
}

std::string serialize(const Scenario& s) { return to_json(s).dump(2) + "\n"; }

}  // namespace invext
