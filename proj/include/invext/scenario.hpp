#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace invext {

using ElementId = std::uint32_t;
using IdPair = std::pair<ElementId, ElementId>;

inline constexpr ElementId kUndefined = std::numeric_limits<ElementId>::max();

// Raised for malformed or inconsistent scenario documents.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structured label used by the scenario generators: a base symbol plus an
// integer vector, e.g. ("a", {3}) for the two-track element (a,3).
struct Coords {
  std::string base;
  std::vector<std::int64_t> vec;

  friend bool operator==(const Coords&, const Coords&) = default;
};

struct Element {
  ElementId id = 0;
  std::string label;
  std::optional<Coords> coords;

  friend bool operator==(const Element&, const Element&) = default;
};

// A transformation restricted to the window. Entries equal to kUndefined mark
// points whose image falls outside the window.
class Generator {
 public:
  Generator() = default;
  Generator(std::string name, std::vector<ElementId> table)
      : name_(std::move(name)), table_(std::move(table)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<ElementId>& table() const noexcept { return table_; }
  std::size_t window_size() const noexcept { return table_.size(); }

  bool defined_at(ElementId x) const noexcept { return x < table_.size() && table_[x] != kUndefined; }
  bool is_total() const noexcept;

  // kUndefined when x leaves the window.
  ElementId operator()(ElementId x) const noexcept { return x < table_.size() ? table_[x] : kUndefined; }

  // Points at which the generator is defined, ascending.
  std::vector<ElementId> domain() const;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  std::string name_;
  std::vector<ElementId> table_;
};

// A formal composition of generators. letters are generator indices; the
// word [g0, g1, g2] denotes g0 ∘ g1 ∘ g2, so g2 acts first. The empty word is
// the identity.
struct Word {
  std::vector<std::size_t> letters;

  static Word identity() { return {}; }

  // Canonical word for an exponent vector (commutative mode): generator 0
  // repeated e[0] times, then generator 1, and so on.
  static Word from_exponents(const std::vector<unsigned>& exponents);

  // Exponent vector of this word over num_generators generators.
  std::vector<unsigned> exponents(std::size_t num_generators) const;

  Word then(const Word& inner) const;  // this ∘ inner

  friend bool operator==(const Word&, const Word&) = default;
};

struct Scenario {
  std::string name;
  std::string description;
  bool commutative = false;
  std::vector<Element> elements;
  std::vector<Generator> generators;
  std::vector<IdPair> base_weak;    // x ≽ y assertions
  std::vector<IdPair> base_strict;  // x ≻ y assertions

  std::size_t size() const noexcept { return elements.size(); }
  const std::string& label(ElementId id) const { return elements.at(id).label; }
  std::optional<ElementId> find(std::string_view label) const;
  // Throws ScenarioError when no element has that label.
  ElementId id_of(std::string_view label) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// One witnessed failure of pointwise commutativity: first(second(x)) and
// second(first(x)) are both defined and differ.
struct CommutativityViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  ElementId point = 0;
  ElementId first_after_second = 0;
  ElementId second_after_first = 0;

  friend bool operator==(const CommutativityViolation&, const CommutativityViolation&) = default;
};

std::vector<CommutativityViolation> check_commutativity(const Scenario& s);

// Image of x under w, or kUndefined if any intermediate step leaves the window.
ElementId apply_word(const Scenario& s, const Word& w, ElementId x);

// Checks every structural invariant and, for declared-commutative scenarios,
// pointwise commutativity. Throws ScenarioError naming the offending entity.
void validate(const Scenario& s);

Scenario load_scenario(std::string_view document);
Scenario load_scenario_file(const std::filesystem::path& path);

nlohmann::json to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
std::string serialize(const Scenario& s);

}  // namespace invext
