#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invext/scenario.hpp"

namespace invext {

// Elements (a,z), (b,z) for z in [-half_width, half_width] under the shift
// z -> z+1 (partial at the right edge), with (a,z) ≻ (b,z±1) seeded wherever
// both ends lie in the window.
Scenario gen_two_track(int half_width);

// Consumption streams "prefix then constant tail" with prefixes over
// {a, b, a', b'} of length <= horizon and tails x* or y*, under the six
// prepend maps for a, b, a', b', x, y. Seeded with
//   a.x* ≻ b.y*,  b.x* ≻ a.y*   (rules out y* ≽ x*)
//   a'.y* ≻ b'.x*, b'.y* ≻ a'.x*   (rules out x* ≽ y*)
// and every prepend-translate of these that stays in the window.
// x* and y* get ids 0 and 1.
Scenario gen_koopmans(int horizon);

// Integer vectors in {1..2^depth}^dims under doubling (partial once a
// coordinate would exceed 2^depth). Empty seed.
Scenario gen_homothetic_grid(int dims, int depth);

// Dated rewards (y,t), t in [0, horizon], under the delay (y,t) -> (y,t+1).
// Empty seed.
Scenario gen_dated_rewards(const std::vector<std::string>& rewards, int horizon);

struct RandomSpec {
  unsigned n = 5;
  unsigned k = 2;
  double density = 0.3;  // chance that an unordered pair gets a seeded ranking
  std::uint64_t seed = 1;
  bool total = false;
  bool commutative = false;
};

// Reproducible from spec.seed. Commutative output uses powers of one random
// total map (total) or coordinate shifts on a relabelled grid (partial);
// otherwise tables are arbitrary.
Scenario gen_random(const RandomSpec& spec);

// "family:key=value,key=value", e.g. "two_track:N=5", "koopmans:L=1",
// "homothetic:dims=1,depth=2", "dated:rewards=y/z,horizon=2" (or rewards=<count>),
// "random:n=5,k=2,density=0.3,seed=7,total=1,commutative=0".
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::string> params;
};

GeneratorSpec parse_generator_spec(std::string_view text);

// seed_override replaces the "seed" parameter of random specs.
Scenario generate(const GeneratorSpec& spec, std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace invext
