#include <iostream>

#include "CLI11.hpp"

#include "invext/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariant weak-order extension solver"};
  app.require_subcommand(1);

  invext::CommandOptions options;
  std::string strong = "auto";
  std::string json_path, dot_path, scenario_path, gen;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario_path, "scenario document (JSON)");
    sub->add_option("--gen", gen, "generator spec, e.g. two_track:N=5 or random:n=5,k=2,seed=3");
    sub->add_option("--seed", seed, "seed for random generator specs");
    sub->add_option("--json", json_path, "write the machine-readable report here");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--strong", strong, "backward coherency rule: auto (commutative-gated), on, off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    sub->add_option("--cap", options.cap, "largest window the oracle will enumerate");
    sub->add_flag("--serial", options.serial, "use the serial reference kernels");
  };

  auto* check = app.add_subcommand("check", "validate, check commutativity, saturate, report consistency");
  auto* forced = app.add_subcommand("forced", "exact forced predictions and novel pairs");
  auto* extend = app.add_subcommand("extend", "find and verify a complete coherent extension");
  auto* oracle = app.add_subcommand("oracle", "certify solver outputs against brute-force enumeration");
  auto* dump = app.add_subcommand("dump", "write the scenario document");
  for (auto* sub : {check, forced, extend, oracle, dump}) add_common(sub);
  for (auto* sub : {check, forced, extend, oracle}) add_solver(sub);
  forced->add_flag("--oracle", options.oracle, "also diff against the brute-force oracle");
  extend->add_option("--dot", dot_path, "write a Hasse diagram of the extension (DOT)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : invext::kUsageError;
  }

  options.command = app.get_subcommands().front()->get_name();
  const auto* sub = app.get_subcommands().front();
  if (!scenario_path.empty()) options.scenario_path = scenario_path;
  if (!gen.empty()) options.gen = gen;
  if (sub->count("--seed") > 0) options.seed = seed;
  if (!json_path.empty()) options.json_path = json_path;
  if (!dot_path.empty()) options.dot_path = dot_path;
  options.strong = strong == "on" ? invext::StrongMode::on
                   : strong == "off" ? invext::StrongMode::off
                                     : invext::StrongMode::automatic;
  return invext::run_command(options, std::cout, std::cerr);
}
