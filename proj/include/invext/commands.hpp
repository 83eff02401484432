#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "invext/oracle.hpp"
#include "invext/report.hpp"

namespace invext {

enum ExitCode : int { kOk = 0, kUsageError = 1, kUnsat = 2, kOracleMismatch = 3 };

enum class StrongMode { automatic, on, off };

struct CommandOptions {
  std::string command;  // check | forced | extend | oracle | dump
  std::optional<std::string> scenario_path;
  std::optional<std::string> gen;
  StrongMode strong = StrongMode::automatic;
  bool oracle = false;
  std::optional<std::string> dot_path;
  unsigned cap = kDefaultOracleCap;
  std::optional<std::string> json_path;
  std::optional<std::uint64_t> seed;
  bool serial = false;  // use the serial reference kernels
};

// Runs one command, writing the text report to out and diagnostics to err.
// Returns one of ExitCode.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

// The report a command produces, without touching the filesystem. Throws on
// load errors and cap violations; sets exit_code for UNSAT and mismatches.
struct CommandResult {
  RunReport report;
  int exit_code = kOk;
  std::optional<std::string> dot;
};
CommandResult execute(const CommandOptions& options, const Scenario& s);

}  // namespace invext
