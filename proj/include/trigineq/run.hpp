// Run configuration and dispatch for the command-line front end.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigineq/report.hpp"

namespace trigineq {

/// Bad flags, ranges, tags or output paths; the front end exits with 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { certify, lemmas, sharpness, series, scan, all };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

struct IntRange {
  long lo = 1;
  long hi = 1;
};

/// "3" or "1..25".
IntRange parse_range(std::string_view text);
/// Comma-separated rationals, "-1,-1/2,0".
std::vector<Rat> parse_rat_list(std::string_view text);

struct RunConfig {
  Command command = Command::certify;
  std::optional<FamilyTag> family;
  IntRange m{1, 1};
  std::optional<IntRange> n;  // defaults per command
  std::string interval = "0..pi";
  /// A rational, "m" for the bound m, or empty for the family default.
  std::string bound;
  std::optional<ClaimId> claim;
  std::vector<Rat> omegas{Rat(-1), Rat(0), Rat(1)};
  MethodChoice method = MethodChoice::automatic;
  int variant = 1;
  long precision_bits = kDefaultPrecisionBits;
  long grid_points = 2048;
  int depth = 10;
  long order = 64;
  long samples = 1000;
  std::string output = "-";
  std::string coefficients_path;
  Format format = Format::json;
  int jobs = 1;
  bool timings = false;
};

/// Throws UsageError naming the first problem.
void validate(const RunConfig& config);

/// Family default bound: m for B12, -1/4 for U14 and REMARK2_1 at m = 1, else 0.
Rat default_bound(const FamilyId& id);

/// The config fields that determine the output (no jobs, paths or timing flag).
Json config_echo(const RunConfig& config);

struct RunOutcome {
  ReportEnvelope report;
  int exit_code = 0;  // 0 all pass, 1 any failure
};

RunOutcome run(const RunConfig& config);

/// Validates, runs and writes the report; returns the process exit code.
/// Usage errors print to `diag` and return 2.
int execute(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace trigineq
