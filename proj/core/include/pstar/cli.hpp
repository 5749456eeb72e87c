#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstar/io.hpp"

namespace pstar {
namespace cli {

// Exit codes: 0 all invariants hold, 1 a mathematical check failed,
// 2 parse error, 3 algebra validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationFailure = 3;

struct Options {
  std::string path;
  std::string form;
  std::string functional;
  std::string subspace;
  std::string precore;
  std::string elem;       // basis name for `multipliers --elem`
  bool universal = false;
  std::string emit_dir;

  std::optional<double> tol;  // --tol, else PSTAR_TOL, else file, else default
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  bool json_output = false;
};

struct Outcome {
  Json report;
  int exit_code = kExitOk;
};

Outcome run_validate(const Options& opt);
Outcome run_multipliers(const Options& opt);
Outcome run_gns(const Options& opt);
Outcome run_decompose(const Options& opt);
Outcome run_check_core(const Options& opt);
Outcome run_regularity(const Options& opt);
Outcome run_fixtures(const Options& opt);

/// Dispatch by subcommand name; unknown names raise ParseError.
Outcome run_command(const std::string& command, const Options& opt);

/// Human-readable rendering of a report (the default, non --json output).
std::string render_text(const Json& report);

}  // namespace cli
}  // namespace pstar
