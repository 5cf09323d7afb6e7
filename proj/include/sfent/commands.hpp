#pragma once

// The four CLI commands. Each writes its files under config.output_dir,
// prints to out and returns the process exit code:
//   0  success
//   1  a numeric failure (report/sweep/curves) or a failed check (verify)
//   2  invalid configuration
// Library errors never escape.

#include "sfent/config.hpp"

#include <iosfwd>

namespace sfent {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

// report.csv plus a name/value table on out.
int run_report(const RunConfig& config, std::ostream& out, std::ostream& err);

// sweep_<system>.csv, one row per member ordered by parameter. Members that
// fail are written with an error status and make the exit code nonzero.
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

// figN.csv for each requested figure.
int emit_curves(const RunConfig& config, std::ostream& out, std::ostream& err);

// One line per named check on out and verify.csv. Nonzero iff a check failed.
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatch on config.command.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace sfent
