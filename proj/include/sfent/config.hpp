#pragma once

// Run configuration: a flat key = value file with [section] headers.
//
//   [run]         command, workers, output_dir, optimizer_cache
//   [model]       system, Z, omega, Z1, Z2, z_range, omega_range
//   [quadrature]  rel_tol, abs_tol, panel_order, max_panels,
//                 tail_cutoff_decades, oscillatory_panels_per_period
//   [curves]      figures, range, points_1d, points_2d, hydrogenic_z,
//                 helium_z, and per-figure grids figN = lo:hi:points
//
// Ranges are written a:b:step and are inclusive. '#' and ';' start comments.

#include "sfent/quadrature.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sfent {

enum class Command { report, sweep, curves, verify };
enum class SystemKind { hydrogenic, oscillator, helium, helium_ni };

Command parse_command(const std::string& s);
SystemKind parse_system(const std::string& s);
std::string to_string(Command c);
std::string to_string(SystemKind s);

struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    // start, start + step, ... up to stop (inclusive, with a small slack
    // against accumulated rounding). Members are computed as start + i*step.
    std::vector<double> values() const;
};

// "a:b:step"; a bare number gives a one-member range.
Range parse_range(const std::string& s);

struct CurveGrid {
    double lo = 0.0;
    double hi = 10.0;
    int points = 400;
};

// Figure ids known to emit_curves, fig1..fig14.
const std::vector<std::string>& known_figures();

struct RunConfig {
    Command command = Command::report;
    SystemKind system = SystemKind::hydrogenic;
    std::optional<double> Z;
    std::optional<double> omega;
    // Explicit split-shell exponents; both or neither.
    std::optional<double> Z1;
    std::optional<double> Z2;
    std::optional<Range> z_range;
    std::optional<Range> omega_range;

    QuadratureSpec quadrature;
    std::filesystem::path output_dir = "sfent_out";
    // Empty: <output_dir>/optimizer_cache.txt
    std::filesystem::path optimizer_cache;
    int workers = 1;

    std::vector<std::string> figures;  // empty: all
    CurveGrid grid_1d{0.0, 10.0, 400};
    CurveGrid grid_2d{0.0, 10.0, 200};
    std::map<std::string, CurveGrid> figure_grids;
    Range hydrogenic_z{1.0, 30.0, 1.0};
    Range helium_z{2.0, 10.0, 1.0};

    // Throws Error(ConfigError).
    void validate() const;

    std::filesystem::path cache_path() const;
    CurveGrid grid_for(const std::string& figure) const;
};

struct IniEntry {
    std::string value;
    std::string where;  // source:line, for messages
};

using IniDocument = std::map<std::string, std::map<std::string, IniEntry>>;

// Throws Error(ConfigError) with source:line on malformed input.
IniDocument parse_ini(std::istream& in, const std::string& source = "<config>");

// Keys not listed in the header comment are rejected.
void apply_ini(RunConfig& config, const IniDocument& doc);

RunConfig load_config(const std::filesystem::path& path);

// SFENT_OUTPUT_DIR, when set and non-empty, replaces output_dir.
void apply_environment(RunConfig& config);

} // namespace sfent
