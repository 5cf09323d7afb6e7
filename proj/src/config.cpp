#include "sfent/config.hpp"

#include "sfent/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sfent {

namespace {

[[noreturn]] void config_error(const std::string& msg)
{
    throw Error(ErrorKind::ConfigError, msg);
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        config_error(what + ": not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        config_error(what + ": not a finite number: '" + s + "'");
    return v;
}

int parse_int(const std::string& s, const std::string& what)
{
    const double v = parse_double(s, what);
    if (v != std::floor(v) || std::abs(v) > 2e9)
        config_error(what + ": expected an integer, got '" + s + "'");
    return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep))
        out.push_back(trim(item));
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

CurveGrid parse_grid(const std::string& s, const std::string& what)
{
    const auto parts = split(s, ':');
    if (parts.size() != 3)
        config_error(what + ": expected lo:hi:points, got '" + s + "'");
    return {parse_double(parts[0], what), parse_double(parts[1], what), parse_int(parts[2], what)};
}

void check_grid(const CurveGrid& g, const std::string& what)
{
    if (!(g.hi > g.lo) || g.lo < 0.0 || g.points < 2)
        config_error(what + ": grid needs 0 <= lo < hi and at least 2 points");
}

void check_range(const Range& r, const std::string& what)
{
    if (!(r.step > 0.0))
        config_error(what + ": step must be > 0");
    if (r.stop < r.start)
        config_error(what + ": empty range (stop < start)");
}

} // namespace

Command parse_command(const std::string& s)
{
    if (s == "report") return Command::report;
    if (s == "sweep") return Command::sweep;
    if (s == "curves") return Command::curves;
    if (s == "verify") return Command::verify;
    config_error("unknown command '" + s + "' (report, sweep, curves, verify)");
}

SystemKind parse_system(const std::string& s)
{
    if (s == "hydrogenic") return SystemKind::hydrogenic;
    if (s == "oscillator") return SystemKind::oscillator;
    if (s == "helium") return SystemKind::helium;
    if (s == "helium-NI" || s == "helium-ni") return SystemKind::helium_ni;
    config_error("unknown system '" + s + "' (hydrogenic, oscillator, helium, helium-NI)");
}

std::string to_string(Command c)
{
    switch (c) {
    case Command::report: return "report";
    case Command::sweep: return "sweep";
    case Command::curves: return "curves";
    case Command::verify: return "verify";
    }
    return "?";
}

std::string to_string(SystemKind s)
{
    switch (s) {
    case SystemKind::hydrogenic: return "hydrogenic";
    case SystemKind::oscillator: return "oscillator";
    case SystemKind::helium: return "helium";
    case SystemKind::helium_ni: return "helium-NI";
    }
    return "?";
}

std::vector<double> Range::values() const
{
    check_range(*this, "range");
    std::vector<double> out;
    const double n = std::floor((stop - start) / step + 1e-9);
    for (long i = 0; i <= static_cast<long>(n); ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

Range parse_range(const std::string& s)
{
    const auto parts = split(trim(s), ':');
    Range r;
    if (parts.size() == 1) {
        r.start = r.stop = parse_double(parts[0], "range");
    } else if (parts.size() == 3) {
        r.start = parse_double(parts[0], "range start");
        r.stop = parse_double(parts[1], "range stop");
        r.step = parse_double(parts[2], "range step");
    } else {
        config_error("range must be a:b:step, got '" + s + "'");
    }
    check_range(r, "range '" + s + "'");
    return r;
}

const std::vector<std::string>& known_figures()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 14; ++i)
            v.push_back("fig" + std::to_string(i));
        return v;
    }();
    return ids;
}

void RunConfig::validate() const
{
    quadrature.validate();
    if (workers < 1)
        config_error("workers must be >= 1");
    if (output_dir.empty())
        config_error("output_dir is empty");
    if (Z && !(*Z > 0.0))
        config_error("Z must be > 0");
    if (omega && !(*omega > 0.0))
        config_error("omega must be > 0");
    if (Z1.has_value() != Z2.has_value())
        config_error("Z1 and Z2 must be given together");
    if (Z1 && (!(*Z1 > 0.0) || !(*Z2 > 0.0)))
        config_error("Z1 and Z2 must be > 0");
    if (z_range) {
        check_range(*z_range, "z_range");
        if (!(z_range->start > 0.0))
            config_error("z_range must start above 0");
    }
    if (omega_range) {
        check_range(*omega_range, "omega_range");
        if (!(omega_range->start > 0.0))
            config_error("omega_range must start above 0");
    }
    if ((system == SystemKind::helium || system == SystemKind::helium_ni) && Z && *Z < 1.0 && !Z1)
        config_error("helium members need Z >= 1 for the optimizer");
    check_range(hydrogenic_z, "hydrogenic_z");
    check_range(helium_z, "helium_z");
    if (!(hydrogenic_z.start > 0.0) || helium_z.start < 1.0)
        config_error("series ranges need Z > 0 (hydrogenic) and Z >= 1 (helium)");
    check_grid(grid_1d, "curves.range/points_1d");
    check_grid(grid_2d, "curves.range/points_2d");
    for (const auto& [fig, g] : figure_grids)
        check_grid(g, "curves." + fig);
    for (const auto& f : figures)
        if (std::find(known_figures().begin(), known_figures().end(), f) == known_figures().end())
            config_error("unknown figure '" + f + "'");
}

std::filesystem::path RunConfig::cache_path() const
{
    return optimizer_cache.empty() ? output_dir / "optimizer_cache.txt" : optimizer_cache;
}

CurveGrid RunConfig::grid_for(const std::string& figure) const
{
    if (const auto it = figure_grids.find(figure); it != figure_grids.end())
        return it->second;
    const bool two_d = figure == "fig8" || figure == "fig9" || figure == "fig10" || figure == "fig11";
    return two_d ? grid_2d : grid_1d;
}

IniDocument parse_ini(std::istream& in, const std::string& source)
{
    IniDocument doc;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto cut = line.find_first_of("#;");
        if (cut != std::string::npos)
            line.erase(cut);
        line = trim(line);
        if (line.empty())
            continue;
        const std::string where = source + ":" + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']')
                config_error(where + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                config_error(where + ": empty section name");
            doc[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            config_error(where + ": expected key = value");
        if (section.empty())
            config_error(where + ": key outside of any section");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            config_error(where + ": empty key");
        auto& sec = doc[section];
        if (sec.count(key))
            config_error(where + ": duplicate key '" + key + "'");
        sec[key] = {trim(line.substr(eq + 1)), where};
    }
    return doc;
}

namespace {

void apply_entry(RunConfig& c, const std::string& section, const std::string& key, const std::string& value)
{
    const std::string what = section + "." + key;
    if (section == "run") {
        if (key == "command") c.command = parse_command(value);
        else if (key == "workers") c.workers = parse_int(value, what);
        else if (key == "output_dir") c.output_dir = value;
        else if (key == "optimizer_cache") c.optimizer_cache = value;
        else config_error("unknown key " + what);
    } else if (section == "model") {
        if (key == "system") c.system = parse_system(value);
        else if (key == "Z") c.Z = parse_double(value, what);
        else if (key == "omega") c.omega = parse_double(value, what);
        else if (key == "Z1") c.Z1 = parse_double(value, what);
        else if (key == "Z2") c.Z2 = parse_double(value, what);
        else if (key == "z_range") c.z_range = parse_range(value);
        else if (key == "omega_range") c.omega_range = parse_range(value);
        else config_error("unknown key " + what);
    } else if (section == "quadrature") {
        auto& q = c.quadrature;
        if (key == "rel_tol") q.rel_tol = parse_double(value, what);
        else if (key == "abs_tol") q.abs_tol = parse_double(value, what);
        else if (key == "panel_order") q.panel_order = parse_int(value, what);
        else if (key == "max_panels") q.max_panels = parse_int(value, what);
        else if (key == "tail_cutoff_decades") q.tail_cutoff_decades = parse_double(value, what);
        else if (key == "oscillatory_panels_per_period") q.oscillatory_panels_per_period = parse_int(value, what);
        else config_error("unknown key " + what);
    } else if (section == "curves") {
        if (key == "figures") {
            c.figures.clear();
            if (value != "all")
                for (const auto& f : split(value, ','))
                    if (!f.empty())
                        c.figures.push_back(f);
        } else if (key == "range") {
            const auto parts = split(value, ':');
            if (parts.size() != 2)
                config_error(what + ": expected lo:hi");
            c.grid_1d.lo = c.grid_2d.lo = parse_double(parts[0], what);
            c.grid_1d.hi = c.grid_2d.hi = parse_double(parts[1], what);
        } else if (key == "points_1d") {
            c.grid_1d.points = parse_int(value, what);
        } else if (key == "points_2d") {
            c.grid_2d.points = parse_int(value, what);
        } else if (key == "hydrogenic_z") {
            c.hydrogenic_z = parse_range(value);
        } else if (key == "helium_z") {
            c.helium_z = parse_range(value);
        } else if (std::find(known_figures().begin(), known_figures().end(), key) != known_figures().end()) {
            c.figure_grids[key] = parse_grid(value, what);
        } else {
            config_error("unknown key " + what);
        }
    } else {
        config_error("unknown section [" + section + "]");
    }
}

} // namespace

void apply_ini(RunConfig& c, const IniDocument& doc)
{
    for (const auto& [section, keys] : doc) {
        if (section != "run" && section != "model" && section != "quadrature" && section != "curves")
            config_error("unknown section [" + section + "]");
        for (const auto& [key, entry] : keys) {
            try {
                apply_entry(c, section, key, entry.value);
            } catch (const Error& e) {
                std::string msg = e.what();
                const std::string prefix = std::string(to_string(ErrorKind::ConfigError)) + ": ";
                if (msg.rfind(prefix, 0) == 0)
                    msg.erase(0, prefix.size());
                config_error(entry.where + ": " + msg);
            }
        }
    }
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        config_error("cannot read config file " + path.string());
    RunConfig c;
    apply_ini(c, parse_ini(in, path.string()));
    return c;
}

void apply_environment(RunConfig& config)
{
    if (const char* dir = std::getenv("SFENT_OUTPUT_DIR"); dir && *dir)
        config.output_dir = dir;
}

} // namespace sfent
