#include "sfent/commands.hpp"

#include "sfent/curves.hpp"
#include "sfent/error.hpp"
#include "sfent/output.hpp"
#include "sfent/series.hpp"
#include "sfent/verify.hpp"

#include <cstdio>
#include <ostream>

namespace sfent {

namespace {

bool is_oscillator(const RunConfig& c)
{
    return c.system == SystemKind::oscillator;
}

double single_parameter(const RunConfig& c)
{
    if (is_oscillator(c)) {
        if (!c.omega)
            throw Error(ErrorKind::ConfigError, "oscillator report needs omega (--omega)");
        return *c.omega;
    }
    if (!c.Z)
        throw Error(ErrorKind::ConfigError, to_string(c.system) + " report needs Z (--z)");
    return *c.Z;
}

std::vector<double> sweep_parameters(const RunConfig& c)
{
    if (is_oscillator(c)) {
        if (c.omega_range)
            return c.omega_range->values();
        if (c.omega)
            return {*c.omega};
        throw Error(ErrorKind::ConfigError, "oscillator sweep needs omega_range (--omega-range) or omega");
    }
    if (c.z_range)
        return c.z_range->values();
    if (c.Z)
        return {*c.Z};
    throw Error(ErrorKind::ConfigError, to_string(c.system) + " sweep needs z_range (--z-range) or Z");
}

// Runs body, mapping library errors to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        err << "sfent: " << e.what() << "\n";
        return e.kind() == ErrorKind::ConfigError ? kExitConfig : kExitFailure;
    } catch (const std::exception& e) {
        err << "sfent: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace

int run_report(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        const double p = single_parameter(config);
        std::optional<std::pair<double, double>> exps;
        if (config.Z1) {
            if (config.system != SystemKind::helium)
                throw Error(ErrorKind::ConfigError, "Z1/Z2 apply to the helium system only");
            exps = std::pair{*config.Z1, *config.Z2};
        }
        OptimizerCache cache(config.cache_path());
        ReportOptions options = report_options(config.quadrature);
        const Exec exec = config.workers > 1 ? Exec::parallel : Exec::serial;
        options.spec_1d.exec = options.spec_2d.exec = exec;
        const auto row = compute_row(config.system, p, cache, options, exps);
        write_report_csv(config.output_dir / "report.csv", {row});
        if (config.system == SystemKind::helium && !exps)
            cache.save();
        out << format_table(row);
        if (row.status != "ok") {
            err << "sfent: report failed with " << row.status << "\n";
            return kExitFailure;
        }
        return kExitOk;
    });
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        if (config.Z1)
            throw Error(ErrorKind::ConfigError, "explicit Z1/Z2 apply to single reports, not sweeps");
        const auto params = sweep_parameters(config);
        OptimizerCache cache(config.cache_path());
        const auto rows = compute_rows(config.system, params, cache, report_options(config.quadrature), config.workers);
        const auto path = config.output_dir / ("sweep_" + to_string(config.system) + ".csv");
        write_report_csv(path, rows);
        if (config.system == SystemKind::helium)
            cache.save();

        int failures = 0;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-8s %-16s %-16s %-16s %s\n", is_oscillator(config) ? "omega" : "Z", "S_F",
                      "S_B", "S_F+S_B", "status");
        out << buf;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i].report;
            const bool ok = rows[i].status == "ok";
            failures += ok ? 0 : 1;
            std::snprintf(buf, sizeof buf, "%-8s %-16s %-16s %-16s %s\n", format_number(params[i]).c_str(),
                          ok ? format_number(*r.S_F).c_str() : "NA", ok ? format_number(*r.S_B).c_str() : "NA",
                          ok ? format_number(*r.S_F + *r.S_B).c_str() : "NA", rows[i].status.c_str());
            out << buf;
        }
        out << "wrote " << path.string() << "\n";
        if (failures) {
            err << "sfent: " << failures << " of " << rows.size() << " members failed\n";
            return kExitFailure;
        }
        return kExitOk;
    });
}

int emit_curves(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        OptimizerCache cache(config.cache_path());
        const auto sets = build_curves(config, cache);
        for (const auto& s : sets) {
            const auto path = config.output_dir / (s.figure_id + ".csv");
            write_curve_csv(path, s);
            out << "wrote " << path.string() << " (" << s.rows.size() << " rows)\n";
        }
        cache.save();
        return kExitOk;
    });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        OptimizerCache cache(config.cache_path());
        Verifier v(VerifyOptions::from_config(config), cache);
        std::vector<CheckResult> all;
        for (int i = 1; i <= kCriterionCount; ++i) {
            for (const auto& r : v.run(i)) {
                out << format_check(r) << "\n";
                all.push_back(r);
            }
            out.flush();
        }
        write_text_file(config.output_dir / "verify.csv", checks_csv(all));
        cache.save();
        std::size_t failed = 0;
        for (const auto& r : all)
            failed += r.passed ? 0 : 1;
        out << all.size() << " checks, " << failed << " failed\n";
        return failed ? kExitFailure : kExitOk;
    });
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    switch (config.command) {
    case Command::report: return run_report(config, out, err);
    case Command::sweep: return run_sweep(config, out, err);
    case Command::curves: return emit_curves(config, out, err);
    case Command::verify: return run_verify(config, out, err);
    }
    return kExitConfig;
}

} // namespace sfent
