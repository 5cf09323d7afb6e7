// sfent: structure-factor entropies from the command line.
//
//   sfent report --system hydrogenic --z 1
//   sfent sweep --system helium --z-range 2:10:1 --workers 4
//   sfent curves --out figs
//   sfent verify
//
// Settings are layered: config file, then SFENT_OUTPUT_DIR, then flags.

#include "sfent/commands.hpp"
#include "sfent/config.hpp"
#include "sfent/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"Shannon entropies of atomic structure factors"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path, system, z_range, omega_range, out_dir;
    std::optional<double> z, omega, tol;
    std::optional<int> workers;
    app.add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);
    app.add_option("--system", system, "hydrogenic | oscillator | helium | helium-NI");
    app.add_option("--z", z, "nuclear charge");
    app.add_option("--z-range", z_range, "inclusive charge range a:b:step");
    app.add_option("--omega", omega, "oscillator frequency");
    app.add_option("--omega-range", omega_range, "inclusive frequency range a:b:step");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--workers", workers, "concurrent sweep members / threads");
    app.add_option("--tol", tol, "quadrature relative tolerance");

    app.add_subcommand("report", "entropy report for one model");
    app.add_subcommand("sweep", "reports over a range of Z or omega");
    app.add_subcommand("curves", "figure data as CSV (fig1..fig14)");
    app.add_subcommand("verify", "run the invariant checks");

    CLI11_PARSE(app, argc, argv);

    sfent::RunConfig config;
    try {
        if (!config_path.empty())
            config = sfent::load_config(config_path);
        sfent::apply_environment(config);
        if (const auto subs = app.get_subcommands(); !subs.empty())
            config.command = sfent::parse_command(subs.front()->get_name());
        else if (config_path.empty())
            throw sfent::Error(sfent::ErrorKind::ConfigError, "no command given (report, sweep, curves, verify)");
        if (!system.empty())
            config.system = sfent::parse_system(system);
        if (z)
            config.Z = *z;
        if (!z_range.empty())
            config.z_range = sfent::parse_range(z_range);
        if (omega)
            config.omega = *omega;
        if (!omega_range.empty())
            config.omega_range = sfent::parse_range(omega_range);
        if (!out_dir.empty())
            config.output_dir = out_dir;
        if (workers)
            config.workers = *workers;
        if (tol)
            config.quadrature.rel_tol = *tol;
    } catch (const sfent::Error& e) {
        std::cerr << "sfent: " << e.what() << "\n";
        return sfent::kExitConfig;
    }
    return sfent::run_command(config, std::cout, std::cerr);
}
