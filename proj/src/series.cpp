#include "sfent/series.hpp"

#include "sfent/error.hpp"

#include <algorithm>
#include <sstream>

namespace sfent {

SplitShellModel optimized_helium(double Z, OptimizerCache& cache)
{
    const auto r = cache.get(Z);
    if (!r.converged) {
        std::ostringstream os;
        os << "exponent optimization for Z = " << Z << " stopped at the iteration cap (gradient "
           << r.gradient_norm << ")";
        throw Error(ErrorKind::NotConverged, os.str());
    }
    return SplitShellModel(Z, r.Z1, r.Z2);
}

AtomicModel make_model(SystemKind system, double parameter, OptimizerCache& cache,
                       std::optional<std::pair<double, double>> exponents)
{
    switch (system) {
    case SystemKind::hydrogenic:
        return HydrogenicAtom(parameter);
    case SystemKind::oscillator:
        return HarmonicOscillator1D(parameter);
    case SystemKind::helium_ni:
        return SplitShellModel::non_interacting(parameter);
    case SystemKind::helium:
        if (exponents)
            return SplitShellModel(parameter, exponents->first, exponents->second);
        return optimized_helium(parameter, cache);
    }
    throw Error(ErrorKind::ConfigError, "unknown system");
}

ReportRow compute_row(SystemKind system, double parameter, OptimizerCache& cache, const ReportOptions& options,
                      std::optional<std::pair<double, double>> exponents)
{
    ReportRow row;
    row.system = to_string(system);
    if (system == SystemKind::oscillator)
        row.report.model_params.omega = parameter;
    else
        row.report.model_params.Z = parameter;
    try {
        const auto model = make_model(system, parameter, cache, exponents);
        row.report = build_report(model, options);
    } catch (const Error& e) {
        row.status = "error:" + std::string(to_string(e.kind()));
    }
    return row;
}

std::vector<ReportRow> compute_rows(SystemKind system, std::span<const double> parameters, OptimizerCache& cache,
                                    const ReportOptions& options, int workers)
{
    std::vector<ReportRow> rows(parameters.size());
    // Each member is serial inside; the members themselves share the team.
    ReportOptions inner = options;
    inner.spec_1d.exec = inner.spec_2d.exec = Exec::serial;
    const Exec exec = workers > 1 ? Exec::parallel : Exec::serial;
    for_each_index(parameters.size(), exec, workers,
                   [&](std::size_t i) { rows[i] = compute_row(system, parameters[i], cache, inner); });
    return rows;
}

ReportOptions report_options(const QuadratureSpec& spec)
{
    ReportOptions o;
    o.spec_1d = spec;
    o.spec_2d = spec;
    o.spec_2d.abs_tol = std::max(spec.abs_tol, ReportOptions::default_2d_spec().abs_tol);
    return o;
}

} // namespace sfent
