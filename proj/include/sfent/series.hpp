#pragma once

// Building models from a system kind and computing report rows over a
// series of members.

#include "sfent/config.hpp"
#include "sfent/entropy.hpp"
#include "sfent/output.hpp"
#include "sfent/variational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sfent {

// Split-shell model at the optimized exponents for charge Z. Throws
// Error(NotConverged) if the optimizer stops at its iteration cap.
SplitShellModel optimized_helium(double Z, OptimizerCache& cache);

// parameter is omega for the oscillator and Z otherwise. Explicit exponents
// bypass the optimizer for SystemKind::helium.
AtomicModel make_model(SystemKind system, double parameter, OptimizerCache& cache,
                       std::optional<std::pair<double, double>> exponents = std::nullopt);

// A library error becomes status "error:<kind>" with whatever model
// parameters were known.
ReportRow compute_row(SystemKind system, double parameter, OptimizerCache& cache, const ReportOptions& options,
                      std::optional<std::pair<double, double>> exponents = std::nullopt);

// Members run concurrently on up to workers threads; rows come back in the
// order of parameters.
std::vector<ReportRow> compute_rows(SystemKind system, std::span<const double> parameters, OptimizerCache& cache,
                                    const ReportOptions& options, int workers);

// 1D and 2D specs derived from a run's quadrature settings: the 2D spec
// keeps the relaxed absolute target unless a looser one was configured.
ReportOptions report_options(const QuadratureSpec& spec);

} // namespace sfent
