#pragma once

// Shannon entropies (nats) of densities and structure factors, information
// distances, mutual informations and correlation measures.

#include "sfent/factors.hpp"
#include "sfent/models.hpp"
#include "sfent/quadrature.hpp"

#include <optional>
#include <utility>

namespace sfent {

enum class ClosedFormKind { hydrogenic_F, hydrogenic_B, oscillator_F, oscillator_B };

// S_B(Z) - (2 + ln pi + 6 ln 2 - 3 ln Z) for the hydrogenic reciprocal form
// factor. Computed to full precision offline; the test suite re-derives it
// by quadrature.
inline constexpr double kHydrogenicBConstant = 0.036765412386998747;

// parameter is Z for the hydrogenic kinds and omega for the oscillator.
double closed_form_entropy(ClosedFormKind kind, double parameter);

// -4 pi int f ln f x^2 dx (radial3d) or -2 int_0^inf f ln f dx (line1d) of a
// unity-normalized distribution. The distribution is screened on
// default_scan_grid() first; a failed screen throws Error(NegativeDistribution).
Estimate shannon_radial(const RadialFunction& f, Geometry geometry, const QuadratureSpec& spec);

// -(4 pi)^2 int int f ln f x1^2 x2^2 dx1 dx2, screened on the product grid.
Estimate shannon_2d(const PairFunction& f, const QuadratureSpec& spec);

// Factors that are not yet unity-normalized are normalized first.
Estimate shannon_radial(const StructureFactor1D& factor, const QuadratureSpec& spec);
Estimate shannon_2d(const StructureFactor2D& factor, const QuadratureSpec& spec);

// Entropies of the unity-normalized densities rho/N, pi/N, Gamma/(N(N-1)),
// Pi/(N(N-1)).
Estimate density_entropy(const AtomicModel& model, Space space, const QuadratureSpec& spec);
Estimate pair_density_entropy(const SplitShellModel& model, Space space, const QuadratureSpec& spec);

// Entropies of the unity-normalized structure factors, integrated on the
// analytic path. Space::momentum gives S_F, Space::position gives S_B.
Estimate factor_entropy(const AtomicModel& model, Space space, const QuadratureSpec& spec);
Estimate pair_factor_entropy(const SplitShellModel& model, Space space, const QuadratureSpec& spec);

struct ReportOptions {
    QuadratureSpec spec_1d;
    QuadratureSpec spec_2d = default_2d_spec();

    static QuadratureSpec default_2d_spec()
    {
        QuadratureSpec s;
        s.abs_tol = 1e-10;
        return s;
    }
};

// 2 S - S2 for the structure factors of the given space (I_F for momentum,
// I_B for position).
double information_distance(const SplitShellModel& model, Space space, const ReportOptions& options = {});

// 2 S_rho - S_Gamma (position) or 2 S_pi - S_Pi (momentum).
double mutual_information_densities(const SplitShellModel& model, Space space,
                                    const ReportOptions& options = {});

struct DeltaMeasures {
    double delta_S_F = 0.0;
    double delta_S_B = 0.0;
};

// Differences from the hydrogen-like reference Z1 = Z2 = Z.
DeltaMeasures delta_measures(const SplitShellModel& model, const ReportOptions& options = {});

struct ModelParams {
    std::optional<double> Z;
    std::optional<double> omega;
    std::optional<double> Z1;
    std::optional<double> Z2;
    std::optional<double> C_N;
};

// Quantities that do not apply to a model are left empty.
struct EntropyReport {
    ModelParams model_params;
    std::optional<double> S_F, S_B, S_F2, S_B2;
    std::optional<double> S_rho, S_pi, S_Gamma, S_Pi;
    std::optional<double> I_F, I_B, I_r, I_p;
    std::optional<double> delta_S_F, delta_S_B;
    // Hydrogen-like reference entropies for split-shell models.
    std::optional<double> S_F_ref, S_B_ref;
};

EntropyReport build_report(const AtomicModel& model, const ReportOptions& options = {});

} // namespace sfent
