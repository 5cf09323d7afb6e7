#include "sfent/entropy.hpp"

#include "sfent/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sfent {

namespace {

constexpr double pi = std::numbers::pi;
const double kLnPi = std::log(pi);
const double kLn2 = std::numbers::ln2;

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be positive and finite, got " << v;
        throw Error(ErrorKind::InvalidModelParameters, os.str());
    }
}

[[noreturn]] void refuse(const PositivityReport& r, bool pair)
{
    std::ostringstream os;
    os << "distribution is negative (min " << r.min_value << " at " << r.min_location;
    if (pair)
        os << ", " << r.min_location2;
    os << "); entropy undefined";
    throw Error(ErrorKind::NegativeDistribution, os.str());
}

Estimate negated(Estimate e, double scale)
{
    return {-scale * e.value, scale * e.error};
}

} // namespace

double closed_form_entropy(ClosedFormKind kind, double parameter)
{
    require_positive(parameter, "parameter");
    const double l = std::log(parameter);
    switch (kind) {
    case ClosedFormKind::hydrogenic_F:
        return 2.0 * (1.0 + kLnPi) + 7.0 * kLn2 + 3.0 * l;
    case ClosedFormKind::hydrogenic_B:
        return 2.0 + kLnPi + 6.0 * kLn2 - 3.0 * l + kHydrogenicBConstant;
    case ClosedFormKind::oscillator_F:
        return 0.5 * (1.0 + kLnPi) + kLn2 + 0.5 * l;
    case ClosedFormKind::oscillator_B:
        return 0.5 * (1.0 + kLnPi) + kLn2 - 0.5 * l;
    }
    throw Error(ErrorKind::ConfigError, "unknown closed-form kind");
}

Estimate shannon_radial(const RadialFunction& f, Geometry geometry, const QuadratureSpec& spec)
{
    StructureFactor1D probe;
    probe.evaluator = f;
    const auto grid = default_scan_grid();
    const auto scan = positivity_scan(probe, grid, 1e-12, spec.exec);
    if (!scan.is_positive)
        refuse(scan, false);
    const RadialFunction h = [&f](double x) { return xlogx(f(x)); };
    if (geometry == Geometry::line1d)
        return negated(integrate_radial(h, 0, spec), 2.0);
    return negated(integrate_radial(h, 2, spec), 4.0 * pi);
}

Estimate shannon_2d(const PairFunction& f, const QuadratureSpec& spec)
{
    StructureFactor2D probe;
    probe.evaluator = f;
    const auto grid = default_scan_grid();
    const auto scan = positivity_scan(probe, grid, 1e-12, spec.exec);
    if (!scan.is_positive)
        refuse(scan, true);
    const PairFunction h = [&f](double x1, double x2) { return xlogx(f(x1, x2)); };
    return negated(integrate_2d_radial(h, spec), 1.0);
}

Estimate shannon_radial(const StructureFactor1D& factor, const QuadratureSpec& spec)
{
    const StructureFactor1D u = factor.unity ? factor : unity_normalize(factor);
    return shannon_radial(u.evaluator, u.geometry, spec);
}

Estimate shannon_2d(const StructureFactor2D& factor, const QuadratureSpec& spec)
{
    const StructureFactor2D u = factor.unity ? factor : unity_normalize(factor);
    return shannon_2d(u.evaluator, spec);
}

Estimate density_entropy(const AtomicModel& model, Space space, const QuadratureSpec& spec)
{
    const double n = electron_count(model);
    const RadialFunction f = [&model, space, n](double x) {
        return (space == Space::position ? charge_density(model, x) : momentum_density(model, x)) / n;
    };
    return shannon_radial(f, geometry(model), spec);
}

Estimate pair_density_entropy(const SplitShellModel& model, Space space, const QuadratureSpec& spec)
{
    const PairFunction f = [&model, space](double x1, double x2) {
        return 0.5 * (space == Space::position ? model.pair_density_position(x1, x2)
                                               : model.pair_density_momentum(x1, x2));
    };
    return shannon_2d(f, spec);
}

Estimate factor_entropy(const AtomicModel& model, Space space, const QuadratureSpec& spec)
{
    return shannon_radial(make_factor(model, space, Path::analytic, spec), spec);
}

Estimate pair_factor_entropy(const SplitShellModel& model, Space space, const QuadratureSpec& spec)
{
    return shannon_2d(make_pair_factor(model, space, Path::analytic, spec), spec);
}

double information_distance(const SplitShellModel& model, Space space, const ReportOptions& options)
{
    const double s1 = factor_entropy(model, space, options.spec_1d).value;
    const double s2 = pair_factor_entropy(model, space, options.spec_2d).value;
    return 2.0 * s1 - s2;
}

double mutual_information_densities(const SplitShellModel& model, Space space, const ReportOptions& options)
{
    const double s1 = density_entropy(model, space, options.spec_1d).value;
    const double s2 = pair_density_entropy(model, space, options.spec_2d).value;
    return 2.0 * s1 - s2;
}

DeltaMeasures delta_measures(const SplitShellModel& model, const ReportOptions& options)
{
    const SplitShellModel ref = model.reference();
    DeltaMeasures d;
    d.delta_S_F = factor_entropy(model, Space::momentum, options.spec_1d).value -
                  factor_entropy(ref, Space::momentum, options.spec_1d).value;
    d.delta_S_B = factor_entropy(model, Space::position, options.spec_1d).value -
                  factor_entropy(ref, Space::position, options.spec_1d).value;
    return d;
}

EntropyReport build_report(const AtomicModel& model, const ReportOptions& options)
{
    EntropyReport r;
    std::visit(
        [&r](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HydrogenicAtom>) {
                r.model_params.Z = m.charge();
            } else if constexpr (std::is_same_v<T, HarmonicOscillator1D>) {
                r.model_params.omega = m.omega();
            } else {
                r.model_params.Z = m.charge();
                r.model_params.Z1 = m.inner_exponent();
                r.model_params.Z2 = m.outer_exponent();
                r.model_params.C_N = m.normalization();
            }
        },
        model);

    const auto& s1 = options.spec_1d;
    r.S_F = factor_entropy(model, Space::momentum, s1).value;
    r.S_B = factor_entropy(model, Space::position, s1).value;
    r.S_rho = density_entropy(model, Space::position, s1).value;
    r.S_pi = density_entropy(model, Space::momentum, s1).value;

    if (const auto* he = std::get_if<SplitShellModel>(&model)) {
        const auto& s2 = options.spec_2d;
        r.S_F2 = pair_factor_entropy(*he, Space::momentum, s2).value;
        r.S_B2 = pair_factor_entropy(*he, Space::position, s2).value;
        r.S_Gamma = pair_density_entropy(*he, Space::position, s2).value;
        r.S_Pi = pair_density_entropy(*he, Space::momentum, s2).value;
        r.I_F = 2.0 * *r.S_F - *r.S_F2;
        r.I_B = 2.0 * *r.S_B - *r.S_B2;
        r.I_r = 2.0 * *r.S_rho - *r.S_Gamma;
        r.I_p = 2.0 * *r.S_pi - *r.S_Pi;

        const SplitShellModel ref = he->reference();
        r.S_F_ref = factor_entropy(ref, Space::momentum, s1).value;
        r.S_B_ref = factor_entropy(ref, Space::position, s1).value;
        r.delta_S_F = *r.S_F - *r.S_F_ref;
        r.delta_S_B = *r.S_B - *r.S_B_ref;
    }
    return r;
}

} // namespace sfent
