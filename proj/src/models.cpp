#include "sfent/models.hpp"

#include "sfent/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <type_traits>
#include <utility>

namespace sfent {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be positive and finite, got " << v;
        throw Error(ErrorKind::InvalidModelParameters, os.str());
    }
}

} // namespace

double SlaterOrbital::operator()(double r) const
{
    return std::sqrt(zeta * zeta * zeta / pi) * std::exp(-zeta * r);
}

double MomentumOrbital::operator()(double p) const
{
    const double d = zeta * zeta + p * p;
    return 2.0 * std::numbers::sqrt2 / pi * std::pow(zeta, 2.5) / (d * d);
}

double slater_overlap(double a, double b)
{
    const double s = a + b;
    return 8.0 * std::pow(a * b, 1.5) / (s * s * s);
}

HydrogenicAtom::HydrogenicAtom(double Z) : Z_(Z)
{
    require_positive(Z, "Z");
}

double HydrogenicAtom::density_position(double r) const
{
    return Z_ * Z_ * Z_ / pi * std::exp(-2.0 * Z_ * r);
}

double HydrogenicAtom::density_momentum(double p) const
{
    const double d = Z_ * Z_ + p * p;
    return 8.0 * std::pow(Z_, 5) / (pi * pi * d * d * d * d);
}

HarmonicOscillator1D::HarmonicOscillator1D(double omega) : omega_(omega)
{
    require_positive(omega, "omega");
}

double HarmonicOscillator1D::density_position(double x) const
{
    return std::sqrt(omega_ / pi) * std::exp(-omega_ * x * x);
}

double HarmonicOscillator1D::density_momentum(double p) const
{
    return std::exp(-p * p / omega_) / std::sqrt(pi * omega_);
}

SplitShellModel::SplitShellModel(double Z, double Z1, double Z2) : Z_(Z)
{
    require_positive(Z, "Z");
    require_positive(Z1, "Z1");
    require_positive(Z2, "Z2");
    if (Z1 > Z2)
        std::swap(Z1, Z2);
    degenerate_ = (Z2 - Z1) < kDegenerateGap;
    if (degenerate_) {
        const double mid = 0.5 * (Z1 + Z2);
        Z1 = mid;
        Z2 = mid;
    }
    Z1_ = Z1;
    Z2_ = Z2;
    S_ = degenerate_ ? 1.0 : slater_overlap(Z1, Z2);
    // Psi = c (phi1 phi2 + phi2 phi1) with c^2 = 1 / (2 (1 + S^2)); C_N absorbs
    // the orbital prefactors (Z1 Z2)^{3/2} / pi.
    const double c = 1.0 / std::sqrt(2.0 * (1.0 + S_ * S_));
    C_N_ = c * std::pow(Z1 * Z2, 1.5) / pi;
}

SplitShellModel SplitShellModel::non_interacting(double Z)
{
    return SplitShellModel(Z, Z, Z);
}

double SplitShellModel::density_position(double r) const
{
    const double a = SlaterOrbital{Z1_}(r);
    const double b = SlaterOrbital{Z2_}(r);
    return (a * a + b * b + 2.0 * S_ * a * b) / (1.0 + S_ * S_);
}

double SplitShellModel::density_momentum(double p) const
{
    const double a = MomentumOrbital{Z1_}(p);
    const double b = MomentumOrbital{Z2_}(p);
    return (a * a + b * b + 2.0 * S_ * a * b) / (1.0 + S_ * S_);
}

double SplitShellModel::pair_density_position(double r1, double r2) const
{
    const double psi = C_N_ * (std::exp(-Z1_ * r1 - Z2_ * r2) + std::exp(-Z2_ * r1 - Z1_ * r2));
    return 2.0 * psi * psi;
}

double SplitShellModel::pair_density_momentum(double p1, double p2) const
{
    const MomentumOrbital a{Z1_};
    const MomentumOrbital b{Z2_};
    const double phi = (a(p1) * b(p2) + b(p1) * a(p2)) / std::sqrt(2.0 * (1.0 + S_ * S_));
    return 2.0 * phi * phi;
}

Geometry geometry(const AtomicModel& model)
{
    return std::holds_alternative<HarmonicOscillator1D>(model) ? Geometry::line1d : Geometry::radial3d;
}

int electron_count(const AtomicModel& model)
{
    return std::visit([](const auto& m) { return m.electrons(); }, model);
}

std::string describe(const AtomicModel& model)
{
    std::ostringstream os;
    std::visit(
        [&os](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HydrogenicAtom>)
                os << "hydrogenic Z=" << m.charge();
            else if constexpr (std::is_same_v<T, HarmonicOscillator1D>)
                os << "oscillator omega=" << m.omega();
            else
                os << (m.degenerate() ? "helium-NI" : "helium") << " Z=" << m.charge() << " Z1=" << m.inner_exponent()
                   << " Z2=" << m.outer_exponent();
        },
        model);
    return os.str();
}

double charge_density(const AtomicModel& model, double r)
{
    return std::visit([r](const auto& m) { return m.density_position(r); }, model);
}

double momentum_density(const AtomicModel& model, double p)
{
    return std::visit([p](const auto& m) { return m.density_momentum(p); }, model);
}

double pair_density_position(const SplitShellModel& model, double r1, double r2)
{
    return model.pair_density_position(r1, r2);
}

double pair_density_momentum(const SplitShellModel& model, double p1, double p2)
{
    return model.pair_density_momentum(p1, p2);
}

} // namespace sfent
