#pragma once

// Exactly-evaluable systems and their one- and two-electron densities.
// Position densities are in bohr^-3 (bohr^-1 for the oscillator), momentum
// densities in the conjugate units. All models are immutable after
// construction and safe to share between threads.

#include <string>
#include <string_view>
#include <variant>

namespace sfent {

// Measure a radial distribution is integrated against.
enum class Geometry {
    radial3d,  // 4 pi x^2 dx on [0, inf)
    line1d,    // dx on (-inf, inf), even functions
};

// Normalized Slater 1s orbital sqrt(zeta^3/pi) e^{-zeta r}.
struct SlaterOrbital {
    double zeta;
    double operator()(double r) const;
};

// Fourier transform of SlaterOrbital: (2 sqrt 2 / pi) zeta^{5/2} / (zeta^2 + p^2)^2.
struct MomentumOrbital {
    double zeta;
    double operator()(double p) const;
};

// Overlap <1s(a)|1s(b)> = 8 (ab)^{3/2} / (a + b)^3.
double slater_overlap(double a, double b);

class HydrogenicAtom {
public:
    explicit HydrogenicAtom(double Z);

    double charge() const { return Z_; }
    int electrons() const { return 1; }

    double density_position(double r) const;
    double density_momentum(double p) const;

private:
    double Z_;
};

// Ground state of the one-dimensional harmonic oscillator (unit mass, hbar = 1).
class HarmonicOscillator1D {
public:
    explicit HarmonicOscillator1D(double omega);

    double omega() const { return omega_; }
    int electrons() const { return 1; }

    double density_position(double x) const;
    double density_momentum(double p) const;

private:
    double omega_;
};

// Two-electron singlet
//   Psi(r1, r2) = C_N (e^{-Z1 r1} e^{-Z2 r2} + e^{-Z2 r1} e^{-Z1 r2}).
// Exponents are stored with Z1 <= Z2. When |Z1 - Z2| < kDegenerateGap the
// two exponents are merged and the model is the non-interacting reference
// (two electrons in the same hydrogenic 1s orbital).
class SplitShellModel {
public:
    static constexpr double kDegenerateGap = 1e-9;

    SplitShellModel(double Z, double Z1, double Z2);

    // Z1 = Z2 = Z.
    static SplitShellModel non_interacting(double Z);

    double charge() const { return Z_; }
    double inner_exponent() const { return Z1_; }
    double outer_exponent() const { return Z2_; }
    double overlap() const { return S_; }
    double normalization() const { return C_N_; }
    bool degenerate() const { return degenerate_; }
    int electrons() const { return 2; }

    // Hydrogen-like reference with the same nuclear charge.
    SplitShellModel reference() const { return non_interacting(Z_); }

    // rho(r) = (phi1^2 + phi2^2 + 2 S phi1 phi2) / (1 + S^2), normalized to 2.
    double density_position(double r) const;
    double density_momentum(double p) const;

    // Gamma(r1, r2) = 2 |Psi|^2, normalized to N(N-1) = 2.
    double pair_density_position(double r1, double r2) const;
    double pair_density_momentum(double p1, double p2) const;

private:
    double Z_;
    double Z1_;
    double Z2_;
    double S_;
    double C_N_;
    bool degenerate_;
};

using AtomicModel = std::variant<HydrogenicAtom, HarmonicOscillator1D, SplitShellModel>;

Geometry geometry(const AtomicModel& model);
int electron_count(const AtomicModel& model);
std::string describe(const AtomicModel& model);

double charge_density(const AtomicModel& model, double r);
double momentum_density(const AtomicModel& model, double p);
double pair_density_position(const SplitShellModel& model, double r1, double r2);
double pair_density_momentum(const SplitShellModel& model, double p1, double p2);

} // namespace sfent
