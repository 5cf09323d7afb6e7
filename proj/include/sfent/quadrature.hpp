#pragma once

// Adaptive quadrature over finite and semi-infinite radial domains.
//
// All routines are built on one engine: composite Gauss-Legendre panels
// whose error is estimated by comparing the one-panel rule against the
// same rule applied to the two bisected halves. Panels whose estimate
// exceeds their share of the global target are bisected, one generation at
// a time; the panels of a generation are evaluated as a batch (serially or
// with OpenMP, per QuadratureSpec::exec) and summed in a fixed order, so the
// result does not depend on the thread count.
//
// Semi-infinite tails are integrated in a logarithmic variable
// x = x0 * e^t, which turns algebraic decay into exponential decay, and are
// truncated once the integrand has fallen tail_cutoff_decades below its
// peak. The truncation remainder is bounded from the local decay rate and
// added to the reported error.

#include "sfent/kernels.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sfent {

using RadialFunction = std::function<double(double)>;
using PairFunction = std::function<double(double, double)>;

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int panel_order = 10;          // Gauss-Legendre nodes per panel
    int max_panels = 200000;
    double tail_cutoff_decades = 16.0;
    int oscillatory_panels_per_period = 1;  // initial panels per j0 half-period
    Exec exec = Exec::serial;

    // Throws Error(ConfigError) when an invariant is violated.
    void validate() const;

    // Target for a result of magnitude |value|.
    double target(double value) const;
};

struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

struct IntegrandSample {
    double abscissa;
    double value;
};

// Values below this are treated as zero inside f*ln(f).
inline constexpr double kUnderflowThreshold = 1e-300;

// f ln f with the x ln x -> 0 limit applied at and below kUnderflowThreshold.
double xlogx(double f);

// j0(t) = sin(t)/t, with a series near the origin.
double sph_j0(double t);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int order);

// Integral of f over [a, b].
Estimate integrate_interval(const RadialFunction& f, double a, double b,
                            const QuadratureSpec& spec);

// Integral of f over [edges.front(), edges.back()], starting from the panels
// delimited by the sorted edges.
Estimate integrate_panels(const RadialFunction& f, std::span<const double> edges,
                          const QuadratureSpec& spec);

// Integral of f over [a, inf).
Estimate integrate_semi_infinite(const RadialFunction& f, double a, const QuadratureSpec& spec);

// Integral of f(x) x^weight_power over [0, inf); weight_power in {0, 2}.
Estimate integrate_radial(const RadialFunction& f, int weight_power, const QuadratureSpec& spec);

// 4 pi * integral of f(x) j0(q x) x^2 over [0, inf).
// The domain is split at the zeros x = n pi / q and the panels are summed
// with compensated summation.
Estimate bessel_j0_transform(const RadialFunction& f, double q, const QuadratureSpec& spec);

// 2 * integral of f(x) cos(q x) over [0, inf): the Fourier transform of an
// even function on the line.
Estimate cosine_transform(const RadialFunction& f, double q, const QuadratureSpec& spec);

// (4 pi)^2 * double integral of f(x1, x2) x1^2 x2^2 over [0, inf)^2, by
// nested one-dimensional quadrature (inner over x2). The outer batches run
// under spec.exec; inner integrals always run serially.
Estimate integrate_2d_radial(const PairFunction& f, const QuadratureSpec& spec);

} // namespace sfent
