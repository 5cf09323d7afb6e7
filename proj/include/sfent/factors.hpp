#pragma once

// One- and two-electron structure factors.
//
//   F(k)  = spherically averaged Fourier transform of the charge density
//           (the momentum-space autocorrelation function),
//   B(s)  = spherically averaged Fourier transform of the momentum density
//           (the position-space autocorrelation function).
//
// Each factor has an analytic path (closed forms assembled from transforms
// of orbital products) and a numeric path (j0 transforms of the densities).
// Normalization before unity scaling: F(0) = B(0) = N and
// F(0,0) = B(0,0) = N(N-1)/2.

#include "sfent/models.hpp"
#include "sfent/quadrature.hpp"

#include <span>
#include <vector>

namespace sfent {

// Space of the autocorrelation: position -> B(s), momentum -> F(k).
enum class Space { position, momentum };

enum class Path { analytic, numeric };

// 4 pi int phi_a(r) phi_b(r) j0(k r) r^2 dr for normalized Slater 1s orbitals.
double orbital_pair_transform_position(double a, double b, double k);

// 4 pi int chi_a(p) chi_b(p) j0(s p) p^2 dp for their momentum-space partners.
double orbital_pair_transform_momentum(double a, double b, double s);

double one_electron_F(const AtomicModel& model, double k, Path path, const QuadratureSpec& spec = {});
double one_electron_B(const AtomicModel& model, double s, Path path, const QuadratureSpec& spec = {});

double two_electron_F(const SplitShellModel& model, double k1, double k2, Path path,
                      const QuadratureSpec& spec = {});
double two_electron_B(const SplitShellModel& model, double s1, double s2, Path path,
                      const QuadratureSpec& spec = {});

// Numeric two-electron factor along a row of first arguments at a fixed
// second argument. The inner transform H(x1, q2) is cached per node x1 and
// reused across the row.
std::vector<double> two_electron_row(const SplitShellModel& model, Space space, std::span<const double> q1,
                                     double q2, const QuadratureSpec& spec);

struct StructureFactor1D {
    Space space = Space::momentum;
    Path source = Path::analytic;
    Geometry geometry = Geometry::radial3d;
    RadialFunction evaluator;
    // Integral of the evaluator over the geometry's measure.
    double norm_constant = 1.0;
    bool unity = false;

    double operator()(double x) const { return evaluator(x); }
};

struct StructureFactor2D {
    Space space = Space::momentum;
    Path source = Path::analytic;
    PairFunction evaluator;
    double norm_constant = 1.0;
    bool unity = false;

    double operator()(double x1, double x2) const { return evaluator(x1, x2); }
};

// Norm constants come from Fourier inversion at the origin, (2 pi)^3 rho(0)
// for F and (2 pi)^3 pi(0) for B (2 pi rho(0) on the line), on both paths.
// factor_norm integrates the same quantity by quadrature. The returned
// factor holds its own copy of the model.
StructureFactor1D make_factor(const AtomicModel& model, Space space, Path path, const QuadratureSpec& spec = {});
StructureFactor2D make_pair_factor(const SplitShellModel& model, Space space, Path path,
                                   const QuadratureSpec& spec = {});

// Integral of the factor over its measure, by quadrature.
Estimate factor_norm(const StructureFactor1D& factor, const QuadratureSpec& spec);
Estimate factor_norm(const StructureFactor2D& factor, const QuadratureSpec& spec);

// Divides by norm_constant. Throws Error(DivergentNorm) unless the constant
// is finite and positive.
StructureFactor1D unity_normalize(const StructureFactor1D& factor);
StructureFactor2D unity_normalize(const StructureFactor2D& factor);

struct PositivityReport {
    double min_value = 0.0;
    double min_location = 0.0;
    double min_location2 = 0.0;  // second abscissa for 2D scans
    bool is_positive = true;
};

// 200 log-spaced abscissas over [1e-3, 30].
std::vector<double> default_scan_grid();

PositivityReport positivity_scan(const StructureFactor1D& factor, std::span<const double> grid,
                                 double abs_tol = 1e-12, Exec exec = Exec::serial);
// Scans the product grid.
PositivityReport positivity_scan(const StructureFactor2D& factor, std::span<const double> grid,
                                 double abs_tol = 1e-12, Exec exec = Exec::serial);

} // namespace sfent
