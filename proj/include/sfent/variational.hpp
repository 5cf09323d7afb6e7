#pragma once

// Variational exponents of the split-shell wavefunction: minimization of
//   H = -1/2 lap1 - 1/2 lap2 - Z/r1 - Z/r2 + 1/r12
// over (Z1, Z2). Energies in hartree.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace sfent {

struct EnergyBreakdown {
    double kinetic = 0.0;
    double nuclear_attraction = 0.0;
    double electron_repulsion = 0.0;
    double total = 0.0;
};

// Closed form from 1s Slater one-electron, Coulomb and exchange integrals.
// Throws Error(InvalidModelParameters) for non-positive arguments.
EnergyBreakdown energy(double Z1, double Z2, double Z);

// The same terms by nested radial quadrature of the unnormalized
// wavefunction, using the spherical average 1/max(r1, r2) of 1/r12. Slow
// (about a second); meant as an oracle for energy().
EnergyBreakdown energy_by_quadrature(double Z1, double Z2, double Z);

struct OptimizationResult {
    double Z1 = 0.0;  // Z1 <= Z2
    double Z2 = 0.0;
    double energy = 0.0;
    int iterations = 0;
    bool converged = false;
    double gradient_norm = 0.0;
    // Best energy after each iteration; never increases.
    std::vector<double> path;
};

struct OptimizeOptions {
    std::optional<std::pair<double, double>> initial_guess;  // default (Z - 5/16, Z - 5/16)
    double tolerance = 1e-7;  // on the central-difference gradient norm
    int max_iterations = 4000;
};

// Nelder-Mead on (ln Z1, ln Z2) with an asymmetric starting simplex so the
// symmetric saddle is left. Restarts from the best vertex until the gradient
// criterion holds or the iteration cap is hit; in the latter case the
// best-so-far point is returned with converged = false.
OptimizationResult optimize(double Z, const OptimizeOptions& options = {});

// Central-difference gradient norm of the energy in (Z1, Z2).
double energy_gradient_norm(double Z1, double Z2, double Z, double step = 1e-5);

// Plain-text table of optimized exponents: one "Z Z1 Z2 E converged" row per
// line, '#' comments allowed. Safe to share between threads.
class OptimizerCache {
public:
    OptimizerCache() = default;
    explicit OptimizerCache(std::filesystem::path path);

    std::optional<OptimizationResult> find(double Z) const;
    void store(double Z, const OptimizationResult& result);
    // Writes the table back to the path given at construction (no-op without one).
    void save() const;

    // Cached result or a fresh optimization, which is then stored.
    OptimizationResult get(double Z, const OptimizeOptions& options = {});

private:
    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<double, OptimizationResult> table_;
};

} // namespace sfent
