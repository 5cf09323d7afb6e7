#include "sfent/variational.hpp"

#include "sfent/error.hpp"
#include "sfent/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace sfent {

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be positive and finite, got " << v;
        throw Error(ErrorKind::InvalidModelParameters, os.str());
    }
}

using Point = std::array<double, 2>;

double objective(const Point& x, double Z)
{
    return energy(std::exp(x[0]), std::exp(x[1]), Z).total;
}

} // namespace

EnergyBreakdown energy(double Z1, double Z2, double Z)
{
    require_positive(Z1, "Z1");
    require_positive(Z2, "Z2");
    require_positive(Z, "Z");
    // Everything in terms of s = a + b and p = ab so that swapping the
    // exponents is bitwise exact.
    const double s = Z1 + Z2, p = Z1 * Z2;
    const double S = 8.0 * std::pow(p, 1.5) / (s * s * s);
    // <a| 1/r |b>
    const double V = 4.0 * std::pow(p, 1.5) / (s * s);
    // Coulomb <aa|1/r12|bb> and exchange <ab|1/r12|ab>
    const double J = p * (s * s + p) / (s * s * s);
    const double K = S * S * 5.0 * s / 16.0;
    const double norm = 1.0 + S * S;

    EnergyBreakdown e;
    e.kinetic = (0.5 * (s * s - 2.0 * p) + S * S * p) / norm;
    e.nuclear_attraction = -Z * (s + 2.0 * S * V) / norm;
    e.electron_repulsion = (J + K) / norm;
    e.total = e.kinetic + e.nuclear_attraction + e.electron_repulsion;
    return e;
}

EnergyBreakdown energy_by_quadrature(double Z1, double Z2, double Z)
{
    require_positive(Z1, "Z1");
    require_positive(Z2, "Z2");
    require_positive(Z, "Z");
    constexpr double four_pi = 4.0 * std::numbers::pi;
    const double a = Z1, b = Z2;
    QuadratureSpec spec;
    spec.rel_tol = 5e-13;
    spec.abs_tol = 1e-30;
    QuadratureSpec inner_spec = spec;
    inner_spec.rel_tol = 5e-14;
    const auto psi = [=](double r1, double r2) { return std::exp(-a * r1 - b * r2) + std::exp(-b * r1 - a * r2); };
    const auto d1 = [=](double r1, double r2) { return -a * std::exp(-a * r1 - b * r2) - b * std::exp(-b * r1 - a * r2); };

    const double norm = integrate_2d_radial([&](double x, double y) { return psi(x, y) * psi(x, y); }, spec).value;
    // Both electrons contribute equally by exchange symmetry.
    const double kin = integrate_2d_radial([&](double x, double y) { return d1(x, y) * d1(x, y); }, spec).value;
    const double nuc = integrate_2d_radial([&](double x, double y) { return psi(x, y) * psi(x, y) / x; }, spec).value;

    // Inner integral split at r2 = r1 where 1/max(r1, r2) has its kink.
    const RadialFunction outer = [&](double r1) {
        const RadialFunction inner = [&](double r2) { return psi(r1, r2) * psi(r1, r2) * r2 * r2 / std::max(r1, r2); };
        double v = integrate_semi_infinite(inner, r1, inner_spec).value;
        if (r1 > 0.0) {
            const double edges[] = {0.0, r1};
            v += integrate_panels(inner, edges, inner_spec).value;
        }
        return v;
    };
    const double rep = four_pi * four_pi * integrate_radial(outer, 2, spec).value;

    EnergyBreakdown e;
    e.kinetic = kin / norm;
    e.nuclear_attraction = -2.0 * Z * nuc / norm;
    e.electron_repulsion = rep / norm;
    e.total = e.kinetic + e.nuclear_attraction + e.electron_repulsion;
    return e;
}

double energy_gradient_norm(double Z1, double Z2, double Z, double step)
{
    const double g1 = (energy(Z1 + step, Z2, Z).total - energy(Z1 - step, Z2, Z).total) / (2.0 * step);
    const double g2 = (energy(Z1, Z2 + step, Z).total - energy(Z1, Z2 - step, Z).total) / (2.0 * step);
    return std::hypot(g1, g2);
}

OptimizationResult optimize(double Z, const OptimizeOptions& options)
{
    if (!(Z >= 1.0) || !std::isfinite(Z))
        throw Error(ErrorKind::InvalidModelParameters, "optimize needs Z >= 1");
    const auto guess = options.initial_guess.value_or(std::pair{Z - 5.0 / 16.0, Z - 5.0 / 16.0});
    require_positive(guess.first, "initial Z1");
    require_positive(guess.second, "initial Z2");

    OptimizationResult r;
    r.energy = std::numeric_limits<double>::infinity();
    Point start{std::log(guess.first), std::log(guess.second)};
    double scale = 0.25;
    int restarts = 0;

    while (true) {
        std::array<Point, 3> v{start, Point{start[0] - scale, start[1] + 0.4 * scale},
                               Point{start[0] + 0.3 * scale, start[1] + scale}};
        std::array<double, 3> f{};
        for (int i = 0; i < 3; ++i)
            f[i] = objective(v[i], Z);

        while (r.iterations < options.max_iterations) {
            std::array<int, 3> idx{0, 1, 2};
            std::sort(idx.begin(), idx.end(), [&](int i, int j) { return f[i] < f[j]; });
            const int best = idx[0], mid = idx[1], worst = idx[2];
            ++r.iterations;

            const double size = std::max({std::abs(v[mid][0] - v[best][0]), std::abs(v[mid][1] - v[best][1]),
                                          std::abs(v[worst][0] - v[best][0]), std::abs(v[worst][1] - v[best][1])});
            if (size < 1e-11 || (f[worst] - f[best]) <= 1e-16 * std::abs(f[best])) {
                r.path.push_back(f[best]);
                break;
            }

            const Point c{0.5 * (v[best][0] + v[mid][0]), 0.5 * (v[best][1] + v[mid][1])};
            auto along = [&](double t) { return Point{c[0] + t * (v[worst][0] - c[0]), c[1] + t * (v[worst][1] - c[1])}; };
            const Point xr = along(-1.0);
            const double fr = objective(xr, Z);
            if (fr < f[best]) {
                const Point xe = along(-2.0);
                const double fe = objective(xe, Z);
                if (fe < fr) {
                    v[worst] = xe;
                    f[worst] = fe;
                } else {
                    v[worst] = xr;
                    f[worst] = fr;
                }
            } else if (fr < f[mid]) {
                v[worst] = xr;
                f[worst] = fr;
            } else {
                const Point xc = fr < f[worst] ? along(-0.5) : along(0.5);
                const double fc = objective(xc, Z);
                if (fc < std::min(fr, f[worst])) {
                    v[worst] = xc;
                    f[worst] = fc;
                } else {
                    for (int i : {mid, worst}) {
                        v[i] = Point{v[best][0] + 0.5 * (v[i][0] - v[best][0]), v[best][1] + 0.5 * (v[i][1] - v[best][1])};
                        f[i] = objective(v[i], Z);
                    }
                }
            }
            r.path.push_back(std::min({f[0], f[1], f[2]}));
        }

        const int b = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
        const double z1 = std::exp(v[b][0]), z2 = std::exp(v[b][1]);
        if (f[b] < r.energy) {
            r.Z1 = std::min(z1, z2);
            r.Z2 = std::max(z1, z2);
            r.energy = f[b];
        }
        r.gradient_norm = energy_gradient_norm(r.Z1, r.Z2, Z);
        r.converged = r.gradient_norm < options.tolerance;
        if (r.converged || r.iterations >= options.max_iterations || restarts >= 8)
            break;
        start = {std::log(r.Z1), std::log(r.Z2)};
        scale = 0.01;
        ++restarts;
    }
    if (r.iterations >= options.max_iterations)
        r.converged = false;
    return r;
}

OptimizerCache::OptimizerCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(path_);
    if (!in)
        return;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream is(line);
        double Z;
        OptimizationResult r;
        int conv;
        if (!(is >> Z))
            continue;
        if (!(is >> r.Z1 >> r.Z2 >> r.energy >> conv)) {
            std::ostringstream os;
            os << path_.string() << ":" << lineno << ": expected 'Z Z1 Z2 E converged'";
            throw Error(ErrorKind::ConfigError, os.str());
        }
        r.converged = conv != 0;
        table_[Z] = r;
    }
}

std::optional<OptimizationResult> OptimizerCache::find(double Z) const
{
    std::lock_guard lock(mutex_);
    const auto it = table_.find(Z);
    if (it == table_.end())
        return std::nullopt;
    return it->second;
}

void OptimizerCache::store(double Z, const OptimizationResult& result)
{
    std::lock_guard lock(mutex_);
    table_[Z] = result;
}

void OptimizerCache::save() const
{
    if (path_.empty())
        return;
    std::lock_guard lock(mutex_);
    if (path_.has_parent_path())
        std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_);
    if (!out)
        throw Error(ErrorKind::ConfigError, "cannot write optimizer cache " + path_.string());
    out << "# Z Z1 Z2 E converged\n";
    char buf[160];
    for (const auto& [Z, r] : table_) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %d\n", Z, r.Z1, r.Z2, r.energy, r.converged ? 1 : 0);
        out << buf;
    }
}

OptimizationResult OptimizerCache::get(double Z, const OptimizeOptions& options)
{
    if (auto hit = find(Z); hit && hit->converged)
        return *hit;
    const auto r = optimize(Z, options);
    store(Z, r);
    return r;
}

} // namespace sfent
