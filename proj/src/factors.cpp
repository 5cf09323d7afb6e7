#include "sfent/factors.hpp"

#include "sfent/error.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <type_traits>
#include <unordered_map>

namespace sfent {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi_cubed = 8.0 * pi * pi * pi;

// Relative gap (b - a) / (a + b) below which the partial-fraction form of the
// momentum cross transform loses more than ~1e-13 to cancellation.
constexpr double kPartialFractionGap = 0.05;

// 4 pi int j0(s p) p^2 / ((a^2 + p^2)^2 (b^2 + p^2)^2) dp for a < b, by partial
// fractions in p^2.
double lorentzian_pair_partial_fractions(double a, double b, double s)
{
    const double d = b * b - a * a;
    // (e^{-as} - e^{-bs}) / s, exact at s = 0
    const double diff = s == 0.0 ? (b - a) : -std::exp(-a * s) * std::expm1(-(b - a) * s) / s;
    return pi * pi / (d * d) * (std::exp(-a * s) / a + std::exp(-b * s) / b - 4.0 / d * diff);
}

// Same integral written as int_0^1 t (1 - t) (-G'''(c(t))) dt with
// G(c) = 2 pi^2 e^{-s sqrt c} / s the transform of 1 / (p^2 + c) and
// c(t) = a^2 + t (b^2 - a^2). Free of cancellation for close exponents.
double lorentzian_pair_parametric(double a, double b, double s)
{
    const auto& rule = gauss_legendre(32);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = 0.5 * (rule.nodes[i] + 1.0);
        const double u = std::sqrt(a * a + t * (b * b - a * a));
        const double su = s * u;
        const double g3 = pi * pi * std::exp(-su) * (su * su + 3.0 * su + 3.0) / (4.0 * std::pow(u, 5));
        sum += 0.5 * rule.weights[i] * t * (1.0 - t) * g3;
    }
    return sum;
}

double hydrogenic_F(double Z, double k)
{
    const double d = 4.0 * Z * Z + k * k;
    return 16.0 * std::pow(Z, 4) / (d * d);
}

double hydrogenic_B(double Z, double s)
{
    const double zs = Z * s;
    return std::exp(-zs) * (1.0 + zs + zs * zs / 3.0);
}

// Transform of one orbital-product pair; the shell structure is the same in
// both spaces.
double pair_term(Space space, double a, double b, double q)
{
    return space == Space::momentum ? orbital_pair_transform_position(a, b, q)
                                    : orbital_pair_transform_momentum(a, b, q);
}

double split_shell_1d(const SplitShellModel& m, Space space, double q)
{
    const double a = m.inner_exponent();
    const double b = m.outer_exponent();
    if (m.degenerate())
        return 2.0 * pair_term(space, a, a, q);
    const double S = m.overlap();
    return (pair_term(space, a, a, q) + pair_term(space, b, b, q) + 2.0 * S * pair_term(space, a, b, q)) /
           (1.0 + S * S);
}

double split_shell_2d(const SplitShellModel& m, Space space, double q1, double q2)
{
    const double a = m.inner_exponent();
    const double b = m.outer_exponent();
    if (m.degenerate())
        return pair_term(space, a, a, q1) * pair_term(space, a, a, q2);
    const double S = m.overlap();
    const double aa1 = pair_term(space, a, a, q1), bb1 = pair_term(space, b, b, q1), ab1 = pair_term(space, a, b, q1);
    const double aa2 = pair_term(space, a, a, q2), bb2 = pair_term(space, b, b, q2), ab2 = pair_term(space, a, b, q2);
    return (aa1 * bb2 + bb1 * aa2 + 2.0 * ab1 * ab2) / (2.0 * (1.0 + S * S));
}

double density(const AtomicModel& model, Space space, double x)
{
    // F transforms the charge density, B the momentum density.
    return space == Space::momentum ? charge_density(model, x) : momentum_density(model, x);
}

double pair_density(const SplitShellModel& model, Space space, double x1, double x2)
{
    return space == Space::momentum ? model.pair_density_position(x1, x2) : model.pair_density_momentum(x1, x2);
}

double analytic_1d(const AtomicModel& model, Space space, double q)
{
    return std::visit(
        [space, q](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HydrogenicAtom>)
                return space == Space::momentum ? hydrogenic_F(m.charge(), q) : hydrogenic_B(m.charge(), q);
            else if constexpr (std::is_same_v<T, HarmonicOscillator1D>)
                return space == Space::momentum ? std::exp(-q * q / (4.0 * m.omega()))
                                                : std::exp(-q * q * m.omega() / 4.0);
            else
                return split_shell_1d(m, space, q);
        },
        model);
}

double numeric_1d(const AtomicModel& model, Space space, double q, const QuadratureSpec& spec)
{
    const RadialFunction f = [&model, space](double x) { return density(model, space, x); };
    if (geometry(model) == Geometry::line1d)
        return cosine_transform(f, q, spec).value;
    return bessel_j0_transform(f, q, spec).value;
}

void require_nonnegative(double q, const char* name)
{
    if (!(q >= 0.0)) {
        std::ostringstream os;
        os << name << " must be >= 0, got " << q;
        throw Error(ErrorKind::ConfigError, os.str());
    }
}

double origin_norm_1d(const AtomicModel& model, Space space)
{
    const double origin = density(model, space, 0.0);
    return geometry(model) == Geometry::line1d ? 2.0 * pi * origin : two_pi_cubed * origin;
}

} // namespace

double orbital_pair_transform_position(double a, double b, double k)
{
    const double c = a + b;
    const double d = c * c + k * k;
    return 8.0 * std::pow(a * b, 1.5) * c / (d * d);
}

double orbital_pair_transform_momentum(double a, double b, double s)
{
    if (a > b)
        std::swap(a, b);
    if (a == b)
        return hydrogenic_B(a, s);
    const double integral = (b - a) / (a + b) >= kPartialFractionGap ? lorentzian_pair_partial_fractions(a, b, s)
                                                                      : lorentzian_pair_parametric(a, b, s);
    return 8.0 / (pi * pi) * std::pow(a * b, 2.5) * integral;
}

double one_electron_F(const AtomicModel& model, double k, Path path, const QuadratureSpec& spec)
{
    require_nonnegative(k, "k");
    return path == Path::analytic ? analytic_1d(model, Space::momentum, k) : numeric_1d(model, Space::momentum, k, spec);
}

double one_electron_B(const AtomicModel& model, double s, Path path, const QuadratureSpec& spec)
{
    require_nonnegative(s, "s");
    return path == Path::analytic ? analytic_1d(model, Space::position, s) : numeric_1d(model, Space::position, s, spec);
}

std::vector<double> two_electron_row(const SplitShellModel& model, Space space, std::span<const double> q1, double q2,
                                     const QuadratureSpec& spec)
{
    require_nonnegative(q2, "second argument");
    QuadratureSpec inner = spec;
    inner.rel_tol = 0.1 * spec.rel_tol;
    inner.abs_tol = 0.1 * spec.abs_tol;
    inner.exec = Exec::serial;

    std::mutex guard;
    std::unordered_map<std::uint64_t, double> cache;
    // H(x1, q2) = 4 pi int Gamma(x1, x2) j0(q2 x2) x2^2 dx2
    const RadialFunction H = [&](double x1) {
        const auto key = std::bit_cast<std::uint64_t>(x1);
        {
            std::lock_guard lock(guard);
            if (auto it = cache.find(key); it != cache.end())
                return it->second;
        }
        const RadialFunction row = [&model, space, x1](double x2) { return pair_density(model, space, x1, x2); };
        const double h = bessel_j0_transform(row, q2, inner).value;
        std::lock_guard lock(guard);
        cache.emplace(key, h);
        return h;
    };

    std::vector<double> out;
    out.reserve(q1.size());
    for (double q : q1) {
        require_nonnegative(q, "first argument");
        // Gamma is normalized to N(N-1) = 2; the factor uses N(N-1)/2.
        out.push_back(0.5 * bessel_j0_transform(H, q, spec).value);
    }
    return out;
}

double two_electron_F(const SplitShellModel& model, double k1, double k2, Path path, const QuadratureSpec& spec)
{
    require_nonnegative(k1, "k1");
    require_nonnegative(k2, "k2");
    if (path == Path::analytic)
        return split_shell_2d(model, Space::momentum, k1, k2);
    const double q1[] = {k1};
    return two_electron_row(model, Space::momentum, q1, k2, spec).front();
}

double two_electron_B(const SplitShellModel& model, double s1, double s2, Path path, const QuadratureSpec& spec)
{
    require_nonnegative(s1, "s1");
    require_nonnegative(s2, "s2");
    if (path == Path::analytic)
        return split_shell_2d(model, Space::position, s1, s2);
    const double q1[] = {s1};
    return two_electron_row(model, Space::position, q1, s2, spec).front();
}

StructureFactor1D make_factor(const AtomicModel& model, Space space, Path path, const QuadratureSpec& spec)
{
    StructureFactor1D f;
    f.space = space;
    f.source = path;
    f.geometry = geometry(model);
    if (path == Path::analytic)
        f.evaluator = [model, space](double q) { return analytic_1d(model, space, q); };
    else
        f.evaluator = [model, space, spec](double q) { return numeric_1d(model, space, q, spec); };
    f.norm_constant = origin_norm_1d(model, space);
    return f;
}

StructureFactor2D make_pair_factor(const SplitShellModel& model, Space space, Path path, const QuadratureSpec& spec)
{
    StructureFactor2D f;
    f.space = space;
    f.source = path;
    if (path == Path::analytic) {
        f.evaluator = [model, space](double q1, double q2) { return split_shell_2d(model, space, q1, q2); };
    } else {
        f.evaluator = [model, space, spec](double q1, double q2) {
            const double row[] = {q1};
            return two_electron_row(model, space, row, q2, spec).front();
        };
    }
    f.norm_constant = 0.5 * two_pi_cubed * two_pi_cubed * pair_density(model, space, 0.0, 0.0);
    return f;
}

Estimate factor_norm(const StructureFactor1D& factor, const QuadratureSpec& spec)
{
    if (factor.geometry == Geometry::line1d) {
        const Estimate e = integrate_radial(factor.evaluator, 0, spec);
        return {2.0 * e.value, 2.0 * e.error};
    }
    const Estimate e = integrate_radial(factor.evaluator, 2, spec);
    return {4.0 * pi * e.value, 4.0 * pi * e.error};
}

Estimate factor_norm(const StructureFactor2D& factor, const QuadratureSpec& spec)
{
    return integrate_2d_radial(factor.evaluator, spec);
}

namespace {

void require_norm(double n)
{
    if (!(n > 0.0) || !std::isfinite(n)) {
        std::ostringstream os;
        os << "norm constant must be finite and positive, got " << n;
        throw Error(ErrorKind::DivergentNorm, os.str());
    }
}

} // namespace

StructureFactor1D unity_normalize(const StructureFactor1D& factor)
{
    require_norm(factor.norm_constant);
    StructureFactor1D out = factor;
    const double n = factor.norm_constant;
    out.evaluator = [inner = factor.evaluator, n](double q) { return inner(q) / n; };
    out.norm_constant = 1.0;
    out.unity = true;
    return out;
}

StructureFactor2D unity_normalize(const StructureFactor2D& factor)
{
    require_norm(factor.norm_constant);
    StructureFactor2D out = factor;
    const double n = factor.norm_constant;
    out.evaluator = [inner = factor.evaluator, n](double q1, double q2) { return inner(q1, q2) / n; };
    out.norm_constant = 1.0;
    out.unity = true;
    return out;
}

std::vector<double> default_scan_grid()
{
    return log_spaced(1e-3, 30.0, 200);
}

PositivityReport positivity_scan(const StructureFactor1D& factor, std::span<const double> grid, double abs_tol,
                                 Exec exec)
{
    if (grid.empty())
        throw Error(ErrorKind::ConfigError, "positivity scan grid is empty");
    const auto values = evaluate_grid(factor.evaluator, grid, exec);
    PositivityReport r;
    r.min_value = values[0];
    r.min_location = grid[0];
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < r.min_value) {
            r.min_value = values[i];
            r.min_location = grid[i];
        }
    r.is_positive = r.min_value > -abs_tol;
    return r;
}

PositivityReport positivity_scan(const StructureFactor2D& factor, std::span<const double> grid, double abs_tol,
                                 Exec exec)
{
    if (grid.empty())
        throw Error(ErrorKind::ConfigError, "positivity scan grid is empty");
    const auto values = evaluate_grid_2d(factor.evaluator, grid, grid, exec);
    PositivityReport r;
    r.min_value = values[0];
    r.min_location = grid[0];
    r.min_location2 = grid[0];
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < r.min_value) {
            r.min_value = values[i];
            r.min_location = grid[i / n];
            r.min_location2 = grid[i % n];
        }
    r.is_positive = r.min_value > -abs_tol;
    return r;
}

} // namespace sfent
