#include "doctest.h"

#include "sfent/error.hpp"
#include "sfent/kernels.hpp"
#include "sfent/models.hpp"
#include "sfent/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace sfent;

namespace {
constexpr double pi = std::numbers::pi;

const SplitShellModel helium{2.0, 1.1885, 2.1832};
} // namespace

TEST_CASE("hydrogenic densities at the origin")
{
    const AtomicModel h = HydrogenicAtom(1.0);
    CHECK(charge_density(h, 0.0) == doctest::Approx(1.0 / pi).epsilon(1e-15));
    CHECK(charge_density(h, 0.0) == doctest::Approx(0.3183099).epsilon(1e-7));
    CHECK(momentum_density(h, 0.0) == doctest::Approx(8.0 / (pi * pi)).epsilon(1e-15));
    CHECK(momentum_density(h, 0.0) == doctest::Approx(0.8105695).epsilon(1e-7));
}

TEST_CASE("non-interacting split shell reduces to twice the hydrogenic densities")
{
    const SplitShellModel ni = SplitShellModel::non_interacting(2.0);
    const HydrogenicAtom h(2.0);
    CHECK(ni.degenerate());
    CHECK(ni.overlap() == 1.0);
    for (double x : {0.0, 0.1, 0.7, 2.0, 5.5}) {
        CHECK(ni.density_position(x) == doctest::Approx(2.0 * 8.0 / pi * std::exp(-4.0 * x)).epsilon(1e-14));
        CHECK(ni.density_momentum(x) == doctest::Approx(2.0 * h.density_momentum(x)).epsilon(1e-14));
        for (double y : {0.0, 0.3, 1.9}) {
            CHECK(ni.pair_density_position(x, y) ==
                  doctest::Approx(2.0 * h.density_position(x) * h.density_position(y)).epsilon(1e-14));
            CHECK(ni.pair_density_momentum(x, y) ==
                  doctest::Approx(2.0 * h.density_momentum(x) * h.density_momentum(y)).epsilon(1e-14));
        }
    }
}

TEST_CASE("nearly equal exponents take the non-interacting branch")
{
    const SplitShellModel m(2.0, 2.0, 2.0 + 1e-12);
    CHECK(m.degenerate());
    CHECK(m.inner_exponent() == m.outer_exponent());
    const SplitShellModel n(2.0, 2.0, 2.0 + 1e-6);
    CHECK_FALSE(n.degenerate());
}

TEST_CASE("exponents are ordered and the model is exchange symmetric")
{
    const SplitShellModel swapped(2.0, 2.1832, 1.1885);
    CHECK(swapped.inner_exponent() == helium.inner_exponent());
    CHECK(swapped.outer_exponent() == helium.outer_exponent());

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng), b = u(rng);
        CHECK(helium.pair_density_position(a, b) == helium.pair_density_position(b, a));
        CHECK(helium.pair_density_momentum(a, b) == helium.pair_density_momentum(b, a));
    }
}

TEST_CASE("invalid parameters are rejected")
{
    CHECK_THROWS_AS(HydrogenicAtom(0.0), Error);
    CHECK_THROWS_AS(HarmonicOscillator1D(-1.0), Error);
    CHECK_THROWS_AS(SplitShellModel(2.0, -1.0, 2.0), Error);
    CHECK_THROWS_AS(SplitShellModel(2.0, 1.0, std::nan("")), Error);
    try {
        SplitShellModel(0.0, 1.0, 1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidModelParameters);
    }
}

TEST_CASE("orbitals are unit normalized and the overlap matches quadrature")
{
    QuadratureSpec spec;
    for (double zeta : {0.5, 1.1885, 2.1832, 7.0}) {
        const SlaterOrbital phi{zeta};
        const MomentumOrbital chi{zeta};
        const double n_r = 4.0 * pi * integrate_radial([&](double r) { return phi(r) * phi(r); }, 2, spec).value;
        const double n_p = 4.0 * pi * integrate_radial([&](double p) { return chi(p) * chi(p); }, 2, spec).value;
        CHECK(n_r == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(n_p == doctest::Approx(1.0).epsilon(1e-11));
    }
    const SlaterOrbital a{1.1885}, b{2.1832};
    const MomentumOrbital ka{1.1885}, kb{2.1832};
    const double s_r = 4.0 * pi * integrate_radial([&](double r) { return a(r) * b(r); }, 2, spec).value;
    const double s_p = 4.0 * pi * integrate_radial([&](double p) { return ka(p) * kb(p); }, 2, spec).value;
    CHECK(s_r == doctest::Approx(slater_overlap(1.1885, 2.1832)).epsilon(1e-11));
    CHECK(s_p == doctest::Approx(slater_overlap(1.1885, 2.1832)).epsilon(1e-11));
}

TEST_CASE("one-electron densities integrate to N")
{
    QuadratureSpec spec;
    const AtomicModel models[] = {HydrogenicAtom(1.0), HydrogenicAtom(3.0), helium, SplitShellModel::non_interacting(4.0)};
    for (const auto& m : models) {
        const double n = electron_count(m);
        const double nr = 4.0 * pi * integrate_radial([&](double r) { return charge_density(m, r); }, 2, spec).value;
        const double np = 4.0 * pi * integrate_radial([&](double p) { return momentum_density(m, p); }, 2, spec).value;
        CAPTURE(describe(m));
        CHECK(nr == doctest::Approx(n).epsilon(1e-11));
        CHECK(np == doctest::Approx(n).epsilon(1e-11));
    }
    const AtomicModel osc = HarmonicOscillator1D(2.5);
    const double nx = 2.0 * integrate_radial([&](double x) { return charge_density(osc, x); }, 0, spec).value;
    const double np = 2.0 * integrate_radial([&](double p) { return momentum_density(osc, p); }, 0, spec).value;
    CHECK(nx == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(np == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("oscillator densities have the expected variances")
{
    QuadratureSpec spec;
    const double omega = 2.5;
    const HarmonicOscillator1D osc(omega);
    const double vx = 2.0 * integrate_radial([&](double x) { return osc.density_position(x) * x * x; }, 0, spec).value;
    const double vp = 2.0 * integrate_radial([&](double p) { return osc.density_momentum(p) * p * p; }, 0, spec).value;
    CHECK(vx == doctest::Approx(1.0 / (2.0 * omega)).epsilon(1e-11));
    CHECK(vp == doctest::Approx(omega / 2.0).epsilon(1e-11));
}

TEST_CASE("pair densities integrate to N(N-1) and marginalize to the one-electron density")
{
    QuadratureSpec spec;
    const auto g = [](double r1, double r2) { return helium.pair_density_position(r1, r2); };
    const auto p = [](double p1, double p2) { return helium.pair_density_momentum(p1, p2); };
    CHECK(integrate_2d_radial(g, spec).value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(integrate_2d_radial(p, spec).value == doctest::Approx(2.0).epsilon(1e-9));

    // int Gamma(r1, r2) d^3 r2 = (N - 1) rho(r1)
    for (double r1 : {0.05, 0.6, 2.0}) {
        const double m = 4.0 * pi * integrate_radial([&](double r2) { return g(r1, r2); }, 2, spec).value;
        CHECK(m == doctest::Approx(helium.density_position(r1)).epsilon(1e-11));
        const double mp = 4.0 * pi * integrate_radial([&](double p2) { return p(r1, p2); }, 2, spec).value;
        CHECK(mp == doctest::Approx(helium.density_momentum(r1)).epsilon(1e-11));
    }
}

TEST_CASE("normalization constant matches the wavefunction norm")
{
    QuadratureSpec spec;
    const double Z1 = helium.inner_exponent(), Z2 = helium.outer_exponent(), C = helium.normalization();
    const auto psi2 = [&](double r1, double r2) {
        const double v = C * (std::exp(-Z1 * r1 - Z2 * r2) + std::exp(-Z2 * r1 - Z1 * r2));
        return v * v;
    };
    CHECK(integrate_2d_radial(psi2, spec).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("all densities are non-negative on a log grid")
{
    const auto grid = log_spaced(1e-4, 50.0, 1000);
    const AtomicModel models[] = {HydrogenicAtom(1.0), HydrogenicAtom(30.0), HarmonicOscillator1D(0.25), helium,
                                  SplitShellModel(10.0, 8.57, 10.80)};
    for (const auto& m : models)
        for (double x : grid) {
            CHECK(charge_density(m, x) >= 0.0);
            CHECK(momentum_density(m, x) >= 0.0);
        }
    for (std::size_t i = 0; i < grid.size(); i += 37)
        for (std::size_t j = 0; j < grid.size(); j += 41) {
            CHECK(helium.pair_density_position(grid[i], grid[j]) >= 0.0);
            CHECK(helium.pair_density_momentum(grid[i], grid[j]) >= 0.0);
        }
}
