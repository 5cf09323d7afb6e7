#include "doctest.h"

#include "sfent/error.hpp"
#include "sfent/factors.hpp"
#include "sfent/kernels.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace sfent;

namespace {
constexpr double pi = std::numbers::pi;

const SplitShellModel helium{2.0, 1.18853, 2.18317};

double close(double a, double b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(a));
}

double FH(double Z, double k)
{
    return 16.0 * std::pow(Z, 4) / std::pow(4.0 * Z * Z + k * k, 2);
}

double BH(double Z, double s)
{
    return std::exp(-Z * s) * (1.0 + Z * s + Z * Z * s * s / 3.0);
}
} // namespace

TEST_CASE("hydrogenic factor examples")
{
    const AtomicModel h1 = HydrogenicAtom(1.0);
    CHECK(one_electron_F(h1, 0.0, Path::analytic) == 1.0);
    CHECK(one_electron_F(HydrogenicAtom(2.0), 2.0, Path::analytic) == doctest::Approx(0.64).epsilon(1e-15));
    CHECK(one_electron_B(h1, 1.0, Path::analytic) == doctest::Approx(std::exp(-1.0) * 7.0 / 3.0).epsilon(1e-15));
    CHECK(one_electron_B(h1, 1.0, Path::analytic) == doctest::Approx(0.8583854).epsilon(1e-7));
    CHECK(one_electron_B(HydrogenicAtom(3.0), 2.0, Path::analytic) == doctest::Approx(0.0470963).epsilon(1e-6));
    CHECK(one_electron_B(HydrogenicAtom(3.0), 2.0, Path::numeric) == doctest::Approx(19.0 * std::exp(-6.0)).epsilon(1e-9));
}

TEST_CASE("orbital pair transforms reduce to the hydrogenic factors on the diagonal")
{
    for (double a : {0.5, 1.0, 2.7})
        for (double q : {0.0, 0.3, 4.0, 25.0}) {
            CHECK(orbital_pair_transform_position(a, a, q) == doctest::Approx(FH(a, q)).epsilon(1e-14));
            CHECK(orbital_pair_transform_momentum(a, a, q) == doctest::Approx(BH(a, q)).epsilon(1e-14));
        }
    // At zero argument both transforms give the orbital overlap.
    CHECK(orbital_pair_transform_position(1.2, 2.2, 0.0) == doctest::Approx(slater_overlap(1.2, 2.2)).epsilon(1e-14));
    CHECK(orbital_pair_transform_momentum(1.2, 2.2, 0.0) == doctest::Approx(slater_overlap(1.2, 2.2)).epsilon(1e-13));
    CHECK(orbital_pair_transform_momentum(2.2, 1.2, 0.7) == orbital_pair_transform_momentum(1.2, 2.2, 0.7));
}

TEST_CASE("momentum cross transform is smooth across the branch switch")
{
    // Below and above the relative gap where the parametric form takes over.
    const double a = 2.0;
    for (double r : {0.049, 0.0499999, 0.0500001, 0.051})
        for (double s : {0.0, 0.4, 3.0, 12.0}) {
            const double b = a * (1.0 + r) / (1.0 - r);
            const MomentumOrbital ka{a}, kb{b};
            QuadratureSpec spec;
            spec.rel_tol = 1e-12;
            const double ref = bessel_j0_transform([&](double p) { return ka(p) * kb(p); }, s, spec).value;
            CAPTURE(r);
            CAPTURE(s);
            CHECK(orbital_pair_transform_momentum(a, b, s) == doctest::Approx(ref).epsilon(1e-11));
        }
    // Tiny gap: no cancellation blow-up.
    CHECK(orbital_pair_transform_momentum(2.0, 2.0 + 1e-7, 1.3) == doctest::Approx(BH(2.0, 1.3)).epsilon(1e-7));
}

TEST_CASE("factors equal N at the origin on both paths")
{
    const AtomicModel models[] = {HydrogenicAtom(1.0), HydrogenicAtom(7.0), HarmonicOscillator1D(0.25),
                                  HarmonicOscillator1D(4.0), helium, SplitShellModel::non_interacting(3.0)};
    for (const auto& m : models) {
        CAPTURE(describe(m));
        const double n = electron_count(m);
        for (Path p : {Path::analytic, Path::numeric}) {
            CHECK(std::abs(one_electron_F(m, 0.0, p) - n) < 1e-8);
            CHECK(std::abs(one_electron_B(m, 0.0, p) - n) < 1e-8);
        }
    }
    CHECK(two_electron_F(helium, 0.0, 0.0, Path::analytic) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(two_electron_B(helium, 0.0, 0.0, Path::analytic) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(two_electron_F(helium, 0.0, 0.0, Path::numeric) - 1.0) < 1e-8);
    CHECK(std::abs(two_electron_B(helium, 0.0, 0.0, Path::numeric) - 1.0) < 1e-8);
}

TEST_CASE("analytic and numeric one-electron factors agree at random abscissas")
{
    const AtomicModel models[] = {HydrogenicAtom(1.0), HydrogenicAtom(2.0), HarmonicOscillator1D(1.0),
                                  HarmonicOscillator1D(0.25), helium, SplitShellModel(10.0, 8.57309, 10.80184),
                                  SplitShellModel::non_interacting(2.0)};
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (const auto& m : models) {
        CAPTURE(describe(m));
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double x = u(rng);
            worst = std::max(worst, close(one_electron_F(m, x, Path::analytic), one_electron_F(m, x, Path::numeric)));
            worst = std::max(worst, close(one_electron_B(m, x, Path::analytic), one_electron_B(m, x, Path::numeric)));
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("analytic and numeric two-electron factors agree")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    QuadratureSpec spec;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double a = u(rng), b = u(rng);
        worst = std::max(worst, close(two_electron_F(helium, a, b, Path::analytic),
                                      two_electron_F(helium, a, b, Path::numeric, spec)));
        worst = std::max(worst, close(two_electron_B(helium, a, b, Path::analytic),
                                      two_electron_B(helium, a, b, Path::numeric, spec)));
    }
    CHECK(worst < 1e-8);

    const double row[] = {0.0, 0.5, 1.5, 4.0};
    const auto values = two_electron_row(helium, Space::momentum, row, 1.1, spec);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(values[i] - two_electron_F(helium, row[i], 1.1, Path::analytic)) < 1e-6);
}

TEST_CASE("non-interacting factors reduce to hydrogenic products")
{
    const SplitShellModel ni = SplitShellModel::non_interacting(2.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng), b = u(rng);
        CHECK(std::abs(one_electron_F(ni, a, Path::analytic) - 2.0 * FH(2.0, a)) < 1e-12);
        CHECK(std::abs(one_electron_B(ni, a, Path::analytic) - 2.0 * BH(2.0, a)) < 1e-12);
        CHECK(std::abs(two_electron_F(ni, a, b, Path::analytic) - FH(2.0, a) * FH(2.0, b)) < 1e-10);
        CHECK(std::abs(two_electron_B(ni, a, b, Path::analytic) - BH(2.0, a) * BH(2.0, b)) < 1e-10);
    }
}

TEST_CASE("two-electron factors are symmetric")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng), b = u(rng);
        CHECK(two_electron_F(helium, a, b, Path::analytic) == two_electron_F(helium, b, a, Path::analytic));
        CHECK(two_electron_B(helium, a, b, Path::analytic) == two_electron_B(helium, b, a, Path::analytic));
    }
}

TEST_CASE("hydrogenic scaling and monotone decay")
{
    const AtomicModel h1 = HydrogenicAtom(1.0);
    for (double Z : {0.5, 2.0, 3.7})
        for (double x : {0.0, 0.2, 1.0, 6.0}) {
            const AtomicModel hz = HydrogenicAtom(Z);
            CHECK(one_electron_F(hz, x, Path::analytic) == doctest::Approx(one_electron_F(h1, x / Z, Path::analytic)).epsilon(1e-14));
            CHECK(one_electron_B(hz, x, Path::analytic) == doctest::Approx(one_electron_B(h1, Z * x, Path::analytic)).epsilon(1e-14));
        }
    const double h = 1e-6;
    for (double s : log_spaced(1e-3, 30.0, 200)) {
        const double d = one_electron_B(h1, s + h, Path::analytic) - one_electron_B(h1, s - h, Path::analytic);
        CHECK(d < 0.0);
    }
}

TEST_CASE("norm constants")
{
    const AtomicModel h1 = HydrogenicAtom(1.0);
    const auto F = make_factor(h1, Space::momentum, Path::analytic);
    const auto B = make_factor(h1, Space::position, Path::analytic);
    CHECK(F.norm_constant == doctest::Approx(78.956835).epsilon(1e-8));
    CHECK(B.norm_constant == doctest::Approx(201.06193).epsilon(1e-8));
    for (double Z : {1.0, 2.0, 5.0}) {
        const AtomicModel h = HydrogenicAtom(Z);
        CHECK(make_factor(h, Space::momentum, Path::analytic).norm_constant ==
              doctest::Approx(8.0 * pi * pi * Z * Z * Z).epsilon(1e-14));
        CHECK(make_factor(h, Space::position, Path::analytic).norm_constant ==
              doctest::Approx(64.0 * pi / (Z * Z * Z)).epsilon(1e-14));
    }

    QuadratureSpec spec;
    const AtomicModel models[] = {h1, HydrogenicAtom(3.0), HarmonicOscillator1D(1.0), HarmonicOscillator1D(4.0), helium};
    for (const auto& m : models)
        for (Space s : {Space::momentum, Space::position}) {
            CAPTURE(describe(m));
            const auto f = make_factor(m, s, Path::analytic);
            const auto n = factor_norm(f, spec);
            CHECK(n.value == doctest::Approx(f.norm_constant).epsilon(1e-9));
            const auto u = unity_normalize(f);
            CHECK(u.unity);
            CHECK(std::abs(factor_norm(u, spec).value - 1.0) < 1e-8);
        }

    for (Space s : {Space::momentum, Space::position}) {
        const auto f = make_pair_factor(helium, s, Path::analytic);
        CHECK(std::abs(factor_norm(unity_normalize(f), spec).value - 1.0) < 1e-6);
        CHECK(make_pair_factor(helium, s, Path::numeric).norm_constant == f.norm_constant);
    }
}

TEST_CASE("unity normalization rejects bad norms")
{
    auto f = make_factor(HydrogenicAtom(1.0), Space::momentum, Path::analytic);
    f.norm_constant = std::numeric_limits<double>::infinity();
    try {
        unity_normalize(f);
        FAIL("expected DivergentNorm");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivergentNorm);
    }
    f.norm_constant = 0.0;
    CHECK_THROWS_AS(unity_normalize(f), Error);
}

TEST_CASE("positivity scans")
{
    const auto grid = default_scan_grid();
    CHECK(grid.size() == 200);
    CHECK(grid.front() == doctest::Approx(1e-3));
    CHECK(grid.back() == doctest::Approx(30.0));
    for (double Z : {1.0, 4.0, 30.0})
        for (Space s : {Space::momentum, Space::position}) {
            const auto r = positivity_scan(make_factor(HydrogenicAtom(Z), s, Path::analytic), grid);
            CHECK(r.is_positive);
            CHECK(r.min_value >= 0.0);
        }

    const auto B2 = make_pair_factor(helium, Space::position, Path::analytic);
    const auto box = linear_spaced(0.0, 30.0, 200);
    const auto r = positivity_scan(B2, box, 1e-12, Exec::parallel);
    CHECK(r.is_positive);
    CHECK(r.min_location == 30.0);
    CHECK(r.min_location2 == 30.0);

    StructureFactor1D neg;
    neg.evaluator = [](double x) { return std::cos(x); };
    const auto bad = positivity_scan(neg, grid);
    CHECK_FALSE(bad.is_positive);
    CHECK(bad.min_value < -0.99);
    CHECK(positivity_scan(neg, std::vector<double>{0.0, 1.0}).is_positive);

    CHECK_THROWS_AS(positivity_scan(neg, std::vector<double>{}), Error);
}

TEST_CASE("negative arguments are rejected")
{
    CHECK_THROWS_AS(one_electron_F(HydrogenicAtom(1.0), -1.0, Path::analytic), Error);
    CHECK_THROWS_AS(two_electron_B(helium, 0.0, -0.1, Path::analytic), Error);
}
