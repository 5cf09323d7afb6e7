#include "doctest.h"

#include "sfent/error.hpp"
#include "sfent/variational.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace sfent;

namespace {

double single_zeta(double zeta, double Z)
{
    return zeta * zeta - 2.0 * Z * zeta + 5.0 * zeta / 8.0;
}

} // namespace

TEST_CASE("single-zeta energies")
{
    CHECK(energy(2.0, 2.0, 2.0).total == doctest::Approx(-2.75).epsilon(1e-15));
    CHECK(energy(27.0 / 16.0, 27.0 / 16.0, 2.0).total == doctest::Approx(-2.84765625).epsilon(1e-15));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.5, 4.0);
    for (int i = 0; i < 10; ++i) {
        const double z = u(rng);
        const auto q = energy_by_quadrature(z, z, 2.0);
        CAPTURE(z);
        CHECK(std::abs(energy(z, z, 2.0).total - single_zeta(z, 2.0)) < 1e-12);
        CHECK(std::abs(q.total - single_zeta(z, 2.0)) < 1e-12);
    }
}

TEST_CASE("closed-form terms match the quadrature oracle")
{
    const std::pair<double, double> cases[] = {{1.18853, 2.18317}, {0.3, 1.04}, {8.57, 10.8}, {1.0, 1.0 + 1e-6}};
    for (const auto& [a, b] : cases) {
        for (double Z : {1.0, 2.0, 10.0}) {
            const auto e = energy(a, b, Z);
            const auto q = energy_by_quadrature(a, b, Z);
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(Z);
            CHECK(e.kinetic == doctest::Approx(q.kinetic).epsilon(1e-12));
            CHECK(e.nuclear_attraction == doctest::Approx(q.nuclear_attraction).epsilon(1e-12));
            CHECK(e.electron_repulsion == doctest::Approx(q.electron_repulsion).epsilon(1e-12));
            CHECK(e.total == e.kinetic + e.nuclear_attraction + e.electron_repulsion);
        }
    }
}

TEST_CASE("energy is exchange symmetric and rejects bad input")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 12.0);
    for (int i = 0; i < 200; ++i) {
        const double a = u(rng), b = u(rng), Z = u(rng);
        CHECK(energy(a, b, Z).total == energy(b, a, Z).total);
    }
    CHECK_THROWS_AS(energy(0.0, 1.0, 2.0), Error);
    CHECK_THROWS_AS(optimize(0.5), Error);
}

TEST_CASE("helium optimum")
{
    const auto r = optimize(2.0);
    CHECK(r.converged);
    CHECK(r.Z1 <= r.Z2);
    CHECK(r.Z1 == doctest::Approx(1.19).epsilon(0.01));
    CHECK(r.Z2 == doctest::Approx(2.18).epsilon(0.01));
    CHECK(r.energy < -2.8476);
    CHECK(r.energy == doctest::Approx(-2.8757).epsilon(1e-4));
    CHECK(energy_gradient_norm(r.Z1, r.Z2, 2.0) < 1e-6);

    // Grid search oracle at 0.001 resolution.
    double best = 0.0;
    for (int i = 1000; i <= 1400; ++i)
        for (int j = 2000; j <= 2400; ++j)
            best = std::min(best, energy(i * 1e-3, j * 1e-3, 2.0).total);
    CHECK(std::abs(r.energy - best) < 1e-4);
    CHECK(r.energy <= best);
}

TEST_CASE("descent from the unscreened guess never raises the energy")
{
    for (double Z : {1.0, 2.0, 5.0, 10.0}) {
        const auto r = optimize(Z, {std::pair{Z, Z}});
        CHECK(r.converged);
        REQUIRE_FALSE(r.path.empty());
        CHECK(r.path.front() <= energy(Z, Z, Z).total);
        for (std::size_t i = 1; i < r.path.size(); ++i)
            CHECK(r.path[i] <= r.path[i - 1]);
        CHECK(r.path.back() == r.energy);
        CHECK(std::abs(r.energy - optimize(Z).energy) < 1e-10);
    }
}

TEST_CASE("optimized series: ordering, virial, relative decorrelation")
{
    double prev_gap = 1e9, prev_ratio = 0.0;
    for (int Z = 1; Z <= 10; ++Z) {
        const auto r = optimize(Z);
        const auto e = energy(r.Z1, r.Z2, Z);
        const double zeta = Z - 5.0 / 16.0;
        CAPTURE(Z);
        CHECK(r.converged);
        CHECK(r.energy <= single_zeta(zeta, Z));
        CHECK(single_zeta(zeta, Z) <= single_zeta(Z, Z));
        CHECK(std::abs(e.total + e.kinetic) <= 1e-4 * std::abs(e.total));
        CHECK(energy_gradient_norm(r.Z1, r.Z2, Z) < 1e-6);
        if (Z >= 2) {
            const double gap = (r.Z2 - r.Z1) / Z;
            const double ratio = r.Z1 / Z;
            CHECK(gap < prev_gap);
            CHECK(ratio > prev_ratio);
            prev_gap = gap;
            prev_ratio = ratio;
        }
    }
}

TEST_CASE("iteration cap returns the best point unconverged")
{
    OptimizeOptions o;
    o.max_iterations = 5;
    const auto r = optimize(2.0, o);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 5);
    CHECK(r.energy <= energy(2.0 - 5.0 / 16.0, 2.0 - 5.0 / 16.0, 2.0).total);
}

TEST_CASE("optimizer cache round trip")
{
    const auto dir = std::filesystem::temp_directory_path() / "sfent_cache_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "cache.txt";
    {
        OptimizerCache cache(path);
        CHECK_FALSE(cache.find(2.0));
        const auto r = cache.get(2.0);
        CHECK(cache.find(2.0));
        cache.save();
        CHECK(r.converged);
    }
    OptimizerCache reloaded(path);
    const auto hit = reloaded.find(2.0);
    REQUIRE(hit);
    const auto fresh = optimize(2.0);
    CHECK(hit->Z1 == fresh.Z1);
    CHECK(hit->Z2 == fresh.Z2);
    CHECK(hit->energy == fresh.energy);
    CHECK(hit->converged);

    std::ofstream(dir / "bad.txt") << "2.0 1.1\n";
    CHECK_THROWS_AS(OptimizerCache(dir / "bad.txt"), Error);
    std::filesystem::remove_all(dir);
}
