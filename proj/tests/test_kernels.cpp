#include "doctest.h"

#include "sfent/entropy.hpp"
#include "sfent/factors.hpp"
#include "sfent/kernels.hpp"
#include "sfent/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

using namespace sfent;

TEST_CASE("spaced grids hit their end points")
{
    const auto lin = linear_spaced(0.0, 10.0, 401);
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == 10.0);
    CHECK(lin[200] == doctest::Approx(5.0).epsilon(1e-15));
    const auto lg = log_spaced(1e-3, 30.0, 200);
    CHECK(lg.front() == doctest::Approx(1e-3).epsilon(1e-14));
    CHECK(lg.back() == 30.0);
    for (std::size_t i = 1; i < lg.size(); ++i)
        CHECK(lg[i] / lg[i - 1] == doctest::Approx(lg[1] / lg[0]).epsilon(1e-12));
    CHECK_THROWS_AS(log_spaced(0.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(linear_spaced(1.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("parallel grids are bit-identical to the serial reference")
{
    const auto f = make_pair_factor(SplitShellModel(2.0, 1.18853, 2.18317), Space::momentum, Path::analytic);
    const auto xs = linear_spaced(0.0, 10.0, 97);
    const auto serial = evaluate_grid_2d(f.evaluator, xs, xs, Exec::serial);
    const auto parallel = evaluate_grid_2d(f.evaluator, xs, xs, Exec::parallel);
    REQUIRE(serial.size() == 97u * 97u);
    CHECK(serial == parallel);

    const auto g = make_factor(HydrogenicAtom(2.0), Space::position, Path::analytic);
    CHECK(evaluate_grid(g.evaluator, xs, Exec::serial) == evaluate_grid(g.evaluator, xs, Exec::parallel));
}

TEST_CASE("a forced team visits every index once and rethrows")
{
    std::vector<std::atomic<int>> hits(1000);
    for_each_index(hits.size(), Exec::parallel, 4, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits)
        CHECK(h.load() == 1);

    CHECK_THROWS_AS(for_each_index(100, Exec::parallel, 4,
                                   [](std::size_t i) {
                                       if (i == 37)
                                           throw std::runtime_error("boom");
                                   }),
                    std::runtime_error);
    CHECK_THROWS_AS(for_each_index(100, Exec::serial, 4,
                                   [](std::size_t i) {
                                       if (i == 37)
                                           throw std::runtime_error("boom");
                                   }),
                    std::runtime_error);
}

TEST_CASE("quadrature results do not depend on the execution mode")
{
    QuadratureSpec serial = ReportOptions::default_2d_spec();
    QuadratureSpec parallel = serial;
    parallel.exec = Exec::parallel;
    const SplitShellModel he(2.0, 1.18853, 2.18317);
    const auto a = pair_factor_entropy(he, Space::position, serial);
    const auto b = pair_factor_entropy(he, Space::position, parallel);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);

    const double row[] = {0.0, 0.7, 2.5};
    QuadratureSpec s1, p1;
    p1.exec = Exec::parallel;
    CHECK(two_electron_row(he, Space::momentum, row, 0.9, s1) == two_electron_row(he, Space::momentum, row, 0.9, p1));
}
