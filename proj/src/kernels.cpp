#include "sfent/kernels.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfent {

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

bool in_parallel_region()
{
#ifdef _OPENMP
    return omp_in_parallel() != 0;
#else
    return false;
#endif
}

namespace {

void for_each_serial(std::size_t n, const std::function<void(std::size_t)>& body)
{
    for (std::size_t i = 0; i < n; ++i)
        body(i);
}

void for_each_parallel(std::size_t n, int threads, const std::function<void(std::size_t)>& body)
{
#ifdef _OPENMP
    std::exception_ptr first;
    std::mutex guard;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(guard);
            if (!first)
                first = std::current_exception();
        }
    }
    if (first)
        std::rethrow_exception(first);
#else
    (void)threads;
    for_each_serial(n, body);
#endif
}

} // namespace

void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body)
{
    for_each_index(n, exec, 0, body);
}

void for_each_index(std::size_t n, Exec exec, int threads, const std::function<void(std::size_t)>& body)
{
    const int team = threads > 0 ? threads : max_threads();
    // Nested regions run serially; the outermost parallel loop owns the team.
    if (exec == Exec::parallel && n > 1 && !in_parallel_region() && team > 1)
        for_each_parallel(n, team, body);
    else
        for_each_serial(n, body);
}

std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  std::span<const double> xs, Exec exec)
{
    std::vector<double> values(xs.size());
    for_each_index(xs.size(), exec, [&](std::size_t i) { values[i] = f(xs[i]); });
    return values;
}

std::vector<double> evaluate_grid_2d(const std::function<double(double, double)>& f,
                                     std::span<const double> xs,
                                     std::span<const double> ys, Exec exec)
{
    const std::size_t ny = ys.size();
    std::vector<double> values(xs.size() * ny);
    for_each_index(xs.size(), exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < ny; ++j)
            values[i * ny + j] = f(xs[i], ys[j]);
    });
    return values;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n)
{
    if (n == 0 || lo <= 0.0 || hi < lo)
        throw std::invalid_argument("log_spaced: need n > 0 and 0 < lo <= hi");
    std::vector<double> xs(n);
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    xs.back() = hi;
    return xs;
}

std::vector<double> linear_spaced(double lo, double hi, std::size_t n)
{
    if (n == 0 || hi < lo)
        throw std::invalid_argument("linear_spaced: need n > 0 and lo <= hi");
    std::vector<double> xs(n);
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.back() = hi;
    return xs;
}

} // namespace sfent
