#pragma once

// Data-parallel building blocks. Every kernel has a serial reference path
// and an OpenMP path; both visit indices independently and write results by
// index, so the two produce bit-identical output.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace sfent {

enum class Exec { serial, parallel };

// Number of threads the parallel path would use (1 without OpenMP).
int max_threads();

// True when called from inside an active parallel region.
bool in_parallel_region();

// Calls body(i) for i in [0, n). The first exception thrown by any index is
// rethrown after the loop completes.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body);

// Same, with the team capped at threads (0: the OpenMP default).
void for_each_index(std::size_t n, Exec exec, int threads, const std::function<void(std::size_t)>& body);

// values[i] = f(xs[i])
std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  std::span<const double> xs, Exec exec);

// Row-major: values[i * ys.size() + j] = f(xs[i], ys[j])
std::vector<double> evaluate_grid_2d(const std::function<double(double, double)>& f,
                                     std::span<const double> xs,
                                     std::span<const double> ys, Exec exec);

// n points spaced evenly in log10 between lo and hi (inclusive).
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

// n points spaced evenly between lo and hi (inclusive).
std::vector<double> linear_spaced(double lo, double hi, std::size_t n);

} // namespace sfent
