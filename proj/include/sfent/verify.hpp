#pragma once

// Named invariant checks, grouped by acceptance criterion 1..9.
//
// A numerical check passes only when the discrepancy plus the quadrature's
// certified error bound fits inside the tolerance, and an inequality only
// when its margin exceeds the bound. The bound on a computed value v is
// max(reported error, spec.target(v)), so loosening the quadrature
// tolerances beyond what a check needs makes it fail rather than pass on
// luck.

#include "sfent/config.hpp"
#include "sfent/variational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sfent {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double expected = 0.0;
    // Zero for inequalities.
    double tolerance = 0.0;
    // Certified error bound charged against the tolerance or margin.
    double bound = 0.0;
    // "==", ">", "<", ">="
    std::string relation;
};

struct VerifyOptions {
    QuadratureSpec spec;
    int workers = 1;
    std::uint64_t seed = 20240917;
    Range hydrogenic_z{1.0, 30.0, 1.0};
    Range helium_z{2.0, 10.0, 1.0};

    static VerifyOptions from_config(const RunConfig& config);
};

inline constexpr int kCriterionCount = 9;

// Shares series computations between criteria of one run.
class Verifier {
public:
    Verifier(VerifyOptions options, OptimizerCache& cache);
    ~Verifier();
    Verifier(const Verifier&) = delete;
    Verifier& operator=(const Verifier&) = delete;

    std::vector<CheckResult> run(int criterion);
    std::vector<CheckResult> run_all();

private:
    struct State;
    std::unique_ptr<State> state_;
};

bool all_passed(const std::vector<CheckResult>& results);

// PASS|FAIL  c<N>  <name>  measured=<v> <relation> expected=<v>  delta=<v>  bound=<v>  [tol=<v>]
std::string format_check(const CheckResult& r);

// criterion,name,status,measured,relation,expected,delta,bound,tolerance
std::string checks_csv(const std::vector<CheckResult>& results);

} // namespace sfent
