#pragma once

#include "walklt/mixture_analysis.hpp"
#include "walklt/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walklt {

// Batch cross-checks behind `walklt verify`. Each suite collects failures
// instead of stopping at the first one.

struct CountMismatch {
    std::string walk;
    int T = 0;
    int s = 0;
    int r = 0;
    int l = 0;
    std::string source; // reference the closed form was compared against
    std::string closed_form;
    std::string reference;
};

/// Test hook: adds one to the closed-form reflected count at this point.
struct CorruptedCount {
    int T = 0;
    int s = 0;
    int r = 0;
    int l = 0;
};

struct OracleSuiteResult {
    int max_T = 0;
    std::size_t cells = 0;
    std::size_t pmf_checks = 0;
    std::vector<CountMismatch> mismatches;
    bool passed() const { return mismatches.empty(); }
};

/// Closed-form counts against enumeration (T <= max_T, RSRW s in [0,5],
/// SRW s in [-5,5]) and the exact DP law at q = 2/5.
OracleSuiteResult run_oracle_suite(int max_T, std::optional<CorruptedCount> corrupt = std::nullopt,
                                   int threads = 1);

struct MatrixFailure {
    std::string check;
    int T = 0;
    int s = 0;
    double q = 0.0;
    double error = 0.0;
};

struct MatrixSuiteResult {
    std::vector<int> horizons;
    int max_s = 0;
    std::vector<double> qs;
    std::size_t checks = 0;
    double max_power_error = 0.0;
    double max_dp_error = 0.0;
    double max_local_time_error = 0.0;
    double max_partial_sum_error = 0.0;
    std::vector<MatrixFailure> failures;
    bool passed() const { return failures.empty(); }
};

inline constexpr double kMarginalTolerance = 1e-10;
inline constexpr double kLocalTimeTolerance = 1e-9;

/// Closed-form value marginal vs row s of Q^T vs the float DP, and the
/// matrix expected local time vs sum l p(r,l) (+1 at s = 0).
MatrixSuiteResult run_matrix_suite(const std::vector<int>& horizons, int max_s, const std::vector<double>& qs);

struct LogConcavitySuiteResult {
    int max_T = 0;
    int max_s = 0;
    std::size_t rows = 0;
    struct Failure {
        int T, s, r;
        std::string value;
    };
    std::vector<Failure> failures;
    bool passed() const { return failures.empty(); }
};

LogConcavitySuiteResult run_logconcavity_suite(int max_T, int max_s);

struct MonteCarloSuiteResult {
    int T = 80;
    int s = 3;
    double q = 0.40;
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    std::size_t eligible_cells = 0;
    double fraction_within = 0.0;
    bool passed() const { return fraction_within >= 0.99; }
};

inline constexpr double kMonteCarloMinExpected = 25.0;
inline constexpr double kMonteCarloZBound = 4.0;

/// Reflected walk at (T=80, s=3, q=0.40) against the exact law.
MonteCarloSuiteResult run_montecarlo_suite(std::uint64_t n_paths, std::uint64_t seed, int threads = 1);

} // namespace walklt
