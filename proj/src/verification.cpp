#include "walklt/verification.hpp"

#include "walklt/combinatorics.hpp"
#include "walklt/distribution.hpp"
#include "walklt/markov.hpp"
#include "walklt/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace walklt {

namespace {

void compare_counts(OracleSuiteResult& out, WalkKind kind, int T, int s, const Enumeration& paths,
                    const std::optional<CorruptedCount>& corrupt) {
    const int r_lo = kind == WalkKind::reflected ? 0 : s - T;
    for (int r = r_lo; r <= s + T; ++r) {
        for (int l = 0; l <= T; ++l) {
            BigInt closed = kind == WalkKind::reflected ? nt_count(T, s, r, l) : mt_count(T, s, r, l);
            if (kind == WalkKind::reflected && corrupt && corrupt->T == T && corrupt->s == s && corrupt->r == r &&
                corrupt->l == l) {
                closed += 1;
            }
            const auto it = paths.find(Cell{r, l});
            const BigInt enumerated = it == paths.end() ? BigInt(0) : it->second.count;
            ++out.cells;
            if (closed != enumerated) {
                out.mismatches.push_back({std::string(to_string(kind)), T, s, r, l, "enumeration",
                                          to_string(closed), to_string(enumerated)});
            }
        }
    }
}

void compare_laws(OracleSuiteResult& out, const JointPMF& closed, const JointPMF& reference, const char* source) {
    const auto& p = closed.params();
    const auto mismatch = [&](const Cell& c, std::string a, std::string b) {
        out.mismatches.push_back({std::string(to_string(closed.kind())), p.T, p.s, c.r, c.l, source, std::move(a),
                                  std::move(b)});
    };
    for (const auto& [cell, e] : closed.entries()) {
        ++out.pmf_checks;
        const auto* other = reference.find(cell.r, cell.l);
        if (other == nullptr) {
            mismatch(cell, to_string(*e.exact), "0");
        } else if (*other->exact != *e.exact) {
            mismatch(cell, to_string(*e.exact), to_string(*other->exact));
        }
    }
    for (const auto& [cell, e] : reference.entries()) {
        if (closed.find(cell.r, cell.l) == nullptr) {
            mismatch(cell, "0", to_string(*e.exact));
        }
    }
}

} // namespace

OracleSuiteResult run_oracle_suite(int max_T, std::optional<CorruptedCount> corrupt, int threads) {
    OracleSuiteResult out;
    out.max_T = max_T;
    const Probability q = Probability::exact(2, 5);
    for (int T = 1; T <= max_T; ++T) {
        for (int s = 0; s <= 5; ++s) {
            const auto paths = enumerate_exact(WalkKind::reflected, T, s, threads);
            compare_counts(out, WalkKind::reflected, T, s, paths, corrupt);
            const WalkParams params{T, s, q};
            const auto closed = rsrw_joint_pmf(params);
            compare_laws(out, closed, enumeration_pmf(paths, WalkKind::reflected, params), "enumeration-law");
            compare_laws(out, closed, dp_joint(WalkKind::reflected, params), "dp");
        }
        for (int s = -5; s <= 5; ++s) {
            const auto paths = enumerate_exact(WalkKind::simple, T, s, threads);
            compare_counts(out, WalkKind::simple, T, s, paths, std::nullopt);
            const WalkParams params{T, s, q};
            const auto closed = srw_joint_pmf(params);
            compare_laws(out, closed, enumeration_pmf(paths, WalkKind::simple, params), "enumeration-law");
            compare_laws(out, closed, dp_joint(WalkKind::simple, params), "dp");
        }
    }
    return out;
}

MatrixSuiteResult run_matrix_suite(const std::vector<int>& horizons, int max_s, const std::vector<double>& qs) {
    MatrixSuiteResult out;
    out.horizons = horizons;
    out.max_s = max_s;
    out.qs = qs;
    const auto note = [&](const char* check, int T, int s, double q, double err, double tol, double& worst) {
        worst = std::max(worst, err);
        ++out.checks;
        if (!(err <= tol)) {
            out.failures.push_back({check, T, s, q, err});
        }
    };
    for (const double qv : qs) {
        const Probability q = Probability::approx(qv);
        for (const int T : horizons) {
            const auto Q = build_truncated(qv, truncation_for(T, max_s));
            const auto matrix_elt = expected_local_times(Q, T);
            for (int s = 0; s <= max_s; ++s) {
                const WalkParams params{T, s, q};
                const auto pmf = rsrw_joint_pmf(params);
                const auto closed = value_marginal(pmf);
                const auto dp = value_marginal(dp_joint(WalkKind::reflected, params, false));
                const auto power = marginal_via_power(Q, s, T);

                double power_err = 0.0;
                double dp_err = 0.0;
                for (int r = 0; r <= s + T; ++r) {
                    const auto get = [r](const std::map<int, double>& m) {
                        const auto it = m.find(r);
                        return it == m.end() ? 0.0 : it->second;
                    };
                    power_err = std::max(power_err, std::abs(get(closed) - get(power)));
                    dp_err = std::max(dp_err, std::abs(get(closed) - get(dp)));
                }
                note("marginal-power", T, s, qv, power_err, kMarginalTolerance, out.max_power_error);
                note("marginal-dp", T, s, qv, dp_err, kMarginalTolerance, out.max_dp_error);

                double mean_l = s == 0 ? 1.0 : 0.0;
                for (const auto& [cell, e] : pmf.entries()) {
                    mean_l += cell.l * e.probability;
                }
                note("expected-local-time", T, s, qv, std::abs(matrix_elt.at(static_cast<std::size_t>(s)) - mean_l),
                     kLocalTimeTolerance, out.max_local_time_error);
                note("local-time-partial-sum", T, s, qv,
                     std::abs(matrix_elt.at(static_cast<std::size_t>(s)) - local_time_partial_sum(Q, s, T)),
                     kMarginalTolerance, out.max_partial_sum_error);
            }
        }
    }
    return out;
}

LogConcavitySuiteResult run_logconcavity_suite(int max_T, int max_s) {
    LogConcavitySuiteResult out;
    out.max_T = max_T;
    out.max_s = max_s;
    for (int T = 1; T <= max_T; ++T) {
        for (int s = 1; s <= max_s; ++s) {
            const auto report = l0_cross_products(T, s);
            out.rows += report.rows.size();
            for (const auto& row : report.rows) {
                if (sgn(row.value) < 0) {
                    out.failures.push_back({T, s, row.r, to_string(row.value)});
                }
            }
        }
    }
    return out;
}

MonteCarloSuiteResult run_montecarlo_suite(std::uint64_t n_paths, std::uint64_t seed, int threads) {
    MonteCarloSuiteResult out;
    out.n_paths = n_paths;
    out.seed = seed;
    const WalkParams params{out.T, out.s, Probability::approx(out.q)};
    const auto sim = simulate(WalkKind::reflected, params, n_paths, seed, threads);
    const auto cells = compare_with_exact(sim, rsrw_joint_pmf(params));
    out.fraction_within = fraction_within(cells, kMonteCarloMinExpected, kMonteCarloZBound, &out.eligible_cells);
    return out;
}

} // namespace walklt
