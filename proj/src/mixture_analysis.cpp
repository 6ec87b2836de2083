#include "walklt/mixture_analysis.hpp"

#include "walklt/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace walklt {

namespace {

BigInt binom(int T, int k) { return safe_binomial(T, k); }

BigInt cross_at(int T, int s, int r) {
    const BigInt mid = nt_count(T, s, r, 0);
    return mid * mid - nt_count(T, s, r - 2, 0) * nt_count(T, s, r + 2, 0);
}

// C(T,k)^2 - C(T,k-1)C(T,k+1) against its closed form.
IdentityOutcome single_binomial_identity(int T, int k) {
    IdentityOutcome out;
    const BigInt c = binom(T, k);
    out.lhs = c * c - binom(T, k - 1) * binom(T, k + 1);
    const long den = static_cast<long>(k + 1) * static_cast<long>(T - k + 1);
    if (k + 1 > 0 && T - k + 1 > 0) {
        Rational rhs = Rational(c * c * (T + 1), BigInt(den));
        rhs.canonicalize();
        out.holds = Rational(out.lhs) == rhs;
        out.rhs = std::move(rhs);
    } else {
        out.holds = sgn(out.lhs) >= 0;
    }
    return out;
}

BigInt eq3_lhs(int T, int W, int x) {
    return binom(T, W - x + 1) * binom(T, W + x + 1) + binom(T, W + x - 1) * binom(T, W - x - 1) -
           2 * binom(T, W + x) * binom(T, W - x);
}

bool in_range(int T, int k) { return k >= 0 && k <= T; }

} // namespace

CrossProductReport l0_cross_products(int T, int s) {
    if (s <= 0) {
        throw std::invalid_argument("l0_cross_products: s must be positive");
    }
    if (T < 1) {
        throw std::invalid_argument("l0_cross_products: T must be at least 1");
    }
    CrossProductReport out;
    out.T = T;
    out.s = s;
    out.r_min = -1;
    for (int r = std::max(0, s - T); r <= s + T; ++r) {
        if (sgn(nt_count(T, s, r, 0)) == 0) {
            continue;
        }
        if (out.r_min < 0) {
            out.r_min = r;
        }
        out.r_max = r;
        CrossProductRow row{r, cross_at(T, s, r)};
        out.all_nonnegative = out.all_nonnegative && sgn(row.value) >= 0;
        out.rows.push_back(std::move(row));
    }
    return out;
}

LogConcavityReport check_logconcavity_l0(int T, int s, const std::vector<Probability>& qs) {
    LogConcavityReport out;
    out.counts = l0_cross_products(T, s);
    out.holds_for_every_q = out.counts.all_nonnegative;
    for (const auto& q : qs) {
        const JointPMF pmf = rsrw_joint_pmf(WalkParams{T, s, q});
        bool ok = true;
        for (const auto& row : out.counts.rows) {
            const auto* mid = pmf.find(row.r, 0);
            const auto* lo = pmf.find(row.r - 2, 0);
            const auto* hi = pmf.find(row.r + 2, 0);
            if (mid == nullptr || lo == nullptr || hi == nullptr) {
                continue; // a missing neighbour makes the product zero
            }
            if (pmf.is_exact()) {
                ok = ok && (*mid->exact * *mid->exact >= *lo->exact * *hi->exact);
            } else {
                // Compare in log space with a rounding allowance.
                const double lhs = 2.0 * std::log(mid->probability);
                const double rhs = std::log(lo->probability) + std::log(hi->probability);
                ok = ok && lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs));
            }
        }
        out.per_q.push_back({q.is_exact() ? to_string(q.rational()) : q.decimal(), ok});
    }
    return out;
}

IdentityPairResult verify_identity_pair(int T, int W, int x) {
    return IdentityPairResult{single_binomial_identity(T, W + x), single_binomial_identity(T, W - x)};
}

Eq3Result verify_eq3(int T, int W, int x) {
    Eq3Result out;
    out.lhs = eq3_lhs(T, W, x);
    const long d1 = static_cast<long>(W + 1) * (W + 1) - static_cast<long>(x) * x;
    const long d2 = static_cast<long>(T - W + 1) * (T - W + 1) - static_cast<long>(x) * x;
    const bool indices_ok = in_range(T, W - x - 1) && in_range(T, W + x + 1);
    if (indices_ok && d1 != 0 && d2 != 0) {
        Rational rhs = Rational(static_cast<long>(T + 1) * (T - 1 - 2 * W)) * (Rational(1, d1) + Rational(1, d2));
        rhs.canonicalize();
        out.rhs_evaluated = true;
        out.holds = Rational(out.lhs) == rhs;
        out.rhs = std::move(rhs);
    } else {
        out.holds = sgn(out.lhs) >= 0;
    }
    return out;
}

bool cross_product_splits(int T, int s, int r) {
    if (s <= 0 || (T - s) % 2 != 0 || r % 2 != 0 || r < 2) {
        throw std::invalid_argument("cross_product_splits: needs s > 0, T-s even and even r >= 2");
    }
    const int W = (T - s) / 2;
    const int x = r / 2;
    const auto pair = verify_identity_pair(T, W, x);
    return cross_at(T, s, r) == pair.upper.lhs + pair.lower.lhs + eq3_lhs(T, W, x);
}

IdentityGridReport run_identity_grid(int max_T) {
    IdentityGridReport out;
    out.max_T = max_T;
    const auto record = [&](int T, int W, int x, const char* which, const BigInt& lhs,
                            const std::optional<Rational>& rhs) {
        out.findings.push_back(IdentityFinding{T, W, x, which, to_string(lhs), rhs ? to_string(*rhs) : ""});
    };
    for (int T = 1; T <= max_T; ++T) {
        for (int s = T % 2 == 0 ? 2 : 1; s <= T; s += 2) {
            const int W = (T - s) / 2;
            for (int x = 0; x <= T - W; ++x) {
                ++out.cells;
                const auto pair = verify_identity_pair(T, W, x);
                if (!pair.upper.holds) {
                    ++out.pair_failures;
                    record(T, W, x, "upper", pair.upper.lhs, pair.upper.rhs);
                }
                if (!pair.lower.holds) {
                    ++out.pair_failures;
                    record(T, W, x, "lower", pair.lower.lhs, pair.lower.rhs);
                }
                if (x >= 1 && !cross_product_splits(T, s, 2 * x)) {
                    ++out.split_failures;
                    record(T, W, x, "split", cross_at(T, s, 2 * x), std::nullopt);
                }
                const auto eq3 = verify_eq3(T, W, x);
                if (eq3.rhs_evaluated) {
                    ++out.eq3_evaluated;
                    out.eq3_exact_matches += eq3.holds ? 1 : 0;
                }
                if (!eq3.holds) {
                    ++out.eq3_failures;
                    record(T, W, x, "eq3", eq3.lhs, eq3.rhs);
                }
            }
        }
    }
    return out;
}

namespace {

struct Direction {
    const char* name;
    int dr;
    int dl;
};

constexpr Direction kDirections[] = {
    {"r", 2, 0},
    {"l", 0, 1},
    {"diagonal", 2, 1},
    {"antidiagonal", 2, -1},
};

} // namespace

BivariateProbeReport probe_bivariate_logconcavity(int T, int s, const Probability& q) {
    return probe_bivariate_logconcavity(rsrw_joint_pmf(WalkParams{T, s, q}));
}

BivariateProbeReport probe_bivariate_logconcavity(const JointPMF& pmf) {
    const auto parts = mixture_decompose(pmf);
    const JointPMF& component = parts.visits.conditional;
    BivariateProbeReport out;
    out.T = pmf.params().T;
    out.s = pmf.params().s;
    out.q = pmf.is_exact() ? to_string(pmf.params().q.rational()) : pmf.params().q.decimal();
    out.support = component.size();

    const auto log_concave_at = [&](const Cell& lo, const Cell& mid, const Cell& hi) {
        const auto* m = component.find(mid.r, mid.l);
        const auto* a = component.find(lo.r, lo.l);
        const auto* b = component.find(hi.r, hi.l);
        if (a == nullptr || b == nullptr) {
            return true;
        }
        if (m == nullptr) {
            return false;
        }
        if (component.is_exact()) {
            return *m->exact * *m->exact >= *a->exact * *b->exact;
        }
        return 2.0 * std::log(m->probability) >= std::log(a->probability) + std::log(b->probability) - 1e-12;
    };

    for (const auto& d : kDirections) {
        DirectionTally tally;
        tally.name = d.name;
        tally.dr = d.dr;
        tally.dl = d.dl;
        // Each line is {base + k d}; key it by an invariant of the direction.
        std::map<std::pair<int, int>, std::vector<int>> lines;
        for (const auto& [cell, e] : component.entries()) {
            // Step index along d and a key that is constant on the line.
            int k = 0;
            std::pair<int, int> key;
            if (d.dl == 0) {
                k = cell.r / 2;
                key = {cell.l, cell.r % 2};
            } else if (d.dr == 0) {
                k = cell.l;
                key = {cell.r, 0};
            } else {
                k = cell.l * d.dl;
                key = {cell.r - 2 * d.dl * cell.l, 0};
            }
            lines[key].push_back(k);
        }
        for (auto& [key, ks] : lines) {
            std::sort(ks.begin(), ks.end());
            if (ks.size() < 3) {
                ++tally.lines_skipped;
                continue;
            }
            ++tally.lines;
            // Recover a cell on this line from its step index.
            const auto at = [&](int k) {
                if (d.dl == 0) {
                    return Cell{2 * k + key.second, key.first};
                }
                if (d.dr == 0) {
                    return Cell{key.first, k};
                }
                const int l = k * d.dl;
                return Cell{key.first + 2 * d.dl * l, l};
            };
            for (int k = ks.front() + 1; k < ks.back(); ++k) {
                ++tally.triples;
                const Cell mid = at(k);
                if (!log_concave_at(at(k - 1), mid, at(k + 1))) {
                    ++tally.violations;
                    if (tally.sample_violations.size() < 10) {
                        tally.sample_violations.push_back(mid);
                    }
                }
            }
        }
        out.directions.push_back(std::move(tally));
    }
    return out;
}

} // namespace walklt
