#pragma once

#include "walklt/distribution.hpp"
#include "walklt/numeric.hpp"
#include "walklt/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walklt {

// ---------------------------------------------------------------------------
// Log-concavity of the zero-avoiding component.
//
// For s > 0 and l = 0 the count is NT(r) = C(T, W+x) - C(T, W-x) with
// W = (T-s)/2 and x = r/2 (even r). Its cross-product
//   NT(r)^2 - NT(r-2) NT(r+2)
// splits into two single-binomial terms plus a four-binomial term, each of
// which has a closed form. Everything here is exact integer/rational
// arithmetic.
// ---------------------------------------------------------------------------

struct CrossProductRow {
    int r = 0;
    BigInt value; // NT(r)^2 - NT(r-2) NT(r+2)
};

struct CrossProductReport {
    int T = 0;
    int s = 0;
    int r_min = 0;
    int r_max = 0;
    std::vector<CrossProductRow> rows;
    bool all_nonnegative = true;
};

/// Cross-products over every r in the support of the L=0 component.
/// Throws std::invalid_argument unless s > 0.
CrossProductReport l0_cross_products(int T, int s);

struct LogConcavityReport {
    CrossProductReport counts;
    // The log-probability differs from log NT by a term linear in r, so the
    // count-level result carries over to every q.
    bool holds_for_every_q = true;
    struct PerQ {
        std::string q;
        bool logconcave = true;
    };
    // Direct probability-level check for each requested q.
    std::vector<PerQ> per_q;
};

LogConcavityReport check_logconcavity_l0(int T, int s, const std::vector<Probability>& qs = {});

/// Outcome of one "LHS = RHS" check. When the right side is undefined
/// (non-positive denominator) only LHS >= 0 is checked.
struct IdentityOutcome {
    BigInt lhs;
    std::optional<Rational> rhs;
    bool holds = false;
};

struct IdentityPairResult {
    IdentityOutcome upper; // k = W + x
    IdentityOutcome lower; // k = W - x
    bool ok() const { return upper.holds && lower.holds; }
};

/// C(T,k)^2 - C(T,k-1) C(T,k+1) = C(T,k)^2 (T+1) / ((k+1)(T-k+1)) at
/// k = W+x and k = W-x.
IdentityPairResult verify_identity_pair(int T, int W, int x);

struct Eq3Result {
    BigInt lhs; // C(W-x+1)C(W+x+1) + C(W+x-1)C(W-x-1) - 2 C(W+x)C(W-x)
    std::optional<Rational> rhs;
    // Every binomial index lies in [0, T] and both denominators are nonzero.
    bool rhs_evaluated = false;
    bool holds = false;
};

/// Four-binomial term against
/// (T+1)(T-1-2W) [1/((W+1)^2 - x^2) + 1/((T-W+1)^2 - x^2)].
/// When the right side is skipped, holds means LHS >= 0.
Eq3Result verify_eq3(int T, int W, int x);

/// NT(r)^2 - NT(r-2)NT(r+2) equals the sum of the three left-hand sides
/// (even r, s > 0).
bool cross_product_splits(int T, int s, int r);

struct IdentityFinding {
    int T = 0;
    int W = 0;
    int x = 0;
    std::string which; // "upper", "lower", "eq3", "split"
    std::string lhs;
    std::string rhs; // empty when the right side was skipped
};

struct IdentityGridReport {
    int max_T = 0;
    std::size_t cells = 0;
    std::size_t pair_failures = 0;
    std::size_t split_failures = 0;
    std::size_t eq3_evaluated = 0;
    std::size_t eq3_exact_matches = 0;
    std::size_t eq3_failures = 0;
    std::vector<IdentityFinding> findings;
};

/// Every T in [1, max_T], W = (T-s)/2 for s in [1, T] with T-s even, and
/// x in [0, T-W]. Failures are recorded, never thrown.
IdentityGridReport run_identity_grid(int max_T);

// ---------------------------------------------------------------------------
// Bivariate probe of the zero-visiting component. Report only.
// ---------------------------------------------------------------------------

struct DirectionTally {
    std::string name;
    int dr = 0;
    int dl = 0;
    std::size_t lines = 0;
    std::size_t lines_skipped = 0;
    std::size_t triples = 0;
    std::size_t violations = 0;
    std::vector<Cell> sample_violations; // midpoints, first few
};

struct BivariateProbeReport {
    int T = 0;
    int s = 0;
    std::string q;
    std::size_t support = 0;
    std::vector<DirectionTally> directions;
};

/// Midpoint log-concavity p(c)^2 >= p(c-d) p(c+d) of the L>0 component of
/// the reflected walk along r, l and both diagonals.
BivariateProbeReport probe_bivariate_logconcavity(int T, int s, const Probability& q);
BivariateProbeReport probe_bivariate_logconcavity(const JointPMF& pmf);

} // namespace walklt
