#pragma once

#include "walklt/numeric.hpp"
#include "walklt/params.hpp"

#include <compare>
#include <map>
#include <optional>

namespace walklt {

/// Grid point: terminal value r and local time at zero l.
struct Cell {
    int r = 0;
    int l = 0;
    auto operator<=>(const Cell&) const = default;
};

struct PmfEntry {
    BigInt count;                  // trajectories sharing this cell (0 if not tracked)
    double probability = 0.0;
    std::optional<Rational> exact; // set in rational mode
};

/// Sparse joint law of (R_T, L_T) or (S_T, L_T). Only cells with positive
/// probability are stored. Iteration order is (r, l) ascending.
class JointPMF {
public:
    using Entries = std::map<Cell, PmfEntry>;

    JointPMF(WalkKind kind, WalkParams params, Entries entries, bool has_counts = true);

    WalkKind kind() const { return kind_; }
    const WalkParams& params() const { return params_; }
    const Entries& entries() const { return entries_; }
    bool is_exact() const { return params_.q.is_exact(); }
    bool has_counts() const { return has_counts_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const PmfEntry* find(int r, int l) const;
    double probability(int r, int l) const;

    double total() const;
    // Throws std::logic_error when not in rational mode.
    Rational exact_total() const;

private:
    WalkKind kind_;
    WalkParams params_;
    Entries entries_;
    bool has_counts_;
};

/// P(R_T=r, L_T=l | R_0=s) from the reflected-walk trajectory counts.
/// Rational mode when params.q is exact.
JointPMF rsrw_joint_pmf(const WalkParams& params);

/// P(S_T=r, L_T=l | S_0=s) from the simple-walk trajectory counts.
JointPMF srw_joint_pmf(const WalkParams& params);

JointPMF joint_pmf(WalkKind kind, const WalkParams& params);

std::map<int, double> value_marginal(const JointPMF& pmf);
std::map<int, double> local_time_marginal(const JointPMF& pmf);
std::map<int, Rational> value_marginal_exact(const JointPMF& pmf);
std::map<int, Rational> local_time_marginal_exact(const JointPMF& pmf);

/// E[L | R=r] for every r with positive marginal mass.
std::map<int, double> conditional_expectation_l_given_r(const JointPMF& pmf);
/// E[R | L=l] for every l with positive marginal mass.
std::map<int, double> conditional_expectation_r_given_l(const JointPMF& pmf);

enum class MixtureLabel { no_zero_visits, zero_visiting };

struct MixtureComponent {
    MixtureLabel label;
    double weight = 0.0;
    std::optional<Rational> exact_weight;
    // Normalized restriction of the parent law; empty when weight is 0.
    JointPMF conditional;
};

struct MixtureDecomposition {
    MixtureComponent no_visits; // L = 0
    MixtureComponent visits;    // L > 0
    // The split is stated for s > 0; s = 0 is accepted but flagged.
    bool start_at_zero = false;
};

MixtureDecomposition mixture_decompose(const JointPMF& pmf);

/// weight * conditional summed over both components.
JointPMF merge(const MixtureDecomposition& parts);

} // namespace walklt
