#pragma once

#include "walklt/distribution.hpp"
#include "walklt/numeric.hpp"
#include "walklt/params.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace walklt {

/// Worker threads for partitioned enumeration and simulation. Reads
/// WALK_LOCALTIME_THREADS, falling back to the hardware concurrency.
int configured_threads();

inline constexpr int kEnumerationMaxT = 24;

/// Trajectories sharing one (r,l) cell, with the step tallies that fix
/// their common probability q^(up_free) (1-q)^(down). Forced up-steps at
/// zero carry probability 1 and are tallied separately.
struct EnumeratedCell {
    BigInt count;
    int up_free = 0;
    int down = 0;
    int forced_up = 0;
};

using Enumeration = std::map<Cell, EnumeratedCell>;

/// Brute force over every trajectory of length T from s. For the reflected
/// walk each trajectory is visited once: an increment sequence is only
/// counted when it carries +1 at every forced step.
/// Throws std::invalid_argument when T is outside [1, kEnumerationMaxT] or
/// when s < 0 for the reflected walk.
Enumeration enumerate_exact(WalkKind kind, int T, int s, int threads = 1);

/// Probability law implied by an enumeration.
JointPMF enumeration_pmf(const Enumeration& paths, WalkKind kind, const WalkParams& params);

/// Forward recursion over (time, value, local time). Exact in rational
/// mode. With track_counts the trajectory counts are carried as well.
JointPMF dp_joint(WalkKind kind, const WalkParams& params, bool track_counts = true);

struct SimulationResult {
    WalkKind kind;
    WalkParams params;
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    std::map<Cell, std::uint64_t> joint_counts;
};

inline constexpr std::uint64_t kSimulationChunk = 1u << 16;

/// Monte Carlo paths. Paths are split into chunks of kSimulationChunk;
/// chunk c draws from std::mt19937_64 seeded with
/// std::seed_seq{seed & 0xffffffff, seed >> 32, c}. An up-step is taken when
/// (draw >> 11) * 2^-53 < q; forced steps at zero draw nothing. The result
/// does not depend on the thread count.
SimulationResult simulate(WalkKind kind, const WalkParams& params, std::uint64_t n_paths, std::uint64_t seed,
                          int threads = 1);

struct CellComparison {
    Cell cell;
    std::uint64_t observed = 0;
    double probability = 0.0;
    double expected = 0.0;
    double z = 0.0;
};

/// Per-cell binomial z-scores of a simulation against an exact law, over
/// the union of both supports.
std::vector<CellComparison> compare_with_exact(const SimulationResult& sim, const JointPMF& pmf);

/// Fraction of cells with expected count >= min_expected whose |z| <= z_bound.
double fraction_within(const std::vector<CellComparison>& cells, double min_expected, double z_bound,
                       std::size_t* eligible = nullptr);

} // namespace walklt
