#include "walklt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace walklt {

int configured_threads() {
    if (const char* env = std::getenv("WALK_LOCALTIME_THREADS"); env != nullptr && *env != '\0') {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            // Fall through to the hardware default.
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs work(part) for part in [0, parts) on up to `threads` workers.
template <typename Work>
void run_partitioned(std::uint64_t parts, int threads, Work work) {
    const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
    if (workers == 1 || parts <= 1) {
        for (std::uint64_t p = 0; p < parts; ++p) {
            work(p);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < std::min(workers, parts); ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t p = w; p < parts; p += workers) {
                work(p);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

void add_path(Enumeration& out, const Cell& cell, int up_free, int down, int forced) {
    auto [it, inserted] = out.try_emplace(cell);
    auto& e = it->second;
    if (inserted) {
        e.up_free = up_free;
        e.down = down;
        e.forced_up = forced;
    } else if (e.up_free != up_free || e.down != down || e.forced_up != forced) {
        throw std::logic_error("enumerate_exact: trajectories in one cell have different probabilities");
    }
    ++e.count;
}

// Masks [first, last) of the 2^T increment sequences; bit t is step t+1.
Enumeration enumerate_range(WalkKind kind, int T, int s, std::uint64_t first, std::uint64_t last) {
    Enumeration out;
    std::vector<int> path(static_cast<std::size_t>(T) + 1);
    for (std::uint64_t mask = first; mask < last; ++mask) {
        int x = s;
        int l = 0;
        int up_free = 0;
        int down = 0;
        int forced = 0;
        bool canonical = true;
        path[0] = s;
        for (int t = 0; t < T; ++t) {
            const bool up = ((mask >> t) & 1u) != 0;
            if (kind == WalkKind::reflected && x == 0) {
                if (!up) {
                    canonical = false;
                    break;
                }
                ++forced;
                x = 1;
            } else if (up) {
                ++up_free;
                ++x;
            } else {
                ++down;
                --x;
            }
            l += x == 0 ? 1 : 0;
            path[static_cast<std::size_t>(t) + 1] = x;
        }
        if (!canonical) {
            continue;
        }
        const auto zeros = std::count(path.begin() + 1, path.end(), 0);
        if (zeros != l) {
            throw std::logic_error("enumerate_exact: local time counters disagree");
        }
        add_path(out, Cell{x, l}, up_free, down, forced);
    }
    return out;
}

} // namespace

Enumeration enumerate_exact(WalkKind kind, int T, int s, int threads) {
    if (T < 1 || T > kEnumerationMaxT) {
        throw std::invalid_argument("enumerate_exact: T must be in [1, " + std::to_string(kEnumerationMaxT) + "]");
    }
    if (kind == WalkKind::reflected && s < 0) {
        throw std::invalid_argument("enumerate_exact: reflected walk needs s >= 0");
    }
    const std::uint64_t total = std::uint64_t{1} << T;
    const int prefix_bits = std::min(T, 6);
    const std::uint64_t parts = std::uint64_t{1} << prefix_bits;
    const std::uint64_t span = total / parts;
    std::vector<Enumeration> partial(parts);
    run_partitioned(parts, threads,
                    [&](std::uint64_t p) { partial[p] = enumerate_range(kind, T, s, p * span, (p + 1) * span); });
    Enumeration merged;
    for (const auto& part : partial) {
        for (const auto& [cell, e] : part) {
            auto [it, inserted] = merged.try_emplace(cell, e);
            if (!inserted) {
                if (it->second.up_free != e.up_free || it->second.down != e.down ||
                    it->second.forced_up != e.forced_up) {
                    throw std::logic_error("enumerate_exact: inconsistent cell across partitions");
                }
                it->second.count += e.count;
            }
        }
    }
    return merged;
}

JointPMF enumeration_pmf(const Enumeration& paths, WalkKind kind, const WalkParams& params) {
    JointPMF::Entries entries;
    for (const auto& [cell, e] : paths) {
        PmfEntry out;
        out.count = e.count;
        if (params.q.is_exact()) {
            const Rational& q = params.q.rational();
            Rational p = Rational(e.count);
            for (int i = 0; i < e.up_free; ++i) {
                p *= q;
            }
            for (int i = 0; i < e.down; ++i) {
                p *= 1 - q;
            }
            p.canonicalize();
            out.probability = p.get_d();
            out.exact = std::move(p);
        } else {
            const double q = params.q.value();
            out.probability = e.count.get_d() * std::pow(q, e.up_free) * std::pow(1.0 - q, e.down);
        }
        entries.emplace(cell, std::move(out));
    }
    return JointPMF(kind, params, std::move(entries));
}

namespace {

template <typename Scalar>
struct DpState {
    std::vector<Scalar> mass;
    std::vector<BigInt> count;
};

template <typename Scalar>
JointPMF run_dp(WalkKind kind, const WalkParams& params, const Scalar& up, bool track_counts) {
    const int T = params.T;
    const int s = params.s;
    const Scalar down = Scalar(1) - up;
    const int vmin = kind == WalkKind::reflected ? 0 : s - T;
    const int vmax = s + T;
    const int width = vmax - vmin + 1;
    const int depth = T + 1;
    const auto idx = [&](int v, int l) { return static_cast<std::size_t>((v - vmin) * depth + l); };
    const std::size_t n = static_cast<std::size_t>(width * depth);

    DpState<Scalar> cur{std::vector<Scalar>(n, Scalar(0)), {}};
    if (track_counts) {
        cur.count.assign(n, BigInt(0));
        cur.count[idx(s, 0)] = 1;
    }
    cur.mass[idx(s, 0)] = Scalar(1);
    std::vector<char> live(n, 0);
    live[idx(s, 0)] = 1;

    DpState<Scalar> next{std::vector<Scalar>(n, Scalar(0)), {}};
    if (track_counts) {
        next.count.assign(n, BigInt(0));
    }
    std::vector<char> next_live(n, 0);
    for (int t = 0; t < T; ++t) {
        // After t steps the walk sits in [s-t, s+t] with at most t visits.
        const int lo = std::max(vmin, s - t);
        const int hi = std::min(vmax, s + t + 1);
        std::fill(next_live.begin(), next_live.end(), 0);
        for (int v = std::max(vmin, s - t - 1); v <= hi; ++v) {
            for (int l = 0; l <= t + 1; ++l) {
                const auto i = idx(v, l);
                next.mass[i] = 0;
                if (track_counts) {
                    next.count[i] = 0;
                }
            }
        }
        const auto push = [&](std::size_t from, int v, int l, const Scalar* weight) {
            const int nl = l + (v == 0 ? 1 : 0);
            const auto to = idx(v, nl);
            if (weight != nullptr) {
                next.mass[to] += cur.mass[from] * *weight;
            } else {
                next.mass[to] += cur.mass[from];
            }
            if (track_counts) {
                next.count[to] += cur.count[from];
            }
            next_live[to] = 1;
        };
        for (int v = lo; v <= std::min(vmax, s + t); ++v) {
            for (int l = 0; l <= t; ++l) {
                const auto from = idx(v, l);
                if (!live[from]) {
                    continue;
                }
                if (kind == WalkKind::reflected && v == 0) {
                    push(from, 1, l, nullptr);
                    continue;
                }
                push(from, v + 1, l, &up);
                push(from, v - 1, l, &down);
            }
        }
        std::swap(cur, next);
        std::swap(live, next_live);
    }

    JointPMF::Entries entries;
    for (int v = vmin; v <= vmax; ++v) {
        for (int l = 0; l <= T; ++l) {
            const auto i = idx(v, l);
            if (!live[i]) {
                continue;
            }
            PmfEntry e;
            if (track_counts) {
                e.count = cur.count[i];
            }
            if constexpr (std::is_same_v<Scalar, Rational>) {
                Rational p = cur.mass[i];
                p.canonicalize();
                e.probability = p.get_d();
                e.exact = std::move(p);
            } else {
                e.probability = cur.mass[i];
            }
            entries.emplace(Cell{v, l}, std::move(e));
        }
    }
    return JointPMF(kind, params, std::move(entries), track_counts);
}

} // namespace

JointPMF dp_joint(WalkKind kind, const WalkParams& params, bool track_counts) {
    params.validate(kind);
    if (params.q.is_exact()) {
        return run_dp<Rational>(kind, params, params.q.rational(), track_counts);
    }
    return run_dp<double>(kind, params, params.q.value(), track_counts);
}

namespace {

std::map<Cell, std::uint64_t> simulate_chunk(WalkKind kind, const WalkParams& params, std::uint64_t seed,
                                             std::uint64_t chunk, std::uint64_t paths) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 gen(seq);
    const double q = params.q.value();
    std::map<Cell, std::uint64_t> counts;
    for (std::uint64_t p = 0; p < paths; ++p) {
        int x = params.s;
        int l = 0;
        for (int t = 0; t < params.T; ++t) {
            if (kind == WalkKind::reflected && x == 0) {
                x = 1;
            } else {
                const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
                x += u < q ? 1 : -1;
            }
            l += x == 0 ? 1 : 0;
        }
        ++counts[Cell{x, l}];
    }
    return counts;
}

} // namespace

SimulationResult simulate(WalkKind kind, const WalkParams& params, std::uint64_t n_paths, std::uint64_t seed,
                          int threads) {
    params.validate(kind);
    if (n_paths < 1) {
        throw std::invalid_argument("simulate: n_paths must be at least 1");
    }
    const std::uint64_t chunks = (n_paths + kSimulationChunk - 1) / kSimulationChunk;
    std::vector<std::map<Cell, std::uint64_t>> partial(chunks);
    run_partitioned(chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t first = c * kSimulationChunk;
        partial[c] = simulate_chunk(kind, params, seed, c, std::min(kSimulationChunk, n_paths - first));
    });
    SimulationResult out{kind, params, n_paths, seed, {}};
    for (const auto& part : partial) {
        for (const auto& [cell, n] : part) {
            out.joint_counts[cell] += n;
        }
    }
    return out;
}

std::vector<CellComparison> compare_with_exact(const SimulationResult& sim, const JointPMF& pmf) {
    std::map<Cell, CellComparison> cells;
    for (const auto& [cell, e] : pmf.entries()) {
        cells[cell].probability = e.probability;
    }
    for (const auto& [cell, n] : sim.joint_counts) {
        cells[cell].observed = n;
    }
    const double n = static_cast<double>(sim.n_paths);
    std::vector<CellComparison> out;
    out.reserve(cells.size());
    for (auto& [cell, c] : cells) {
        c.cell = cell;
        c.expected = n * c.probability;
        const double var = n * c.probability * (1.0 - c.probability);
        const double diff = static_cast<double>(c.observed) - c.expected;
        if (var > 0.0) {
            c.z = diff / std::sqrt(var);
        } else {
            c.z = diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
        }
        out.push_back(c);
    }
    return out;
}

double fraction_within(const std::vector<CellComparison>& cells, double min_expected, double z_bound,
                       std::size_t* eligible) {
    std::size_t total = 0;
    std::size_t ok = 0;
    for (const auto& c : cells) {
        if (c.expected < min_expected) {
            continue;
        }
        ++total;
        ok += std::abs(c.z) <= z_bound ? 1 : 0;
    }
    if (eligible != nullptr) {
        *eligible = total;
    }
    return total == 0 ? 1.0 : static_cast<double>(ok) / static_cast<double>(total);
}

} // namespace walklt
