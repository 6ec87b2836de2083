#pragma once

// Test-only brute force: walks every trajectory recursively. Shares no code
// with the library's counting formulas or its enumerator.

#include "walklt/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace walklt::testing {

using CountTable = std::map<std::pair<int, int>, long>;

inline void walk_paths(bool reflected, int remaining, int x, int l, CountTable& out) {
    if (remaining == 0) {
        ++out[{x, l}];
        return;
    }
    if (reflected && x == 0) {
        walk_paths(reflected, remaining - 1, 1, l, out);
        return;
    }
    for (const int step : {1, -1}) {
        const int y = x + step;
        walk_paths(reflected, remaining - 1, y, l + (y == 0 ? 1 : 0), out);
    }
}

inline CountTable brute_force_counts(bool reflected, int T, int s) {
    CountTable out;
    walk_paths(reflected, T, s, 0, out);
    return out;
}

// Pascal's triangle rows 0..n.
inline std::vector<std::vector<BigInt>> pascal(int n) {
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, BigInt(1));
        for (int k = 1; k < i; ++k) {
            row[static_cast<std::size_t>(k)] =
                rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(k) - 1] +
                rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(k)];
        }
    }
    return rows;
}

} // namespace walklt::testing
