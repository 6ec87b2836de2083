#include "walklt/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <unordered_map>

namespace walklt {

namespace {

std::uint64_t cache_key(long n, long k) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
           static_cast<std::uint32_t>(k);
}

bool even(long v) { return v % 2 == 0; }

BigInt pow2(int e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

int sign(int v) { return (v > 0) - (v < 0); }

} // namespace

BigInt safe_binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    thread_local std::unordered_map<std::uint64_t, BigInt> cache;
    const auto key = cache_key(n, k);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    cache.emplace(key, out);
    return out;
}

int rsrw_max_local_time(int T, int s, int r) {
    if (T < 1 || s < 0 || r < 0 || std::abs(r - s) > T || !even(T + r - s)) {
        return -1;
    }
    return std::max(0, (T - s - r) / 2 + (s > 0 ? 1 : 0));
}

int srw_max_local_time(int T, int s, int r) {
    if (T < 1 || std::abs(r - s) > T || !even(T + r - s)) {
        return -1;
    }
    return std::max(0, (T - std::abs(s) - std::abs(r)) / 2 + (s != 0 ? 1 : 0));
}

bool rsrw_feasible(int T, int s, int r, int l) {
    return l >= 0 && l <= rsrw_max_local_time(T, s, r);
}

bool srw_feasible(int T, int s, int r, int l) {
    return l >= 0 && l <= srw_max_local_time(T, s, r);
}

BigInt nt_count(int T, int s, int r, int l) {
    if (!rsrw_feasible(T, s, r, l)) {
        return 0;
    }
    BigInt out;
    if (s == 0) {
        out = safe_binomial(T - l - 1, (T + r) / 2 - 1) - safe_binomial(T - l - 1, (T - r) / 2 - l - 1);
    } else if (l == 0) {
        out = safe_binomial(T, (T + r - s) / 2) - safe_binomial(T, (T - r - s) / 2);
    } else {
        const int k = (T - r - s) / 2 - l;
        out = safe_binomial(T - l, k + 1) - safe_binomial(T - l, k);
    }
    return out;
}

BigInt mt_count(int T, int s, int r, int l) {
    if (!srw_feasible(T, s, r, l)) {
        return 0;
    }
    const int as = std::abs(s);
    const int ar = std::abs(r);
    BigInt out;
    if (s == 0) {
        const int k = (T + ar) / 2;
        out = pow2(l) * (safe_binomial(T - l - 1, k - 1) - safe_binomial(T - l - 1, k));
    } else if (l == 0) {
        if (sign(r) != sign(s)) {
            return 0;
        }
        out = safe_binomial(T, (T + ar - as) / 2) - safe_binomial(T, (T - ar - as) / 2);
    } else {
        const int k = (T + ar + as) / 2;
        out = pow2(l - 1) * (safe_binomial(T - l, k - 1) - safe_binomial(T - l, k));
    }
    return out;
}

BigInt free_path_count(int T, int s, int r) {
    if (T < 0 || !even(T + r - s)) {
        return 0;
    }
    return safe_binomial(T, (T + r - s) / 2);
}

} // namespace walklt
