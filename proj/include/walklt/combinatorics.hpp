#pragma once

#include "walklt/numeric.hpp"

namespace walklt {

/// Binomial coefficient with the convention C(n,k) = 0 whenever k < 0,
/// k > n or n < 0. Exact at any size. Results are memoized per thread.
BigInt safe_binomial(long n, long k);

/// Feasibility of (T,s,r,l) for the reflected walk: parity of T+r-s,
/// s,r >= 0, |r-s| <= T and 0 <= l <= max(0, (T-s-r)/2 + 1{s>0}).
bool rsrw_feasible(int T, int s, int r, int l);

/// Feasibility for the simple walk: parity, |r-s| <= T and
/// 0 <= l <= max(0, (T-|s|-|r|)/2 + 1{s!=0}).
bool srw_feasible(int T, int s, int r, int l);

/// Largest feasible local time for a given endpoint, or -1 when the
/// endpoint itself is unreachable.
int rsrw_max_local_time(int T, int s, int r);
int srw_max_local_time(int T, int s, int r);

/// Number of reflected-walk trajectories of length T from s to r with
/// exactly l visits to zero at times 1..T. Zero outside the feasible set.
BigInt nt_count(int T, int s, int r, int l);

/// Number of simple-walk trajectories of length T from s to r with exactly
/// l visits to zero at times 1..T. Zero outside the feasible set.
///
/// For s != 0 and l = 0 the path never crosses zero, so r must share the
/// sign of s; the closed form in |s|,|r| alone would count paths that do
/// not exist when the signs differ.
BigInt mt_count(int T, int s, int r, int l);

/// Unconstrained count C(T, (T+r-s)/2) of +-1 paths from s to r.
BigInt free_path_count(int T, int s, int r);

} // namespace walklt
