#pragma once

#include "walklt/params.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace walklt {

/// Reflected-walk kernel restricted to states 0..N. Row N loses the
/// up-step and is substochastic.
class TransitionMatrix {
public:
    int size() const { return static_cast<int>(matrix_.rows()) - 1; }
    double up() const { return q_; }
    const Eigen::MatrixXd& matrix() const { return matrix_; }
    double operator()(int i, int j) const { return matrix_(i, j); }

private:
    friend TransitionMatrix build_truncated(double q, int N);
    TransitionMatrix(double q, Eigen::MatrixXd m) : q_(q), matrix_(std::move(m)) {}

    double q_;
    Eigen::MatrixXd matrix_;
};

/// Throws std::invalid_argument unless 0 < q < 1 and N >= 1.
TransitionMatrix build_truncated(double q, int N);

/// Smallest truncation that keeps a T-step walk from s off the boundary.
inline int truncation_for(int T, int s) { return T + s + 1; }

/// Q^n by n successive multiplications.
Eigen::MatrixXd matrix_power(const TransitionMatrix& Q, int n);

/// Row s of Q^T as a sparse map over states with positive mass.
/// Throws std::invalid_argument when N <= T + s.
std::map<int, double> marginal_via_power(const TransitionMatrix& Q, int s, int T);

/// (s,0) entry of (I-Q)^{-1}(I-Q^{T+1}), i.e. sum_{n=0..T} Q^n(s,0).
/// The n=0 term makes this 1 + E[L_T] when s = 0 and E[L_T] when s > 0.
double expected_local_time(const TransitionMatrix& Q, int s, int T);

/// Column 0 of (I-Q)^{-1}(I-Q^{T+1}) for every start state at once.
/// Valid for starts s with s < N - T.
std::vector<double> expected_local_times(const TransitionMatrix& Q, int T);

/// sum_{n=0..T} Q^n(s,0) by propagating row s step by step.
double local_time_partial_sum(const TransitionMatrix& Q, int s, int T);

} // namespace walklt
