#include "walklt/markov.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace walklt {

TransitionMatrix build_truncated(double q, int N) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("build_truncated: q must lie in (0,1)");
    }
    if (N < 1) {
        throw std::invalid_argument("build_truncated: N must be at least 1");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N + 1, N + 1);
    m(0, 1) = 1.0;
    for (int i = 1; i <= N; ++i) {
        m(i, i - 1) = 1.0 - q;
        if (i < N) {
            m(i, i + 1) = q;
        }
    }
    return TransitionMatrix(q, std::move(m));
}

namespace {

void require_untruncated(const TransitionMatrix& Q, int s, int T) {
    if (s < 0 || T < 0) {
        throw std::invalid_argument("start state and horizon must be non-negative");
    }
    if (Q.size() <= T + s) {
        throw std::invalid_argument("truncation N=" + std::to_string(Q.size()) +
                                    " must exceed T+s=" + std::to_string(T + s));
    }
}

} // namespace

namespace {

// A * Q using only the two nonzero diagonals of Q. Same result as the
// dense product, O(N^2) instead of O(N^3).
template <typename Derived>
Eigen::Matrix<double, Derived::RowsAtCompileTime, Eigen::Dynamic> times_kernel(const Eigen::MatrixBase<Derived>& A,
                                                                                const TransitionMatrix& Q) {
    const Eigen::Index last = Q.size();
    Eigen::Matrix<double, Derived::RowsAtCompileTime, Eigen::Dynamic> out(A.rows(), A.cols());
    out.setZero();
    for (Eigen::Index j = 0; j <= last; ++j) {
        if (j > 0) {
            out.col(j) += A.col(j - 1) * Q(static_cast<int>(j - 1), static_cast<int>(j));
        }
        if (j < last) {
            out.col(j) += A.col(j + 1) * Q(static_cast<int>(j + 1), static_cast<int>(j));
        }
    }
    return out;
}

} // namespace

Eigen::MatrixXd matrix_power(const TransitionMatrix& Q, int n) {
    const auto dim = Q.matrix().rows();
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(dim, dim);
    for (int i = 0; i < n; ++i) {
        out = times_kernel(out, Q);
    }
    return out;
}

std::map<int, double> marginal_via_power(const TransitionMatrix& Q, int s, int T) {
    require_untruncated(Q, s, T);
    // Row s of Q^T, built as e_s * Q * ... * Q.
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(Q.matrix().cols());
    row(s) = 1.0;
    for (int n = 0; n < T; ++n) {
        row = times_kernel(row, Q);
    }
    std::map<int, double> out;
    for (int j = 0; j < row.size(); ++j) {
        if (row(j) > 0.0) {
            out.emplace(j, row(j));
        }
    }
    return out;
}

namespace {

// Working precision for the local-time solve. (I - Q)^{-1} has entries of
// order ((1-q)/q)^N when q < 1/2, so the bits needed grow linearly in N.
mp_bitcnt_t solve_precision(double q, Eigen::Index dim) {
    const double ratio = std::abs(std::log2((1.0 - q) / q));
    return static_cast<mp_bitcnt_t>(128.0 + static_cast<double>(dim) * (ratio + 1.0));
}

} // namespace

std::vector<double> expected_local_times(const TransitionMatrix& Q, int T) {
    if (T < 0 || Q.size() <= T) {
        throw std::invalid_argument("expected_local_times: truncation must exceed T");
    }
    const auto dim = Q.matrix().rows();
    const auto prec = solve_precision(Q.up(), dim);
    const auto real = [prec](double v) { return mpf_class(v, prec); };

    const auto n = static_cast<std::size_t>(dim);
    struct NonZero {
        std::size_t i, j;
        mpf_class value;
    };
    std::vector<NonZero> nonzeros;
    std::size_t lower = 0;
    std::size_t upper = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double qij = Q.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (qij != 0.0) {
                nonzeros.push_back({i, j, real(qij)});
                lower = std::max(lower, i > j ? i - j : 0);
                upper = std::max(upper, j > i ? j - i : 0);
            }
        }
    }

    // Column 0 of I - Q^{T+1}: propagate e_0 through T+1 products Q v.
    std::vector<mpf_class> v(n, real(0.0));
    v[0] = 1;
    std::vector<mpf_class> next(n, real(0.0));
    for (int step = 0; step <= T; ++step) {
        for (auto& x : next) {
            x = 0;
        }
        for (const auto& nz : nonzeros) {
            next[nz.i] += nz.value * v[nz.j];
        }
        std::swap(v, next);
    }
    std::vector<mpf_class> rhs(n, real(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = (i == 0 ? real(1.0) : real(0.0)) - v[i];
    }

    // Gaussian elimination with partial pivoting on I - Q. Only the band
    // can be nonzero: `lower` subdiagonals, and after row swaps at most
    // lower + upper superdiagonals.
    const std::size_t reach = lower + upper;
    std::vector<std::vector<mpf_class>> a(n, std::vector<mpf_class>(n, real(0.0)));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
    }
    for (const auto& nz : nonzeros) {
        a[nz.i][nz.j] -= nz.value;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row_end = std::min(n, k + lower + 1);
        const std::size_t col_end = std::min(n, k + reach + 1);
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < row_end; ++i) {
            if (abs(a[i][k]) > abs(a[pivot][k])) {
                pivot = i;
            }
        }
        if (sgn(a[pivot][k]) == 0) {
            throw std::runtime_error("expected_local_times: I - Q is singular");
        }
        std::swap(a[k], a[pivot]);
        std::swap(rhs[k], rhs[pivot]);
        for (std::size_t i = k + 1; i < row_end; ++i) {
            if (sgn(a[i][k]) == 0) {
                continue;
            }
            const mpf_class factor(a[i][k] / a[k][k], prec);
            for (std::size_t j = k; j < col_end; ++j) {
                a[i][j] -= factor * a[k][j];
            }
            rhs[i] -= factor * rhs[k];
        }
    }
    std::vector<mpf_class> x(n, real(0.0));
    for (std::size_t k = n; k-- > 0;) {
        mpf_class acc(rhs[k], prec);
        for (std::size_t j = k + 1; j < std::min(n, k + reach + 1); ++j) {
            acc -= a[k][j] * x[j];
        }
        x[k] = acc / a[k][k];
    }

    std::vector<double> out(static_cast<std::size_t>(Q.size() - T));
    for (std::size_t s = 0; s < out.size(); ++s) {
        out[s] = x[s].get_d();
    }
    return out;
}

double expected_local_time(const TransitionMatrix& Q, int s, int T) {
    require_untruncated(Q, s, T);
    return expected_local_times(Q, T).at(static_cast<std::size_t>(s));
}

double local_time_partial_sum(const TransitionMatrix& Q, int s, int T) {
    require_untruncated(Q, s, T);
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(Q.matrix().cols());
    row(s) = 1.0;
    double sum = row(0);
    for (int n = 1; n <= T; ++n) {
        row = row * Q.matrix();
        sum += row(0);
    }
    return sum;
}

} // namespace walklt
