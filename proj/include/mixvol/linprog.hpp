// Small dense two-phase simplex solver, plus the two LP wrappers the
// geometry needs: convex-hull membership and the Chebyshev center of a
// polytope given by facet inequalities.  Bland's rule, so no cycling.
#pragma once

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mixvol {

struct LpSolution {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    double objective = 0.0;
    Eigen::VectorXd x;
};

namespace detail {

// Pivots `tab` (rows: m constraints + 1 objective, last column rhs) until the
// objective row has no negative reduced cost among `allowed` columns.
// Returns false when unbounded.
inline bool simplex_pivot_loop(Eigen::MatrixXd& tab, std::vector<int>& basis,
                               const std::vector<bool>& allowed) {
    const int m = static_cast<int>(tab.rows()) - 1;
    const int ncols = static_cast<int>(tab.cols()) - 1;
    const double tol = 1e-10;
    for (int iter = 0; iter < 20000; ++iter) {
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            if (!allowed[static_cast<std::size_t>(j)]) continue;
            if (tab(m, j) < -tol) { enter = j; break; }  // Bland: smallest index
        }
        if (enter < 0) return true;
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double a = tab(i, enter);
            if (a > tol) {
                double ratio = tab(i, ncols) / a;
                if (ratio < best_ratio - tol ||
                    (ratio < best_ratio + tol &&
                     (leave < 0 || basis[static_cast<std::size_t>(i)] <
                                       basis[static_cast<std::size_t>(leave)]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return false;  // unbounded
        double piv = tab(leave, enter);
        tab.row(leave) /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            double f = tab(i, enter);
            if (f != 0.0) tab.row(i) -= f * tab.row(leave);
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
}

}  // namespace detail

/// Solve  min c.x  s.t.  A x = b, x >= 0.
inline LpSolution simplex_standard(Eigen::MatrixXd A, Eigen::VectorXd b,
                                   const Eigen::VectorXd& c) {
    const int m = static_cast<int>(A.rows());
    const int k = static_cast<int>(A.cols());
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) { A.row(i) *= -1.0; b[i] = -b[i]; }
    }

    // Phase 1 tableau: [A | I_artificial | b], objective = sum of artificials.
    Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m + 1, k + m + 1);
    tab.block(0, 0, m, k) = A;
    tab.block(0, k, m, m) = Eigen::MatrixXd::Identity(m, m);
    tab.col(k + m).head(m) = b;
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = k + i;
    for (int i = 0; i < m; ++i) tab.row(m) -= tab.row(i);  // canonical phase-1 row

    std::vector<bool> allowed(static_cast<std::size_t>(k + m), true);
    if (!detail::simplex_pivot_loop(tab, basis, allowed))
        throw std::runtime_error("simplex: phase 1 unbounded");

    LpSolution sol;
    const double scale = 1.0 + b.cwiseAbs().maxCoeff();
    if (-tab(m, k + m) > 1e-8 * scale) {
        sol.status = LpSolution::Status::infeasible;
        return sol;
    }

    // Drive remaining artificial variables out of the basis where possible.
    for (int i = 0; i < m; ++i) {
        if (basis[static_cast<std::size_t>(i)] >= k) {
            int enter = -1;
            for (int j = 0; j < k; ++j) {
                if (std::abs(tab(i, j)) > 1e-9) { enter = j; break; }
            }
            if (enter >= 0) {
                double piv = tab(i, enter);
                tab.row(i) /= piv;
                for (int r = 0; r <= m; ++r) {
                    if (r == i) continue;
                    double f = tab(r, enter);
                    if (f != 0.0) tab.row(r) -= f * tab.row(i);
                }
                basis[static_cast<std::size_t>(i)] = enter;
            }
        }
    }

    // Phase 2: rebuild the objective row from the real cost.
    tab.row(m).setZero();
    tab.row(m).head(k) = c.transpose();
    for (int i = 0; i < m; ++i) {
        int bj = basis[static_cast<std::size_t>(i)];
        if (bj < k && c[bj] != 0.0) tab.row(m) -= c[bj] * tab.row(i);
    }
    for (int j = k; j < k + m; ++j) allowed[static_cast<std::size_t>(j)] = false;
    if (!detail::simplex_pivot_loop(tab, basis, allowed)) {
        sol.status = LpSolution::Status::unbounded;
        return sol;
    }

    sol.status = LpSolution::Status::optimal;
    sol.x = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < m; ++i) {
        int bj = basis[static_cast<std::size_t>(i)];
        if (bj < k) sol.x[bj] = tab(i, k + m);
    }
    sol.objective = c.dot(sol.x);
    return sol;
}

/// Is x in the convex hull of `points` (within `tol`, relative to the spread)?
inline bool point_in_convex_hull(const std::vector<Eigen::VectorXd>& points,
                                 const Eigen::VectorXd& x, double tol = 1e-9) {
    if (points.empty()) return false;
    const int n = static_cast<int>(x.size());
    const int m = static_cast<int>(points.size());
    double scale = 1e-300;
    for (const auto& p : points) scale = std::max(scale, (p - x).norm());
    if (scale < tol) return true;  // all points coincide with x

    Eigen::MatrixXd A(n + 1, m);
    for (int j = 0; j < m; ++j) {
        A.col(j).head(n) = (points[static_cast<std::size_t>(j)] - x) / scale;
        A(n, j) = 1.0;
    }
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
    b[n] = 1.0;

    // Feasibility of  sum lambda_i (p_i - x) = 0, sum lambda = 1, lambda >= 0,
    // with a small tolerance: minimize the l1 residual via elastic variables.
    Eigen::MatrixXd Ae(n + 1, m + 2 * n);
    Ae.setZero();
    Ae.block(0, 0, n + 1, m) = A;
    Ae.block(0, m, n, n) = Eigen::MatrixXd::Identity(n, n);
    Ae.block(0, m + n, n, n) = -Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 2 * n);
    c.tail(2 * n).setOnes();
    LpSolution sol = simplex_standard(Ae, b, c);
    return sol.status == LpSolution::Status::optimal && sol.objective <= tol;
}

struct ChebyshevBall {
    bool ok = false;
    Eigen::VectorXd center;
    double radius = 0.0;
};

/// Largest ball inside { x : A x <= b }:  max r  s.t.  a_j.x + |a_j| r <= b_j.
inline ChebyshevBall chebyshev_center(const Eigen::MatrixXd& A,
                                      const Eigen::VectorXd& b) {
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());
    double scale = std::max(1e-12, b.cwiseAbs().maxCoeff());

    // Variables: x+ (d), x- (d), r (1), slack (m).
    Eigen::MatrixXd Ae = Eigen::MatrixXd::Zero(m, 2 * d + 1 + m);
    Eigen::VectorXd be = b / scale;
    for (int i = 0; i < m; ++i) {
        double an = A.row(i).norm();
        Ae.row(i).head(d) = A.row(i);
        Ae.row(i).segment(d, d) = -A.row(i);
        Ae(i, 2 * d) = an;
        Ae(i, 2 * d + 1 + i) = 1.0;
    }
    Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * d + 1 + m);
    c[2 * d] = -1.0;
    LpSolution sol = simplex_standard(Ae, be, c);
    ChebyshevBall ball;
    if (sol.status != LpSolution::Status::optimal) return ball;
    ball.ok = true;
    ball.center = scale * (sol.x.head(d) - sol.x.segment(d, d));
    ball.radius = scale * sol.x[2 * d];
    return ball;
}

}  // namespace mixvol
