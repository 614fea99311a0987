// V-representation of a compact convex body: the canonical, irredundant,
// lexicographically sorted vertex list.  Lower-dimensional bodies (segments,
// hyperplane pieces) are first-class and stay in the full ambient dimension.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mixvol/hull.hpp"
#include "mixvol/linprog.hpp"

namespace mixvol {

using Vec = Eigen::VectorXd;

class ConvexPolytope {
  public:
    ConvexPolytope(int ambient_dim, std::vector<Vec> points)
        : dim_(ambient_dim) {
        if (ambient_dim < 1)
            throw std::invalid_argument("ConvexPolytope: ambient dimension must be >= 1");
        if (points.empty())
            throw std::invalid_argument("ConvexPolytope: at least one vertex required");
        for (const auto& p : points) {
            if (static_cast<int>(p.size()) != ambient_dim)
                throw std::invalid_argument("ConvexPolytope: vertex dimension mismatch");
            if (!p.allFinite())
                throw std::invalid_argument("ConvexPolytope: non-finite vertex");
        }
        verts_ = canonicalize(std::move(points));
    }

    int ambient_dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return verts_; }

    /// Support function h(x) = max over vertices of <x, v>; exact for polytopes.
    double support(const Vec& x) const {
        if (static_cast<int>(x.size()) != dim_)
            throw std::invalid_argument("support: dimension mismatch");
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& v : verts_) h = std::max(h, x.dot(v));
        return h;
    }

    /// Width h(e) + h(-e) in direction e.
    double width(const Vec& e) const { return support(e) + support(-e); }

    /// Affine dimension, via the numerical rank of the vertex-difference matrix.
    int affine_dim() const {
        const int m = static_cast<int>(verts_.size());
        if (m == 1) return 0;
        Eigen::MatrixXd D(m - 1, dim_);
        for (int i = 1; i < m; ++i)
            D.row(i - 1) = (verts_[static_cast<std::size_t>(i)] - verts_[0]).transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(D);
        double smax = svd.singularValues()[0];
        if (smax <= 0.0) return 0;
        int r = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()[i] > 1e-9 * smax) ++r;
        return r;
    }

    /// Orthonormal basis of the affine hull: (origin, n x r basis matrix).
    /// Coordinates of a vertex v in the hull are basis^T (v - origin).
    std::pair<Vec, Eigen::MatrixXd> affine_basis() const {
        const int m = static_cast<int>(verts_.size());
        const int r = affine_dim();
        if (r == 0) return {verts_[0], Eigen::MatrixXd(dim_, 0)};
        Eigen::MatrixXd D(dim_, m - 1);
        for (int i = 1; i < m; ++i)
            D.col(i - 1) = verts_[static_cast<std::size_t>(i)] - verts_[0];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeThinU);
        return {verts_[0], svd.matrixU().leftCols(r)};
    }

    /// Vertices expressed in the affine-hull basis (dimension affine_dim()).
    std::vector<Vec> hull_coordinates() const {
        auto [origin, basis] = affine_basis();
        std::vector<Vec> out;
        out.reserve(verts_.size());
        for (const auto& v : verts_) out.push_back(basis.transpose() * (v - origin));
        return out;
    }

  private:
    static std::vector<Vec> canonicalize(std::vector<Vec> pts) {
        double scale = 0.0;
        for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
        const double dup_tol = 1e-12 * std::max(1.0, scale);

        // Drop duplicates.
        std::vector<Vec> unique;
        for (auto& p : pts) {
            bool dup = false;
            for (const auto& q : unique)
                if ((p - q).lpNorm<Eigen::Infinity>() <= dup_tol) { dup = true; break; }
            if (!dup) unique.push_back(std::move(p));
        }

        // Keep only extreme points: p is redundant iff p lies in the hull of
        // the others.
        std::vector<Vec> extreme;
        if (unique.size() <= 2) {
            extreme = std::move(unique);
        } else {
            for (std::size_t i = 0; i < unique.size(); ++i) {
                std::vector<Vec> others;
                others.reserve(unique.size() - 1);
                for (std::size_t j = 0; j < unique.size(); ++j)
                    if (j != i) others.push_back(unique[j]);
                if (!point_in_convex_hull(others, unique[i], 1e-9))
                    extreme.push_back(unique[i]);
            }
            if (extreme.empty()) extreme.push_back(unique[0]);  // fully degenerate
        }

        std::sort(extreme.begin(), extreme.end(), [](const Vec& a, const Vec& b) {
            for (int i = 0; i < a.size(); ++i) {
                if (a[i] < b[i]) return true;
                if (a[i] > b[i]) return false;
            }
            return false;
        });
        return extreme;
    }

    int dim_;
    std::vector<Vec> verts_;
};

inline ConvexPolytope minkowski_sum(const ConvexPolytope& p, const ConvexPolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Vec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(a + b);
    return ConvexPolytope(p.ambient_dim(), std::move(sums));
}

inline ConvexPolytope scale(const ConvexPolytope& p, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("scale: negative factor");
    std::vector<Vec> vs;
    vs.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) vs.push_back(lambda * v);
    return ConvexPolytope(p.ambient_dim(), std::move(vs));
}

inline ConvexPolytope translate(const ConvexPolytope& p, const Vec& t) {
    if (static_cast<int>(t.size()) != p.ambient_dim())
        throw std::invalid_argument("translate: dimension mismatch");
    std::vector<Vec> vs;
    vs.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) vs.push_back(v + t);
    return ConvexPolytope(p.ambient_dim(), std::move(vs));
}

inline ConvexPolytope negate(const ConvexPolytope& p) {
    std::vector<Vec> vs;
    vs.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) vs.push_back(-v);
    return ConvexPolytope(p.ambient_dim(), std::move(vs));
}

/// Orthogonal projection into e^perp, returned in ambient dimension n-1 with
/// coordinates in the deterministic Householder basis of e^perp.
inline ConvexPolytope project(const ConvexPolytope& p, const Vec& e) {
    const int n = p.ambient_dim();
    if (n < 2) throw std::invalid_argument("project: ambient dimension must be >= 2");
    if (std::abs(e.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("project: direction must be unit");
    Eigen::MatrixXd basis = orthonormal_complement(e);  // n x (n-1)
    std::vector<Vec> vs;
    vs.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) vs.push_back(basis.transpose() * v);
    return ConvexPolytope(n - 1, std::move(vs));
}

/// Lift coordinates of the projection basis back into e^perp in R^n.
inline Vec lift_from_projection(const Vec& y, const Vec& e) {
    return orthonormal_complement(e) * y;
}

}  // namespace mixvol
