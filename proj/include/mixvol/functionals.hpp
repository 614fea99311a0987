// Scalar functionals of polytopes: volume, surface area, the first and
// (n-1)-st intrinsic volumes, mixed volume V(K, M[n-1]) with its
// polynomial-fit oracle, circumradius, diameter, and the inradius of a
// projection (the paper quantity r).
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixvol/constants.hpp"
#include "mixvol/hull.hpp"
#include "mixvol/linprog.hpp"
#include "mixvol/measure.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol {

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// n-volume (0 for lower-dimensional bodies).
inline double volume(const ConvexPolytope& p) {
    return point_set_volume(p.vertices(), p.ambient_dim());
}

inline double surface_area(const ConvexPolytope& p) {
    return total_mass(surface_area_measure(p));
}

inline double v_nminus1(const ConvexPolytope& p) { return 0.5 * surface_area(p); }

/// V(K, M[n-1]) = (1/n) * integral of h_K against S_{n-1}(M, .).
inline double mixed_volume_1(const ConvexPolytope& k, const ConvexPolytope& m) {
    if (k.ambient_dim() != m.ambient_dim())
        throw std::invalid_argument("mixed_volume_1: dimension mismatch");
    const int n = k.ambient_dim();
    return integrate_support(surface_area_measure(m), k) / n;
}

/// Independent oracle for V(K, M[n-1]): evaluate V(alpha K + M) at n+1
/// values of alpha, fit the degree-n polynomial, and read off the
/// linear coefficient (which is n V(K, M[n-1])).
inline double mixed_volume_oracle(const ConvexPolytope& k, const ConvexPolytope& m) {
    if (k.ambient_dim() != m.ambient_dim())
        throw std::invalid_argument("mixed_volume_oracle: dimension mismatch");
    const int n = k.ambient_dim();
    if (n > 4) throw std::invalid_argument("mixed_volume_oracle: desk scale is n <= 4");

    Eigen::VectorXd alphas(n + 1), vols(n + 1);
    for (int i = 0; i <= n; ++i) alphas[i] = 0.4 * (i + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<Vec> sums;
        sums.reserve(k.vertices().size() * m.vertices().size());
        for (const auto& a : k.vertices())
            for (const auto& b : m.vertices()) sums.push_back(alphas[i] * a + b);
        vols[i] = point_set_volume(sums, n);
    }
    Eigen::MatrixXd vand(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) vand(i, j) = std::pow(alphas[i], j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(vand, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues()[n] < 1e-10 * svd.singularValues()[0])
        throw std::runtime_error("mixed_volume_oracle: ill-conditioned fit");
    Eigen::VectorXd coeffs = svd.solve(vols);
    return coeffs[1] / n;
}

namespace detail {

inline double perimeter_2d(const std::vector<Vec>& pts) {
    std::vector<int> hull = hull_order_2d(pts);
    if (hull.size() < 2) return 0.0;
    double per = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = pts[static_cast<std::size_t>(hull[i])];
        const auto& b = pts[static_cast<std::size_t>(hull[(i + 1) % hull.size()])];
        per += (a - b).norm();
    }
    return per;
}

// V_1 of a full-dimensional 3-polytope: sum over edges of
// edge length * exterior dihedral angle, divided by 2 pi.
inline double v1_edge_formula(const ConvexPolytope& p) {
    auto facets = enumerate_facets(p.vertices());
    double acc = 0.0;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(facets[i].vertex_ids.begin(), facets[i].vertex_ids.end(),
                                  facets[j].vertex_ids.begin(), facets[j].vertex_ids.end(),
                                  std::back_inserter(common));
            if (common.size() < 2) continue;
            double len = 0.0;  // collinear set: edge length = farthest pair
            for (std::size_t a = 0; a < common.size(); ++a)
                for (std::size_t b = a + 1; b < common.size(); ++b)
                    len = std::max(len, (p.vertices()[static_cast<std::size_t>(common[a])] -
                                         p.vertices()[static_cast<std::size_t>(common[b])])
                                            .norm());
            double c = std::clamp(facets[i].normal.dot(facets[j].normal), -1.0, 1.0);
            acc += len * std::acos(c);
        }
    }
    return acc / (2.0 * M_PI);
}

// Product-rule spherical quadrature of the support function for n >= 3:
// Gauss-Legendre in each polar angle, uniform nodes in the final angle,
// refined until two successive levels agree to the requested tolerance.
inline void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

inline double v1_quadrature(const ConvexPolytope& p, double rel_tol = 1e-4) {
    const int n = p.ambient_dim();
    double prev = 0.0;
    bool have_prev = false;
    for (int m = 8; m <= 512; m *= 2) {
        double npts = std::pow(static_cast<double>(m), n - 1);
        if (npts > 3e6) break;
        std::vector<double> gl_nodes, gl_weights;
        gauss_legendre(m, gl_nodes, gl_weights);
        // polar angles theta_1..theta_{n-2} in [0, pi], azimuth in [0, 2 pi)
        std::vector<int> index(static_cast<std::size_t>(n - 2), 0);
        double total = 0.0;
        bool done = false;
        while (!done) {
            double wtheta = 1.0;
            Vec u(n);
            double sins = 1.0;
            for (int i = 0; i < n - 2; ++i) {
                double theta = M_PI * 0.5 * (gl_nodes[static_cast<std::size_t>(index[static_cast<std::size_t>(i)])] + 1.0);
                double w = M_PI * 0.5 * gl_weights[static_cast<std::size_t>(index[static_cast<std::size_t>(i)])];
                wtheta *= w * std::pow(std::sin(theta), n - 2 - i);
                u[i] = sins * std::cos(theta);
                sins *= std::sin(theta);
            }
            double inner = 0.0;
            for (int a = 0; a < m; ++a) {
                double phi = 2.0 * M_PI * a / m;
                u[n - 2] = sins * std::cos(phi);
                u[n - 1] = sins * std::sin(phi);
                inner += p.support(u);
            }
            total += wtheta * inner * (2.0 * M_PI / m);
            // advance the multi-index
            int pos = n - 3;
            while (pos >= 0) {
                if (++index[static_cast<std::size_t>(pos)] < m) break;
                index[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            done = (pos < 0);
        }
        double val = total / unit_ball_volume(n - 1);
        if (have_prev && std::abs(val - prev) <= rel_tol * std::max(1e-300, std::abs(val)))
            return val;
        prev = val;
        have_prev = true;
    }
    throw QuadratureError("v1_quadrature: refinement did not converge to " +
                          std::to_string(rel_tol) + " (last value " +
                          std::to_string(prev) + ")");
}

}  // namespace detail

/// First intrinsic volume.  Dimension split: lower-dimensional bodies recurse
/// into their affine hull (V_1 is intrinsic); n = 2 uses perimeter / 2,
/// n = 3 the edge-angle formula, n >= 4 certified spherical quadrature.
inline double v1(const ConvexPolytope& p) {
    const int n = p.ambient_dim();
    const int d = p.affine_dim();
    if (d == 0) return 0.0;
    if (d < n) return v1(ConvexPolytope(d, p.hull_coordinates()));
    if (n == 1) {
        double lo = p.vertices().front()[0], hi = lo;
        for (const auto& v : p.vertices()) { lo = std::min(lo, v[0]); hi = std::max(hi, v[0]); }
        return hi - lo;
    }
    if (n == 2) return 0.5 * detail::perimeter_2d(p.vertices());
    if (n == 3) return detail::v1_edge_formula(p);
    return detail::v1_quadrature(p);
}

struct Ball {
    Vec center;
    double radius = 0.0;
};

namespace detail {

// Smallest ball with the (affinely independent) subset on its boundary:
// circumcenter inside the affine hull of the subset.
inline bool circumball_of(const std::vector<Vec>& pts, const std::vector<int>& idx,
                          Ball& out) {
    const std::size_t k = idx.size();
    const auto& q0 = pts[static_cast<std::size_t>(idx[0])];
    if (k == 1) {
        out.center = q0;
        out.radius = 0.0;
        return true;
    }
    Eigen::MatrixXd Q(q0.size(), static_cast<int>(k - 1));
    Eigen::VectorXd rhs(static_cast<int>(k - 1));
    for (std::size_t i = 1; i < k; ++i) {
        Vec d = pts[static_cast<std::size_t>(idx[i])] - q0;
        Q.col(static_cast<int>(i - 1)) = d;
        rhs[static_cast<int>(i - 1)] = d.squaredNorm();
    }
    Eigen::MatrixXd G = 2.0 * Q.transpose() * Q;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
    if (lu.rank() < static_cast<int>(k - 1)) return false;  // affinely dependent
    Eigen::VectorXd lambda = lu.solve(rhs);
    out.center = q0 + Q * lambda;
    out.radius = (out.center - q0).norm();
    return true;
}

inline bool ball_contains_all(const Ball& b, const std::vector<Vec>& pts, double tol) {
    for (const auto& p : pts)
        if ((p - b.center).norm() > b.radius + tol) return false;
    return true;
}

// Welzl-style move-to-front algorithm; used beyond desk scale (n > 4).
inline Ball welzl(std::vector<Vec>& pts, std::vector<int>& boundary, std::size_t end,
                  double tol) {
    Ball b;
    b.center = Vec::Zero(pts.empty() ? 0 : pts[0].size());
    b.radius = -1.0;
    if (!boundary.empty()) circumball_of(pts, boundary, b);
    if (boundary.size() == static_cast<std::size_t>(pts[0].size()) + 1) return b;
    for (std::size_t i = 0; i < end; ++i) {
        if (b.radius < 0.0 || (pts[i] - b.center).norm() > b.radius + tol) {
            boundary.push_back(static_cast<int>(i));
            b = welzl(pts, boundary, i, tol);
            boundary.pop_back();
        }
    }
    return b;
}

}  // namespace detail

/// Exact minimum enclosing ball by exhaustive search over all support subsets
/// of size <= d+1 (each candidate verified to contain every point).
inline Ball min_enclosing_ball_exhaustive(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("min_enclosing_ball: empty point set");
    const int d = static_cast<int>(pts[0].size());
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    const double tol = 1e-10 * std::max(1.0, scale);

    Ball best;
    best.radius = std::numeric_limits<double>::infinity();
    const int m = static_cast<int>(pts.size());
    for (int k = 1; k <= std::min(m, d + 1); ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        do {
            Ball b;
            if (!detail::circumball_of(pts, idx, b)) continue;
            if (b.radius < best.radius && detail::ball_contains_all(b, pts, tol))
                best = b;
        } while (detail::next_combination(idx, m));
    }
    if (!std::isfinite(best.radius))
        throw std::runtime_error("min_enclosing_ball: no valid support subset");
    return best;
}

/// Minimum enclosing ball of the vertex set.  Exhaustive (exact) at desk
/// scale n <= 4; Welzl move-to-front beyond.
inline Ball min_enclosing_ball(const std::vector<Vec>& pts) {
    const int d = static_cast<int>(pts[0].size());
    if (d <= 4) return min_enclosing_ball_exhaustive(pts);
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    std::vector<Vec> work = pts;
    std::vector<int> boundary;
    return detail::welzl(work, boundary, work.size(), 1e-12 * std::max(1.0, scale));
}

inline double circumradius(const ConvexPolytope& p) {
    return min_enclosing_ball(p.vertices()).radius;
}

/// Max pairwise vertex distance (exact for polytopes) and a realizing pair.
inline std::pair<double, std::pair<int, int>> diameter_pair(const ConvexPolytope& p) {
    const auto& vs = p.vertices();
    double best = 0.0;
    std::pair<int, int> pair{0, 0};
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            double d = (vs[i] - vs[j]).norm();
            if (d > best) {
                best = d;
                pair = {static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    return {best, pair};
}

inline double diameter(const ConvexPolytope& p) { return diameter_pair(p).first; }

/// Chebyshev radius of the projection M | e^perp: the paper's r.
/// Returns 0 when the projection is lower-dimensional.
inline double inradius_projection(const ConvexPolytope& m, const Vec& e) {
    const int n = m.ambient_dim();
    ConvexPolytope q = project(m, e);
    if (q.affine_dim() < n - 1) return 0.0;
    if (n - 1 == 1) {
        double lo = q.vertices().front()[0], hi = lo;
        for (const auto& v : q.vertices()) { lo = std::min(lo, v[0]); hi = std::max(hi, v[0]); }
        return 0.5 * (hi - lo);
    }
    auto facets = enumerate_facets(q.vertices());
    Eigen::MatrixXd A(static_cast<int>(facets.size()), n - 1);
    Eigen::VectorXd b(static_cast<int>(facets.size()));
    for (std::size_t i = 0; i < facets.size(); ++i) {
        A.row(static_cast<int>(i)) = facets[i].normal.transpose();
        b[static_cast<int>(i)] = facets[i].offset;
    }
    ChebyshevBall ball = chebyshev_center(A, b);
    if (!ball.ok) throw std::runtime_error("inradius_projection: LP solver failure");
    return ball.radius;
}

struct FunctionalReport {
    double volume = 0.0;
    double surface_area = 0.0;
    double v1 = 0.0;
    double v_nminus1 = 0.0;
    double circumradius = 0.0;
    double diameter = 0.0;
    std::map<std::string, std::string> method_tags;
};

inline FunctionalReport compute_report(const ConvexPolytope& p) {
    FunctionalReport r;
    const int n = p.ambient_dim();
    const int d = p.affine_dim();
    r.volume = volume(p);
    r.surface_area = surface_area(p);
    r.v_nminus1 = 0.5 * r.surface_area;
    r.v1 = v1(p);
    r.circumradius = circumradius(p);
    r.diameter = diameter(p);
    r.method_tags["volume"] = "exact";
    r.method_tags["surface_area"] = "exact";
    r.method_tags["v_nminus1"] = "exact";
    r.method_tags["v1"] = (d <= 3) ? "exact" : "quadrature";
    r.method_tags["circumradius"] = (n <= 4) ? "exact" : "optimization";
    r.method_tags["diameter"] = "exact";
    return r;
}

namespace detail {

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(m), 0.0);
    weights.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = m * (x * p1 - p0) / (x * x - 1.0);
        nodes[static_cast<std::size_t>(i)] = x;
        weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

}  // namespace detail

}  // namespace mixvol
