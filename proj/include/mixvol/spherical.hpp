// Spherical-cap machinery behind the long-segment lower bound: the density
// rho(s) = (sin s)^{n-2}, cap measures and first moments, the decreasing
// profile f(alpha), the band constant tau(n), the derived constants c1 and
// c3 with the tube factor, and Monte Carlo evaluation of the
// Dirichlet-Voronoi decomposition of V_1 over a spherical point set.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mixvol/constants.hpp"
#include "mixvol/functionals.hpp"
#include "mixvol/generators.hpp"
#include "mixvol/linprog.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/rng.hpp"

namespace mixvol {

namespace detail {

/// 64-node Gauss-Legendre on [a, b]; exact to machine precision for the
/// smooth integrands used here.
template <class F>
inline double integrate_1d(F&& f, double a, double b, int m = 64) {
    std::vector<double> nodes, weights;
    gauss_legendre(m, nodes, weights);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < m; ++i)
        acc += weights[static_cast<std::size_t>(i)] * f(mid + half * nodes[static_cast<std::size_t>(i)]);
    return acc * half;
}

inline double rho(int n, double s) {
    return std::pow(std::sin(s), n - 2);
}

inline void check_cap_angle(double alpha, double hi) {
    if (!(alpha > 0.0) || alpha > hi + 1e-12)
        throw std::invalid_argument("cap angle out of range");
}

}  // namespace detail

/// H^{n-1} measure of the cap B(z, alpha) = {x : <x,z> >= cos alpha}.
inline double cap_measure(int n, double alpha) {
    detail::check_cap_angle(alpha, M_PI);
    return sphere_area(n - 1) *
           detail::integrate_1d([n](double s) { return detail::rho(n, s); }, 0.0, alpha);
}

/// Integral of <x, z> over the cap B(z, alpha).
inline double cap_first_moment(int n, double alpha) {
    detail::check_cap_angle(alpha, M_PI);
    return sphere_area(n - 1) *
           detail::integrate_1d([n](double s) { return std::cos(s) * detail::rho(n, s); },
                                0.0, alpha);
}

/// Mean height f(alpha) of the cap: first moment over measure.  Strictly
/// decreasing on (0, pi/2], with f(pi/2) = 2 kappa_{n-1} / (n kappa_n).
inline double f_profile(int n, double alpha) {
    detail::check_cap_angle(alpha, M_PI / 2);
    return cap_first_moment(n, alpha) / cap_measure(n, alpha);
}

/// Numerical c1 with f(pi/2 - eps) >= (1 + c1 eps) f(pi/2) on the grid
/// eps in {pi/6 * k/200 : k = 1..200}: the minimum of the difference ratio.
inline double c1_estimate(int n) {
    const double f_half = f_profile(n, M_PI / 2);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 200; ++k) {
        double eps = (M_PI / 6) * k / 200.0;
        double ratio = (f_profile(n, M_PI / 2 - eps) / f_half - 1.0) / eps;
        best = std::min(best, ratio);
    }
    return best;
}

/// Closed-form lower bound for c1: the uniform negative bound on f' over
/// [pi/3, pi/2], divided by f(pi/2).
inline double c1_closed_form_bound(int n) {
    double i_half = detail::integrate_1d([n](double s) { return detail::rho(n, s); }, 0.0, M_PI / 2);
    double i_sixth = detail::integrate_1d([n](double s) { return detail::rho(n, s); }, 0.0, M_PI / 6);
    double fp_bound = std::pow(std::sin(M_PI / 3), n - 2) / (i_half * i_half) *
                      (std::cos(M_PI / 3) - std::cos(M_PI / 6)) * i_sixth;
    return -fp_bound / f_profile(n, M_PI / 2);
}

/// tau(n) in (0, 1]: for n >= 3, the band {x in S^{n-2} : 0 <= <x,u> <= tau}
/// has measure H^{n-2}(S^{n-2}) / (n(n+1)).  tau(2) = 1 by convention.
inline double tau(int n) {
    if (n < 2) throw std::invalid_argument("tau: n must be >= 2");
    if (n == 2) return 1.0;
    const double target = sphere_area(n - 1) / (n * (n + 1.0));
    auto band = [n](double t) {
        // H^{n-3}(S^{n-3}) * int_{arccos t}^{pi/2} sin^{n-3}; for n = 3 the
        // 0-sphere factor 2 counts the two arcs.
        return sphere_area(n - 2) *
               detail::integrate_1d([n](double s) { return std::pow(std::sin(s), n - 3); },
                                    std::acos(t), M_PI / 2);
    };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (band(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// The constants assembled from c1 and tau, as in the long-segment proof.
struct PaperConstants {
    int n = 0;
    double tau = 0.0;
    double c1_est = 0.0;
    double c3_est = 0.0;
    double tube_factor = 0.0;  // sqrt(3 + 3 / c3^2)
};

inline PaperConstants make_paper_constants(int n) {
    PaperConstants c;
    c.n = n;
    c.tau = tau(n);
    c.c1_est = c1_estimate(n);
    c.c3_est = unit_ball_volume(n - 1) * c.c1_est * c.tau / (2.0 * n * (n + 1.0));
    c.tube_factor = std::sqrt(3.0 + 3.0 / (c.c3_est * c.c3_est));
    return c;
}

/// Monte Carlo spherical quadrature with antipodal pairing: every sample
/// direction u contributes both u and -u, each with the same weight, so the
/// total weight is exactly n kappa_n.
struct SphericalQuadrature {
    int n = 0;
    std::vector<Vec> dirs;   // one representative per antipodal pair
    double point_weight = 0.0;
};

inline SphericalQuadrature make_quadrature(int n, int pairs, std::uint64_t seed = 2024) {
    if (pairs < 2) throw std::invalid_argument("make_quadrature: need at least 2 pairs");
    SphericalQuadrature q;
    q.n = n;
    q.dirs = sample_sphere(n, pairs, seed);
    q.point_weight = sphere_area(n) / (2.0 * pairs);
    return q;
}

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

namespace detail {

/// MC integral over the sphere with a per-pair variance estimate.
template <class F>
inline McEstimate integrate_sphere(const SphericalQuadrature& q, F&& f) {
    const std::size_t m = q.dirs.size();
    double sum = 0.0, sumsq = 0.0;
    for (const auto& u : q.dirs) {
        double t = 0.5 * (f(u) + f(-u));
        sum += t;
        sumsq += t * t;
    }
    double mean = sum / static_cast<double>(m);
    double var = std::max(0.0, sumsq / static_cast<double>(m) - mean * mean);
    McEstimate e;
    e.value = sphere_area(q.n) * mean;
    e.std_error = sphere_area(q.n) * std::sqrt(var / static_cast<double>(m));
    return e;
}

inline void check_admissible(const std::vector<Vec>& points, int n) {
    if (points.empty()) throw std::invalid_argument("empty spherical point set");
    for (const auto& x : points) {
        if (static_cast<int>(x.size()) != n)
            throw std::invalid_argument("spherical point of wrong dimension");
        if (std::abs(x.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("spherical point not on the unit sphere");
    }
    if (!point_in_convex_hull(points, Vec::Zero(n)))
        throw std::invalid_argument("origin not in the convex hull of the point set");
}

}  // namespace detail

/// V_1 of conv(points) for unit vectors whose hull contains the origin,
/// evaluated as (1/kappa_{n-1}) int max_i <u, x_i> dH^{n-1}(u).
inline McEstimate v1_spherical_hull(const std::vector<Vec>& points,
                                    const SphericalQuadrature& q) {
    detail::check_admissible(points, q.n);
    auto support = [&points](const Vec& u) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& x : points) best = std::max(best, u.dot(x));
        return best;
    };
    McEstimate e = detail::integrate_sphere(q, support);
    double k = unit_ball_volume(q.n - 1);
    e.value /= k;
    e.std_error /= k;
    return e;
}

struct DvPartition {
    std::vector<double> moments;   // (1/kappa_{n-1}) int_{cell_i} <x, x_i>
    std::vector<double> measures;  // H^{n-1}(cell_i)
};

/// Dirichlet-Voronoi split of the V_1 integral: each sample direction is
/// assigned to the site of largest inner product (lowest index on ties), so
/// the moments sum to v1_spherical_hull under the same quadrature.
inline DvPartition dv_partition(const std::vector<Vec>& points,
                                const SphericalQuadrature& q) {
    detail::check_admissible(points, q.n);
    DvPartition out;
    out.moments.assign(points.size(), 0.0);
    out.measures.assign(points.size(), 0.0);
    auto add = [&](const Vec& u) {
        std::size_t best = 0;
        double hb = u.dot(points[0]);
        for (std::size_t i = 1; i < points.size(); ++i) {
            double h = u.dot(points[i]);
            if (h > hb + 1e-15) {
                hb = h;
                best = i;
            }
        }
        out.moments[best] += hb * q.point_weight;
        out.measures[best] += q.point_weight;
    };
    for (const auto& u : q.dirs) {
        add(u);
        add(-u);
    }
    double k = unit_ball_volume(q.n - 1);
    for (auto& m : out.moments) m /= k;
    return out;
}

inline std::vector<double> dv_partition_moment(const std::vector<Vec>& points,
                                               const SphericalQuadrature& q) {
    return dv_partition(points, q).moments;
}

/// Random spherical point set whose hull contains the origin, deterministic
/// per seed (rejection over derived sub-seeds).
inline std::vector<Vec> sample_admissible_directions(int n, int k, std::uint64_t seed) {
    if (k < n + 1)
        throw std::invalid_argument("sample_admissible_directions: need k >= n+1");
    for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
        std::vector<Vec> pts = sample_sphere(n, k, derive_seed(seed, attempt));
        if (point_in_convex_hull(pts, Vec::Zero(n))) return pts;
    }
    throw std::runtime_error("sample_admissible_directions: rejection sampling failed");
}

/// Pole-and-cap configuration with prescribed diameter 2 cos(alpha/2):
/// e_1 together with n points at angle alpha from -e_1, symmetric about the
/// axis.  Admissible for alpha < pi/2.
inline std::vector<Vec> antipodal_cap_points(int n, double alpha) {
    if (!(alpha > 0.0) || alpha >= M_PI / 2)
        throw std::invalid_argument("antipodal_cap_points: need alpha in (0, pi/2)");
    std::vector<Vec> pts;
    Vec pole = Vec::Zero(n);
    pole[0] = 1.0;
    pts.push_back(pole);
    ConvexPolytope simplex = make_simplex_regular(n - 1);
    for (const auto& v : simplex.vertices()) {
        Vec x = Vec::Zero(n);
        x[0] = -std::cos(alpha);
        x.tail(n - 1) = std::sin(alpha) * v;
        pts.push_back(std::move(x));
    }
    return pts;
}

}  // namespace mixvol
