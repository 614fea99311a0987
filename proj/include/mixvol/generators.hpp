// Generators for the body families used in tests and sweeps.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "mixvol/polytope.hpp"
#include "mixvol/rng.hpp"

namespace mixvol {

/// Segment of length L centered at the origin, parallel to the unit vector e.
inline ConvexPolytope make_segment(const Vec& e, double length) {
    if (length <= 0.0) throw std::invalid_argument("make_segment: length must be positive");
    if (std::abs(e.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("make_segment: direction must be unit");
    return ConvexPolytope(static_cast<int>(e.size()),
                          {0.5 * length * e, -0.5 * length * e});
}

/// Axis-aligned box [0, a_1] x ... x [0, a_n].
inline ConvexPolytope make_box(const std::vector<double>& sides) {
    const int n = static_cast<int>(sides.size());
    for (double s : sides)
        if (s <= 0.0) throw std::invalid_argument("make_box: sides must be positive");
    std::vector<Vec> vs;
    vs.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Vec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = (mask >> i & 1) ? sides[static_cast<std::size_t>(i)] : 0.0;
        vs.push_back(std::move(v));
    }
    return ConvexPolytope(n, std::move(vs));
}

/// Isosceles triangle [(-1,0), (1,0), (0,t)] in R^2.
inline ConvexPolytope make_isosceles(double t) {
    if (t <= 0.0) throw std::invalid_argument("make_isosceles: height must be positive");
    Vec a(2), b(2), c(2);
    a << -1.0, 0.0;
    b << 1.0, 0.0;
    c << 0.0, t;
    return ConvexPolytope(2, {a, b, c});
}

/// Regular n-simplex inscribed in the unit sphere, centered at the origin.
inline ConvexPolytope make_simplex_regular(int n) {
    if (n < 1) throw std::invalid_argument("make_simplex_regular: n must be >= 1");
    // Corners of the standard simplex in R^{n+1}, centered, mapped down to R^n.
    Eigen::MatrixXd D(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        Vec u = Vec::Constant(n + 1, -1.0 / (n + 1));
        u[i] += 1.0;
        D.col(i) = u;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeThinU);
    Eigen::MatrixXd basis = svd.matrixU().leftCols(n);
    std::vector<Vec> vs;
    for (int i = 0; i <= n; ++i) {
        Vec x = basis.transpose() * D.col(i);
        vs.push_back(x / x.norm());
    }
    return ConvexPolytope(n, std::move(vs));
}

/// Cross-polytope conv(+-e_1, ..., +-e_n).
inline ConvexPolytope make_cross_polytope(int n) {
    std::vector<Vec> vs;
    for (int i = 0; i < n; ++i) {
        Vec v = Vec::Zero(n);
        v[i] = 1.0;
        vs.push_back(v);
        vs.push_back(-v);
    }
    return ConvexPolytope(n, std::move(vs));
}

/// Convex hull of k standard-Gaussian points; re-seeds deterministically
/// until the hull is full-dimensional.
inline ConvexPolytope make_random_polytope(int n, int k, std::uint64_t seed) {
    if (k < n + 1)
        throw std::invalid_argument("make_random_polytope: need k >= n+1 points");
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 gen(derive_seed(seed, attempt));
        std::vector<Vec> pts;
        pts.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pts.push_back(gaussian_vector(n, gen));
        ConvexPolytope p(n, std::move(pts));
        if (p.affine_dim() == n) return p;
    }
    throw std::runtime_error("make_random_polytope: failed to reach full dimension");
}

/// Segment of length L along e_1 plus a few points within distance delta of it.
inline ConvexPolytope make_perturbed_segment(int n, double length, double delta,
                                             std::uint64_t seed) {
    if (length <= 0.0 || delta < 0.0)
        throw std::invalid_argument("make_perturbed_segment: invalid parameters");
    std::mt19937_64 gen(derive_seed(seed, 0));
    std::uniform_real_distribution<double> along(-0.8, 0.8);
    std::uniform_real_distribution<double> amp(0.2, 1.0);
    std::vector<Vec> pts;
    Vec e1 = Vec::Zero(n);
    e1[0] = 1.0;
    pts.push_back(0.5 * length * e1);
    pts.push_back(-0.5 * length * e1);
    for (int i = 0; i < 4; ++i) {
        Vec p = along(gen) * 0.5 * length * e1 + delta * amp(gen) * random_direction(n, gen);
        pts.push_back(std::move(p));
    }
    return ConvexPolytope(n, std::move(pts));
}

/// The cross-polytope-like body [+-sqrt(eps) e_1, +-lambda e_2, +-n e_3, ...,
/// +-n e_n] used to probe near-optimality of the slab-width bound.
inline ConvexPolytope make_remark_body(int n, double lambda, double eps) {
    if (n < 3) throw std::invalid_argument("make_remark_body: n must be >= 3");
    if (lambda <= 0.0 || eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("make_remark_body: invalid parameters");
    std::vector<Vec> vs;
    auto axis_pair = [&](int i, double c) {
        Vec v = Vec::Zero(n);
        v[i] = c;
        vs.push_back(v);
        vs.push_back(-v);
    };
    axis_pair(0, std::sqrt(eps));
    axis_pair(1, lambda);
    for (int i = 2; i < n; ++i) axis_pair(i, static_cast<double>(n));
    return ConvexPolytope(n, std::move(vs));
}

/// Companion direction to make_remark_body: e with <e, e_1> = 1 - eps/2,
/// lying in the e_1-e_2 plane.
inline Vec remark_direction(int n, double eps) {
    Vec e = Vec::Zero(n);
    e[0] = 1.0 - eps / 2.0;
    e[1] = std::sqrt(std::max(0.0, 1.0 - e[0] * e[0]));
    return e;
}

}  // namespace mixvol
