// Independent brute-force references: Monte Carlo V_1 from the support
// function, hit-or-miss volume, and the exhaustive minimum enclosing ball,
// each paired with the fast implementation through OracleComparison.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "mixvol/constants.hpp"
#include "mixvol/functionals.hpp"
#include "mixvol/hull.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/rng.hpp"
#include "mixvol/spherical.hpp"

namespace mixvol {

struct OracleComparison {
    std::string quantity;
    double fast_value = 0.0;
    double oracle_value = 0.0;
    double rel_err = 0.0;
    long budget = 0;  // samples or subset count

    static OracleComparison make(std::string quantity, double fast, double oracle,
                                 long budget) {
        OracleComparison c;
        c.quantity = std::move(quantity);
        c.fast_value = fast;
        c.oracle_value = oracle;
        c.rel_err = std::abs(fast - oracle) / std::max(std::abs(oracle), 1e-300);
        c.budget = budget;
        return c;
    }
};

/// Monte Carlo V_1: (n kappa_n / kappa_{n-1}) * mean of h_P over the sphere.
inline McEstimate mc_v1(const ConvexPolytope& p, long samples, std::uint64_t seed) {
    if (samples < 10000) throw std::invalid_argument("mc_v1: need >= 1e4 samples");
    const int n = p.ambient_dim();
    const double factor = sphere_area(n) / unit_ball_volume(n - 1);
    std::vector<Vec> dirs = sample_sphere(n, static_cast<int>(samples), seed);
    double sum = 0.0, sumsq = 0.0;
    for (const auto& u : dirs) {
        double h = p.support(u);
        sum += h;
        sumsq += h * h;
    }
    double mean = sum / static_cast<double>(samples);
    double var = std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
    McEstimate e;
    e.value = factor * mean;
    e.std_error = factor * std::sqrt(var / static_cast<double>(samples));
    return e;
}

/// Hit-or-miss volume inside the vertex bounding box.
inline McEstimate volume_mc(const ConvexPolytope& p, long samples, std::uint64_t seed) {
    const int n = p.ambient_dim();
    if (p.affine_dim() < n)
        throw std::invalid_argument("volume_mc: full-dimensional bodies only");
    Vec lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    auto facets = enumerate_facets(p.vertices());
    double box_vol = (hi - lo).prod();

    std::mt19937_64 gen(derive_seed(seed, 0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    long hits = 0;
    Vec x(n);
    for (long s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * unit(gen);
        bool inside = true;
        for (const auto& f : facets) {
            if (f.normal.dot(x) > f.offset + 1e-12) {
                inside = false;
                break;
            }
        }
        if (inside) ++hits;
    }
    double frac = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate e;
    e.value = box_vol * frac;
    e.std_error =
        box_vol * std::sqrt(std::max(0.0, frac * (1.0 - frac) / static_cast<double>(samples)));
    return e;
}

/// Exact minimum enclosing ball oracle; desk scale only.
inline Ball meb_exhaustive(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("meb_exhaustive: empty point set");
    if (pts.size() > 40) throw std::invalid_argument("meb_exhaustive: at most 40 points");
    if (pts[0].size() > 4) throw std::invalid_argument("meb_exhaustive: n <= 4 only");
    return min_enclosing_ball_exhaustive(pts);
}

}  // namespace mixvol
