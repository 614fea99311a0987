// Surface area measure S_{n-1}(K, .) of a polytope, as an atomic measure on
// the unit sphere, and the support / projection integrals against it.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mixvol/hull.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol {

struct SurfaceAreaMeasure {
    int ambient_dim = 0;
    std::vector<std::pair<Vec, double>> atoms;  // (unit normal, mass > 0)
};

namespace detail {

// Merge atoms whose normals agree within ~1e-9 radians; masses add.
// Coplanar sub-facets of one geometric facet must end up as a single atom.
inline void merge_atoms(std::vector<std::pair<Vec, double>>& atoms) {
    std::vector<std::pair<Vec, double>> merged;
    for (auto& [u, m] : atoms) {
        bool found = false;
        for (auto& [v, mv] : merged) {
            if ((u - v).norm() < 1e-9) {
                // mass-weighted normal update keeps the merged normal unit-close
                v = ((mv * v + m * u) / (mv + m)).normalized();
                mv += m;
                found = true;
                break;
            }
        }
        if (!found) merged.emplace_back(u, m);
    }
    atoms = std::move(merged);
}

}  // namespace detail

/// Surface area measure of P.  dim <= n-2 gives the zero measure; an
/// (n-1)-dimensional body gives the even two-atom measure at +-normal, each
/// atom carrying the full (n-1)-volume of the body; a full-dimensional body
/// gives one atom per facet.  Hull degeneracies surface as HullError.
inline SurfaceAreaMeasure surface_area_measure(const ConvexPolytope& p) {
    const int n = p.ambient_dim();
    const int d = p.affine_dim();
    SurfaceAreaMeasure s;
    s.ambient_dim = n;
    if (d <= n - 2) return s;

    if (d == n - 1) {
        auto [origin, basis] = p.affine_basis();
        // Unit normal of the affine hull: the left singular direction
        // orthogonal to the basis columns.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis, Eigen::ComputeFullU);
        Vec u = svd.matrixU().col(n - 1);
        for (int i = 0; i < n; ++i) {
            if (std::abs(u[i]) > 1e-12) {
                if (u[i] < 0) u = -u;
                break;
            }
        }
        double mass = point_set_volume(p.hull_coordinates(), n - 1);
        if (mass <= 0.0)
            throw HullError("surface_area_measure: degenerate (n-1)-volume");
        s.atoms.emplace_back(u, mass);
        s.atoms.emplace_back(-u, mass);
        return s;
    }

    for (const auto& f : enumerate_facets(p.vertices()))
        s.atoms.emplace_back(f.normal, f.area);
    detail::merge_atoms(s.atoms);
    return s;
}

/// Total mass, which equals the surface area F(K).
inline double total_mass(const SurfaceAreaMeasure& s) {
    double m = 0.0;
    for (const auto& [u, mass] : s.atoms) m += mass;
    return m;
}

/// Integral of the support function of P against the measure.
inline double integrate_support(const SurfaceAreaMeasure& s, const ConvexPolytope& p) {
    if (s.ambient_dim != p.ambient_dim())
        throw std::invalid_argument("integrate_support: dimension mismatch");
    double acc = 0.0;
    for (const auto& [u, mass] : s.atoms) acc += p.support(u) * mass;
    return acc;
}

/// Integral of |<e, u>| against the measure; equals twice the (n-1)-volume of
/// the projection of the underlying body into e^perp.
inline double integrate_abs_cos(const SurfaceAreaMeasure& s, const Vec& e) {
    if (static_cast<int>(e.size()) != s.ambient_dim)
        throw std::invalid_argument("integrate_abs_cos: dimension mismatch");
    double acc = 0.0;
    for (const auto& [u, mass] : s.atoms) acc += std::abs(e.dot(u)) * mass;
    return acc;
}

}  // namespace mixvol
