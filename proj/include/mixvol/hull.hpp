// Facet enumeration and volume of convex hulls of small point sets in R^d.
//
// The enumeration is brute force over d-subsets: each affinely independent
// subset spans a candidate hyperplane which is kept when it supports the
// whole point set.  Candidate hyperplanes that collect the same incident
// vertex set are the same facet; the facet normal is then refitted from all
// incident vertices.  Sign tests close to zero are re-evaluated as long
// double determinants, so a facet is never misclassified by a rounding
// artifact of the plain double path.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace mixvol {

struct Facet {
    Eigen::VectorXd normal;        // outward unit normal
    double offset = 0.0;           // support value h = <normal, x> on the facet
    double area = 0.0;             // (d-1)-dimensional volume
    std::vector<int> vertex_ids;   // incident input points, sorted
};

class HullError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline long double det_long_double(std::vector<std::vector<long double>> m) {
    const std::size_t d = m.size();
    long double det = 1.0L;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::fabs((double)m[r][col]) > std::fabs((double)m[piv][col])) piv = r;
        if (m[piv][col] == 0.0L) return 0.0L;
        if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < d; ++r) {
            long double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Signed side of x relative to the hyperplane through pts[idx[0..d-1]],
// evaluated as a d x d determinant in long double.
inline double side_long_double(const std::vector<Eigen::VectorXd>& pts,
                               const std::vector<int>& idx,
                               const Eigen::VectorXd& x) {
    const int d = static_cast<int>(x.size());
    std::vector<std::vector<long double>> m(static_cast<std::size_t>(d),
                                            std::vector<long double>(static_cast<std::size_t>(d)));
    const auto& p0 = pts[static_cast<std::size_t>(idx[0])];
    for (int j = 0; j < d; ++j)
        m[0][static_cast<std::size_t>(j)] = (long double)x[j] - (long double)p0[j];
    for (int i = 1; i < d; ++i) {
        const auto& pi = pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (long double)pi[j] - (long double)p0[j];
    }
    return static_cast<double>(det_long_double(std::move(m)));
}

inline bool next_combination(std::vector<int>& idx, int m) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < m - (k - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Orthonormal basis of the hyperplane orthogonal to the unit vector `a`
/// (columns of the returned d x (d-1) matrix), built from a Householder
/// reflection, hence deterministic in `a`.
inline Eigen::MatrixXd orthonormal_complement(const Eigen::VectorXd& a) {
    const int d = static_cast<int>(a.size());
    Eigen::VectorXd w = a;
    w[d - 1] += (a[d - 1] >= 0.0) ? 1.0 : -1.0;  // avoid cancellation
    double wn2 = w.squaredNorm();
    Eigen::MatrixXd basis(d, d - 1);
    for (int j = 0; j < d - 1; ++j) {
        Eigen::VectorXd col = -2.0 * (w[j] / wn2) * w;
        col[j] += 1.0;
        basis.col(j) = col;
    }
    return basis;
}

/// Indices of the convex hull of 2-d points in counterclockwise order.
inline std::vector<int> hull_order_2d(const std::vector<Eigen::VectorXd>& pts) {
    const int m = static_cast<int>(pts.size());
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& pa = pts[static_cast<std::size_t>(a)];
        const auto& pb = pts[static_cast<std::size_t>(b)];
        if (pa[0] != pb[0]) return pa[0] < pb[0];
        return pa[1] < pb[1];
    });
    double scale = 1e-300;
    for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    const double eps = 1e-12 * scale * scale;
    auto cross = [&](int o, int a, int b) {
        const auto& po = pts[static_cast<std::size_t>(o)];
        const auto& pa = pts[static_cast<std::size_t>(a)];
        const auto& pb = pts[static_cast<std::size_t>(b)];
        return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
    };
    std::vector<int> hull;
    // lower chain
    for (int id : order) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), id) <= eps)
            hull.pop_back();
        hull.push_back(id);
    }
    // upper chain
    std::size_t lower = hull.size() + 1;
    for (int i = m - 2; i >= 0; --i) {
        int id = order[static_cast<std::size_t>(i)];
        while (hull.size() >= lower &&
               cross(hull[hull.size() - 2], hull.back(), id) <= eps)
            hull.pop_back();
        hull.push_back(id);
    }
    hull.pop_back();
    return hull;
}

inline double point_set_volume(const std::vector<Eigen::VectorXd>& pts, int d);

/// All facets of conv(pts) in R^d, d >= 2.  The point set must be
/// full-dimensional; otherwise a HullError is thrown.
inline std::vector<Facet> enumerate_facets(const std::vector<Eigen::VectorXd>& pts) {
    if (pts.empty()) throw HullError("enumerate_facets: empty point set");
    const int d = static_cast<int>(pts[0].size());
    const int m = static_cast<int>(pts.size());
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    const double tol = 1e-9 * std::max(1.0, scale);

    std::vector<Facet> facets;

    if (d == 2) {
        std::vector<int> hull = hull_order_2d(pts);
        if (hull.size() < 3) throw HullError("enumerate_facets: degenerate 2-d hull");
        for (std::size_t i = 0; i < hull.size(); ++i) {
            int a = hull[i];
            int b = hull[(i + 1) % hull.size()];
            Eigen::VectorXd e = pts[static_cast<std::size_t>(b)] - pts[static_cast<std::size_t>(a)];
            double len = e.norm();
            Facet f;
            f.normal = Eigen::VectorXd(2);
            f.normal << e[1] / len, -e[0] / len;  // outward for ccw order
            f.offset = f.normal.dot(pts[static_cast<std::size_t>(a)]);
            f.area = len;
            f.vertex_ids = {std::min(a, b), std::max(a, b)};
            facets.push_back(std::move(f));
        }
        return facets;
    }

    if (m < d + 1) throw HullError("enumerate_facets: too few points for dimension");

    std::set<std::vector<int>> seen_incident_sets;
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;

    Eigen::MatrixXd diff(d - 1, d);
    do {
        const auto& p0 = pts[static_cast<std::size_t>(idx[0])];
        for (int i = 1; i < d; ++i)
            diff.row(i - 1) = (pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] - p0).transpose();

        // Generalized cross product: Laplace expansion of det([x - p0; diff]).
        Eigen::VectorXd normal(d);
        if (d == 3) {
            normal[0] = diff(0, 1) * diff(1, 2) - diff(0, 2) * diff(1, 1);
            normal[1] = diff(0, 2) * diff(1, 0) - diff(0, 0) * diff(1, 2);
            normal[2] = diff(0, 0) * diff(1, 1) - diff(0, 1) * diff(1, 0);
        } else {
            for (int j = 0; j < d; ++j) {
                Eigen::MatrixXd minor(d - 1, d - 1);
                minor.leftCols(j) = diff.leftCols(j);
                minor.rightCols(d - 1 - j) = diff.rightCols(d - 1 - j);
                normal[j] = ((j % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
            }
        }
        double nn = normal.norm();
        if (nn < 1e-13 * std::pow(std::max(1.0, scale), d - 1)) continue;
        normal /= nn;
        double offset = normal.dot(p0);

        int above = 0, below = 0;
        std::vector<int> incident;
        bool supporting = true;
        for (int i = 0; i < m && supporting; ++i) {
            double s = normal.dot(pts[static_cast<std::size_t>(i)]) - offset;
            if (std::abs(s) < 10.0 * tol) {
                // near the plane: settle the sign in extended precision
                s = detail::side_long_double(pts, idx, pts[static_cast<std::size_t>(i)]) / nn;
            }
            if (s > tol) ++above;
            else if (s < -tol) ++below;
            else incident.push_back(i);
            if (above > 0 && below > 0) supporting = false;
        }
        if (!supporting) continue;
        if (above == 0 && below == 0)
            throw HullError("enumerate_facets: point set is not full-dimensional");
        if (above > 0) { normal = -normal; offset = -offset; }

        if (!seen_incident_sets.insert(incident).second) continue;

        // Refit the hyperplane from all incident vertices for accuracy.
        Facet f;
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
        for (int id : incident) centroid += pts[static_cast<std::size_t>(id)];
        centroid /= static_cast<double>(incident.size());
        Eigen::MatrixXd D(static_cast<int>(incident.size()), d);
        for (std::size_t r = 0; r < incident.size(); ++r)
            D.row(static_cast<int>(r)) =
                (pts[static_cast<std::size_t>(incident[r])] - centroid).transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeFullV);
        Eigen::VectorXd fitted = svd.matrixV().col(d - 1);
        if (fitted.dot(normal) < 0) fitted = -fitted;
        f.normal = fitted;
        f.offset = fitted.dot(centroid);
        f.vertex_ids = incident;

        // Facet area: coordinates in the plane, then (d-1)-volume.
        Eigen::MatrixXd basis = orthonormal_complement(f.normal);
        std::vector<Eigen::VectorXd> flat;
        flat.reserve(incident.size());
        for (int id : incident)
            flat.push_back(basis.transpose() * (pts[static_cast<std::size_t>(id)] - centroid));
        f.area = point_set_volume(flat, d - 1);
        if (f.area <= 0.0)
            throw HullError("enumerate_facets: zero-area facet (ill-conditioned hull)");
        facets.push_back(std::move(f));
    } while (detail::next_combination(idx, m));

    if (static_cast<int>(facets.size()) < d + 1)
        throw HullError("enumerate_facets: too few facets (degenerate hull)");

    // Closedness of the boundary: sum of area-weighted normals vanishes.
    Eigen::VectorXd closure = Eigen::VectorXd::Zero(d);
    double total = 0.0;
    for (const auto& f : facets) { closure += f.area * f.normal; total += f.area; }
    if (closure.norm() > 1e-8 * total)
        throw HullError("enumerate_facets: facet closure check failed");
    return facets;
}

/// d-dimensional volume of conv(pts) for points given in R^d.
/// Returns 0 when the point set is lower-dimensional.
inline double point_set_volume(const std::vector<Eigen::VectorXd>& pts, int d) {
    if (static_cast<int>(pts.size()) < d + 1) return 0.0;
    if (d == 0) return 1.0;
    if (d == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
        return hi - lo;
    }
    if (d == 2) {
        std::vector<int> hull = hull_order_2d(pts);
        if (hull.size() < 3) return 0.0;
        double a2 = 0.0;  // shoelace
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const auto& p = pts[static_cast<std::size_t>(hull[i])];
            const auto& q = pts[static_cast<std::size_t>(hull[(i + 1) % hull.size()])];
            a2 += p[0] * q[1] - q[0] * p[1];
        }
        return 0.5 * std::abs(a2);
    }
    // d >= 3: check full-dimensionality, then sum facet cones from the centroid.
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (const auto& p : pts) centroid += p;
    centroid /= static_cast<double>(pts.size());
    Eigen::MatrixXd D(static_cast<int>(pts.size()), d);
    for (std::size_t r = 0; r < pts.size(); ++r)
        D.row(static_cast<int>(r)) = (pts[r] - centroid).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(D);
    double smax = svd.singularValues()[0];
    if (smax <= 0.0 || svd.singularValues()[d - 1] < 1e-9 * smax) return 0.0;

    double vol = 0.0;
    for (const auto& f : enumerate_facets(pts))
        vol += f.area * (f.offset - f.normal.dot(centroid));
    return vol / static_cast<double>(d);
}

}  // namespace mixvol
