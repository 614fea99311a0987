#include <catch2/catch_amalgamated.hpp>

#include "mixvol/generators.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/rng.hpp"

using namespace mixvol;

namespace {

Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

Vec axis(int n, int i, double c = 1.0) {
    Vec v = Vec::Zero(n);
    v[i] = c;
    return v;
}

ConvexPolytope regular_ngon(int k) {
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i)
        pts.push_back(v2(std::cos(2.0 * M_PI * i / k), std::sin(2.0 * M_PI * i / k)));
    return ConvexPolytope(2, pts);
}

ConvexPolytope flat_square3() {
    return ConvexPolytope(3, {Vec::Zero(3), axis(3, 0), axis(3, 1), axis(3, 0) + axis(3, 1)});
}

Eigen::MatrixXd random_rotation(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) a.col(i) = gaussian_vector(n, gen);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    return q;
}

ConvexPolytope rotated(const ConvexPolytope& p, const Eigen::MatrixXd& q) {
    std::vector<Vec> vs;
    for (const auto& v : p.vertices()) vs.push_back(q * v);
    return ConvexPolytope(p.ambient_dim(), vs);
}

}  // namespace

TEST_CASE("Minkowski inequality") {
    SECTION("homothets give equality") {
        ConvexPolytope cube = make_box({1, 1, 1});
        auto rep = check_minkowski(cube, cube);
        CHECK(rep.satisfied);
        CHECK(rep.deficit == Catch::Approx(0.0).margin(1e-10));
        CHECK(rep.equality_witness == "homothetic");

        auto rep2 = check_minkowski(scale(cube, 2.0), cube);
        CHECK(rep2.satisfied);
        CHECK(rep2.deficit == Catch::Approx(0.0).margin(1e-9));
        CHECK(rep2.equality_witness == "homothetic");
    }
    SECTION("random non-homothetic pairs are strict") {
        for (int n : {2, 3}) {
            for (int t = 0; t < 20; ++t) {
                ConvexPolytope k = make_random_polytope(n, n + 4, 1000 + static_cast<std::uint64_t>(t));
                ConvexPolytope m = make_random_polytope(n, n + 4, 2000 + static_cast<std::uint64_t>(t));
                auto rep = check_minkowski(k, m);
                CHECK(rep.satisfied);
                CHECK(rep.deficit > rep.tolerance);
                CHECK(rep.equality_witness.empty());
            }
        }
    }
}

TEST_CASE("planar mixed-volume bound") {
    SECTION("orthogonal segments give equality") {
        ConvexPolytope k(2, {v2(0, 0), v2(1.5, 0)});
        ConvexPolytope m(2, {v2(0, 0), v2(0, 0.8)});
        auto rep = check_betke_weil(k, m);
        CHECK(rep.lhs == Catch::Approx(1.5 * 0.8 / 2.0));
        CHECK(rep.rhs == Catch::Approx(1.5 * 0.8 / 2.0));
        CHECK(rep.satisfied);
        CHECK(rep.equality_witness == "orthogonal segments");
    }
    SECTION("unit square against itself is strict") {
        ConvexPolytope sq = make_box({1, 1});
        auto rep = check_betke_weil(sq, sq);
        CHECK(rep.lhs == Catch::Approx(1.0));
        CHECK(rep.rhs == Catch::Approx(2.0));
        CHECK(rep.satisfied);
        CHECK(rep.equality_witness.empty());
    }
    SECTION("parallel segments vanish on the left") {
        ConvexPolytope k(2, {v2(0, 0), v2(1, 0)});
        ConvexPolytope m(2, {v2(0, 0), v2(2, 0)});
        auto rep = check_betke_weil(k, m);
        CHECK(rep.lhs == Catch::Approx(0.0).margin(1e-12));
        CHECK(rep.satisfied);
    }
    SECTION("rejects non-planar input") {
        ConvexPolytope cube = make_box({1, 1, 1});
        CHECK_THROWS_AS(check_betke_weil(cube, cube), std::invalid_argument);
    }
}

TEST_CASE("planar self-difference bound") {
    SECTION("equilateral triangle gives equality") {
        double a = 1.3;
        ConvexPolytope t(2, {v2(-a / 2, 0), v2(a / 2, 0), v2(0, a * std::sqrt(3.0) / 2)});
        auto rep = check_betke_weil_self(t);
        CHECK(rep.lhs == Catch::Approx(std::sqrt(3.0) / 2.0 * a * a));
        CHECK(rep.deficit == Catch::Approx(0.0).margin(1e-10));
        CHECK(rep.equality_witness == "equilateral triangle");
    }
    SECTION("right isosceles triangle is strict") {
        ConvexPolytope t(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
        auto rep = check_betke_weil_self(t);
        CHECK(rep.lhs == Catch::Approx(1.0));
        double per = 2.0 + std::sqrt(2.0);
        CHECK(rep.rhs == Catch::Approx(std::sqrt(3.0) / 18.0 * per * per));
        CHECK(rep.satisfied);
        CHECK(rep.deficit > rep.tolerance);
    }
    SECTION("near-disk polygon is strict") {
        auto rep = check_betke_weil_self(regular_ngon(64));
        CHECK(rep.satisfied);
        CHECK(rep.deficit > 0.05);
    }
}

TEST_CASE("reverse mixed-volume bound") {
    SECTION("segment perpendicular to a flat body gives equality") {
        double L = 2.5;
        ConvexPolytope k = make_segment(axis(3, 2), L);
        ConvexPolytope m = flat_square3();
        auto rep = check_reverse_minkowski(k, m);
        CHECK(rep.lhs == Catch::Approx(L / 3.0));
        CHECK(rep.rhs == Catch::Approx(L / 3.0));
        CHECK(rep.deficit == Catch::Approx(0.0).margin(1e-10));
        CHECK(rep.equality_witness == "segment perpendicular to a hyperplane body");
    }
    SECTION("cube pair has deficit 2/3") {
        ConvexPolytope cube = make_box({1, 1, 1});
        auto rep = check_reverse_minkowski(cube, cube);
        CHECK(rep.lhs == Catch::Approx(1.0));
        CHECK(rep.rhs == Catch::Approx(3.0));
        CHECK(rep.deficit == Catch::Approx(2.0 / 3.0));
    }
    SECTION("random pairs never violate the bound") {
        for (int n : {2, 3}) {
            for (int t = 0; t < 30; ++t) {
                ConvexPolytope k = make_random_polytope(n, n + 4, 3000 + static_cast<std::uint64_t>(t));
                ConvexPolytope m = make_random_polytope(n, n + 4, 4000 + static_cast<std::uint64_t>(t));
                auto rep = check_reverse_minkowski(k, m);
                CHECK(rep.satisfied);
                CHECK(rep.deficit >= -rep.tolerance);
            }
        }
    }
}

TEST_CASE("V_1 >= 2R") {
    SECTION("segments are the equality case") {
        auto rep = check_linhart(make_segment(axis(3, 0), 1.7));
        CHECK(rep.deficit == Catch::Approx(0.0).margin(1e-10));
        CHECK(rep.equality_witness == "segment");
    }
    SECTION("near-disk gives deficit about pi - 2") {
        auto rep = check_linhart(regular_ngon(256));
        CHECK(rep.deficit == Catch::Approx(M_PI - 2.0).margin(1e-3));
    }
    SECTION("flat isosceles deficit is about t^2/2") {
        double t = 0.1;
        auto rep = check_linhart(make_isosceles(t));
        CHECK(rep.deficit == Catch::Approx(std::sqrt(1.0 + t * t) - 1.0).margin(1e-12));
    }
    SECTION("a point is trivially fine") {
        auto rep = check_linhart(ConvexPolytope(2, {v2(3, 4)}));
        CHECK(rep.satisfied);
        CHECK(rep.equality_witness == "point");
    }
}

TEST_CASE("deficits are scale and rotation invariant") {
    ConvexPolytope k = make_random_polytope(3, 8, 5001);
    ConvexPolytope m = make_random_polytope(3, 8, 5002);
    double d_rm = check_reverse_minkowski(k, m).deficit;
    double d_lin = check_linhart(k).deficit;
    SECTION("scaling") {
        CHECK(check_reverse_minkowski(scale(k, 3.7), scale(m, 0.3)).deficit ==
              Catch::Approx(d_rm).margin(1e-10));
        CHECK(check_linhart(scale(k, 11.0)).deficit == Catch::Approx(d_lin).margin(1e-10));
    }
    SECTION("rotation") {
        Eigen::MatrixXd q = random_rotation(3, 77);
        CHECK(check_reverse_minkowski(rotated(k, q), rotated(m, q)).deficit ==
              Catch::Approx(d_rm).margin(1e-9));
        CHECK(check_linhart(rotated(k, q)).deficit == Catch::Approx(d_lin).margin(1e-9));
        CHECK(check_minkowski(rotated(k, q), rotated(m, q)).deficit ==
              Catch::Approx(check_minkowski(k, m).deficit).margin(1e-9));
    }
}

TEST_CASE("segment-stability certificate") {
    SECTION("a segment certifies with zero tube") {
        auto cert = linhart_certificate(make_segment(axis(2, 0), 2.0));
        CHECK(cert.admissible);
        CHECK(cert.tube_radius == Catch::Approx(0.0).margin(1e-12));
        for (const auto& b : cert.bound_checks) CHECK(b.pass);
    }
    SECTION("flat isosceles: tube radius is the apex height") {
        auto cert = linhart_certificate(make_isosceles(0.05));
        CHECK(cert.admissible);
        CHECK(cert.tube_radius == Catch::Approx(0.05));
        CHECK((cert.segment_endpoints.first - cert.segment_endpoints.second).norm() ==
              Catch::Approx(2.0));
        for (const auto& b : cert.bound_checks) CHECK(b.pass);
    }
    SECTION("perturbed segments certify across seeds") {
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto cert = linhart_certificate(make_perturbed_segment(2, 2.0, 0.01, s));
            CHECK(cert.admissible);
            for (const auto& b : cert.bound_checks) CHECK(b.pass);
        }
    }
    SECTION("fat bodies are refused") {
        auto cert = linhart_certificate(make_isosceles(1.0));
        CHECK_FALSE(cert.admissible);
        CHECK_FALSE(cert.refusal_reason.empty());
    }
    SECTION("tube scaling across the isosceles family has exponent 1/2") {
        std::vector<std::pair<double, double>> pts;
        for (double t : {0.05, 0.1, 0.15, 0.2, 0.3}) {
            double eps = check_linhart(make_isosceles(t)).deficit;
            pts.emplace_back(eps, linhart_certificate(make_isosceles(t)).tube_radius);
        }
        CHECK(detail::loglog_slope(pts) == Catch::Approx(0.5).margin(0.05));
    }
}

TEST_CASE("width minimizer") {
    ConvexPolytope box = make_box({1.0, 2.0, 3.0});
    Vec v = width_minimizer(box);
    CHECK(box.width(v) == Catch::Approx(1.0).margin(1e-7));
    CHECK(std::abs(v[0]) == Catch::Approx(1.0).margin(1e-4));

    Vec w = width_minimizer(flat_square3());
    CHECK(flat_square3().width(w) == Catch::Approx(0.0).margin(1e-10));
    CHECK(std::abs(w[2]) == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("slab-direction fragment") {
    SECTION("flat body: normal direction, zero slab width") {
        auto frag = prop41_check(flat_square3(), axis(3, 2), 1e-8);
        CHECK(frag.admissible);
        CHECK(frag.slab_width == Catch::Approx(0.0).margin(1e-10));
        CHECK(frag.cos_ev == Catch::Approx(1.0).margin(1e-6));
        for (const auto& b : frag.bound_checks) CHECK(b.pass);
    }
    SECTION("hypothesis violation throws with the measured ratio") {
        CHECK_THROWS_AS(prop41_check(make_box({1, 1, 1}), axis(3, 2), 1e-6),
                        std::runtime_error);
    }
    SECTION("six-vertex body: remark quantities") {
        double eps = 0.01;
        ConvexPolytope m = make_remark_body(3, 10.0, eps);
        Vec e = remark_direction(3, eps);
        // the projection hypothesis holds at this eps, which sits above the
        // proposition's strict range, so the bounds come back informational
        auto frag = prop41_check(m, e, eps);
        CHECK(frag.r > 1.0);
        CHECK(frag.r < 3.0);
        CHECK_FALSE(frag.admissible);
        for (const auto& b : frag.bound_checks) CHECK(b.informational);
    }
    SECTION("thin box inside the hypothesis range") {
        double h = 0.0005;
        ConvexPolytope m = make_box({1, 1, h});
        auto frag = prop41_check(m, axis(3, 2), 2.0 * h / (1.0 + 2.0 * h) + 1e-9);
        CHECK(frag.admissible);
        CHECK(frag.slab_width == Catch::Approx(h).margin(1e-7));
        for (const auto& b : frag.bound_checks) {
            CHECK(b.pass);
            CHECK_FALSE(b.informational);
        }
    }
}

TEST_CASE("reverse-bound certificate") {
    SECTION("equality pair certifies exactly") {
        ConvexPolytope k = make_segment(axis(3, 2), 2.0);
        ConvexPolytope m = flat_square3();
        auto cert = reverse_certificate(k, m);
        CHECK(cert.admissible);
        CHECK(cert.deficit == Catch::Approx(0.0).margin(1e-10));
        CHECK(cert.tube_radius == Catch::Approx(0.0).margin(1e-12));
        CHECK(cert.slab_width == Catch::Approx(0.0).margin(1e-10));
        CHECK(cert.cos_ev == Catch::Approx(1.0).margin(1e-6));
        CHECK(cert.r == Catch::Approx(0.5));
    }
    SECTION("thin box against a segment") {
        double h = 0.0005;
        ConvexPolytope k = make_segment(axis(3, 2), 2.0);
        ConvexPolytope m = make_box({1, 1, h});
        auto cert = reverse_certificate(k, m);
        CHECK(cert.admissible);
        CHECK(cert.slab_width == Catch::Approx(h).margin(1e-7));
        CHECK(cert.cos_ev == Catch::Approx(1.0).margin(1e-6));
        for (const auto& b : cert.bound_checks)
            if (!b.informational) CHECK(b.pass);
    }
    SECTION("large deficit refused at eps0") {
        ConvexPolytope cube = make_box({1, 1, 1});
        auto cert = reverse_certificate(cube, cube);
        CHECK_FALSE(cert.admissible);
        CHECK_FALSE(cert.refusal_reason.empty());
    }
    SECTION("recorded quantities are reproducible from the bodies") {
        double h = 0.001;
        ConvexPolytope k = make_segment(axis(3, 2), 2.0);
        ConvexPolytope m = make_box({1, 1, h});
        auto cert = reverse_certificate(k, m);
        CHECK(cert.slab_width == Catch::Approx(m.width(cert.v)).margin(1e-10));
        CHECK(cert.r == Catch::Approx(inradius_projection(m, cert.e)).margin(1e-10));
        CHECK(cert.cos_ev == Catch::Approx(cert.e.dot(cert.v)).margin(1e-10));
        CHECK(cert.tube_radius ==
              Catch::Approx(detail::tube_radius_about(k, cert.segment_endpoints.first, cert.e))
                  .margin(1e-10));
    }
}

TEST_CASE("power-law fitting utility") {
    std::vector<std::pair<double, double>> pts;
    for (double x : {0.01, 0.02, 0.05, 0.1}) pts.emplace_back(x, 3.0 * std::pow(x, 0.37));
    CHECK(detail::loglog_slope(pts) == Catch::Approx(0.37).margin(1e-12));
}
