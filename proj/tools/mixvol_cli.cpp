// Command-line front end: functional reports, mixed volumes with an oracle
// cross-check, inequality checks, stability certificates, parameter sweeps
// with fitted exponents, constant tables, and the spherical profile.
//
// Exit codes: 0 when every requested check passed, 2 when a check or
// certificate failed, 1 on input errors.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mixvol/generators.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/json_io.hpp"
#include "mixvol/oracle.hpp"
#include "mixvol/spherical.hpp"

using namespace mixvol;

namespace {

ConvexPolytope load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return body_from_json(j);
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Vec axis(int n, int i) {
    Vec v = Vec::Zero(n);
    v[i] = 1.0;
    return v;
}

bool certificate_passed(const StabilityCertificate& c) {
    if (!c.admissible) return false;
    for (const auto& b : c.bound_checks)
        if (!b.informational && !b.pass) return false;
    return true;
}

void emit_json(const RunConfig& cfg, Json body) {
    body["config"] = to_json(cfg);
    std::cout << body.dump(2) << "\n";
}

// CSV output: one config comment line, then a header row; '.' decimals,
// ',' delimiter, LF endings.
void emit_csv(const RunConfig& cfg, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    std::cout << "# config " << to_json(cfg).dump() << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    std::vector<double> g;
    for (int i = 0; i < steps; ++i)
        g.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return g;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
    std::vector<double> g;
    for (int i = 0; i < steps; ++i)
        g.push_back(steps == 1 ? lo
                               : lo * std::pow(hi / lo, static_cast<double>(i) / (steps - 1)));
    return g;
}

int cmd_sweep(const RunConfig& cfg, const std::string& family, double lo, double hi,
              int steps) {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool all_pass = true;

    if (family == "isosceles") {
        header = {"family", "t", "eps", "tube_radius", "pass"};
        std::vector<std::pair<double, double>> fit;
        for (double t : linear_grid(lo, hi, steps)) {
            ConvexPolytope k = make_isosceles(t);
            double eps = check_linhart(k).deficit;
            auto cert = linhart_certificate(k);
            bool pass = certificate_passed(cert);
            all_pass = all_pass && pass;
            fit.emplace_back(eps, cert.tube_radius);
            rows.push_back({family, fmt(t), fmt(eps), fmt(cert.tube_radius),
                            pass ? "1" : "0"});
        }
        double slope = detail::loglog_slope(fit);
        rows.push_back({"summary", "tube_exponent", fmt(slope), "", all_pass ? "1" : "0"});
    } else if (family == "perturbed-segment") {
        header = {"family", "delta", "eps", "tube_radius", "pass"};
        std::vector<std::pair<double, double>> fit;
        int idx = 0;
        for (double delta : log_grid(lo, hi, steps)) {
            ConvexPolytope k =
                make_perturbed_segment(2, 2.0, delta, derive_seed(cfg.seed, static_cast<std::uint64_t>(idx++)));
            double eps = check_linhart(k).deficit;
            auto cert = linhart_certificate(k);
            bool pass = certificate_passed(cert);
            all_pass = all_pass && pass;
            if (eps > 0 && cert.tube_radius > 0) fit.emplace_back(eps, cert.tube_radius);
            rows.push_back({family, fmt(delta), fmt(eps), fmt(cert.tube_radius),
                            pass ? "1" : "0"});
        }
        double slope = fit.size() >= 2 ? detail::loglog_slope(fit) : 0.0;
        rows.push_back({"summary", "tube_exponent", fmt(slope), "", all_pass ? "1" : "0"});
    } else if (family == "thin-box") {
        header = {"family", "h", "eps", "slab_width", "cos_deficit", "pass"};
        std::vector<std::pair<double, double>> fit_slab, fit_cos;
        for (double h : log_grid(lo, hi, steps)) {
            // segment direction tilted by sqrt(2h) from the thin direction, so
            // the cosine deficit scales with the reverse-inequality deficit
            double theta = std::sqrt(2.0 * h);
            Vec e(3);
            e << std::sin(theta), 0.0, std::cos(theta);
            ConvexPolytope k = make_segment(e, 2.0);
            ConvexPolytope m = make_box({1.0, 1.0, h});
            double eps = check_reverse_minkowski(k, m).deficit;
            auto cert = reverse_certificate(k, m, cfg.eps0);
            bool pass = certificate_passed(cert);
            all_pass = all_pass && pass;
            double cos_def = 1.0 - cert.cos_ev;
            if (eps > 0 && cert.slab_width > 0) fit_slab.emplace_back(eps, cert.slab_width);
            if (eps > 0 && cos_def > 0) fit_cos.emplace_back(eps, cos_def);
            rows.push_back({family, fmt(h), fmt(eps), fmt(cert.slab_width), fmt(cos_def),
                            pass ? "1" : "0"});
        }
        rows.push_back({"summary", "slab_exponent", fmt(detail::loglog_slope(fit_slab)),
                        "cos_exponent", fmt(detail::loglog_slope(fit_cos)),
                        all_pass ? "1" : "0"});
    } else if (family == "remark") {
        header = {"family", "lambda", "r", "projection_ratio", "width_e", "pass"};
        std::vector<std::pair<double, double>> fit;
        double eps = 0.01;
        for (double lambda : log_grid(lo, hi, steps)) {
            ConvexPolytope m = make_remark_body(3, lambda, eps);
            Vec e = remark_direction(3, eps);
            double r = inradius_projection(m, e);
            double proj = point_set_volume(project(m, e).vertices(), 2);
            double ratio = proj / v_nminus1(m);
            double we = m.width(e);
            bool pass = r > 1.0 && r < 3.0 && ratio >= 1.0 - eps - 1e-9;
            all_pass = all_pass && pass;
            fit.emplace_back(lambda, we);
            rows.push_back({family, fmt(lambda), fmt(r), fmt(ratio), fmt(we),
                            pass ? "1" : "0"});
        }
        rows.push_back({"summary", "width_lambda_exponent", fmt(detail::loglog_slope(fit)),
                        "", "", all_pass ? "1" : "0"});
    } else {
        throw std::invalid_argument("unknown sweep family: " + family);
    }
    emit_csv(cfg, header, rows);
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-volume functionals, inequality checks, and stability certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "root seed for all randomness");
    app.add_option("--tolerance", cfg.tolerance, "numerical tolerance");
    app.add_option("--quadrature-level", cfg.quadrature_level, "spherical MC pairs");
    app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples");
    app.add_option("--eps0", cfg.eps0, "certification threshold for the reverse bound");
    app.add_option("--format", cfg.output_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // compute
    auto* compute = app.add_subcommand("compute", "functional report for a body");
    std::string body_file, functionals;
    compute->add_option("--body", body_file, "body JSON file")->required();
    compute->add_option("--functionals", functionals,
                        "comma list: vol,f,v1,vn1,r,diam (default all)");

    // mixed
    auto* mixed = app.add_subcommand("mixed", "mixed volume V(K, M[n-1])");
    std::string k_file, m_file;
    bool with_oracle = false;
    mixed->add_option("--k", k_file, "K body JSON")->required();
    mixed->add_option("--m", m_file, "M body JSON")->required();
    mixed->add_flag("--oracle", with_oracle, "cross-check with the polynomial fit");

    // check
    auto* check = app.add_subcommand("check", "inequality check");
    std::string check_name, check_k, check_m;
    check
        ->add_option("name", check_name,
                     "minkowski|betke-weil|betke-weil-self|reverse-minkowski|linhart")
        ->required();
    check->add_option("--k", check_k, "K body JSON")->required();
    check->add_option("--m", check_m, "M body JSON (pair inequalities)");

    // certify
    auto* certify = app.add_subcommand("certify", "stability certificate");
    std::string cert_name, cert_k, cert_m;
    certify->add_option("name", cert_name, "linhart|reverse")->required();
    certify->add_option("--k", cert_k, "K body JSON")->required();
    certify->add_option("--m", cert_m, "M body JSON (reverse only)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "parameter sweep with fitted exponents");
    std::string family;
    double grid_lo = 0.0, grid_hi = 0.0;
    int grid_steps = 15;
    sweep->add_option("family", family, "isosceles|perturbed-segment|thin-box|remark")
        ->required();
    sweep->add_option("--grid-start", grid_lo, "first parameter value");
    sweep->add_option("--grid-stop", grid_hi, "last parameter value");
    sweep->add_option("--steps", grid_steps, "grid size");

    // constants
    auto* constants = app.add_subcommand("constants", "assembled constants for dimension n");
    int const_dim = 3;
    constants->add_option("--dim", const_dim, "ambient dimension")->required();

    // sphere-profile
    auto* profile = app.add_subcommand("sphere-profile", "table of the cap profile f");
    int prof_dim = 3, alpha_steps = 200;
    profile->add_option("--dim", prof_dim, "ambient dimension")->required();
    profile->add_option("--alpha-steps", alpha_steps, "grid size on (0, pi/2]");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force cross-check for a body");
    std::string oracle_body, quantity = "v1";
    oracle->add_option("--body", oracle_body, "body JSON file")->required();
    oracle->add_option("--quantity", quantity, "v1|volume|circumradius")
        ->check(CLI::IsMember({"v1", "volume", "circumradius"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            ConvexPolytope p = load_body(body_file);
            Json rep = report_to_json(compute_report(p));
            if (!functionals.empty()) {
                const std::map<std::string, std::string> alias{
                    {"vol", "volume"},       {"f", "surface_area"}, {"v1", "v1"},
                    {"vn1", "v_nminus1"},    {"r", "circumradius"}, {"diam", "diameter"}};
                Json filtered = Json::object();
                std::stringstream ss(functionals);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    auto it = alias.find(tok);
                    if (it == alias.end())
                        throw std::invalid_argument("unknown functional: " + tok);
                    filtered[it->second] = rep[it->second];
                }
                filtered["method_tags"] = rep["method_tags"];
                rep = filtered;
            }
            emit_json(cfg, rep);
            return 0;
        }
        if (*mixed) {
            ConvexPolytope k = load_body(k_file), m = load_body(m_file);
            double v = mixed_volume_1(k, m);
            Json out{{"mixed_volume", v}};
            int code = 0;
            if (with_oracle) {
                double ov = mixed_volume_oracle(k, m);
                auto cmp = OracleComparison::make("mixed_volume", v, ov,
                                                  k.ambient_dim() + 1);
                out["oracle"] = comparison_to_json(cmp);
                if (cmp.rel_err > 1e-7) code = 2;
            }
            emit_json(cfg, out);
            return code;
        }
        if (*check) {
            ConvexPolytope k = load_body(check_k);
            InequalityReport rep;
            if (check_name == "minkowski" || check_name == "betke-weil" ||
                check_name == "reverse-minkowski") {
                if (check_m.empty())
                    throw std::invalid_argument(check_name + " needs --m");
                ConvexPolytope m = load_body(check_m);
                rep = check_name == "minkowski"    ? check_minkowski(k, m)
                      : check_name == "betke-weil" ? check_betke_weil(k, m)
                                                   : check_reverse_minkowski(k, m);
            } else if (check_name == "betke-weil-self") {
                rep = check_betke_weil_self(k);
            } else if (check_name == "linhart") {
                rep = check_linhart(k);
            } else {
                throw std::invalid_argument("unknown inequality: " + check_name);
            }
            emit_json(cfg, inequality_to_json(rep));
            return rep.satisfied ? 0 : 2;
        }
        if (*certify) {
            ConvexPolytope k = load_body(cert_k);
            StabilityCertificate cert;
            if (cert_name == "linhart") {
                cert = linhart_certificate(k);
            } else if (cert_name == "reverse") {
                if (cert_m.empty()) throw std::invalid_argument("reverse needs --m");
                cert = reverse_certificate(k, load_body(cert_m), cfg.eps0);
            } else {
                throw std::invalid_argument("unknown certificate: " + cert_name);
            }
            emit_json(cfg, certificate_to_json(cert));
            return certificate_passed(cert) ? 0 : 2;
        }
        if (*sweep) {
            // family defaults chosen to land in each certifier's working range
            if (grid_lo == 0.0 && grid_hi == 0.0) {
                if (family == "isosceles") grid_lo = 0.02, grid_hi = 0.3;
                else if (family == "perturbed-segment") grid_lo = 1e-4, grid_hi = 1e-2;
                else if (family == "thin-box") grid_lo = 1e-5, grid_hi = 5e-4, grid_steps = 8;
                else if (family == "remark") grid_lo = 10.0, grid_hi = 100.0, grid_steps = 5;
            }
            return cmd_sweep(cfg, family, grid_lo, grid_hi, grid_steps);
        }
        if (*constants) {
            emit_json(cfg, constants_to_json(make_paper_constants(const_dim)));
            return 0;
        }
        if (*profile) {
            std::vector<std::string> header{"alpha", "f"};
            std::vector<std::vector<std::string>> rows;
            double prev = std::numeric_limits<double>::infinity();
            bool decreasing = true;
            for (int i = 1; i <= alpha_steps; ++i) {
                double a = M_PI / 2 * i / alpha_steps;
                double f = f_profile(prof_dim, a);
                decreasing = decreasing && f < prev;
                prev = f;
                rows.push_back({fmt(a), fmt(f)});
            }
            rows.push_back({"summary", decreasing ? "decreasing" : "not-decreasing"});
            emit_csv(cfg, header, rows);
            return decreasing ? 0 : 2;
        }
        if (*oracle) {
            ConvexPolytope p = load_body(oracle_body);
            OracleComparison cmp;
            bool ok = true;
            if (quantity == "v1") {
                McEstimate e = mc_v1(p, cfg.mc_samples, cfg.seed);
                cmp = OracleComparison::make("v1", v1(p), e.value, cfg.mc_samples);
                ok = std::abs(cmp.fast_value - e.value) <= 4.0 * e.std_error;
            } else if (quantity == "volume") {
                McEstimate e = volume_mc(p, cfg.mc_samples, cfg.seed);
                cmp = OracleComparison::make("volume", volume(p), e.value, cfg.mc_samples);
                ok = std::abs(cmp.fast_value - e.value) <= 4.0 * e.std_error;
            } else {
                Ball b = meb_exhaustive(p.vertices());
                cmp = OracleComparison::make("circumradius", circumradius(p), b.radius,
                                             static_cast<long>(p.vertices().size()));
                ok = cmp.rel_err <= 1e-9;
            }
            emit_json(cfg, comparison_to_json(cmp));
            return ok ? 0 : 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 1;
}
