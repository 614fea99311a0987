// JSON (de)serialization for bodies, measures, reports, certificates, and
// the run configuration embedded in every CLI output.  Keys are emitted in
// insertion order so identical inputs produce byte-identical output.
#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixvol/functionals.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/measure.hpp"
#include "mixvol/oracle.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/spherical.hpp"

namespace mixvol {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::uint64_t seed = 2024;
    double tolerance = 1e-9;
    int quadrature_level = 50000;  // antipodal pairs for spherical Monte Carlo
    long mc_samples = 100000;
    double eps0 = 0.05;
    std::string output_format = "json";
};

inline Json to_json(const RunConfig& c) {
    return Json{{"seed", c.seed},
                {"tolerance", c.tolerance},
                {"quadrature_level", c.quadrature_level},
                {"mc_samples", c.mc_samples},
                {"eps0", c.eps0},
                {"output_format", c.output_format}};
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

inline Json body_to_json(const ConvexPolytope& p) {
    Json vs = Json::array();
    for (const auto& v : p.vertices()) vs.push_back(vec_to_json(v));
    return Json{{"dim", p.ambient_dim()}, {"vertices", vs}};
}

inline ConvexPolytope body_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw std::invalid_argument("body JSON must have \"dim\" and \"vertices\"");
    int n = j.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("body JSON: dim must be >= 1");
    std::vector<Vec> vs;
    for (const auto& row : j.at("vertices")) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("body JSON: vertex of wrong dimension");
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = row.at(static_cast<std::size_t>(i)).get<double>();
        vs.push_back(std::move(v));
    }
    return ConvexPolytope(n, std::move(vs));
}

inline Json measure_to_json(const SurfaceAreaMeasure& s) {
    Json atoms = Json::array();
    for (const auto& [u, m] : s.atoms)
        atoms.push_back(Json{{"normal", vec_to_json(u)}, {"mass", m}});
    return Json{{"dim", s.ambient_dim}, {"atoms", atoms}};
}

inline Json report_to_json(const FunctionalReport& r) {
    Json tags = Json::object();
    for (const auto& [k, v] : r.method_tags) tags[k] = v;
    return Json{{"volume", r.volume},
                {"surface_area", r.surface_area},
                {"v1", r.v1},
                {"v_nminus1", r.v_nminus1},
                {"circumradius", r.circumradius},
                {"diameter", r.diameter},
                {"method_tags", tags}};
}

inline Json inequality_to_json(const InequalityReport& r) {
    Json j{{"name", r.name},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"deficit", r.deficit},
           {"satisfied", r.satisfied},
           {"tolerance", r.tolerance}};
    if (!r.equality_witness.empty()) j["equality_witness"] = r.equality_witness;
    return j;
}

inline Json certificate_to_json(const StabilityCertificate& c) {
    Json checks = Json::array();
    for (const auto& b : c.bound_checks)
        checks.push_back(Json{{"name", b.name},
                              {"lhs", b.lhs},
                              {"rhs", b.rhs},
                              {"pass", b.pass},
                              {"informational", b.informational}});
    Json j{{"admissible", c.admissible}, {"deficit", c.deficit}};
    if (!c.refusal_reason.empty()) j["refusal_reason"] = c.refusal_reason;
    if (c.e.size() > 0) {
        j["segment_endpoints"] = Json::array({vec_to_json(c.segment_endpoints.first),
                                              vec_to_json(c.segment_endpoints.second)});
        j["e"] = vec_to_json(c.e);
        j["tube_radius"] = c.tube_radius;
    }
    if (c.v.size() > 0) {
        j["v"] = vec_to_json(c.v);
        j["slab_width"] = c.slab_width;
        j["r"] = c.r;
        j["cos_ev"] = c.cos_ev;
    }
    j["bound_checks"] = checks;
    return j;
}

inline Json constants_to_json(const PaperConstants& c) {
    return Json{{"n", c.n},
                {"tau", c.tau},
                {"c1_est", c.c1_est},
                {"c3_est", c.c3_est},
                {"tube_factor", c.tube_factor}};
}

inline Json comparison_to_json(const OracleComparison& c) {
    return Json{{"quantity", c.quantity},
                {"fast_value", c.fast_value},
                {"oracle_value", c.oracle_value},
                {"rel_err", c.rel_err},
                {"budget", c.budget}};
}

}  // namespace mixvol
