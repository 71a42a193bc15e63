#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include <json.hpp>

#include "subord/admissibility.hpp"
#include "subord/oracle.hpp"
#include "subord/regions.hpp"
#include "subord/series.hpp"
#include "subord/theorems.hpp"

namespace subord {

using Json = nlohmann::json;

// All emitted numbers are rounded to 12 significant digits via a %.12g
// round-trip. Reports then serialize to identical bytes across reruns and
// thread counts, and stay readable.
inline double round12(double v) {
    if (std::isnan(v)) return 0.0;
    if (!std::isfinite(v))
        return v > 0 ? std::numeric_limits<double>::max() : std::numeric_limits<double>::lowest();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline Json json_number(double v) { return round12(v); }

inline Json json_complex(Complex z) {
    return Json::array({round12(z.real()), round12(z.imag())});
}

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const AnalyticSeries& p) {
    Json coeffs = Json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(json_complex(c));
    return Json{{"coefficients", coeffs}};
}

inline AnalyticSeries series_from_json(const Json& j) {
    if (!j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("series needs a 'coefficients' array");
    std::vector<Complex> coeffs;
    for (const Json& c : j["coefficients"]) coeffs.push_back(complex_from_json(c));
    return AnalyticSeries(std::move(coeffs));
}

inline Json to_json(const MembershipResult& r) {
    return Json{{"verdict", to_string(r.verdict)}, {"margin", json_number(r.margin)}};
}

inline Json to_json(const EnclosingDisk& d) {
    return Json{{"radius", json_number(d.radius)},
                {"theta_at_max", json_number(d.theta_at_max)}};
}

inline Json to_json(const TheoremSpec& s) {
    Json j{{"order", s.order},
           {"region", to_string(s.h)},
           {"gamma1", json_number(s.gamma1)},
           {"gamma2", json_number(s.gamma2)}};
    if (s.gamma3) j["gamma3"] = json_number(*s.gamma3);
    if (s.m) j["m"] = json_number(*s.m);
    if (s.k) j["k"] = json_number(*s.k);
    return j;
}

inline TheoremSpec spec_from_json(const Json& j) {
    TheoremSpec s;
    s.order = j.at("order").get<int>();
    s.h = parse_region(j.at("region").get<std::string>());
    s.gamma1 = j.at("gamma1").get<double>();
    s.gamma2 = j.at("gamma2").get<double>();
    if (j.contains("gamma3")) s.gamma3 = j["gamma3"].get<double>();
    if (j.contains("m")) s.m = j["m"].get<double>();
    if (j.contains("k")) s.k = j["k"].get<double>();
    s.validate();
    return s;
}

inline Json to_json(const CaseReport& r) {
    Json j{{"case1_holds", r.case1_holds},
           {"case1_margin", json_number(r.case1_margin)},
           {"case1_rhs", json_number(r.case1_rhs)},
           {"case2_holds", r.case2_holds},
           {"case2_margin", json_number(r.case2_margin)},
           {"case2_rhs", json_number(r.case2_rhs)},
           {"radius", json_number(r.radius)},
           {"any_holds", r.any_holds}};
    if (r.note) j["note"] = *r.note;
    return j;
}

inline Json to_json(const FeasibilityVerdict& v) {
    return Json{{"order", v.order},
                {"region", to_string(v.h)},
                {"feasible", v.feasible},
                {"sup_lhs", json_number(v.sup_lhs)},
                {"rhs", json_number(v.rhs)},
                {"analysis", v.analysis}};
}

inline Json to_json(const MinimizeResult& r) {
    return Json{{"min_distance", json_number(r.min_distance)},
                {"theta", json_number(r.theta)},
                {"m", json_number(r.m)},
                {"c_slack", json_number(r.c_slack)},
                {"c3_slack", json_number(r.c3_slack)},
                {"tau", json_number(r.tau)},
                {"converged", r.converged},
                {"evaluations", r.evaluations}};
}

inline Json to_json(const DiskGrid& g) {
    return Json{{"r_max", json_number(g.r_max)},
                {"n_radial", g.n_radial},
                {"n_angular", g.n_angular},
                {"tol", json_number(g.tol)}};
}

inline DiskGrid disk_grid_from_json(const Json& j) {
    DiskGrid g;
    g.r_max = j.at("r_max").get<double>();
    g.n_radial = j.at("n_radial").get<int>();
    g.n_angular = j.at("n_angular").get<int>();
    g.tol = j.at("tol").get<double>();
    g.validate();
    return g;
}

inline Json to_json(const GeneratorConfig& g) {
    return Json{{"rho", json_number(g.rho)},
                {"degree", g.degree},
                {"max_halvings", g.max_halvings}};
}

inline GeneratorConfig generator_from_json(const Json& j) {
    GeneratorConfig g;
    g.rho = j.at("rho").get<double>();
    g.degree = j.at("degree").get<int>();
    g.max_halvings = j.at("max_halvings").get<int>();
    g.validate();
    return g;
}

inline Json to_json(const SubordinationResult& r) {
    Json j{{"verdict", to_string(r.verdict)}, {"margin", json_number(r.margin)}};
    if (r.witness) j["witness"] = json_complex(*r.witness);
    return j;
}

inline Json to_json(const ExperimentReport& r) {
    Json counterexamples = Json::array();
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
        Json entry = to_json(r.counterexamples[i]);
        entry["trial"] = r.counterexample_trials[i];
        counterexamples.push_back(std::move(entry));
    }
    return Json{{"trials", r.trials},
                {"antecedent_hits", r.antecedent_hits},
                {"implication_violations", r.implication_violations},
                {"precondition_rejections", r.precondition_rejections},
                {"inconclusive_consequents", r.inconclusive_consequents},
                {"rng_seed", r.rng_seed},
                {"generator_inadequate", r.generator_inadequate},
                {"counterexamples", counterexamples}};
}

inline Json to_json(const RegionGrid& g) {
    Json j{{"order", g.order},
           {"region", to_string(g.h)},
           {"t3", json_number(g.t3)}};
    Json g1 = Json::array(), g2 = Json::array(), frontier = Json::array();
    for (double v : g.gamma1s) g1.push_back(json_number(v));
    for (double v : g.gamma2s) g2.push_back(json_number(v));
    for (double v : g.frontier_gamma1) frontier.push_back(json_number(v));
    j["gamma1s"] = std::move(g1);
    j["gamma2s"] = std::move(g2);
    j["frontier_gamma1"] = std::move(frontier);
    Json rows = Json::array();
    for (std::size_t jj = 0; jj < g.gamma2s.size(); ++jj) {
        Json row = Json::array();
        for (std::size_t ii = 0; ii < g.gamma1s.size(); ++ii)
            row.push_back(static_cast<int>(g.mask[jj * g.gamma1s.size() + ii]));
        rows.push_back(std::move(row));
    }
    j["mask"] = std::move(rows);
    return j;
}

// Canonical text form: 2-space indent, sorted keys (nlohmann's object is
// already key-sorted), trailing newline.
inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

} // namespace subord
