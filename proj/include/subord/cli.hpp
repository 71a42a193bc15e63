#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "subord/admissibility.hpp"
#include "subord/oracle.hpp"
#include "subord/parallel.hpp"
#include "subord/regions.hpp"
#include "subord/serialize.hpp"
#include "subord/theorems.hpp"

namespace subord {

// Fully resolved invocation of one subcommand. The binary's flag parsing fills
// this in; tests drive run() directly with the same struct.
struct RunConfig {
    std::string command;

    std::optional<std::string> region;
    int order = 2;
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    std::optional<double> gamma3, m, k;

    // member
    double re = 1.0;
    double im = 0.0;
    double member_tol = kBoundaryTol;

    // boundary / output shaping
    int samples = 256;
    std::string format; // "json" or "csv"; empty picks the per-command default

    // minimize grid overrides
    std::optional<int> theta_samples, tau_samples;
    std::optional<double> tau_max;

    // experiment
    long trials = 1000;
    std::uint64_t seed = 1;
    GeneratorConfig generator{};
    DiskGrid grid{};
    bool falsify = false;
    int threads = 0; // 0 = worker_count()

    // explore
    double g1_min = 10.0, g1_max = 20.0;
    int g1_samples = 41;
    double g2_min = 0.1, g2_max = 2.1;
    int g2_samples = 21;

    // replay
    std::string input_path;
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

namespace detail {

inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(v));
    return buf;
}

inline RegionKind require_region(const RunConfig& c) {
    if (!c.region) throw std::invalid_argument(c.command + ": --region is required");
    return parse_region(*c.region);
}

inline TheoremSpec make_spec(const RunConfig& c) {
    TheoremSpec s;
    s.order = c.order;
    s.h = require_region(c);
    s.gamma1 = c.gamma1;
    s.gamma2 = c.gamma2;
    if (c.order == 3) {
        if (!c.gamma3) throw std::invalid_argument(c.command + ": order 3 needs --gamma3");
        s.gamma3 = c.gamma3;
        s.m = c.m.value_or(2.0);
        s.k = c.k.value_or(s.m.value());
    } else {
        if (c.gamma3 || c.m || c.k)
            throw std::invalid_argument(c.command +
                                        ": --gamma3/--m/--k require --order 3");
    }
    s.validate();
    return s;
}

inline std::string resolve_format(const RunConfig& c) {
    if (!c.format.empty()) {
        if (c.format != "json" && c.format != "csv")
            throw std::invalid_argument(c.command + ": --format must be json or csv");
        return c.format;
    }
    return (c.command == "boundary" || c.command == "explore") ? "csv" : "json";
}

inline RunResult run_radius(const RunConfig& c) {
    const RegionKind h = require_region(c);
    Json j{{"command", "radius"},
           {"region", to_string(h)},
           {"enclosing", to_json(min_enclosing_disk(h))},
           {"inscribed_radius", json_number(inscribed_radius(h))},
           {"closed_form_radius", json_number(target_disk_radius(h))}};
    return {0, dump_report(j)};
}

inline RunResult run_member(const RunConfig& c) {
    const RegionKind h = require_region(c);
    if (!(c.member_tol > 0.0))
        throw std::invalid_argument("member: --tol must be positive");
    const Complex w{c.re, c.im};
    const MembershipResult r = membership(h, w, c.member_tol);
    Json j{{"command", "member"},
           {"region", to_string(h)},
           {"point", json_complex(w)},
           {"tol", json_number(c.member_tol)},
           {"verdict", to_string(r.verdict)},
           {"margin", json_number(r.margin)}};
    return {0, dump_report(j)};
}

inline RunResult run_boundary(const RunConfig& c) {
    const RegionKind h = require_region(c);
    const BoundaryCurve curve = boundary_curve(h, c.samples);
    if (resolve_format(c) == "csv") {
        std::ostringstream out;
        out << "theta,re,im\n";
        for (std::size_t i = 0; i < curve.points.size(); ++i)
            out << fmt12(curve.thetas[i]) << ',' << fmt12(curve.points[i].real()) << ','
                << fmt12(curve.points[i].imag()) << '\n';
        return {0, out.str()};
    }
    Json pts = Json::array();
    for (std::size_t i = 0; i < curve.points.size(); ++i)
        pts.push_back(Json{{"theta", json_number(curve.thetas[i])},
                           {"point", json_complex(curve.points[i])}});
    Json j{{"command", "boundary"},
           {"region", to_string(h)},
           {"samples", c.samples},
           {"points", std::move(pts)}};
    return {0, dump_report(j)};
}

inline RunResult run_check(const RunConfig& c) {
    const TheoremSpec spec = make_spec(c);
    Json j{{"command", "check"},
           {"spec", to_json(spec)},
           {"report", to_json(check_condition(spec))}};
    return {0, dump_report(j)};
}

inline RunResult run_minimize(const RunConfig& c) {
    const TheoremSpec spec = make_spec(c);
    GridSpec grid = GridSpec::defaults(spec.order, spec.m.value_or(0.0));
    if (c.theta_samples) grid.theta_samples = *c.theta_samples;
    if (c.tau_samples) grid.tau_samples = *c.tau_samples;
    if (c.tau_max) grid.tau_max = *c.tau_max;
    const MinimizeResult r = min_xi_distance(spec, grid);
    const double radius = target_disk_radius(spec.h);
    Json m_values = Json::array();
    for (double m : grid.m_values) m_values.push_back(json_number(m));
    Json slacks = Json::array();
    for (double sck : grid.slack_values) slacks.push_back(json_number(sck));
    Json j{{"command", "minimize"},
           {"spec", to_json(spec)},
           {"grid",
            Json{{"theta_samples", grid.theta_samples},
                 {"m_values", std::move(m_values)},
                 {"tau_max", json_number(grid.tau_max)},
                 {"tau_samples", grid.tau_samples},
                 {"slack_values", std::move(slacks)},
                 {"refine_tol", json_number(grid.refine_tol)}}},
           {"result", to_json(r)},
           {"target_radius", json_number(radius)},
           {"satisfied", r.min_distance >= radius - 1e-6}};
    return {r.converged ? 0 : 1, dump_report(j)};
}

inline Json experiment_document(const TheoremSpec& spec, const RunConfig& c,
                                const ExperimentReport& report) {
    return Json{{"command", "experiment"},
                {"spec", to_json(spec)},
                {"grid", to_json(c.grid)},
                {"generator", to_json(c.generator)},
                {"trials", c.trials},
                {"seed", c.seed},
                {"falsify", c.falsify},
                {"report", to_json(report)}};
}

inline RunResult run_experiment(const RunConfig& c) {
    const TheoremSpec spec = make_spec(c);
    const ExperimentReport report = implication_experiment(spec, c.trials, c.seed, c.generator,
                                                           c.grid, c.falsify, c.threads);
    const bool clean = report.implication_violations == 0 && !report.generator_inadequate;
    return {clean ? 0 : 1, dump_report(experiment_document(spec, c, report))};
}

inline RunResult run_explore(const RunConfig& c) {
    const RegionKind h = require_region(c);
    const double g3 = c.order == 3 ? c.gamma3.value_or(0.0) : 0.0;
    if (c.order == 3 && !(g3 > 0.0))
        throw std::invalid_argument("explore: order 3 needs --gamma3");
    const RegionGrid grid =
        explore_region(c.order, h, c.g1_min, c.g1_max, c.g1_samples, c.g2_min, c.g2_max,
                       c.g2_samples, g3, c.m.value_or(2.0), c.k.value_or(c.m.value_or(2.0)));
    if (resolve_format(c) == "csv") {
        std::ostringstream out;
        out << "gamma1,gamma2,case1,case2,frontier_gamma1\n";
        for (std::size_t jj = 0; jj < grid.gamma2s.size(); ++jj)
            for (std::size_t ii = 0; ii < grid.gamma1s.size(); ++ii) {
                const std::uint8_t bits = grid.mask[jj * grid.gamma1s.size() + ii];
                out << fmt12(grid.gamma1s[ii]) << ',' << fmt12(grid.gamma2s[jj]) << ','
                    << ((bits & 1) ? 1 : 0) << ',' << ((bits & 2) ? 1 : 0) << ','
                    << fmt12(grid.frontier_gamma1[jj]) << '\n';
            }
        return {0, out.str()};
    }
    Json j{{"command", "explore"}, {"result", to_json(grid)}};
    return {0, dump_report(j)};
}

inline RunResult run_feasibility(const RunConfig& c) {
    const RegionKind h = require_region(c);
    const FeasibilityVerdict v = case2_feasibility(c.order, h);
    Json j{{"command", "feasibility"}, {"result", to_json(v)}};
    return {0, dump_report(j)};
}

inline RunResult run_replay(const RunConfig& c) {
    if (c.input_path.empty()) throw std::invalid_argument("replay: --in is required");
    std::ifstream in(c.input_path);
    if (!in) throw std::invalid_argument("replay: cannot open '" + c.input_path + "'");
    Json stored;
    try {
        in >> stored;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("replay: invalid JSON: ") + e.what());
    }
    if (!stored.contains("spec") || !stored.contains("report"))
        throw std::invalid_argument("replay: input lacks 'spec'/'report' fields");
    const TheoremSpec spec = spec_from_json(stored.at("spec"));
    const DiskGrid grid = disk_grid_from_json(stored.at("grid"));
    const GeneratorConfig gen = generator_from_json(stored.at("generator"));
    const long trials = stored.at("trials").get<long>();
    const std::uint64_t seed = stored.at("seed").get<std::uint64_t>();
    const bool falsify = stored.value("falsify", false);

    const ExperimentReport fresh =
        implication_experiment(spec, trials, seed, gen, grid, falsify, c.threads);
    const Json fresh_report = to_json(fresh);
    const bool match = fresh_report == stored.at("report");
    Json j{{"command", "replay"},
           {"input", c.input_path},
           {"match", match},
           {"report", fresh_report}};
    return {match ? 0 : 1, dump_report(j)};
}

} // namespace detail

// Dispatches a resolved config. Validation problems exit 2; non-convergence,
// replay mismatches, implication violations and inadequate generators exit 1;
// clean runs exit 0.
inline RunResult run(const RunConfig& config) {
    try {
        if (config.command == "radius") return detail::run_radius(config);
        if (config.command == "member") return detail::run_member(config);
        if (config.command == "boundary") return detail::run_boundary(config);
        if (config.command == "check") return detail::run_check(config);
        if (config.command == "minimize") return detail::run_minimize(config);
        if (config.command == "experiment") return detail::run_experiment(config);
        if (config.command == "explore") return detail::run_explore(config);
        if (config.command == "feasibility") return detail::run_feasibility(config);
        if (config.command == "replay") return detail::run_replay(config);
        throw std::invalid_argument("unknown command '" + config.command + "'");
    } catch (const std::exception& e) {
        Json j{{"error", e.what()}};
        return {2, dump_report(j)};
    }
}

} // namespace subord
