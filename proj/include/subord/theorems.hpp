#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subord/regions.hpp"

namespace subord {

// Parameters of one sufficient-condition statement: the operator weights
// gamma1..gamma3 and the target region h that the operator value is assumed to
// stay inside. Order 2 uses gamma1, gamma2 only; order 3 adds gamma3 and the
// admissibility class parameters k >= m >= 2.
struct TheoremSpec {
    int order = 2;
    RegionKind h = RegionKind::Sine;
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    std::optional<double> gamma3;
    std::optional<double> m;
    std::optional<double> k;

    void validate() const {
        if (order != 2 && order != 3)
            throw std::invalid_argument("TheoremSpec: order must be 2 or 3");
        if (h == RegionKind::Exp)
            throw std::invalid_argument("TheoremSpec: target region must be one of "
                                        "sine|cardioid|crescent|arcsinh");
        if (!(gamma1 > 0.0) || !(gamma2 > 0.0))
            throw std::invalid_argument("TheoremSpec: gamma1 and gamma2 must be positive");
        if (order == 2) {
            if (gamma3 || m || k)
                throw std::invalid_argument(
                    "TheoremSpec: gamma3/m/k are third-order parameters only");
        } else {
            if (!gamma3 || !(*gamma3 > 0.0))
                throw std::invalid_argument("TheoremSpec: order 3 needs gamma3 > 0");
            if (!m || !k || !(*m >= 2.0) || !(*k >= *m))
                throw std::invalid_argument("TheoremSpec: order 3 needs k >= m >= 2");
        }
    }

    // m^2 + 3m(k-1): weight of gamma3 inside the sufficient conditions.
    double order3_coefficient() const {
        if (order == 2) return 0.0;
        return (*m) * (*m) + 3.0 * (*m) * (*k - 1.0);
    }
};

// Radius of the smallest disk about 1 containing the region, in closed form.
// Cross-checked against min_enclosing_radius in the tests.
inline double target_disk_radius(RegionKind h) {
    switch (h) {
        case RegionKind::Exp: return std::exp(1.0) - 1.0;
        case RegionKind::Sine: return std::sinh(1.0);
        case RegionKind::Cardioid: return std::exp(1.0);
        case RegionKind::Crescent: return std::numbers::sqrt2;
        case RegionKind::ArcSinh: return std::numbers::pi / 2.0;
    }
    throw std::invalid_argument("target_disk_radius: bad RegionKind");
}

// Outcome of the two alternative parameter conditions. Margins are the
// condition left side minus its right side (the arcsinh rows carry their
// factor 2 inside the left side), so a condition holds iff its margin >= 0.
struct CaseReport {
    bool case1_holds = false;
    double case1_margin = 0.0;
    double case1_rhs = 0.0;
    bool case2_holds = false;
    double case2_margin = 0.0;
    double case2_rhs = 0.0;
    double radius = 0.0; // enclosing radius of the target about 1
    bool any_holds = false;
    std::optional<std::string> note;
};

inline CaseReport check_condition(const TheoremSpec& spec) {
    spec.validate();
    const double e = std::exp(1.0);
    const double t3 = spec.order == 3 ? *spec.gamma3 * spec.order3_coefficient() : 0.0;
    const double base1 = spec.gamma1 - spec.gamma2 - t3 - e * (e + 1.0);
    const double base2 = 1.0 - e * (1.0 + spec.gamma1 + spec.gamma2 + t3);

    double lhs1 = base1, lhs2 = base2, rhs1 = 0.0, rhs2 = 0.0;
    CaseReport out;
    switch (spec.h) {
        case RegionKind::Sine:
            rhs1 = e * std::sinh(1.0);
            // At third order the alternative condition's threshold is
            // e*sinh(1), stricter than the second-order threshold sinh(1).
            rhs2 = spec.order == 3 ? e * std::sinh(1.0) : std::sinh(1.0);
            if (spec.order == 3)
                out.note = "third-order sine alternative uses threshold e*sinh(1)";
            break;
        case RegionKind::Cardioid:
            rhs1 = e * e;
            rhs2 = e;
            break;
        case RegionKind::Crescent:
            rhs1 = std::numbers::sqrt2 * e;
            rhs2 = std::numbers::sqrt2;
            break;
        case RegionKind::ArcSinh:
            lhs1 = 2.0 * base1;
            lhs2 = 2.0 * base2;
            rhs1 = std::numbers::pi * e;
            rhs2 = std::numbers::pi;
            break;
        default:
            throw std::invalid_argument("check_condition: bad target region");
    }
    out.case1_margin = lhs1 - rhs1;
    out.case2_margin = lhs2 - rhs2;
    out.case1_rhs = rhs1;
    out.case2_rhs = rhs2;
    out.case1_holds = out.case1_margin >= 0.0;
    out.case2_holds = out.case2_margin >= 0.0;
    out.any_holds = out.case1_holds || out.case2_holds;
    out.radius = target_disk_radius(spec.h);
    return out;
}

// Smallest gamma1 for which the first condition holds, at fixed gamma2 and
// fixed third-order weight t3 = gamma3 * (m^2 + 3m(k-1)). The condition is
// affine in gamma1, so the frontier is exact.
inline double case1_frontier_gamma1(RegionKind h, double gamma2, double t3 = 0.0) {
    const double e = std::exp(1.0);
    const double scale = (h == RegionKind::ArcSinh) ? 2.0 : 1.0;
    double rhs1 = 0.0;
    switch (h) {
        case RegionKind::Sine: rhs1 = e * std::sinh(1.0); break;
        case RegionKind::Cardioid: rhs1 = e * e; break;
        case RegionKind::Crescent: rhs1 = std::numbers::sqrt2 * e; break;
        case RegionKind::ArcSinh: rhs1 = std::numbers::pi * e; break;
        default: throw std::invalid_argument("case1_frontier_gamma1: bad target region");
    }
    return gamma2 + t3 + e * (e + 1.0) + rhs1 / scale;
}

// Feasibility of the alternative condition ("case 2"). Its left side
// 1 - e(1 + gamma1 + gamma2 + t3), or twice that for arcsinh, increases as
// every parameter shrinks, so the supremum over positive parameters is the
// value at gamma -> 0+: 1 - e (resp. 2(1 - e)). All targets require a
// positive right side, so the condition is unsatisfiable for positive gammas.
struct FeasibilityVerdict {
    int order = 2;
    RegionKind h = RegionKind::Sine;
    bool feasible = false;
    double sup_lhs = 0.0; // supremum of the left side over positive parameters
    double rhs = 0.0;     // required lower bound
    std::string analysis;
    std::optional<TheoremSpec> witness;
};

inline FeasibilityVerdict case2_feasibility(int order, RegionKind h) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("case2_feasibility: order must be 2 or 3");
    if (h == RegionKind::Exp)
        throw std::invalid_argument("case2_feasibility: target region must be one of "
                                    "sine|cardioid|crescent|arcsinh");
    const double e = std::exp(1.0);
    const double scale = (h == RegionKind::ArcSinh) ? 2.0 : 1.0;
    FeasibilityVerdict out;
    out.order = order;
    out.h = h;
    out.sup_lhs = scale * (1.0 - e);
    switch (h) {
        case RegionKind::Sine: out.rhs = order == 3 ? e * std::sinh(1.0) : std::sinh(1.0); break;
        case RegionKind::Cardioid: out.rhs = e; break;
        case RegionKind::Crescent: out.rhs = std::numbers::sqrt2; break;
        case RegionKind::ArcSinh: out.rhs = std::numbers::pi; break;
        default: break;
    }
    out.feasible = out.sup_lhs > out.rhs;
    out.analysis =
        "left side is decreasing in every parameter; its supremum over positive "
        "parameters is the limit as they tend to 0, which falls short of the "
        "required bound, so no positive parameters satisfy the alternative condition";
    return out;
}

// Boolean field of both conditions over a gamma1 x gamma2 grid, with the exact
// case-1 frontier per row. mask layout: row = gamma2 index, column = gamma1
// index, entry = bit0 case1 | bit1 case2.
struct RegionGrid {
    int order = 2;
    RegionKind h = RegionKind::Sine;
    double t3 = 0.0;
    std::vector<double> gamma1s;
    std::vector<double> gamma2s;
    std::vector<std::uint8_t> mask; // gamma2-major, size gamma1s.size()*gamma2s.size()
    std::vector<double> frontier_gamma1; // per gamma2 row
};

inline RegionGrid explore_region(int order, RegionKind h, double g1_min, double g1_max, int n1,
                                 double g2_min, double g2_max, int n2, double gamma3 = 0.0,
                                 double m = 2.0, double k = 2.0) {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("explore_region: need at least 2 samples per axis");
    if (!(g1_min > 0.0) || !(g2_min > 0.0) || !(g1_max > g1_min) || !(g2_max > g2_min))
        throw std::invalid_argument("explore_region: gamma ranges must be positive and ordered");
    if (order == 3 && !(gamma3 > 0.0))
        throw std::invalid_argument("explore_region: order 3 needs gamma3 > 0");

    RegionGrid out;
    out.order = order;
    out.h = h;
    out.t3 = order == 3 ? gamma3 * (m * m + 3.0 * m * (k - 1.0)) : 0.0;
    out.gamma1s.resize(static_cast<std::size_t>(n1));
    out.gamma2s.resize(static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i)
        out.gamma1s[static_cast<std::size_t>(i)] = g1_min + (g1_max - g1_min) * i / (n1 - 1);
    for (int j = 0; j < n2; ++j)
        out.gamma2s[static_cast<std::size_t>(j)] = g2_min + (g2_max - g2_min) * j / (n2 - 1);

    out.mask.resize(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    out.frontier_gamma1.resize(static_cast<std::size_t>(n2));
    for (int j = 0; j < n2; ++j) {
        const double g2 = out.gamma2s[static_cast<std::size_t>(j)];
        out.frontier_gamma1[static_cast<std::size_t>(j)] = case1_frontier_gamma1(h, g2, out.t3);
        for (int i = 0; i < n1; ++i) {
            TheoremSpec spec;
            spec.order = order;
            spec.h = h;
            spec.gamma1 = out.gamma1s[static_cast<std::size_t>(i)];
            spec.gamma2 = g2;
            if (order == 3) {
                spec.gamma3 = gamma3;
                spec.m = m;
                spec.k = k;
            }
            const CaseReport rep = check_condition(spec);
            std::uint8_t bits = 0;
            if (rep.case1_holds) bits |= 1;
            if (rep.case2_holds) bits |= 2;
            out.mask[static_cast<std::size_t>(j) * static_cast<std::size_t>(n1) +
                     static_cast<std::size_t>(i)] = bits;
        }
    }
    return out;
}

} // namespace subord
