#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subord/series.hpp"

namespace subord {

// Image regions h(D) of the unit disk D under the five univalent maps used as
// subordination targets. All are centered at h(0) = 1.
enum class RegionKind { Exp, Sine, Cardioid, Crescent, ArcSinh };

inline const char* to_string(RegionKind k) {
    switch (k) {
        case RegionKind::Exp: return "exp";
        case RegionKind::Sine: return "sine";
        case RegionKind::Cardioid: return "cardioid";
        case RegionKind::Crescent: return "crescent";
        case RegionKind::ArcSinh: return "arcsinh";
    }
    throw std::invalid_argument("to_string: bad RegionKind");
}

inline RegionKind parse_region(const std::string& name) {
    if (name == "exp") return RegionKind::Exp;
    if (name == "sine") return RegionKind::Sine;
    if (name == "cardioid") return RegionKind::Cardioid;
    if (name == "crescent") return RegionKind::Crescent;
    if (name == "arcsinh") return RegionKind::ArcSinh;
    throw std::invalid_argument("unknown region '" + name +
                                "' (expected exp|sine|cardioid|crescent|arcsinh)");
}

inline const std::array<RegionKind, 5> kAllRegions = {
    RegionKind::Exp, RegionKind::Sine, RegionKind::Cardioid, RegionKind::Crescent,
    RegionKind::ArcSinh};

// Targets appearing on the right-hand side of the subordination conditions
// (every region except Exp, which is the conclusion's target).
inline const std::array<RegionKind, 4> kTargetRegions = {
    RegionKind::Sine, RegionKind::Cardioid, RegionKind::Crescent, RegionKind::ArcSinh};

// The defining conformal map of each region, usable in double or long double.
// Crescent is z + sqrt(1+z^2); principal square root is continuous on the
// closed disk since Re(1+z^2) >= 0 there.
template <class T>
std::complex<T> region_map_t(RegionKind k, std::complex<T> z) {
    const std::complex<T> one{T(1), T(0)};
    switch (k) {
        case RegionKind::Exp: return std::exp(z);
        case RegionKind::Sine: return one + std::sin(z);
        case RegionKind::Cardioid: return one + z * std::exp(z);
        case RegionKind::Crescent: return z + std::sqrt(one + z * z);
        case RegionKind::ArcSinh: return one + std::asinh(z);
    }
    throw std::invalid_argument("region_map: bad RegionKind");
}

inline Complex region_map(RegionKind k, Complex z) { return region_map_t<double>(k, z); }

inline Complex boundary_point(RegionKind k, double theta) {
    return region_map(k, std::polar(1.0, theta));
}

enum class Verdict { Inside, Outside, Boundary };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Inside: return "inside";
        case Verdict::Outside: return "outside";
        case Verdict::Boundary: return "boundary";
    }
    throw std::invalid_argument("to_string: bad Verdict");
}

// margin > 0 inside, < 0 outside; its scale is predicate slack, not exact
// Euclidean distance (winding-based results use curve distance).
struct MembershipResult {
    Verdict verdict;
    double margin;
};

inline constexpr double kBoundaryTol = 1e-8;

struct BoundaryCurve {
    RegionKind region;
    std::vector<double> thetas;
    std::vector<Complex> points; // region_map(e^{i theta}), closed curve
};

inline BoundaryCurve boundary_curve(RegionKind k, int n) {
    if (n < 64) throw std::invalid_argument("boundary_curve: need at least 64 samples");
    BoundaryCurve out;
    out.region = k;
    out.thetas.resize(static_cast<std::size_t>(n));
    out.points.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
        out.thetas[static_cast<std::size_t>(i)] = th;
        out.points[static_cast<std::size_t>(i)] = boundary_point(k, th);
    }
    return out;
}

namespace detail {

inline const BoundaryCurve& cached_curve(RegionKind k, int n = 4096) {
    static std::mutex mu;
    static std::array<std::optional<BoundaryCurve>, 5> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(k)];
    if (!slot || static_cast<int>(slot->points.size()) != n) slot = boundary_curve(k, n);
    return *slot;
}

// Distance from w to the boundary curve: coarse pass over the cached polyline,
// then a golden-section polish of |h(e^{i t}) - w| around the best vertex.
inline double curve_distance(RegionKind k, Complex w) {
    const BoundaryCurve& c = cached_curve(k);
    const std::size_t n = c.points.size();
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(c.points[i] - w);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    double lo = c.thetas[best] - step;
    double hi = c.thetas[best] + step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = std::abs(boundary_point(k, x1) - w);
    double f2 = std::abs(boundary_point(k, x2) - w);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = std::abs(boundary_point(k, x1) - w);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = std::abs(boundary_point(k, x2) - w);
        }
    }
    return std::min({best_d, f1, f2});
}

} // namespace detail

// Generic point-in-region test by winding number of the boundary curve about w.
// Segments subtending more than 0.1 rad at w are bisected recursively; if
// bisection descends below an angular step of 1e-12 the point is declared on
// the curve. Margin is signed distance to the curve.
inline MembershipResult winding_membership(RegionKind k, Complex w, double tol = kBoundaryTol,
                                           int initial_samples = 4096) {
    const double dist = detail::curve_distance(k, w);
    if (dist < tol) return {Verdict::Boundary, 0.0};

    const BoundaryCurve& c = detail::cached_curve(k, initial_samples);
    const std::size_t n = c.points.size();
    bool touched = false;
    auto subtend = [&](auto&& self, double ta, double tb, Complex wa, Complex wb) -> double {
        const Complex da = wa - w, db = wb - w;
        const double ang =
            std::atan2(da.real() * db.imag() - da.imag() * db.real(),
                       da.real() * db.real() + da.imag() * db.imag());
        if (std::abs(ang) <= 0.1) return ang;
        if (tb - ta < 1e-12) {
            touched = true;
            return 0.0;
        }
        const double tm = 0.5 * (ta + tb);
        const Complex wm = boundary_point(k, tm);
        return self(self, ta, tm, wa, wm) + self(self, tm, tb, wm, wb);
    };

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double ta = c.thetas[i];
        const double tb = (j == 0) ? 2.0 * std::numbers::pi : c.thetas[j];
        total += subtend(subtend, ta, tb, c.points[i], c.points[j]);
        if (touched) return {Verdict::Boundary, 0.0};
    }
    const long winding = std::lround(total / (2.0 * std::numbers::pi));
    if (winding != 0) return {Verdict::Inside, dist};
    return {Verdict::Outside, -dist};
}

namespace detail {

// Radius of the cardioid boundary in direction psi from the center 1. The
// boundary point 1 + e^{i t} e^{e^{i t}} has direction angle t + sin t, which
// increases strictly in t, so the curve is star-shaped about 1 and the radial
// equation t + sin t = psi has a unique root; the radius is then e^{cos t}.
inline double cardioid_radial_boundary(double psi) {
    const double target = std::abs(psi);
    double lo = 0.0, hi = std::numbers::pi;
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid + std::sin(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return std::exp(std::cos(0.5 * (lo + hi)));
}

} // namespace detail

// Fast cardioid test that exploits the star shape about the center: compare
// |w - 1| against the boundary radius along arg(w - 1). The margin is radial
// slack, which bounds Euclidean distance from above.
inline MembershipResult cardioid_radial_membership(Complex w, double tol = kBoundaryTol) {
    const Complex v = w - 1.0;
    const double rho = std::abs(v);
    if (rho == 0.0) return {Verdict::Inside, std::exp(-1.0)};
    const double radius = detail::cardioid_radial_boundary(std::atan2(v.imag(), v.real()));
    const double margin = radius - rho;
    if (margin > tol) return {Verdict::Inside, margin};
    if (margin < -tol) return {Verdict::Outside, margin};
    return {Verdict::Boundary, margin};
}

// Newton inversion of the cardioid map: solves z e^z = w - 1 from the seed
// z0 = w - 1. Returns the root when the iteration converges, else nullopt.
// Secondary oracle only; membership decisions use the winding test.
inline std::optional<Complex> cardioid_inverse(Complex w) {
    const Complex v = w - 1.0;
    if (std::abs(v) == 0.0) return Complex{0.0, 0.0};
    Complex z = v;
    for (int it = 0; it < 64; ++it) {
        const Complex ez = std::exp(z);
        const Complex f = z * ez - v;
        const Complex df = (1.0 + z) * ez;
        if (std::abs(df) < 1e-300) return std::nullopt;
        const Complex step = f / df;
        z -= step;
        if (std::abs(z) > 20.0) return std::nullopt;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(z * std::exp(z) - v) > 1e-10 * std::max(1.0, std::abs(v))) return std::nullopt;
    return z;
}

// Closed-form membership tests.
//
//   Exp:      |Log w| < 1 (principal log; w = 0 and the far negative axis are
//             outside since |Im Log| = pi > 1 there).
//   Sine:     |asin(w-1)| < 1; |asin| is continuous across the cuts.
//   Crescent: |w^2-1| < 2|w| factors as (|w-1|^2-2)(|w+1|^2-2) < 0, the union
//             of two lens components; the image of the disk is the one in the
//             right half plane, so Re w > 0 is part of the test.
//   ArcSinh:  |sinh(w-1)| < 1 restricted to the horizontal strip
//             |Im(w-1)| < pi/2 (the inequality alone also admits translates
//             by i pi k); the strip edge only meets the closure at its two
//             corner points, so the extra constraint is never the active
//             margin in the interior.
//   Cardioid: no closed form; decided by the winding test.
inline MembershipResult membership(RegionKind k, Complex w, double tol = kBoundaryTol) {
    double margin = 0.0;
    switch (k) {
        case RegionKind::Exp: {
            if (w == Complex{0.0, 0.0})
                return {Verdict::Outside, std::numeric_limits<double>::lowest()};
            margin = 1.0 - std::abs(std::log(w));
            break;
        }
        case RegionKind::Sine: {
            margin = 1.0 - std::abs(std::asin(w - 1.0));
            break;
        }
        case RegionKind::Crescent: {
            const Complex w2 = w * w;
            const double pred = 2.0 * std::abs(w) - std::abs(w2 - 1.0);
            margin = (w.real() > 0.0) ? pred : std::min(pred, w.real());
            break;
        }
        case RegionKind::ArcSinh: {
            const Complex v = w - 1.0;
            margin = std::min(1.0 - std::abs(std::sinh(v)),
                              std::numbers::pi / 2.0 - std::abs(v.imag()));
            break;
        }
        case RegionKind::Cardioid:
            return winding_membership(k, w, tol);
    }
    if (margin > tol) return {Verdict::Inside, margin};
    if (margin < -tol) return {Verdict::Outside, margin};
    return {Verdict::Boundary, margin};
}

struct EnclosingDisk {
    double radius;             // max over theta of |h(e^{i theta}) - 1|
    double theta_at_max;       // a maximizing angle
    long double theta_refined; // same angle at full refinement precision: the
                               // radius is the boundary evaluation exactly
                               // there (double rounding of the angle costs
                               // ~1e-8 at the arcsinh branch-point cusp)
};

namespace detail {

// Extremal distance from the center 1 to the boundary curve. Computed in long
// double: the arcsinh curve has a branch-point cusp at its farthest point
// (|h-1| behaves like pi/2 - c*sqrt(|dtheta|)), where double-precision
// evaluation plateaus near 1e-8 — too coarse for the 1e-9 contract.
inline std::pair<long double, long double> extremal_center_distance(RegionKind k, bool maximal) {
    using CL = std::complex<long double>;
    const long double pi = std::numbers::pi_v<long double>;
    const CL one{1.0L, 0.0L};
    auto f = [&](long double th) -> long double {
        const CL z{std::cos(th), std::sin(th)};
        return std::abs(region_map_t<long double>(k, z) - one);
    };
    const int n = 4096;
    long double best_th = 0.0L;
    long double best = maximal ? -1.0L : std::numeric_limits<long double>::max();
    for (int i = 0; i < n; ++i) {
        const long double th = 2.0L * pi * i / n;
        const long double v = f(th);
        if (maximal ? (v > best) : (v < best)) {
            best = v;
            best_th = th;
        }
    }
    // Golden section down to machine resolution, keeping the best evaluation
    // ever seen. The arcsinh maximum sits at a branch-point cusp where the
    // value behaves like pi/2 - c*sqrt(|dtheta|), so stopping at a bracket of
    // width 1e-15 could still be ~1e-8 off; only evaluations at the closest
    // representable angles reach the 1e-9 contract.
    const long double step = 2.0L * pi / n;
    long double lo = best_th - step, hi = best_th + step;
    const long double gr = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    const long double sign = maximal ? -1.0L : 1.0L; // golden section minimizes
    auto consider = [&](long double th, long double value) {
        if (maximal ? (value > best) : (value < best)) {
            best = value;
            best_th = th;
        }
    };
    long double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    long double f1 = sign * f(x1), f2 = sign * f(x2);
    consider(x1, sign * f1);
    consider(x2, sign * f2);
    for (int it = 0; it < 240 && hi - lo > 1e-19L; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            if (x1 <= lo || x1 >= x2) break; // bracket exhausted representables
            f1 = sign * f(x1);
            consider(x1, sign * f1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            if (x2 >= hi || x2 <= x1) break;
            f2 = sign * f(x2);
            consider(x2, sign * f2);
        }
    }
    return {best, best_th};
}

} // namespace detail

// Smallest disk about the center 1 containing the region (max of |h-1| on the
// boundary). theta_at_max is one maximizer; on the crescent the maximum is
// attained along a whole arc.
inline EnclosingDisk min_enclosing_disk(RegionKind k) {
    static std::mutex mu;
    static std::array<std::optional<EnclosingDisk>, 5> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(k)];
    if (!slot) {
        const auto [val, th] = detail::extremal_center_distance(k, true);
        slot = EnclosingDisk{static_cast<double>(val), static_cast<double>(th), th};
    }
    return *slot;
}

inline double min_enclosing_radius(RegionKind k) { return min_enclosing_disk(k).radius; }

// Largest disk about 1 inside the region (min of |h-1| on the boundary).
inline double inscribed_radius(RegionKind k) {
    static std::mutex mu;
    static std::array<std::optional<double>, 5> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(k)];
    if (!slot) slot = static_cast<double>(detail::extremal_center_distance(k, false).first);
    return *slot;
}

} // namespace subord
