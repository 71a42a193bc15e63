#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subord/admissibility.hpp"
#include "subord/parallel.hpp"
#include "subord/regions.hpp"
#include "subord/series.hpp"
#include "subord/theorems.hpp"

namespace subord {

// Polar sampling grid for the open unit disk, truncated at r_max. tol is the
// decision band: verdicts only fire when a margin clears +-tol.
struct DiskGrid {
    double r_max = 0.999;
    int n_radial = 256;
    int n_angular = 512;
    double tol = 1e-4;

    void validate() const {
        if (!(r_max > 0.0) || !(r_max < 1.0))
            throw std::invalid_argument("DiskGrid: r_max must lie in (0,1)");
        if (n_radial < 8 || n_angular < 8)
            throw std::invalid_argument("DiskGrid: need at least 8 samples per axis");
        if (!(tol > 0.0)) throw std::invalid_argument("DiskGrid: tol must be positive");
    }
};

enum class SubVerdict { Yes, No, Inconclusive };

inline const char* to_string(SubVerdict v) {
    switch (v) {
        case SubVerdict::Yes: return "yes";
        case SubVerdict::No: return "no";
        case SubVerdict::Inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("to_string: bad SubVerdict");
}

// margin semantics: 1 - max|log p| for the exponential target, otherwise the
// smallest membership margin seen on the grid (a certified lower bound where
// the scan used a shortcut). witness is a grid point z backing a No verdict.
struct SubordinationResult {
    SubVerdict verdict = SubVerdict::Inconclusive;
    double margin = 0.0;
    std::optional<Complex> witness;
};

// Does p map the disk into Delta_e = {w : |Log w| < 1}, i.e. p(z) = e^{g(z)}
// with |g| < 1? Scans ray by ray so a branch jump of the principal log or a
// zero of p is caught and immediately refutes.
inline SubordinationResult subordinate_to_exp(const AnalyticSeries& p, const DiskGrid& grid = {}) {
    grid.validate();
    if (std::abs(p.coeff(0) - Complex{1.0, 0.0}) > 1e-12)
        throw std::invalid_argument("subordinate_to_exp: requires p(0) = 1");

    double max_abs = 0.0;
    Complex at_max{0.0, 0.0};
    for (int j = 0; j < grid.n_angular; ++j) {
        const Complex dir = std::polar(1.0, 2.0 * std::numbers::pi * j / grid.n_angular);
        double prev_im = 0.0; // Im log p(0) = 0 anchors each ray
        for (int i = 1; i <= grid.n_radial; ++i) {
            const Complex z = (grid.r_max * i / grid.n_radial) * dir;
            const Complex pw = eval(p, z);
            if (std::abs(pw) < 1e-300)
                return {SubVerdict::No, std::numeric_limits<double>::lowest(), z};
            const Complex lg = std::log(pw);
            const double a = std::abs(lg);
            if (a > max_abs) {
                max_abs = a;
                at_max = z;
            }
            if (std::abs(lg.imag() - prev_im) > std::numbers::pi)
                return {SubVerdict::No, 1.0 - a, z}; // branch wrapped: log left the disk
            prev_im = lg.imag();
        }
    }
    const double margin = 1.0 - max_abs;
    if (margin >= grid.tol) return {SubVerdict::Yes, margin, std::nullopt};
    if (margin <= -grid.tol) return {SubVerdict::No, margin, at_max};
    return {SubVerdict::Inconclusive, margin, std::nullopt};
}

namespace detail {

// Per-region shortcut radii: samples with |w-1| below `inside` certainly clear
// the +tol margin, above `outside` certainly clear -tol. In between the exact
// membership margin is computed. Bounds used: |asin v| <= asin|v| and
// |asin v| >= asinh|v|; |sinh v| <= sinh|v|; |log(1+v)| <= -log(1-|v|);
// cardioid boundary radii lie in [1/e, e]; the crescent predicate is cheap
// enough to skip shortcuts.
struct FastBand {
    double inside;
    double outside;
};

inline FastBand fast_band(RegionKind h, double tol) {
    switch (h) {
        case RegionKind::Sine: return {std::sin(1.0 - tol), std::sinh(1.0 + tol)};
        case RegionKind::Cardioid: return {std::exp(-1.0) - tol, std::exp(1.0) + tol};
        case RegionKind::ArcSinh:
            return {std::asinh(1.0 - tol), std::numeric_limits<double>::infinity()};
        case RegionKind::Exp:
            return {1.0 - std::exp(-(1.0 - tol)), std::numeric_limits<double>::infinity()};
        case RegionKind::Crescent: return {0.0, std::numeric_limits<double>::infinity()};
    }
    throw std::invalid_argument("fast_band: bad RegionKind");
}

// Membership margin with the shortcut bands. Quick-path values are one-sided
// bounds on the true margin, tight enough for +-tol classification.
inline double fast_margin(RegionKind h, Complex w, const FastBand& band) {
    const Complex v = w - 1.0;
    const double rho = std::abs(v);
    switch (h) {
        case RegionKind::Sine:
            if (rho <= band.inside) return 1.0 - std::asin(std::min(rho, 1.0));
            if (rho >= band.outside) return 1.0 - std::asinh(rho);
            return 1.0 - std::abs(std::asin(v));
        case RegionKind::Cardioid:
            if (rho <= band.inside) return std::exp(-1.0) - rho;
            if (rho >= band.outside) return std::exp(1.0) - rho;
            return detail::cardioid_radial_boundary(std::atan2(v.imag(), v.real())) - rho;
        case RegionKind::ArcSinh:
            if (rho <= band.inside)
                return std::min(1.0 - std::sinh(rho), std::numbers::pi / 2.0 - rho);
            return std::min(1.0 - std::abs(std::sinh(v)),
                            std::numbers::pi / 2.0 - std::abs(v.imag()));
        case RegionKind::Exp: {
            if (rho <= band.inside) return 1.0 + std::log1p(-rho);
            if (w == Complex{0.0, 0.0}) return std::numeric_limits<double>::lowest();
            return 1.0 - std::abs(std::log(w));
        }
        case RegionKind::Crescent: {
            const double pred = 2.0 * std::abs(w) - std::abs(w * w - 1.0);
            return (w.real() > 0.0) ? pred : std::min(pred, w.real());
        }
    }
    throw std::invalid_argument("fast_margin: bad RegionKind");
}

struct SampleTable {
    std::vector<Complex> zs; // angular-major, radius ascending within a ray
};

inline SampleTable make_sample_table(const DiskGrid& grid) {
    SampleTable t;
    t.zs.reserve(static_cast<std::size_t>(grid.n_angular) * grid.n_radial);
    for (int j = 0; j < grid.n_angular; ++j) {
        const Complex dir = std::polar(1.0, 2.0 * std::numbers::pi * j / grid.n_angular);
        for (int i = 1; i <= grid.n_radial; ++i)
            t.zs.push_back((grid.r_max * i / grid.n_radial) * dir);
    }
    return t;
}

// Evaluates f - f(0) on the table (Horner) and returns max |value|.
inline double eval_offsets(const AnalyticSeries& f, const SampleTable& t,
                           std::vector<Complex>& out) {
    const auto& c = f.coeffs();
    out.resize(t.zs.size());
    double max_abs = 0.0;
    for (std::size_t idx = 0; idx < t.zs.size(); ++idx) {
        const Complex z = t.zs[idx];
        Complex acc{0.0, 0.0};
        for (std::size_t n = c.size(); n-- > 1;) acc = (acc + c[n]) * z;
        out[idx] = acc;
        max_abs = std::max(max_abs, std::abs(acc));
    }
    return max_abs;
}

// Classifies w = 1 + scale * offsets[idx] against the region for every sample.
inline SubordinationResult scan_region_offsets(const SampleTable& t,
                                               const std::vector<Complex>& offsets, double scale,
                                               RegionKind h, double tol) {
    const FastBand band = fast_band(h, tol);
    bool border = false;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < offsets.size(); ++idx) {
        const double margin = fast_margin(h, Complex{1.0, 0.0} + scale * offsets[idx], band);
        if (margin <= -tol) return {SubVerdict::No, margin, t.zs[idx]};
        min_margin = std::min(min_margin, margin);
        if (margin < tol) border = true;
    }
    return {border ? SubVerdict::Inconclusive : SubVerdict::Yes, min_margin, std::nullopt};
}

} // namespace detail

// Does L map the disk into the region h(D)? L(0) must equal the center 1.
inline SubordinationResult subordinate_to_region(const AnalyticSeries& L, RegionKind h,
                                                 const DiskGrid& grid = {}) {
    grid.validate();
    if (std::abs(L.coeff(0) - Complex{1.0, 0.0}) > 1e-12)
        throw std::invalid_argument("subordinate_to_region: requires L(0) = 1");
    const detail::SampleTable table = detail::make_sample_table(grid);
    std::vector<Complex> offsets;
    detail::eval_offsets(L, table, offsets);
    return detail::scan_region_offsets(table, offsets, 1.0, h, grid.tol);
}

// Extra third-order hypothesis: |z p'(z)| may not exceed m times the smallest
// boundary derivative modulus of the exponential target, which is 1/e, so the
// reported ratio is e * max|z p'(z)| and the check passes when it is <= m.
struct DerivativeBound {
    double max_ratio = 0.0;
    bool pass = false;
};

inline DerivativeBound zp_derivative_bound(const AnalyticSeries& p, double m,
                                           const DiskGrid& grid = {}) {
    grid.validate();
    if (!(m > 0.0)) throw std::invalid_argument("zp_derivative_bound: m must be positive");
    DerivativeBound out;
    if (p.degree() == 0) {
        out.max_ratio = 0.0;
        out.pass = true;
        return out;
    }
    const AnalyticSeries zp = z_deriv_op(p, 1);
    const detail::SampleTable table = detail::make_sample_table(grid);
    double max_abs = 0.0;
    for (const Complex& z : table.zs) max_abs = std::max(max_abs, std::abs(eval(zp, z)));
    out.max_ratio = std::exp(1.0) * max_abs;
    out.pass = out.max_ratio <= m * (1.0 + 1e-12);
    return out;
}

// Random test-function generator: a0 = 1 and a_j = rho^j * (standard complex
// gaussian) up to `degree`; the tail is halved until the antecedent holds.
struct GeneratorConfig {
    double rho = 0.5;
    int degree = 8;
    int max_halvings = 20;

    void validate() const {
        if (!(rho > 0.0) || !(rho < 1.0))
            throw std::invalid_argument("GeneratorConfig: rho must lie in (0,1)");
        if (degree < 1) throw std::invalid_argument("GeneratorConfig: degree must be >= 1");
        if (max_halvings < 0)
            throw std::invalid_argument("GeneratorConfig: max_halvings must be >= 0");
    }
};

struct ExperimentReport {
    long trials = 0;
    long antecedent_hits = 0;
    long implication_violations = 0;
    long precondition_rejections = 0;
    long inconclusive_consequents = 0;
    std::uint64_t rng_seed = 0;
    bool generator_inadequate = false; // no antecedent hit over all trials
    std::vector<long> counterexample_trials;
    std::vector<AnalyticSeries> counterexamples;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

// Standard complex gaussian (E|g|^2 = 1) via Box-Muller.
inline Complex complex_gaussian(std::uint64_t& state) {
    double u1 = uniform01(state);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01(state);
    const double r = std::sqrt(-std::log(u1));
    return std::polar(r, 2.0 * std::numbers::pi * u2);
}

inline AnalyticSeries random_probe(std::uint64_t seed, long trial, const GeneratorConfig& gen) {
    // Each trial draws from its own stream, so trial order and thread count
    // cannot change the sampled functions.
    std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial + 1));
    splitmix64(state);
    std::vector<Complex> coeffs(static_cast<std::size_t>(gen.degree) + 1);
    coeffs[0] = Complex{1.0, 0.0};
    double scale = gen.rho;
    for (int j = 1; j <= gen.degree; ++j, scale *= gen.rho)
        coeffs[static_cast<std::size_t>(j)] = scale * complex_gaussian(state);
    return AnalyticSeries(std::move(coeffs));
}

} // namespace detail

namespace detail {

struct TrialOutcome {
    bool hit = false;
    bool violation = false;
    bool rejection = false;
    bool inconclusive = false;
    std::optional<AnalyticSeries> counterexample;
};

} // namespace detail

// Randomized check of "antecedent implies consequent": generate p, halve its
// tail until L(p) sits in the target region (the antecedent), then test
// whether p sits under the exponential target (the consequent). With a valid
// sufficient condition no violations should appear. Requires the condition to
// hold unless `probe_unsupported` opts into falsification runs.
//
// Each trial draws from its own RNG stream and writes to its own result slot,
// so reports are identical for any worker count (threads = 0 picks the
// default from worker_count()).
inline ExperimentReport implication_experiment(const TheoremSpec& spec, long trials,
                                               std::uint64_t seed,
                                               const GeneratorConfig& gen = {},
                                               const DiskGrid& grid = {},
                                               bool probe_unsupported = false,
                                               int threads = 0) {
    spec.validate();
    grid.validate();
    gen.validate();
    if (trials < 0) throw std::invalid_argument("implication_experiment: trials must be >= 0");
    if (spec.order == 3 && gen.degree < 3)
        throw std::invalid_argument(
            "implication_experiment: third-order specs need generator degree >= 3");
    if (!probe_unsupported && !check_condition(spec).any_holds)
        throw std::invalid_argument(
            "implication_experiment: the sufficient condition fails for these parameters; "
            "enable the falsification flag to probe it anyway");

    ExperimentReport report;
    report.trials = trials;
    report.rng_seed = seed;

    const detail::SampleTable table = detail::make_sample_table(grid);
    const double radius = target_disk_radius(spec.h);
    const detail::FastBand band = detail::fast_band(spec.h, grid.tol);
    const double e = std::exp(1.0);

    std::vector<detail::TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    const int workers = threads > 0 ? threads : worker_count();
    parallel_chunks(trials, workers, [&](long first, long last) {
        std::vector<Complex> offsets; // per-worker scratch
        for (long trial = first; trial < last; ++trial) {
            detail::TrialOutcome& out = outcomes[static_cast<std::size_t>(trial)];
            const AnalyticSeries p = detail::random_probe(seed, trial, gen);
            const AnalyticSeries L = lhs_operator(p, spec.gamma1, spec.gamma2, spec.gamma3);
            const double max_offset = detail::eval_offsets(L, table, offsets);

            double max_zp = 0.0;
            if (spec.order == 3) {
                const AnalyticSeries zp = z_deriv_op(p, 1);
                for (const Complex& z : table.zs)
                    max_zp = std::max(max_zp, std::abs(eval(zp, z)));
            }

            int level = -1;
            for (int lev = 0; lev <= gen.max_halvings; ++lev) {
                const double scale = std::ldexp(1.0, -lev);
                if (max_offset * scale > radius + 1e-12) continue; // some sample outside
                bool antecedent;
                if (max_offset * scale <= band.inside && band.inside > 0.0) {
                    antecedent = true; // every sample clears the margin band
                } else {
                    antecedent = detail::scan_region_offsets(table, offsets, scale, spec.h,
                                                             grid.tol)
                                     .verdict == SubVerdict::Yes;
                }
                if (!antecedent) continue;
                if (spec.order == 3 && e * max_zp * scale > *spec.m * (1.0 + 1e-12)) {
                    out.rejection = true;
                    continue; // deeper halvings shrink |zp'| until the bound holds
                }
                level = lev;
                break;
            }
            if (level < 0) continue;

            out.hit = true;
            const AnalyticSeries p_level =
                level == 0 ? p : p.scaled_tail(std::ldexp(1.0, -level));
            const SubordinationResult consequent = subordinate_to_exp(p_level, grid);
            if (consequent.verdict == SubVerdict::No) {
                out.violation = true;
                out.counterexample = p_level;
            } else if (consequent.verdict == SubVerdict::Inconclusive) {
                out.inconclusive = true;
            }
        }
    });

    for (long trial = 0; trial < trials; ++trial) {
        const detail::TrialOutcome& out = outcomes[static_cast<std::size_t>(trial)];
        if (out.hit) ++report.antecedent_hits;
        if (out.rejection) ++report.precondition_rejections;
        if (out.inconclusive) ++report.inconclusive_consequents;
        if (out.violation) {
            ++report.implication_violations;
            report.counterexample_trials.push_back(trial);
            report.counterexamples.push_back(*out.counterexample);
        }
    }
    report.generator_inadequate = trials > 0 && report.antecedent_hits == 0;
    return report;
}

} // namespace subord
