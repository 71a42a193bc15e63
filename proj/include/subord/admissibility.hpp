#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subord/theorems.hpp"

namespace subord {

// Boundary data of the exponential target at zeta = e^{i theta}:
// x = |e^zeta|, y = Re zeta, w = Re zeta^2.
inline double x_theta(double theta) { return std::exp(std::cos(theta)); }
inline double y_theta(double theta) { return std::cos(theta); }
inline double w_theta(double theta) { return std::cos(2.0 * theta); }

// One admissible boundary tuple (r, s, t[, u]):
//   r = e^zeta,  s = m zeta e^zeta,
//   t chosen with Re(1 + t/s) = m(1+y) + c_slack,
//   u (third order) with Re(u/s) = m^2 w + 3m(k-1) y + c3_slack.
// tau and tau3 are the free imaginary parts of t/s and u/s.
struct AdmissibleTuple {
    int order = 2;
    double theta = 0.0;
    double m = 1.0;
    std::optional<double> k;
    double c_slack = 0.0;
    double tau = 0.0;
    double c3_slack = 0.0;
    double tau3 = 0.0;
    Complex r, s, t;
    std::optional<Complex> u;
};

inline AdmissibleTuple sample_admissible(int order, double theta, double m, double c_slack,
                                         double tau, std::optional<double> k = std::nullopt,
                                         double c3_slack = 0.0, double tau3 = 0.0) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("sample_admissible: order must be 2 or 3");
    if (order == 2 && !(m >= 1.0))
        throw std::invalid_argument("sample_admissible: second order needs m >= 1");
    if (order == 3 && (!k || !(m >= 2.0) || !(*k >= m)))
        throw std::invalid_argument("sample_admissible: third order needs k >= m >= 2");
    if (c_slack < 0.0 || c3_slack < 0.0)
        throw std::invalid_argument("sample_admissible: slack must be nonnegative");

    AdmissibleTuple out;
    out.order = order;
    out.theta = theta;
    out.m = m;
    out.k = k;
    out.c_slack = c_slack;
    out.tau = tau;
    out.c3_slack = c3_slack;
    out.tau3 = tau3;

    const Complex zeta = std::polar(1.0, theta);
    out.r = std::exp(zeta);
    out.s = m * zeta * out.r;
    const double y = y_theta(theta);
    out.t = out.s * Complex{m * (1.0 + y) - 1.0 + c_slack, tau};
    if (order == 3) {
        const double b = m * m * w_theta(theta) + 3.0 * m * (*k - 1.0) * y_theta(theta);
        out.u = out.s * Complex{b + c3_slack, tau3};
    }
    return out;
}

// Operator value over a tuple: r + g1 s + g2 t (+ g3 u).
inline Complex xi_image(const TheoremSpec& spec, const AdmissibleTuple& tuple) {
    if (spec.order != tuple.order)
        throw std::invalid_argument("xi_image: spec and tuple order disagree");
    Complex xi = tuple.r + spec.gamma1 * tuple.s + spec.gamma2 * tuple.t;
    if (spec.order == 3) xi += *spec.gamma3 * *tuple.u;
    return xi;
}

// Search grid over the admissible tuple parameters.
struct GridSpec {
    int theta_samples = 720;
    std::vector<double> m_values;
    double tau_max = 50.0;
    int tau_samples = 1001;
    std::vector<double> slack_values = {0.0, 0.5, 5.0};
    double refine_tol = 1e-6;
    int max_refine_passes = 60;

    // Second order walks m over [1,4] step 0.25; third order over
    // [m_lo, m_lo+4] step 0.5 with m_lo >= 2 (the class floor).
    static GridSpec defaults(int order, double m_lo = 0.0) {
        GridSpec g;
        if (order == 2) {
            for (double m = 1.0; m <= 4.0 + 1e-12; m += 0.25) g.m_values.push_back(m);
        } else {
            const double lo = std::max(2.0, m_lo);
            for (double m = lo; m <= lo + 4.0 + 1e-12; m += 0.5) g.m_values.push_back(m);
        }
        return g;
    }
};

struct MinimizeResult {
    double min_distance = 0.0; // min over the scanned tuples of |xi - 1|
    double theta = 0.0;
    double m = 0.0;
    double c_slack = 0.0;
    double c3_slack = 0.0;
    double tau = 0.0; // reported on the diagonal tau3 = tau
    bool converged = false;
    long evaluations = 0;
};

namespace detail {

struct XiSlice {
    // At fixed (theta, m, c, c3), xi - 1 = base + i s v with v = g2 tau + g3 tau3.
    Complex base;
    Complex s;
    double eval2(double v) const { return std::norm(base + Complex{0.0, 1.0} * s * v); }
    double vertex() const {
        const Complex is{-s.imag(), s.real()};
        const double dot = base.real() * is.real() + base.imag() * is.imag();
        return -dot / std::norm(s);
    }
};

inline XiSlice xi_slice(const TheoremSpec& spec, double theta, double m, double c, double c3) {
    const Complex zeta = std::polar(1.0, theta);
    const Complex r = std::exp(zeta);
    const Complex s = m * zeta * r;
    const double y = std::cos(theta);
    const double g3 = spec.order == 3 ? *spec.gamma3 : 0.0;
    const double kk = spec.order == 3 ? *spec.k : 0.0;
    double real_part = spec.gamma1 + spec.gamma2 * (m * (1.0 + y) - 1.0 + c);
    if (spec.order == 3)
        real_part += g3 * (m * m * std::cos(2.0 * theta) + 3.0 * m * (kk - 1.0) * y + c3);
    return XiSlice{(r - 1.0) + s * real_part, s};
}

inline double golden_min(double lo, double hi, const auto& f, double tol = 1e-12) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

// Minimum of |xi - 1| over the admissible tuple grid, then a local polish.
//
// The tau dimensions collapse: xi - 1 depends on (tau, tau3) only through
// v = g2 tau + g3 tau3, and |base + i s v|^2 is a parabola in v. The scan
// therefore walks the configured tau grid along the diagonal tau3 = tau and only
// evaluates the two grid values bracketing the parabola vertex plus the two
// endpoints — the same minimum the dense tau sweep would find. The polish
// runs coordinate descent: exact vertex in v, exact clamped quadratic minima
// in the slacks, golden section in theta and m.
inline MinimizeResult min_xi_distance(const TheoremSpec& spec,
                                      std::optional<GridSpec> grid_opt = std::nullopt) {
    spec.validate();
    const GridSpec grid =
        grid_opt ? *grid_opt : GridSpec::defaults(spec.order, spec.m.value_or(0.0));
    if (grid.theta_samples < 8 || grid.m_values.empty() || grid.tau_samples < 2 ||
        grid.slack_values.empty())
        throw std::invalid_argument("min_xi_distance: degenerate grid");

    const double g3 = spec.order == 3 ? *spec.gamma3 : 0.0;
    const double gamma_sum = spec.gamma2 + g3; // v = gamma_sum * tau on the diagonal
    const double tau_step = 2.0 * grid.tau_max / (grid.tau_samples - 1);
    const std::vector<double> c3_values =
        spec.order == 3 ? grid.slack_values : std::vector<double>{0.0};

    // Third order tuples must keep m <= k, so the scan window is capped there.
    const double m_cap =
        spec.order == 3 ? *spec.k : std::numeric_limits<double>::infinity();
    std::vector<double> m_values;
    for (const double m : grid.m_values)
        if (m <= m_cap + 1e-12) m_values.push_back(std::min(m, m_cap));
    if (m_values.empty()) m_values.push_back(std::max(2.0, spec.m.value_or(2.0)));

    long evals = 0;
    double best2 = std::numeric_limits<double>::infinity();
    double b_theta = 0.0, b_m = 0.0, b_c = 0.0, b_c3 = 0.0, b_v = 0.0;

    for (int ti = 0; ti < grid.theta_samples; ++ti) {
        const double theta = 2.0 * std::numbers::pi * ti / grid.theta_samples;
        for (const double m : m_values) {
            for (const double c : grid.slack_values) {
                for (const double c3 : c3_values) {
                    const detail::XiSlice slice = detail::xi_slice(spec, theta, m, c, c3);
                    const double tau_vertex = slice.vertex() / gamma_sum;
                    const double idx = (tau_vertex + grid.tau_max) / tau_step;
                    const long i0 = static_cast<long>(std::floor(idx));
                    const long cand[4] = {0, grid.tau_samples - 1,
                                          std::clamp<long>(i0, 0, grid.tau_samples - 1),
                                          std::clamp<long>(i0 + 1, 0, grid.tau_samples - 1)};
                    for (const long ci : cand) {
                        const double tau = -grid.tau_max + ci * tau_step;
                        const double d2 = slice.eval2(gamma_sum * tau);
                        ++evals;
                        if (d2 < best2) {
                            best2 = d2;
                            b_theta = theta;
                            b_m = m;
                            b_c = c;
                            b_c3 = c3;
                            b_v = gamma_sum * tau;
                        }
                    }
                }
            }
        }
    }

    // Local polish around the grid argmin.
    const double theta_step = 2.0 * std::numbers::pi / grid.theta_samples;
    const double m_lo = m_values.front();
    const double m_step = m_values.size() > 1 ? m_values[1] - m_values[0] : 0.25;
    double th = b_theta, m = b_m, c = b_c, c3 = b_c3, v = b_v;
    double cur = std::sqrt(best2);
    bool converged = false;
    double last_delta = std::numeric_limits<double>::infinity();
    for (int pass = 0; pass < grid.max_refine_passes; ++pass) {
        {
            const detail::XiSlice s0 = detail::xi_slice(spec, th, m, c, c3);
            v = s0.vertex();
            ++evals;
        }
        {
            // Slack minimizers: |X + Y c|^2 over c >= 0 with Y = s*g2 (or s*g3).
            const detail::XiSlice s0 = detail::xi_slice(spec, th, m, 0.0, c3);
            const Complex X = s0.base + Complex{0.0, 1.0} * s0.s * v;
            const Complex Y = s0.s * spec.gamma2;
            c = std::max(0.0, -(X.real() * Y.real() + X.imag() * Y.imag()) / std::norm(Y));
            ++evals;
        }
        if (spec.order == 3) {
            const detail::XiSlice s0 = detail::xi_slice(spec, th, m, c, 0.0);
            const Complex X = s0.base + Complex{0.0, 1.0} * s0.s * v;
            const Complex Y = s0.s * g3;
            c3 = std::max(0.0, -(X.real() * Y.real() + X.imag() * Y.imag()) / std::norm(Y));
            ++evals;
        }
        th = detail::golden_min(th - theta_step, th + theta_step, [&](double t) {
            ++evals;
            return detail::xi_slice(spec, t, m, c, c3).eval2(v);
        });
        m = detail::golden_min(std::max(m_lo, m - m_step), std::min(m + m_step, m_cap),
                               [&](double mm) {
                                   ++evals;
                                   return detail::xi_slice(spec, th, mm, c, c3).eval2(v);
                               });
        const double now = std::sqrt(detail::xi_slice(spec, th, m, c, c3).eval2(v));
        ++evals;
        last_delta = std::abs(cur - now);
        cur = std::min(cur, now);
        if (last_delta < 1e-12 * (1.0 + cur)) {
            converged = true;
            break;
        }
    }
    if (!converged) converged = last_delta <= grid.refine_tol * (1.0 + cur);

    MinimizeResult out;
    out.min_distance = cur;
    out.theta = th;
    out.m = m;
    out.c_slack = c;
    out.c3_slack = c3;
    out.tau = v / gamma_sum;
    out.converged = converged;
    out.evaluations = evals;
    return out;
}

} // namespace subord
