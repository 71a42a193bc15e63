#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace subord {

using Complex = std::complex<double>;

// Truncated Taylor series a0 + a1 z + ... + aN z^N on the unit disk.
// Index equals power. Carrier for the test functions p and for the
// operator values p + g1 zp' + g2 z^2 p'' (+ g3 z^3 p''').
class AnalyticSeries {
public:
    explicit AnalyticSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("AnalyticSeries: empty coefficient list");
    }

    static AnalyticSeries constant(Complex a0) { return AnalyticSeries({a0}); }

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<Complex>& coeffs() const { return c_; }

    Complex coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Complex{0.0, 0.0}; }

    // Smallest index n >= 1 with a_n != 0, or 0 when the series is constant.
    std::size_t vanishing_order() const {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (c_[j] != Complex{0.0, 0.0}) return j;
        return 0;
    }

    // Multiplies every coefficient of index >= 1 by `factor`. Leaves a0 alone,
    // so p(0) is preserved; used by the experiment generator's halving loop.
    AnalyticSeries scaled_tail(double factor) const {
        std::vector<Complex> out = c_;
        for (std::size_t j = 1; j < out.size(); ++j) out[j] *= factor;
        return AnalyticSeries(std::move(out));
    }

    AnalyticSeries with_coeff(std::size_t j, Complex value) const {
        std::vector<Complex> out = c_;
        if (j >= out.size()) out.resize(j + 1, Complex{0.0, 0.0});
        out[j] = value;
        return AnalyticSeries(std::move(out));
    }

private:
    std::vector<Complex> c_;
};

// Horner evaluation. The series only has meaning inside the unit disk, so
// |z| >= 1 is rejected.
inline Complex eval(const AnalyticSeries& p, Complex z) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("eval: |z| >= 1 is outside the series' domain");
    const auto& c = p.coeffs();
    Complex acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * z + c[j];
    return acc;
}

// z^j p^(j)(z) as a series: coefficient n picks up the falling factorial
// n(n-1)...(n-j+1). Degree is unchanged.
inline AnalyticSeries z_deriv_op(const AnalyticSeries& p, int j) {
    if (j < 1 || j > 3)
        throw std::invalid_argument("z_deriv_op: order must be 1, 2 or 3");
    if (static_cast<std::size_t>(j) > p.degree())
        throw std::invalid_argument("z_deriv_op: derivative order exceeds series degree");
    std::vector<Complex> out(p.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n) {
        double factor = 1.0;
        for (int i = 0; i < j; ++i) factor *= static_cast<double>(n) - i;
        out[n] = factor * p.coeffs()[n];
    }
    return AnalyticSeries(std::move(out));
}

// p + g1 zp' + g2 z^2 p'' and, when g3 is given, + g3 z^3 p'''.
// The constant term is untouched by all three operators, so L(0) = p(0).
inline AnalyticSeries lhs_operator(const AnalyticSeries& p, double gamma1, double gamma2,
                                   std::optional<double> gamma3 = std::nullopt) {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || (gamma3 && !(*gamma3 > 0.0)))
        throw std::invalid_argument("lhs_operator: gammas must be strictly positive");
    if (gamma3 && p.degree() < 3)
        throw std::invalid_argument("lhs_operator: third-order operator needs degree >= 3");
    std::vector<Complex> out(p.coeffs().size());
    for (std::size_t n = 0; n < out.size(); ++n) {
        const double nd = static_cast<double>(n);
        double factor = 1.0 + gamma1 * nd + gamma2 * nd * (nd - 1.0);
        if (gamma3) factor += *gamma3 * nd * (nd - 1.0) * (nd - 2.0);
        out[n] = factor * p.coeffs()[n];
    }
    return AnalyticSeries(std::move(out));
}

} // namespace subord
