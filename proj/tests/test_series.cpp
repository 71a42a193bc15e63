#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "subord/series.hpp"

using subord::AnalyticSeries;
using subord::Complex;

namespace {

using ComplexL = std::complex<long double>;

// Taylor coefficients of e^{alpha z} up to `degree`.
AnalyticSeries exp_series(double alpha, std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    double term = 1.0;
    for (std::size_t n = 0; n <= degree; ++n) {
        c[n] = Complex{term, 0.0};
        term *= alpha / static_cast<double>(n + 1);
    }
    return AnalyticSeries(std::move(c));
}

// Reference evaluation by naive power summation in extended precision.
ComplexL naive_eval(const AnalyticSeries& p, ComplexL z) {
    ComplexL acc{0.0L, 0.0L};
    ComplexL pw{1.0L, 0.0L};
    for (const Complex& c : p.coeffs()) {
        acc += ComplexL{static_cast<long double>(c.real()), static_cast<long double>(c.imag())} *
               pw;
        pw *= z;
    }
    return acc;
}

// Central finite differences of naive_eval, in extended precision. Double
// arithmetic cannot certify the third derivative to 1e-6 at step 1e-4 (its
// rounding error alone is a few 1e-6), extended precision comfortably can.
ComplexL fd_derivative(const AnalyticSeries& p, ComplexL z, int j, long double h) {
    switch (j) {
        case 1: return (naive_eval(p, z + h) - naive_eval(p, z - h)) / (2.0L * h);
        case 2:
            return (naive_eval(p, z + h) - 2.0L * naive_eval(p, z) + naive_eval(p, z - h)) /
                   (h * h);
        case 3:
            return (naive_eval(p, z + 2.0L * h) - 2.0L * naive_eval(p, z + h) +
                    2.0L * naive_eval(p, z - h) - naive_eval(p, z - 2.0L * h)) /
                   (2.0L * h * h * h);
        default: FAIL("unsupported derivative order"); return {};
    }
}

Complex to_double(ComplexL z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

} // namespace

TEST_CASE("series evaluation matches naive power summation") {
    const AnalyticSeries p({Complex{1.0, 0.0}, Complex{0.25, -0.5}, Complex{0.0, 0.125},
                            Complex{-0.3, 0.0}, Complex{0.01, 0.02}});
    const Complex zs[] = {{0.3, 0.0}, {-0.7, 0.2}, {0.0, 0.9}, {0.5, -0.49}};
    for (const Complex& z : zs) {
        const Complex direct = subord::eval(p, z);
        const Complex reference = to_double(naive_eval(p, ComplexL{z.real(), z.imag()}));
        CAPTURE(z);
        CHECK(std::abs(direct - reference) < 1e-14);
    }
}

TEST_CASE("series evaluation rejects points outside the open unit disk") {
    const AnalyticSeries p = exp_series(1.0, 8);
    CHECK_THROWS_AS(subord::eval(p, Complex{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(subord::eval(p, Complex{0.8, 0.8}), std::domain_error);
    CHECK_NOTHROW(subord::eval(p, Complex{0.999, 0.0}));
}

TEST_CASE("constructor and accessors") {
    CHECK_THROWS_AS(AnalyticSeries(std::vector<Complex>{}), std::invalid_argument);
    const AnalyticSeries c = AnalyticSeries::constant(Complex{2.0, 1.0});
    CHECK(c.degree() == 0);
    CHECK(subord::eval(c, Complex{0.5, 0.1}) == Complex{2.0, 1.0});
    CHECK(c.coeff(5) == Complex{0.0, 0.0});

    const AnalyticSeries p({Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                            Complex{0.5, 0.0}});
    CHECK(p.vanishing_order() == 3);
    CHECK(AnalyticSeries::constant(Complex{1.0, 0.0}).vanishing_order() == 0);
}

TEST_CASE("derivative operator agrees with finite differences of e^z") {
    // p is the degree-16 truncation of e^z; its tail error is ~1/17! and
    // invisible at these tolerances.
    const AnalyticSeries p = exp_series(1.0, 16);
    const long double h = 1e-4L;
    const double z0 = 0.3;
    for (int j = 1; j <= 3; ++j) {
        const AnalyticSeries zjd = subord::z_deriv_op(p, j);
        const Complex direct = subord::eval(zjd, Complex{z0, 0.0});
        const ComplexL fd = fd_derivative(p, ComplexL{z0, 0.0L}, j, h);
        const double scale = std::pow(z0, j);
        CAPTURE(j);
        CHECK(std::abs(direct - scale * to_double(fd)) < 1e-6);
    }
}

TEST_CASE("derivative operator agrees with finite differences on a disk grid") {
    const AnalyticSeries p({Complex{1.0, 0.0}, Complex{0.4, 0.1}, Complex{-0.2, 0.3},
                            Complex{0.05, -0.07}, Complex{0.01, 0.02}, Complex{-0.015, 0.0},
                            Complex{0.0, 0.004}});
    const long double h = 1e-4L;
    for (int j = 1; j <= 3; ++j) {
        const AnalyticSeries zjd = subord::z_deriv_op(p, j);
        for (int a = 0; a < 8; ++a) {
            const double th = 2.0 * std::numbers::pi * a / 8.0;
            const Complex z = std::polar(0.5, th);
            const ComplexL zl{z.real(), z.imag()};
            const Complex direct = subord::eval(zjd, z);
            ComplexL zpow{1.0L, 0.0L};
            for (int q = 0; q < j; ++q) zpow *= zl;
            const Complex expected = to_double(zpow * fd_derivative(p, zl, j, h));
            CAPTURE(j, a);
            CHECK(std::abs(direct - expected) < 1e-6);
        }
    }
}

TEST_CASE("derivative operator validates its order") {
    const AnalyticSeries p = exp_series(1.0, 8);
    CHECK_THROWS_AS(subord::z_deriv_op(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(subord::z_deriv_op(p, 4), std::invalid_argument);
    const AnalyticSeries lin({Complex{1.0, 0.0}, Complex{0.5, 0.0}});
    CHECK_NOTHROW(subord::z_deriv_op(lin, 1));
    CHECK_THROWS_AS(subord::z_deriv_op(lin, 2), std::invalid_argument);
}

TEST_CASE("operator combination is linear with the expected weights") {
    const AnalyticSeries p({Complex{1.0, 0.0}, Complex{0.3, -0.2}, Complex{0.1, 0.1},
                            Complex{-0.05, 0.02}, Complex{0.01, 0.0}});
    const double g1 = 0.7, g2 = 0.4, g3 = 0.2;

    SECTION("second order") {
        const AnalyticSeries L = subord::lhs_operator(p, g1, g2);
        for (std::size_t n = 0; n <= p.degree(); ++n) {
            const double nd = static_cast<double>(n);
            const Complex expected = (1.0 + g1 * nd + g2 * nd * (nd - 1.0)) * p.coeff(n);
            CHECK(std::abs(L.coeff(n) - expected) < 1e-15);
        }
        // Pointwise it equals p + g1 zp' + g2 z^2 p''.
        const Complex z{0.4, -0.3};
        const Complex combo = subord::eval(p, z) + g1 * subord::eval(subord::z_deriv_op(p, 1), z) +
                              g2 * subord::eval(subord::z_deriv_op(p, 2), z);
        CHECK(std::abs(subord::eval(L, z) - combo) < 1e-13);
    }

    SECTION("third order") {
        const AnalyticSeries L = subord::lhs_operator(p, g1, g2, g3);
        const Complex z{-0.2, 0.5};
        const Complex combo = subord::eval(p, z) + g1 * subord::eval(subord::z_deriv_op(p, 1), z) +
                              g2 * subord::eval(subord::z_deriv_op(p, 2), z) +
                              g3 * subord::eval(subord::z_deriv_op(p, 3), z);
        CHECK(std::abs(subord::eval(L, z) - combo) < 1e-13);
    }

    SECTION("constant term is preserved") {
        const AnalyticSeries L2 = subord::lhs_operator(p, g1, g2);
        const AnalyticSeries L3 = subord::lhs_operator(p, g1, g2, g3);
        CHECK(L2.coeff(0) == p.coeff(0));
        CHECK(L3.coeff(0) == p.coeff(0));
    }
}

TEST_CASE("operator validates gammas and degree") {
    const AnalyticSeries p = exp_series(1.0, 8);
    CHECK_THROWS_AS(subord::lhs_operator(p, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(subord::lhs_operator(p, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(subord::lhs_operator(p, 1.0, 1.0, 0.0), std::invalid_argument);
    const AnalyticSeries quad({Complex{1.0, 0.0}, Complex{0.1, 0.0}, Complex{0.1, 0.0}});
    CHECK_NOTHROW(subord::lhs_operator(quad, 1.0, 1.0));
    CHECK_THROWS_AS(subord::lhs_operator(quad, 1.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("tail scaling halves everything except the constant term") {
    const AnalyticSeries p({Complex{1.0, 0.0}, Complex{0.4, 0.2}, Complex{-0.3, 0.1}});
    const AnalyticSeries half = p.scaled_tail(0.5);
    CHECK(half.coeff(0) == p.coeff(0));
    CHECK(half.coeff(1) == 0.5 * p.coeff(1));
    CHECK(half.coeff(2) == 0.5 * p.coeff(2));
    // L(p) - 1 scales identically: the operator is linear and fixes constants.
    const AnalyticSeries L = subord::lhs_operator(p, 0.7, 0.4);
    const AnalyticSeries Lhalf = subord::lhs_operator(half, 0.7, 0.4);
    const Complex z{0.3, 0.6};
    CHECK(std::abs((subord::eval(Lhalf, z) - 1.0) - 0.5 * (subord::eval(L, z) - 1.0)) < 1e-14);
}
