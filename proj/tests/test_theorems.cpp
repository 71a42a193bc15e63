#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "subord/theorems.hpp"

using subord::CaseReport;
using subord::FeasibilityVerdict;
using subord::RegionGrid;
using subord::RegionKind;
using subord::TheoremSpec;

namespace {

// Fixed reference values, computed once with 50-digit arithmetic and frozen.
constexpr double kSinh1 = 1.1752011936438014569;       // sinh 1
constexpr double kESinh1 = 3.1945280494653251136;      // e sinh 1
constexpr double kEE1 = 10.107337927389695463;         // e(e+1)
constexpr double kMarginSineO2 = 0.59813402314497942379;   // gammas 14, 0.1
constexpr double kMarginSineO3 = 0.098134023144979423794;  // + gamma3 0.05, m=k=2
constexpr double kMarginCardioid = 1.0036059736796550188;  // gammas 19, 0.5
constexpr double kCase2SineUnit = -8.3300466790209371630;  // 1 - 3e - sinh 1
constexpr double kFrontierSine = 13.301865976855020576;    // gamma2 = 0, t3 = 0
constexpr double kFrontierCardioid = 17.496394026320345694;
constexpr double kFrontierCrescent = 13.951568955548812287;
constexpr double kFrontierArcSinh = 14.377205038726478995;
constexpr double kSupCase2 = -1.7182818284590452354;       // 1 - e
constexpr double kSupCase2ArcSinh = -3.4365636569180904707; // 2(1 - e)

TheoremSpec spec2(RegionKind h, double g1, double g2) {
    TheoremSpec s;
    s.order = 2;
    s.h = h;
    s.gamma1 = g1;
    s.gamma2 = g2;
    return s;
}

TheoremSpec spec3(RegionKind h, double g1, double g2, double g3, double m, double k) {
    TheoremSpec s;
    s.order = 3;
    s.h = h;
    s.gamma1 = g1;
    s.gamma2 = g2;
    s.gamma3 = g3;
    s.m = m;
    s.k = k;
    return s;
}

} // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW(spec2(RegionKind::Sine, 1.0, 1.0).validate());
    CHECK_NOTHROW(spec3(RegionKind::ArcSinh, 1.0, 1.0, 0.1, 2.0, 3.0).validate());

    CHECK_THROWS_AS(spec2(RegionKind::Exp, 1.0, 1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec2(RegionKind::Sine, 0.0, 1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec2(RegionKind::Sine, 1.0, -2.0).validate(), std::invalid_argument);

    TheoremSpec bad_order = spec2(RegionKind::Sine, 1.0, 1.0);
    bad_order.order = 4;
    CHECK_THROWS_AS(bad_order.validate(), std::invalid_argument);

    TheoremSpec o2_with_m = spec2(RegionKind::Sine, 1.0, 1.0);
    o2_with_m.m = 2.0;
    CHECK_THROWS_AS(o2_with_m.validate(), std::invalid_argument);

    CHECK_THROWS_AS(spec3(RegionKind::Sine, 1.0, 1.0, 0.0, 2.0, 2.0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec3(RegionKind::Sine, 1.0, 1.0, 0.1, 1.5, 2.0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec3(RegionKind::Sine, 1.0, 1.0, 0.1, 3.0, 2.5).validate(),
                    std::invalid_argument);

    TheoremSpec missing_k = spec3(RegionKind::Sine, 1.0, 1.0, 0.1, 2.0, 2.0);
    missing_k.k.reset();
    CHECK_THROWS_AS(missing_k.validate(), std::invalid_argument);
}

TEST_CASE("third-order weight") {
    CHECK(spec2(RegionKind::Sine, 1.0, 1.0).order3_coefficient() == 0.0);
    CHECK(spec3(RegionKind::Sine, 1.0, 1.0, 0.1, 2.0, 2.0).order3_coefficient() ==
          Catch::Approx(10.0).margin(1e-12));
    CHECK(spec3(RegionKind::Sine, 1.0, 1.0, 0.1, 2.5, 4.0).order3_coefficient() ==
          Catch::Approx(28.75).margin(1e-12));
}

TEST_CASE("target disk radii match the numeric enclosing radii") {
    CHECK(subord::target_disk_radius(RegionKind::Exp) ==
          Catch::Approx(std::exp(1.0) - 1.0).margin(1e-15));
    for (const RegionKind h : subord::kAllRegions) {
        CAPTURE(subord::to_string(h));
        CHECK(std::abs(subord::target_disk_radius(h) - subord::min_enclosing_radius(h)) <=
              1e-9);
    }
}

TEST_CASE("fixed condition margins") {
    const CaseReport sine = subord::check_condition(spec2(RegionKind::Sine, 14.0, 0.1));
    CHECK(sine.case1_holds);
    CHECK(sine.case1_margin == Catch::Approx(kMarginSineO2).margin(1e-12));
    CHECK(sine.case1_rhs == Catch::Approx(kESinh1).margin(1e-12));
    CHECK(!sine.case2_holds);
    CHECK(sine.any_holds);
    CHECK(sine.radius == Catch::Approx(kSinh1).margin(1e-12));
    CHECK(!sine.note.has_value());

    const CaseReport sine3 =
        subord::check_condition(spec3(RegionKind::Sine, 14.0, 0.1, 0.05, 2.0, 2.0));
    CHECK(sine3.case1_holds);
    CHECK(sine3.case1_margin == Catch::Approx(kMarginSineO3).margin(1e-12));
    CHECK(sine3.case2_rhs == Catch::Approx(kESinh1).margin(1e-12));
    CHECK(sine3.note.has_value());

    // gamma1 placed exactly 0.1 above the no-slack frontier leaves margin
    // 0.1 - gamma2.
    const CaseReport near =
        subord::check_condition(spec2(RegionKind::Sine, kESinh1 + kEE1 + 0.1, 0.01));
    CHECK(near.case1_margin == Catch::Approx(0.09).margin(1e-12));

    const CaseReport unit = subord::check_condition(spec2(RegionKind::Sine, 1.0, 1.0));
    CHECK(!unit.any_holds);
    CHECK(unit.case2_margin == Catch::Approx(kCase2SineUnit).margin(1e-12));
    CHECK(unit.case2_rhs == Catch::Approx(kSinh1).margin(1e-12));

    const CaseReport card = subord::check_condition(spec2(RegionKind::Cardioid, 19.0, 0.5));
    CHECK(card.case1_holds);
    CHECK(card.case1_margin == Catch::Approx(kMarginCardioid).margin(1e-12));
    CHECK(card.case1_rhs == Catch::Approx(std::exp(2.0)).margin(1e-12));

    // The default-looking 15/0.1 point is below the cardioid frontier.
    CHECK(!subord::check_condition(spec2(RegionKind::Cardioid, 15.0, 0.1)).any_holds);

    const CaseReport arc = subord::check_condition(spec2(RegionKind::ArcSinh, 15.0, 0.1));
    CHECK(arc.case1_rhs == Catch::Approx(std::numbers::pi * std::exp(1.0)).margin(1e-12));
    CHECK(arc.case1_margin ==
          Catch::Approx(2.0 * (15.0 - 0.1 - kEE1) - std::numbers::pi * std::exp(1.0))
              .margin(1e-12));
    CHECK(!arc.note.has_value());
}

TEST_CASE("frontier values and exact zero margin on the frontier") {
    CHECK(subord::case1_frontier_gamma1(RegionKind::Sine, 0.0) ==
          Catch::Approx(kFrontierSine).margin(1e-12));
    CHECK(subord::case1_frontier_gamma1(RegionKind::Cardioid, 0.0) ==
          Catch::Approx(kFrontierCardioid).margin(1e-12));
    CHECK(subord::case1_frontier_gamma1(RegionKind::Crescent, 0.0) ==
          Catch::Approx(kFrontierCrescent).margin(1e-12));
    CHECK(subord::case1_frontier_gamma1(RegionKind::ArcSinh, 0.0) ==
          Catch::Approx(kFrontierArcSinh).margin(1e-12));

    for (const RegionKind h : subord::kTargetRegions) {
        CAPTURE(subord::to_string(h));
        const double g2 = 0.7;
        const double g1 = subord::case1_frontier_gamma1(h, g2);
        CHECK(subord::check_condition(spec2(h, g1, g2)).case1_margin ==
              Catch::Approx(0.0).margin(1e-12));

        const double t3 = 0.02 * 16.0; // gamma3 = 0.02, m = 2, k = 3
        const double g1b = subord::case1_frontier_gamma1(h, g2, t3);
        CHECK(subord::check_condition(spec3(h, g1b, g2, 0.02, 2.0, 3.0)).case1_margin ==
              Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("condition margin is affine in gamma1") {
    for (const RegionKind h : subord::kTargetRegions) {
        const double scale = h == RegionKind::ArcSinh ? 2.0 : 1.0;
        const double delta = 0.625;
        const CaseReport lo = subord::check_condition(spec2(h, 12.0, 0.8));
        const CaseReport hi = subord::check_condition(spec2(h, 12.0 + delta, 0.8));
        CAPTURE(subord::to_string(h));
        CHECK(hi.case1_margin - lo.case1_margin ==
              Catch::Approx(scale * delta).margin(1e-12));
        CHECK(hi.case2_margin - lo.case2_margin ==
              Catch::Approx(-scale * delta * std::exp(1.0)).margin(1e-12));
    }
}

TEST_CASE("the alternative condition is infeasible for every target and order") {
    for (const int order : {2, 3}) {
        for (const RegionKind h : subord::kTargetRegions) {
            const FeasibilityVerdict v = subord::case2_feasibility(order, h);
            CAPTURE(order, subord::to_string(h));
            CHECK(!v.feasible);
            CHECK(!v.witness.has_value());
            CHECK(!v.analysis.empty());
            const double sup = h == RegionKind::ArcSinh ? kSupCase2ArcSinh : kSupCase2;
            CHECK(v.sup_lhs == Catch::Approx(sup).margin(1e-12));
            double rhs = 0.0;
            switch (h) {
                case RegionKind::Sine: rhs = order == 3 ? kESinh1 : kSinh1; break;
                case RegionKind::Cardioid: rhs = std::exp(1.0); break;
                case RegionKind::Crescent: rhs = std::numbers::sqrt2; break;
                case RegionKind::ArcSinh: rhs = std::numbers::pi; break;
                default: break;
            }
            CHECK(v.rhs == Catch::Approx(rhs).margin(1e-12));
            CHECK(v.sup_lhs < v.rhs);
        }
    }
    CHECK_THROWS_AS(subord::case2_feasibility(4, RegionKind::Sine), std::invalid_argument);
    CHECK_THROWS_AS(subord::case2_feasibility(2, RegionKind::Exp), std::invalid_argument);
}

TEST_CASE("parameter grid agrees with the closed-form frontier") {
    const RegionGrid grid =
        subord::explore_region(2, RegionKind::Sine, 12.0, 15.0, 31, 0.05, 1.05, 5);
    REQUIRE(grid.gamma1s.size() == 31);
    REQUIRE(grid.gamma2s.size() == 5);
    REQUIRE(grid.mask.size() == 31 * 5);
    REQUIRE(grid.frontier_gamma1.size() == 5);
    CHECK(grid.t3 == 0.0);
    for (std::size_t j = 0; j < 5; ++j) {
        const double frontier = subord::case1_frontier_gamma1(RegionKind::Sine,
                                                              grid.gamma2s[j]);
        CHECK(grid.frontier_gamma1[j] == Catch::Approx(frontier).margin(1e-12));
        for (std::size_t i = 0; i < 31; ++i) {
            const std::uint8_t bits = grid.mask[j * 31 + i];
            REQUIRE(std::abs(grid.gamma1s[i] - frontier) > 1e-9);
            CHECK(((bits & 1) != 0) == (grid.gamma1s[i] >= frontier));
            CHECK((bits & 2) == 0); // alternative condition never fires
        }
    }

    const RegionGrid g3 = subord::explore_region(3, RegionKind::Crescent, 13.0, 16.0, 7,
                                                 0.1, 0.6, 3, 0.01, 2.0, 2.0);
    CHECK(g3.t3 == Catch::Approx(0.1).margin(1e-12));
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(g3.frontier_gamma1[j] ==
              Catch::Approx(subord::case1_frontier_gamma1(RegionKind::Crescent,
                                                          g3.gamma2s[j], g3.t3))
                  .margin(1e-12));

    CHECK_THROWS_AS(subord::explore_region(2, RegionKind::Sine, 12.0, 15.0, 1, 0.1, 1.0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(subord::explore_region(2, RegionKind::Sine, 0.0, 15.0, 5, 0.1, 1.0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(subord::explore_region(3, RegionKind::Sine, 12.0, 15.0, 5, 0.1, 1.0, 5),
                    std::invalid_argument);
}
