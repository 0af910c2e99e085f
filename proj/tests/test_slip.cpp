#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lubridrag/noslip.hpp"
#include "lubridrag/oracle1d.hpp"
#include "lubridrag/slip.hpp"

using namespace lubridrag;
using namespace lubridrag::slip;

namespace {
constexpr double kSixPi = 6.0 * std::numbers::pi;
}

TEST_CASE("Robin coefficients") {
    const GapProfile sphere = GapProfile::smooth_sphere();
    SUBCASE("at the tip both reduce to gap over slip length") {
        const RobinCoeffs rc = robin_coeffs(sphere, 0.01, 0.0, {0.1, 0.1});
        CHECK(rc.alpha_s == doctest::Approx(0.1).epsilon(1e-14));
        CHECK(rc.alpha_p == doctest::Approx(0.1).epsilon(1e-14));
    }
    SUBCASE("off axis the slope factor enters the solid side only") {
        const RobinCoeffs rc = robin_coeffs(sphere, 0.01, 0.5, {0.1, 0.2});
        const double hg = 0.01 + 1.0 - std::sqrt(0.75);
        const double slope = 0.5 / std::sqrt(0.75);
        CHECK(rc.alpha_p == doctest::Approx(hg / 0.2).epsilon(1e-14));
        CHECK(rc.alpha_p == doctest::Approx(0.7198729810778068).epsilon(1e-12));
        CHECK(rc.alpha_s
              == doctest::Approx(std::pow(1.0 + slope * slope, 1.5) * hg / 0.1).epsilon(1e-14));
        CHECK(rc.alpha_s == doctest::Approx(2.2166339581).epsilon(1e-9));
    }
    SUBCASE("zero slip lengths rejected") {
        CHECK_THROWS_AS(robin_coeffs(sphere, 0.01, 0.1, {0.0, 0.1}), std::invalid_argument);
        CHECK_THROWS_AS(robin_coeffs(sphere, 0.01, 0.1, {0.1, 0.0}), std::invalid_argument);
    }
}

TEST_CASE("minimizing cubic") {
    SUBCASE("perfect slip gives the straight shear profile") {
        const CubicProfile p = minimizing_cubic({0.0, 0.0});
        CHECK(p.c3 == 0.0);
        CHECK(p.c2 == 0.0);
        CHECK(p.c1 == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("no-slip limit gives t^2(3-2t)") {
        const CubicProfile p = minimizing_cubic({1e8, 1e8});
        CHECK(p.c3 == doctest::Approx(-2.0).epsilon(1e-6));
        CHECK(p.c2 == doctest::Approx(3.0).epsilon(1e-6));
        CHECK(p.c1 == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
    }
    SUBCASE("reference pair (1,2)") {
        const CubicProfile p = minimizing_cubic({1.0, 2.0});
        CHECK(p.c3 == doctest::Approx(-10.0 / 26.0).epsilon(1e-15));
        CHECK(p.c2 == doctest::Approx(18.0 / 26.0).epsilon(1e-15));
        CHECK(p.c1 == doctest::Approx(18.0 / 26.0).epsilon(1e-15));
        CHECK(p.value(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("boundary condition and coefficient bounds across the quadrant") {
        for (double as : {0.0, 0.3, 1.0, 7.0, 150.0, 1e6}) {
            for (double ap : {0.0, 0.5, 2.0, 40.0, 1e5}) {
                const CubicProfile p = minimizing_cubic({as, ap});
                CHECK(p.value(1.0) == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(std::abs(p.c3) <= 2.0 + 1e-12);
                CHECK(std::abs(p.c2) <= 3.0 + 1e-12);
                CHECK(std::abs(p.c1) <= 1.0 + 1e-12);
            }
        }
    }
    SUBCASE("Robin optimality conditions hold to machine precision") {
        for (double as : {0.0, 1.0, 9.5, 300.0}) {
            for (double ap : {0.0, 2.0, 17.0, 5e3}) {
                const CubicProfile p = minimizing_cubic({as, ap});
                const double scale = 1.0 + as + ap;
                CHECK(std::abs(p.second_deriv(1.0) + as * p.deriv(1.0)) <= 1e-11 * scale);
                CHECK(std::abs(p.second_deriv(0.0) - ap * p.deriv(0.0)) <= 1e-11 * scale);
            }
        }
    }
}

TEST_CASE("dissipation integrand components") {
    SUBCASE("no-slip limit") {
        const RobinCoeffs rc{1e8, 1e8};
        CHECK(drag_integrand_i1(rc) == doctest::Approx(12.0).epsilon(1e-6));
        CHECK(drag_integrand_i2(rc) == doctest::Approx(0.0).scale(1.0).epsilon(1e-5));
    }
    SUBCASE("perfect slip") {
        const RobinCoeffs rc{0.0, 0.0};
        CHECK(drag_integrand_i1(rc) == 0.0);
        CHECK(drag_integrand_i2(rc) == 0.0);
    }
    SUBCASE("reference pair (1,2)") {
        const RobinCoeffs rc{1.0, 2.0};
        CHECK(drag_integrand_i1(rc) == doctest::Approx(1128.0 / 676.0).epsilon(1e-15));
        CHECK(drag_integrand_i2(rc) == doctest::Approx(432.0 / 676.0).epsilon(1e-15));
    }
    SUBCASE("sum equals the cubic's profile energy") {
        // the energy identity at the closed-form level: evaluate the
        // functional on the minimizing cubic directly
        for (double as : {0.0, 1.0, 10.0, 2e4}) {
            for (double ap : {0.0, 2.0, 10.0, 3e3}) {
                const RobinCoeffs rc{as, ap};
                const CubicProfile p = minimizing_cubic(rc);
                // int_0^1 (6 c3 t + 2 c2)^2 dt = 12 c3^2 + 12 c3 c2 + 4 c2^2
                const double bulk = 12.0 * p.c3 * p.c3 + 12.0 * p.c3 * p.c2 + 4.0 * p.c2 * p.c2;
                const double e = bulk + as * p.deriv(1.0) * p.deriv(1.0)
                                 + ap * p.deriv(0.0) * p.deriv(0.0);
                const double sum = drag_integrand_i1(rc) + drag_integrand_i2(rc);
                CHECK(sum == doctest::Approx(e).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("energy identity against the discrete oracle") {
    const struct {
        double as, ap;
    } pts[] = {{0.0, 0.0}, {1.0, 2.0}, {10.0, 10.0}, {1e4, 1e4}};
    const int n = 200;
    for (const auto& pt : pts) {
        const double closed = drag_integrand_i1({pt.as, pt.ap}) + drag_integrand_i2({pt.as, pt.ap});
        const double discrete =
            oracle::minimize_profile(oracle::ProfileProblem::robin(pt.as, pt.ap, n)).energy;
        CHECK(std::abs(discrete - closed) <= 30.0 / (n * n));
    }
    // reference values of the identity
    CHECK(drag_integrand_i1({1.0, 2.0}) + drag_integrand_i2({1.0, 2.0})
          == doctest::Approx(1560.0 / 676.0).epsilon(1e-14));
}

TEST_CASE("exact slip drag integral") {
    const GapProfile sphere = GapProfile::smooth_sphere();
    SUBCASE("drag fades as both surfaces approach perfect slip") {
        const double h = 0.01;
        double prev = 1e300;
        for (double b : {1e-2, 1.0, 1e2, 1e6}) {
            const double v = drag_integral_slip(sphere, h, {b, b}).value;
            CHECK(v < prev);
            CHECK(v > 0.0);
            prev = v;
        }
        CHECK(prev < 1.0); // large-slip degenerate limit
    }
    SUBCASE("near no-slip it matches the no-slip exact integral") {
        const double h = 0.01;
        const double tiny = 1e-6 * h;
        const double with_slip = drag_integral_slip(sphere, h, {tiny, tiny}).value;
        const double no_slip = noslip::drag_integral(sphere, h).value;
        CHECK(with_slip == doctest::Approx(no_slip).epsilon(0.01));
    }
    SUBCASE("strictly decreasing in each slip length") {
        const double h = 1e-3;
        double prev = 1e300;
        for (double bs : {0.01, 0.1, 1.0}) {
            const double v = drag_integral_slip(sphere, h, {bs, 0.05}).value;
            CHECK(v < prev);
            prev = v;
        }
        prev = 1e300;
        for (double bp : {0.01, 0.1, 1.0}) {
            const double v = drag_integral_slip(sphere, h, {0.05, bp}).value;
            CHECK(v < prev);
            prev = v;
        }
    }
    SUBCASE("approaches the Hocking law from below as h shrinks") {
        const SlipParams sp{0.01, 0.01};
        double prev_ratio = 0.0;
        for (double h : {1e-5, 1e-6, 1e-7, 1e-8}) {
            const double exact = drag_integral_slip(sphere, h, sp).value;
            const double hock = hocking_asym(h, sp).value;
            const double ratio = exact / hock;
            CHECK(ratio > prev_ratio);
            CHECK(ratio < 1.0);
            prev_ratio = ratio;
        }
        CHECK(prev_ratio > 0.75);
    }
}

TEST_CASE("Hocking asymptotic formula") {
    CHECK(hocking_asym(1e-4, {0.01, 0.01}).value
          == doctest::Approx(std::numbers::pi * 200.0 * std::log(1e4)).epsilon(1e-13));
    CHECK(hocking_asym(1e-8, {0.01, 0.02}).value
          == doctest::Approx(std::numbers::pi * 150.0 * std::log(1e8)).epsilon(1e-13));
    SUBCASE("out-of-regime flag") {
        const DragEstimate at_one = hocking_asym(1.0, {0.01, 0.01});
        CHECK(at_one.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(at_one.regime_warning);
        CHECK_FALSE(hocking_asym(1e-6, {0.01, 0.01}).regime_warning);
    }
}

TEST_CASE("order-one regime envelope") {
    const auto [lo, hi] = drag_bounds_order_one(0.01);
    CHECK(lo < hi);
    CHECK(lo == doctest::Approx(100.0));
    const double classical = kSixPi / 0.01;
    CHECK(lo <= classical);
    CHECK(classical <= hi);
    const auto [lo2, hi2] = drag_bounds_order_one(0.005);
    CHECK(lo2 == doctest::Approx(2.0 * lo).epsilon(1e-13));
    CHECK(hi2 == doctest::Approx(2.0 * hi).epsilon(1e-13));
}
