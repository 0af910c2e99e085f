#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lubridrag/noslip.hpp"

using namespace lubridrag;
using namespace lubridrag::noslip;

namespace {

constexpr double kSixPi = 6.0 * std::numbers::pi;

// Closed form of the remainder integral at beta = 0 (substitution
// u = 1 + s^2/2 gives 8 * int (u-1)^3 / u^4 du).
double remainder_closed_form_beta0(double h, double r0) {
    const double U = 1.0 + r0 * r0 / (2.0 * h);
    return 8.0 * (std::log(U) + 3.0 / U - 1.5 / (U * U) + 1.0 / (3.0 * U * U * U) - 11.0 / 6.0);
}

// Beta function identities for the large-beta coefficient, used as an
// independent route against the quadrature definition.
double mu_beta_identity(double alpha) {
    if (alpha < 1.0 / 3.0) {
        const double a = (1.0 - 3.0 * alpha) / (1.0 - alpha);
        const double b = 2.0 / (1.0 - alpha);
        return std::pow(2.0, a) * std::beta(a, b) / (1.0 - alpha);
    }
    const double a = 4.0 / (1.0 + alpha);
    const double b = (3.0 * alpha - 1.0) / (1.0 + alpha);
    return std::beta(a, b) / (1.0 + alpha);
}

} // namespace

TEST_CASE("reduction factor at beta = 0 is one for every exponent") {
    for (double alpha : {0.0, 0.25, 1.0 / 3.0, 0.5, 0.9})
        CHECK(reduction_factor(0.0, alpha).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("linear response coefficient") {
    SUBCASE("closed form against direct quadrature") {
        for (double alpha : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
            auto integrand = [alpha](double s) {
                const double d = 1.0 + 0.5 * s * s;
                return 3.0 * std::pow(s, 4.0 + alpha) / (d * d * d * d);
            };
            const double by_quadrature = integrate_semi_infinite(integrand, 0.0).value;
            CHECK(lambda_alpha(alpha) / by_quadrature == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
    SUBCASE("exact value at alpha = 0") {
        CHECK(std::abs(lambda_alpha(0.0) - 3.0 * std::numbers::sqrt2 * std::numbers::pi / 8.0)
              <= 1e-12);
    }
    SUBCASE("finite limit toward alpha = 1") {
        CHECK(lambda_alpha(0.999) == doctest::Approx(4.0).epsilon(0.01));
    }
    SUBCASE("rejected at alpha >= 1") {
        CHECK_THROWS_AS(lambda_alpha(1.0), std::invalid_argument);
    }
}

TEST_CASE("large-beta coefficient") {
    SUBCASE("exact antiderivative at alpha = 0") {
        CHECK(mu_alpha(0.0) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("quadrature agrees with the Beta-function identity on both branches") {
        for (double alpha : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8, 0.9})
            CHECK(mu_alpha(alpha) == doctest::Approx(mu_beta_identity(alpha)).epsilon(1e-8));
    }
    SUBCASE("approaches 1/4 toward alpha = 1") {
        CHECK(mu_alpha(0.999) == doctest::Approx(0.25037572498240725).epsilon(1e-8));
    }
    SUBCASE("logarithmic band rejected") {
        CHECK_THROWS_AS(mu_alpha(1.0 / 3.0), std::invalid_argument);
        CHECK_THROWS_AS(mu_alpha(1.0 / 3.0 + 5e-4), std::invalid_argument);
        CHECK_NOTHROW(mu_alpha(1.0 / 3.0 + 2e-3));
    }
    SUBCASE("bundle carries the log-branch hole") {
        CHECK_FALSE(alpha_constants(1.0 / 3.0).mu_alpha.has_value());
        CHECK(alpha_constants(0.0).mu_alpha.has_value());
    }
}

TEST_CASE("small-beta expansion of the reduction factor") {
    for (double alpha : {0.0, 0.5}) {
        const double lam = lambda_alpha(alpha);
        for (double beta : {1e-1, 1e-2, 1e-3}) {
            const double value = reduction_factor(beta, alpha).value;
            CHECK(std::abs(value - 1.0 / (1.0 + lam * beta)) <= 2.0 * beta * beta);
        }
    }
}

TEST_CASE("large-beta power laws of the reduction factor") {
    SUBCASE("alpha = 0 tail") {
        const double v = reduction_factor(1e3, 0.0).value;
        CHECK(v * 1e6 == doctest::Approx(1.0).epsilon(0.05));
    }
    SUBCASE("alpha = 0.5 tail approaches mu monotonically") {
        const double mu = mu_alpha(0.5);
        double prev_gap = 1e300;
        for (double beta : {1e2, 1e3, 1e4}) {
            const double scaled =
                reduction_factor(beta, 0.5).value * std::pow(beta, 4.0 / 1.5);
            const double gap = std::abs(scaled / mu - 1.0);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap <= 0.05);
    }
    SUBCASE("alpha = 1/3 logarithmic law") {
        const double beta = 1e4;
        const double scaled =
            reduction_factor(beta, 1.0 / 3.0).value * beta * beta * beta / std::log(beta);
        CHECK(scaled == doctest::Approx(2.25).epsilon(0.15));
    }
}

TEST_CASE("remainder integral") {
    SUBCASE("quadrature matches the closed form at beta = 0") {
        for (double h : {1e-2, 1e-4, 1e-6, 1e-8}) {
            const double v = remainder_integral(0.0, h, 0.0, 0.5).value;
            CHECK(v == doctest::Approx(remainder_closed_form_beta0(h, 0.5)).epsilon(1e-9));
        }
    }
    SUBCASE("logarithmic growth") {
        const double j4 = remainder_integral(0.0, 1e-4, 0.0, 0.5).value;
        const double j8 = remainder_integral(0.0, 1e-8, 0.0, 0.5).value;
        CHECK(j4 == doctest::Approx(42.406098403).epsilon(1e-6));
        CHECK(j8 == doctest::Approx(116.063249512).epsilon(1e-6));
        CHECK(j8 / j4 == doctest::Approx(2.7369471).epsilon(1e-4));
        CHECK(j4 / std::abs(std::log(1e-4)) < 8.0);
        CHECK(j8 / std::abs(std::log(1e-8)) < 8.0);
    }
    SUBCASE("small upper limits stay under the crude s^7 bound") {
        const double h = 0.36, r0 = 0.5; // r0/sqrt(h) = 5/6 < 1
        const double limit = r0 / std::sqrt(h);
        const double v = remainder_integral(0.7, h, 0.2, r0).value;
        CHECK(v > 0.0);
        CHECK(v <= std::pow(limit, 8.0) / 8.0);
    }
}

TEST_CASE("exact drag integral") {
    SUBCASE("smooth sphere recovers the classical law at small gap") {
        const double h = 1e-5;
        const DragEstimate est = drag_integral(GapProfile::smooth_sphere(), h);
        CHECK(est.method == DragMethod::ExactIntegral);
        const double scaled = est.value * h / kSixPi;
        CHECK(scaled >= 0.999);
        CHECK(scaled <= 1.001);
    }
    SUBCASE("flat gap reduces to an elementary integral") {
        const double h = 0.01, r0 = 0.5;
        const DragEstimate est = drag_reduced_integral([](double) { return 0.0; }, h, r0);
        CHECK(est.value
              == doctest::Approx(kSixPi * std::pow(r0, 4) / (4.0 * h * h * h)).epsilon(1e-10));
    }
    SUBCASE("rough drag approaches the large-beta asymptotic") {
        const GapProfile rough = GapProfile::rough_power(0.1, 0.0);
        const double h = 1e-6; // beta = 100
        const double exact = drag_integral(rough, h).value;
        const double asym = asym_drag(h, 0.1, 0.0).value;
        CHECK(std::abs(exact / asym - 1.0) <= 0.10);
    }
}

TEST_CASE("asymptotic drag formulas") {
    SUBCASE("smooth limit") {
        const DragEstimate est = asym_drag(1e-4, 0.0, 0.0);
        CHECK(est.value == doctest::Approx(kSixPi / 1e-4).epsilon(1e-12));
        CHECK(est.method == DragMethod::Asymptotic);
        CHECK(est.regime.has_value());
        CHECK(*est.regime == 0.0);
    }
    SUBCASE("bounded drag below the critical exponent") {
        const DragEstimate est = asym_drag(1e-6, 0.1, 0.0);
        CHECK(*est.regime == doctest::Approx(100.0));
        CHECK(est.value == doctest::Approx(kSixPi * 100.0).epsilon(1e-10));
    }
    SUBCASE("logarithmic branch at the critical exponent") {
        const DragEstimate est = asym_drag(1e-6, 0.1, 1.0 / 3.0);
        const double expected =
            4.5 * std::numbers::pi * std::abs(std::log(1e-6)) / std::pow(0.1, 3);
        CHECK(est.value == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("branch selection follows beta") {
        const double h = 1e-4, eps = 1e-4, alpha = 0.0; // beta = 0.01
        const DragEstimate small = asym_drag(h, eps, alpha);
        CHECK(small.value == doctest::Approx(asym_drag_small_beta(h, eps, alpha).value));
        const DragEstimate large = asym_drag(1e-6, 0.1, 0.0); // beta = 100
        CHECK(large.value == doctest::Approx(asym_drag_large_beta(1e-6, 0.1, 0.0).value));
    }
}

TEST_CASE("drag monotonicity") {
    const GapProfile rough = GapProfile::rough_power(0.05, 0.25);
    double prev = 1e300;
    for (double h : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
        const double v = drag_integral(rough, h).value;
        CHECK(v < prev);
        prev = v;
    }
    const double h = 1e-4;
    prev = 1e300;
    for (double eps : {0.0, 1e-3, 1e-2, 0.1, 0.5}) {
        const double v = drag_integral(GapProfile::rough_power(eps, 0.25), h).value;
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("regime consistency of exact and asymptotic drag") {
    SUBCASE("small beta") {
        const double h = 1e-4, eps = 1e-4, alpha = 0.0; // beta = 0.01
        const double exact = drag_integral(GapProfile::rough_power(eps, alpha), h).value;
        const double denom = h + lambda_alpha(alpha) * eps * std::pow(h, 0.5 * (alpha + 1.0));
        CHECK(std::abs(exact * denom / kSixPi - 1.0) <= 0.05);
    }
    SUBCASE("large beta at alpha = 0") {
        const double h = 1e-6, eps = 0.1;
        const double exact = drag_integral(GapProfile::rough_power(eps, 0.0), h).value;
        CHECK(exact * eps * eps / kSixPi == doctest::Approx(1.0).epsilon(0.10));
    }
}

TEST_CASE("roughness resolves the no-collision paradox: drag grows slower than 1/h") {
    for (double alpha : {0.0, 0.5}) {
        const double eps = 0.1;
        const GapProfile rough = GapProfile::rough_power(eps, alpha);
        std::vector<double> lh, lf;
        for (double h : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5}) {
            lh.push_back(std::log(h));
            lf.push_back(std::log(drag_integral(rough, h).value));
        }
        // least squares slope of ln F against ln h
        double mx = 0, my = 0;
        for (size_t i = 0; i < lh.size(); ++i) {
            mx += lh[i];
            my += lf[i];
        }
        mx /= lh.size();
        my /= lf.size();
        double num = 0, den = 0;
        for (size_t i = 0; i < lh.size(); ++i) {
            num += (lh[i] - mx) * (lf[i] - my);
            den += (lh[i] - mx) * (lh[i] - mx);
        }
        const double slope = num / den; // expect -gamma
        const double gamma = std::max((3.0 * alpha - 1.0) / (alpha + 1.0), 0.0);
        CHECK(std::abs(slope + gamma) <= 0.08);
        CHECK(slope > -1.0);
    }
}
