#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lubridrag/quadrature.hpp"

using namespace lubridrag;

TEST_CASE("polynomial exactness") {
    const QuadResult q = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(q.err_estimate <= 1e-10);
    CHECK(q.n_evals >= 15);
}

TEST_CASE("known improper integrals via the semi-infinite transform") {
    SUBCASE("exponential decay") {
        const QuadResult q = integrate_semi_infinite([](double s) { return std::exp(-s); }, 0.0);
        CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("base profile integral equals one") {
        auto f = [](double s) {
            const double d = 1.0 + 0.5 * s * s;
            return s * s * s / (d * d * d);
        };
        const QuadResult q = integrate_semi_infinite(f, 0.0);
        CHECK(q.value == doctest::Approx(1.0).epsilon(1e-11));
    }
    SUBCASE("linear response integrand matches 3*sqrt(2)*pi/8") {
        auto f = [](double s) {
            const double d = 1.0 + 0.5 * s * s;
            return 3.0 * s * s * s * s / (d * d * d * d);
        };
        const QuadResult q = integrate_semi_infinite(f, 0.0);
        CHECK(q.value == doctest::Approx(3.0 * std::numbers::sqrt2 * std::numbers::pi / 8.0)
                             .epsilon(1e-11));
    }
    SUBCASE("exact antiderivative case") {
        // s^3/(s^2/2 + s)^3 = (1 + s/2)^-3, integral 1
        auto f = [](double s) {
            const double d = 0.5 * s * s + s;
            return s * s * s / (d * d * d);
        };
        const QuadResult q = integrate_semi_infinite(f, 0.0);
        CHECK(q.value == doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("error estimate honors the requested tolerance") {
    QuadConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-12;
    auto peaked = [](double x) { return 1.0 / (1e-6 + x * x); };
    const QuadResult q = integrate(peaked, 0.0, 1.0, cfg);
    const double exact = std::atan(1.0 / 1e-3) / 1e-3;
    CHECK(std::abs(q.value - exact) <= 1e-9 * exact);
    CHECK(q.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(q.value)));
}

TEST_CASE("linearity and interval additivity") {
    auto f = [](double x) { return std::sin(3.0 * x) + 0.25 * x; };
    auto g = [](double x) { return std::exp(-x) * x * x; };
    const double a = 0.0, b = 2.5;
    const QuadResult qf = integrate(f, a, b);
    const QuadResult qg = integrate(g, a, b);
    const QuadResult qfg = integrate([&](double x) { return 2.0 * f(x) - 3.0 * g(x); }, a, b);
    CHECK(qfg.value == doctest::Approx(2.0 * qf.value - 3.0 * qg.value).epsilon(1e-12));

    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> mid(0.3, 2.2);
    for (int i = 0; i < 5; ++i) {
        const double c = mid(rng);
        const QuadResult left = integrate(f, a, c);
        const QuadResult right = integrate(f, c, b);
        CHECK(std::abs(left.value + right.value - qf.value)
              <= left.err_estimate + right.err_estimate + qf.err_estimate + 1e-14);
    }
}

TEST_CASE("tightening the tolerance never degrades the result") {
    auto f = [](double x) { return std::sqrt(x) * std::cos(10.0 * x); };
    QuadConfig loose;
    loose.abs_tol = loose.rel_tol = 1e-6;
    QuadConfig tight;
    tight.abs_tol = tight.rel_tol = 1e-7;
    const QuadResult ql = integrate(f, 0.0, 3.0, loose);
    const QuadResult qt = integrate(f, 0.0, 3.0, tight);
    CHECK(std::abs(ql.value - qt.value) <= ql.err_estimate + qt.err_estimate);
    CHECK(qt.err_estimate <= ql.err_estimate * 1.0001);
}

TEST_CASE("failure modes") {
    SUBCASE("non-finite integrand") {
        CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0),
                        NonFiniteError);
    }
    SUBCASE("budget exhaustion") {
        QuadConfig cfg;
        cfg.abs_tol = cfg.rel_tol = 1e-14;
        cfg.max_subdivisions = 3;
        CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(std::abs(x - 0.321)); },
                                  0.0, 1.0, cfg),
                        NonConvergenceError);
    }
    SUBCASE("bad interval") {
        CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
    }
}
