#include "lubridrag/noslip.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lubridrag::noslip {

namespace {

constexpr double kSixPi = 6.0 * std::numbers::pi;
constexpr double kLogBandHalfWidth = 1e-3;

void check_rough_params(double h, double eps, double alpha) {
    if (!(h > 0.0)) throw std::invalid_argument("noslip: h must be > 0");
    if (!(eps >= 0.0)) throw std::invalid_argument("noslip: eps must be >= 0");
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("noslip: alpha must lie in [0, 1)");
}

} // namespace

bool is_log_branch(double alpha) {
    return std::abs(alpha - 1.0 / 3.0) < kLogBandHalfWidth;
}

DragEstimate drag_reduced_integral(const std::function<double(double)>& gamma, double h,
                                   double r0, const QuadConfig& cfg) {
    if (!(h > 0.0)) throw std::invalid_argument("drag_reduced_integral: h must be > 0");
    auto integrand = [&gamma, h](double r) {
        const double g = h + gamma(r);
        return r * r * r / (g * g * g);
    };
    QuadResult q = integrate(integrand, 0.0, r0, cfg);
    DragEstimate est;
    est.value = kSixPi * q.value;
    est.method = DragMethod::ExactIntegral;
    est.err_estimate = kSixPi * q.err_estimate;
    return est;
}

DragEstimate drag_integral(const GapProfile& profile, double h, const QuadConfig& cfg) {
    if (profile.kind == ProfileKind::Corrugated)
        throw std::invalid_argument("drag_integral: use the corrugated-wall bounds for "
                                    "corrugated profiles");
    return drag_reduced_integral([&profile](double r) { return gamma_s(profile, r); }, h,
                                 profile.r0, cfg);
}

QuadResult reduction_factor(double beta, double alpha, const QuadConfig& cfg) {
    if (!(beta >= 0.0)) throw std::invalid_argument("reduction_factor: beta must be >= 0");
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("reduction_factor: alpha must lie in [0, 1)");
    const double p = 1.0 + alpha;
    auto integrand = [beta, p](double s) {
        const double d = 1.0 + 0.5 * s * s + beta * std::pow(s, p);
        return s * s * s / (d * d * d);
    };
    return integrate_semi_infinite(integrand, 0.0, cfg);
}

QuadResult remainder_integral(double beta, double h, double alpha, double r0,
                              const QuadConfig& cfg) {
    if (!(beta >= 0.0)) throw std::invalid_argument("remainder_integral: beta must be >= 0");
    if (!(h > 0.0)) throw std::invalid_argument("remainder_integral: h must be > 0");
    if (!(r0 > 0.0) || !(r0 <= 1.0))
        throw std::invalid_argument("remainder_integral: r0 must lie in (0, 1]");
    const double p = 1.0 + alpha;
    auto integrand = [beta, p](double s) {
        const double d = 1.0 + 0.5 * s * s + beta * std::pow(s, p);
        const double d2 = d * d;
        const double s3 = s * s * s;
        return s3 * s3 * s / (d2 * d2);
    };
    return integrate(integrand, 0.0, r0 / std::sqrt(h), cfg);
}

double lambda_alpha(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("lambda_alpha: alpha must lie in [0, 1) "
                                    "(cos(pi*alpha/2) vanishes at alpha = 1)");
    using std::numbers::pi;
    return std::pow(2.0, 0.5 * (alpha + 1.0)) * pi * (3.0 + alpha) * (1.0 - alpha * alpha)
           / (8.0 * std::cos(0.5 * pi * alpha));
}

double mu_alpha(double alpha, const QuadConfig& cfg) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("mu_alpha: alpha must lie in [0, 1)");
    if (is_log_branch(alpha))
        throw std::invalid_argument("mu_alpha: no power-law constant exists near alpha = 1/3; "
                                    "the drag there is logarithmic in beta");
    if (alpha < 1.0 / 3.0) {
        const double p = 1.0 + alpha;
        auto integrand = [p](double s) {
            const double d = 0.5 * s * s + std::pow(s, p);
            return s * s * s / (d * d * d);
        };
        return integrate_semi_infinite(integrand, 0.0, cfg).value;
    }
    const double q = (3.0 - alpha) / (1.0 + alpha);
    auto integrand = [q](double u) {
        const double d = 1.0 + u;
        return std::pow(u, q) / (d * d * d);
    };
    return integrate_semi_infinite(integrand, 0.0, cfg).value / (1.0 + alpha);
}

AlphaConstants alpha_constants(double alpha, const QuadConfig& cfg) {
    AlphaConstants c;
    c.alpha = alpha;
    c.lambda_alpha = lambda_alpha(alpha);
    if (!is_log_branch(alpha)) c.mu_alpha = mu_alpha(alpha, cfg);
    return c;
}

DragEstimate asym_drag_small_beta(double h, double eps, double alpha) {
    check_rough_params(h, eps, alpha);
    DragEstimate est;
    est.value = kSixPi / (h + lambda_alpha(alpha) * eps * std::pow(h, 0.5 * (alpha + 1.0)));
    est.method = DragMethod::Asymptotic;
    est.regime = regime_beta(h, eps, alpha);
    return est;
}

DragEstimate asym_drag_large_beta(double h, double eps, double alpha, const QuadConfig& cfg) {
    check_rough_params(h, eps, alpha);
    if (!(eps > 0.0))
        throw std::invalid_argument("asym_drag_large_beta: eps must be > 0 (beta >> 1 "
                                    "is unreachable for a smooth solid)");
    DragEstimate est;
    est.method = DragMethod::Asymptotic;
    est.regime = regime_beta(h, eps, alpha);
    if (is_log_branch(alpha)) {
        est.value = 4.5 * std::numbers::pi * std::abs(std::log(h)) / (eps * eps * eps);
    } else if (alpha > 1.0 / 3.0) {
        const double mu = mu_alpha(alpha, cfg);
        est.value = kSixPi * mu * std::pow(eps, -4.0 / (1.0 + alpha))
                    * std::pow(h, -(3.0 * alpha - 1.0) / (alpha + 1.0));
    } else {
        const double mu = mu_alpha(alpha, cfg);
        est.value = kSixPi * mu * std::pow(eps, -2.0 / (1.0 - alpha));
    }
    return est;
}

DragEstimate asym_drag(double h, double eps, double alpha, const QuadConfig& cfg) {
    check_rough_params(h, eps, alpha);
    const double beta = regime_beta(h, eps, alpha);
    if (beta <= 1.0) return asym_drag_small_beta(h, eps, alpha);
    return asym_drag_large_beta(h, eps, alpha, cfg);
}

} // namespace lubridrag::noslip
