#include "lubridrag/slip.hpp"

#include <cmath>
#include <numbers>

namespace lubridrag::slip {

namespace {

void check_slip(const SlipParams& sp) {
    if (!(sp.beta_s > 0.0) || !(sp.beta_p > 0.0))
        throw std::invalid_argument("slip: both slip lengths must be > 0 "
                                    "(use the noslip module for the no-slip case)");
    if (!std::isfinite(sp.beta_s) || !std::isfinite(sp.beta_p))
        throw std::invalid_argument("slip: slip lengths must be finite");
}

double denom(const RobinCoeffs& rc) {
    return 12.0 + 4.0 * (rc.alpha_s + rc.alpha_p) + rc.alpha_s * rc.alpha_p;
}

} // namespace

RobinCoeffs robin_coeffs(const GapProfile& profile, double h, double r, const SlipParams& sp) {
    check_slip(sp);
    const double hg = gap(profile, h, r);
    const double gp = gamma_s_prime(profile, r);
    const double slope = 1.0 + gp * gp;
    RobinCoeffs rc;
    rc.alpha_s = slope * std::sqrt(slope) * hg / sp.beta_s;
    rc.alpha_p = hg / sp.beta_p;
    return rc;
}

CubicProfile minimizing_cubic(const RobinCoeffs& rc) {
    if (!(rc.alpha_s >= 0.0) || !(rc.alpha_p >= 0.0))
        throw std::invalid_argument("minimizing_cubic: Robin coefficients must be >= 0");
    const double d = denom(rc);
    CubicProfile p;
    p.c3 = -2.0 * (rc.alpha_s + rc.alpha_s * rc.alpha_p + rc.alpha_p) / d;
    p.c2 = 3.0 * (2.0 + rc.alpha_s) * rc.alpha_p / d;
    p.c1 = 6.0 * (2.0 + rc.alpha_s) / d;
    return p;
}

double drag_integrand_i1(const RobinCoeffs& rc) {
    const double as = rc.alpha_s, ap = rc.alpha_p;
    const double d = denom(rc);
    const double num = as * as * ap * ap + 5.0 * (as * as * ap + ap * ap * as)
                       + 4.0 * (as * as + ap * ap) + 20.0 * as * ap;
    return 12.0 * num / (d * d);
}

double drag_integrand_i2(const RobinCoeffs& rc) {
    const double d = denom(rc);
    return 144.0 * (rc.alpha_s + rc.alpha_p) / (d * d);
}

DragEstimate drag_integral_slip(const GapProfile& profile, double h, const SlipParams& sp,
                                const QuadConfig& cfg) {
    if (!(h > 0.0)) throw std::invalid_argument("drag_integral_slip: h must be > 0");
    check_slip(sp);
    if (profile.kind == ProfileKind::Corrugated)
        throw std::invalid_argument("drag_integral_slip: corrugated profiles not supported");

    auto integrand = [&profile, h, &sp](double r) {
        const RobinCoeffs rc = robin_coeffs(profile, h, r, sp);
        const double hg = h + gamma_s(profile, r);
        return (drag_integrand_i1(rc) + drag_integrand_i2(rc)) * r * r * r / (hg * hg * hg);
    };
    QuadResult q = integrate(integrand, 0.0, profile.r0, cfg);
    DragEstimate est;
    est.value = 0.5 * std::numbers::pi * q.value;
    est.method = DragMethod::ExactIntegral;
    est.err_estimate = 0.5 * std::numbers::pi * q.err_estimate;
    return est;
}

DragEstimate hocking_asym(double h, const SlipParams& sp) {
    if (!(h > 0.0)) throw std::invalid_argument("hocking_asym: h must be > 0");
    check_slip(sp);
    DragEstimate est;
    est.value = std::numbers::pi * (1.0 / sp.beta_s + 1.0 / sp.beta_p) * std::abs(std::log(h));
    est.method = DragMethod::Asymptotic;
    const double severity = std::max(h / sp.beta_s, h / sp.beta_p);
    est.regime = severity;
    est.regime_warning = severity > 0.1;
    return est;
}

std::pair<double, double> drag_bounds_order_one(double h) {
    if (!(h > 0.0)) throw std::invalid_argument("drag_bounds_order_one: h must be > 0");
    constexpr double c_lower = 1.0;
    const double c_upper = 6.0 * std::numbers::pi * 1.1;
    return {c_lower / h, c_upper / h};
}

} // namespace lubridrag::slip
