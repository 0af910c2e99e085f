#include "lubridrag/geometry.hpp"

#include <cmath>
#include <string>

namespace lubridrag {

namespace {

void check_r0(double r0) {
    if (!(r0 > 0.0) || !(r0 <= 1.0))
        throw std::invalid_argument("GapProfile: r0 must lie in (0, 1]");
}

void check_rough(double eps, double alpha) {
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("GapProfile: eps must be finite and >= 0");
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("GapProfile: alpha must lie in [0, 1)");
}

void check_radius(const GapProfile& profile, double r) {
    if (profile.kind == ProfileKind::Corrugated)
        throw std::invalid_argument(
            "gamma_s: corrugated profiles carry only extremal data; "
            "their oscillation shape is not evaluated");
    if (!(r >= 0.0) || !(r <= profile.r0))
        throw std::invalid_argument("gamma_s: radius " + std::to_string(r)
                                    + " outside [0, r0=" + std::to_string(profile.r0) + "]");
}

} // namespace

GapProfile GapProfile::smooth_sphere(double r0) {
    check_r0(r0);
    return GapProfile{ProfileKind::SmoothSphere, 0.0, 0.0, 0.0, r0};
}

GapProfile GapProfile::rough_power(double eps, double alpha, double r0) {
    check_r0(r0);
    check_rough(eps, alpha);
    return GapProfile{ProfileKind::RoughPower, eps, alpha, 0.0, r0};
}

GapProfile GapProfile::corrugated(double eps, double depth, double r0) {
    check_r0(r0);
    if (!(eps > 0.0))
        throw std::invalid_argument("GapProfile: corrugation amplitude must be > 0");
    if (!(depth >= 0.0))
        throw std::invalid_argument("GapProfile: corrugation depth must be >= 0");
    return GapProfile{ProfileKind::Corrugated, eps, 0.0, depth, r0};
}

double gamma_s(const GapProfile& profile, double r) {
    check_radius(profile, r);
    const double sphere = 1.0 - std::sqrt(1.0 - r * r);
    if (profile.eps == 0.0) return sphere;
    return sphere + profile.eps * std::pow(r, 1.0 + profile.alpha);
}

double gamma_s_prime(const GapProfile& profile, double r) {
    check_radius(profile, r);
    const double sphere = r / std::sqrt(1.0 - r * r);
    if (profile.eps == 0.0) return sphere;
    return sphere + profile.eps * (1.0 + profile.alpha) * std::pow(r, profile.alpha);
}

double gap(const GapProfile& profile, double h, double r) {
    if (!(h > 0.0))
        throw std::invalid_argument("gap: h must be > 0");
    return h + gamma_s(profile, r);
}

double regime_beta(double h, double eps, double alpha) {
    if (!(h > 0.0))
        throw std::invalid_argument("regime_beta: h must be > 0");
    check_rough(eps, alpha);
    if (eps == 0.0) return 0.0;
    return eps * std::pow(h, 0.5 * (alpha - 1.0));
}

} // namespace lubridrag
