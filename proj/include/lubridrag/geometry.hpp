#ifndef LUBRIDRAG_GEOMETRY_HPP
#define LUBRIDRAG_GEOMETRY_HPP

#include <stdexcept>

namespace lubridrag {

enum class ProfileKind { SmoothSphere, RoughPower, Corrugated };

/// Surface profile of the solid near its lower tip. For SmoothSphere and
/// RoughPower the height above the tip is
///     gamma_s(r) = 1 - sqrt(1 - r^2) + eps * r^(1+alpha),   0 <= r <= r0,
/// the smooth sphere being the eps = 0 case. Corrugated profiles carry only
/// their extremal data (amplitude eps, depth = -min of the wall oscillation);
/// the oscillation shape itself is never evaluated.
struct GapProfile {
    ProfileKind kind = ProfileKind::SmoothSphere;
    double eps = 0.0;    // roughness / corrugation amplitude
    double alpha = 0.0;  // roughness exponent, in [0, 1)
    double depth = 0.0;  // corrugated only: -min of the oscillation
    double r0 = 0.5;     // chart cutoff radius, in (0, 1]

    static GapProfile smooth_sphere(double r0 = 0.5);
    static GapProfile rough_power(double eps, double alpha, double r0 = 0.5);
    static GapProfile corrugated(double eps, double depth, double r0 = 0.5);
};

/// Solid surface height gamma_s(r) above the tip. Domain error outside
/// [0, r0] or for corrugated profiles.
double gamma_s(const GapProfile& profile, double r);

/// Analytic derivative gamma_s'(r) = r/sqrt(1-r^2) + eps*(1+alpha)*r^alpha.
double gamma_s_prime(const GapProfile& profile, double r);

/// Wall-to-solid gap h + gamma_s(r); strictly positive for h > 0.
double gap(const GapProfile& profile, double h, double r);

/// Roughness regime parameter beta = eps * h^((alpha-1)/2). Zero for eps = 0;
/// beta << 1 means roughness is negligible, beta >> 1 means it dominates.
double regime_beta(double h, double eps, double alpha);

} // namespace lubridrag

#endif
