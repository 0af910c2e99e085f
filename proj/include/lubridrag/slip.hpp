#ifndef LUBRIDRAG_SLIP_HPP
#define LUBRIDRAG_SLIP_HPP

#include <utility>

#include "lubridrag/drag_estimate.hpp"
#include "lubridrag/geometry.hpp"
#include "lubridrag/quadrature.hpp"

namespace lubridrag::slip {

/// Navier slip lengths of the solid surface and the wall. Surface curvature
/// is absorbed into beta_s, so no separate curvature term appears in the
/// Robin coefficients.
struct SlipParams {
    double beta_s = 0.0;
    double beta_p = 0.0;
};

/// Per-radius Robin coefficients of the reduced 1-D profile problem:
///   alpha_s = (1 + gamma_s'(r)^2)^(3/2) * (h + gamma_s(r)) / beta_s
///   alpha_p = (h + gamma_s(r)) / beta_p
struct RobinCoeffs {
    double alpha_s = 0.0;
    double alpha_p = 0.0;
};

/// Cubic across-gap velocity profile Phi(t) = c3 t^3 + c2 t^2 + c1 t with
/// Phi(1) = 1. Coefficients are uniformly bounded: |c3|<=2, |c2|<=3, |c1|<=1.
struct CubicProfile {
    double c3 = 0.0, c2 = 0.0, c1 = 0.0;
    double value(double t) const { return ((c3 * t + c2) * t + c1) * t; }
    double deriv(double t) const { return (3.0 * c3 * t + 2.0 * c2) * t + c1; }
    double second_deriv(double t) const { return 6.0 * c3 * t + 2.0 * c2; }
};

/// Robin coefficients at radius r. Both slip lengths must be positive
/// (the no-slip case belongs to the noslip module).
RobinCoeffs robin_coeffs(const GapProfile& profile, double h, double r, const SlipParams& sp);

/// Minimizer of int_0^1 |Phi''|^2 + alpha_s |Phi'(1)|^2 + alpha_p |Phi'(0)|^2
/// over cubics with Phi(0) = 0, Phi(1) = 1:
///   c3 = -2(aS + aS*aP + aP)/D, c2 = 3(2+aS)*aP/D, c1 = 6(2+aS)/D,
///   D  = 12 + 4(aS+aP) + aS*aP.
CubicProfile minimizing_cubic(const RobinCoeffs& rc);

/// The two components of the normalized per-radius dissipation; their sum
/// is the minimal profile energy above. I1 -> 12, I2 -> 0 in the no-slip
/// limit; both vanish under perfect slip.
double drag_integrand_i1(const RobinCoeffs& rc);
double drag_integrand_i2(const RobinCoeffs& rc);

/// Exact reduced drag with slip,
///   F(h) = (pi/2) * int_0^r0 (I1(r) + I2(r)) r^3 / (h + gamma_s(r))^3 dr.
/// Accepts RoughPower profiles as well (the integrand only needs gamma_s and
/// its derivative), an extension beyond the smooth-sphere setting.
DragEstimate drag_integral_slip(const GapProfile& profile, double h, const SlipParams& sp,
                                const QuadConfig& cfg = {});

/// Hocking-type small-gap law pi*(1/beta_s + 1/beta_p)*|ln h|. Flags the
/// result when h/beta exceeds 0.1 on either surface (out of regime).
DragEstimate hocking_asym(double h, const SlipParams& sp);

/// Envelope (c'/h, C'/h) for the order-one regime where some h/beta stays
/// bounded below. The constants (1, 6*pi*1.1) are engineering choices; the
/// theory proves existence only.
std::pair<double, double> drag_bounds_order_one(double h);

} // namespace lubridrag::slip

#endif
