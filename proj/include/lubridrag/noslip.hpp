#ifndef LUBRIDRAG_NOSLIP_HPP
#define LUBRIDRAG_NOSLIP_HPP

#include <functional>
#include <optional>

#include "lubridrag/drag_estimate.hpp"
#include "lubridrag/geometry.hpp"
#include "lubridrag/quadrature.hpp"

namespace lubridrag::noslip {

/// Near-contact drag of a solid with surface gamma_s over a no-slip wall,
///     F(h) = 6*pi * int_0^r0 r^3 / (h + gamma_s(r))^3 dr,
/// evaluated by adaptive quadrature. Valid for SmoothSphere and RoughPower.
DragEstimate drag_integral(const GapProfile& profile, double h, const QuadConfig& cfg = {});

/// Same reduced integral for an arbitrary gap shape; used by tests and by
/// the flat-gap sanity checks.
DragEstimate drag_reduced_integral(const std::function<double(double)>& gamma, double h,
                                   double r0, const QuadConfig& cfg = {});

/// Roughness reduction factor
///     I(beta) = int_0^inf s^3 / (1 + s^2/2 + beta*s^(1+alpha))^3 ds,
/// the factor multiplying 6*pi/h in the small-gap drag. I(0) = 1.
QuadResult reduction_factor(double beta, double alpha, const QuadConfig& cfg = {});

/// Remainder-scale integral
///     J(beta, h) = int_0^{r0/sqrt(h)} s^7 / (1 + s^2/2 + beta*s^(1+alpha))^4 ds,
/// which grows like |ln h| and bounds the error of the leading-order drag.
QuadResult remainder_integral(double beta, double h, double alpha, double r0,
                              const QuadConfig& cfg = {});

/// Closed form of the linear response coefficient of the reduction factor,
///     lambda_alpha = 2^((alpha+1)/2) * pi * (3+alpha)(1-alpha^2) / (8 cos(pi*alpha/2)),
/// so that I(beta) = 1/(1 + lambda_alpha*beta) + O(beta^2). Finite limit 4 as
/// alpha -> 1; rejected for alpha >= 1.
double lambda_alpha(double alpha);

/// Large-beta coefficient mu_alpha, computed by quadrature:
///   alpha < 1/3:  int_0^inf s^3 / (s^2/2 + s^(1+alpha))^3 ds
///   alpha > 1/3:  1/(1+alpha) * int_0^inf u^((3-alpha)/(1+alpha)) / (1+u)^3 du
/// No such constant exists in the logarithmic case; the band
/// |alpha - 1/3| < 1e-3 is rejected as a domain error.
double mu_alpha(double alpha, const QuadConfig& cfg = {});

/// lambda_alpha and mu_alpha bundled for one exponent (mu absent in the
/// alpha = 1/3 band).
struct AlphaConstants {
    double alpha = 0.0;
    double lambda_alpha = 0.0;
    std::optional<double> mu_alpha;
};

AlphaConstants alpha_constants(double alpha, const QuadConfig& cfg = {});

/// True when alpha falls in the logarithmic band treated as alpha = 1/3.
bool is_log_branch(double alpha);

/// Small-beta closed form 6*pi / (h + lambda_alpha * eps * h^((alpha+1)/2)).
DragEstimate asym_drag_small_beta(double h, double eps, double alpha);

/// Large-beta closed forms:
///   alpha > 1/3:  6*pi*mu_alpha * eps^(-4/(1+alpha)) * h^(-(3*alpha-1)/(alpha+1))
///   alpha = 1/3:  (9*pi/2) * |ln h| / eps^3
///   alpha < 1/3:  6*pi*mu_alpha * eps^(-2/(1-alpha))
DragEstimate asym_drag_large_beta(double h, double eps, double alpha, const QuadConfig& cfg = {});

/// Regime-dispatching asymptotic drag: the small-beta branch for
/// regime_beta <= 1, the matching large-beta branch otherwise. The returned
/// regime field carries beta.
DragEstimate asym_drag(double h, double eps, double alpha, const QuadConfig& cfg = {});

} // namespace lubridrag::noslip

#endif
