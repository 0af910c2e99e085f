#ifndef LUBRIDRAG_CORRUGATED_HPP
#define LUBRIDRAG_CORRUGATED_HPP

#include <utility>

#include "lubridrag/drag_estimate.hpp"

namespace lubridrag::corrugated {

/// Eigenvalues of the 2x2 mobility tensor of the homogenized wall, taken in
/// its orthonormal eigenbasis. Supplied by the user (from literature values
/// or an external cell-problem solver); both must be positive.
struct MobilityTensor {
    double beta_x = 0.0;
    double beta_y = 0.0;
};

/// Extremal data of the corrugation: amplitude eps and depth = -min of the
/// oscillation pattern (max = 0 convention).
struct CorrugationData {
    double eps = 0.0;
    double depth = 0.0;
};

/// Drag bracket for a smooth sphere over the corrugated wall,
///   6*pi/(h + depth*eps)  <=  F(h)  <=  6*pi/h,
/// valid in every parameter regime. The err_estimate fields carry the
/// |ln(.)| remainder envelopes (constants unknown, reported with constant 1).
std::pair<DragEstimate, DragEstimate> drag_bounds(double h, const CorrugationData& cd);

/// Effective isotropic slip scale (beta_x + beta_y)/2.
double effective_beta(const MobilityTensor& mt);

/// Shifted-wall approximation 6*pi/(h + eps*beta), intended for
/// eps << h << 1; flagged when eps/h > 0.1.
DragEstimate shifted_wall_drag(double h, double eps, double beta);

} // namespace lubridrag::corrugated

#endif
