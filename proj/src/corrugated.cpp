#include "lubridrag/corrugated.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lubridrag::corrugated {

namespace {
constexpr double kSixPi = 6.0 * std::numbers::pi;
}

std::pair<DragEstimate, DragEstimate> drag_bounds(double h, const CorrugationData& cd) {
    if (!(h > 0.0)) throw std::invalid_argument("drag_bounds: h must be > 0");
    if (!(cd.eps > 0.0)) throw std::invalid_argument("drag_bounds: eps must be > 0");
    if (!(cd.depth >= 0.0)) throw std::invalid_argument("drag_bounds: depth must be >= 0");

    const double shifted = h + cd.depth * cd.eps;
    DragEstimate lower;
    lower.value = kSixPi / shifted;
    lower.method = DragMethod::LowerBound;
    lower.err_estimate = std::abs(std::log(shifted));
    DragEstimate upper;
    upper.value = kSixPi / h;
    upper.method = DragMethod::UpperBound;
    upper.err_estimate = std::abs(std::log(h));
    return {lower, upper};
}

double effective_beta(const MobilityTensor& mt) {
    if (!(mt.beta_x > 0.0) || !(mt.beta_y > 0.0))
        throw std::invalid_argument("effective_beta: mobility eigenvalues must be > 0");
    return 0.5 * (mt.beta_x + mt.beta_y);
}

DragEstimate shifted_wall_drag(double h, double eps, double beta) {
    if (!(h > 0.0)) throw std::invalid_argument("shifted_wall_drag: h must be > 0");
    if (!(eps >= 0.0)) throw std::invalid_argument("shifted_wall_drag: eps must be >= 0");
    if (!(beta >= 0.0)) throw std::invalid_argument("shifted_wall_drag: beta must be >= 0");
    DragEstimate est;
    est.value = kSixPi / (h + eps * beta);
    est.method = DragMethod::Asymptotic;
    est.regime = eps / h;
    est.regime_warning = eps / h > 0.1;
    return est;
}

} // namespace lubridrag::corrugated
