#ifndef LUBRIDRAG_DRAG_ESTIMATE_HPP
#define LUBRIDRAG_DRAG_ESTIMATE_HPP

#include <optional>
#include <string>

namespace lubridrag {

enum class DragMethod { ExactIntegral, Asymptotic, LowerBound, UpperBound };

/// A drag value together with how it was obtained. `regime` carries the
/// dimensionless group that decides the validity of an asymptotic formula
/// (present iff method == Asymptotic); `err_estimate` is a quadrature error
/// for exact integrals and a remainder envelope scale for bounds.
struct DragEstimate {
    double value = 0.0;
    DragMethod method = DragMethod::ExactIntegral;
    std::optional<double> regime;
    std::optional<double> err_estimate;
    bool regime_warning = false;
};

std::string to_string(DragMethod method);

} // namespace lubridrag

#endif
