#include "lubridrag/drag_estimate.hpp"

namespace lubridrag {

std::string to_string(DragMethod method) {
    switch (method) {
    case DragMethod::ExactIntegral: return "exact_integral";
    case DragMethod::Asymptotic: return "asymptotic";
    case DragMethod::LowerBound: return "lower_bound";
    case DragMethod::UpperBound: return "upper_bound";
    }
    return "unknown";
}

} // namespace lubridrag
