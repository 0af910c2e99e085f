#ifndef LUBRIDRAG_DYNAMICS_HPP
#define LUBRIDRAG_DYNAMICS_HPP

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lubridrag/quadrature.hpp"

namespace lubridrag::dynamics {

/// A drag model is any h -> F(h) > 0 for h > 0; exact integrals and
/// asymptotic formulas plug in interchangeably.
using DragModel = std::function<double(double)>;

struct State {
    double t = 0.0;
    double h = 0.0;
    double v = 0.0;
};

enum class OutcomeKind { Contact, Rest, Truncated };

struct Trajectory {
    std::vector<State> samples; // accepted steps, strictly increasing in t
    OutcomeKind outcome = OutcomeKind::Truncated;
    double contact_time = 0.0; // Contact only
    double rest_gap = 0.0;     // Rest only
};

class StepFailureError : public std::runtime_error {
public:
    explicit StepFailureError(const std::string& what) : std::runtime_error(what) {}
};

class NonFiniteDragError : public std::runtime_error {
public:
    explicit NonFiniteDragError(const std::string& what) : std::runtime_error(what) {}
};

class IndeterminateError : public std::runtime_error {
public:
    explicit IndeterminateError(const std::string& what) : std::runtime_error(what) {}
};

/// Integrates h'' + h' F(h) = 0 from (h0, v0) with an adaptive embedded
/// Dormand-Prince 5(4) pair and PI step control. While the solid moves fast
/// toward the wall (|v| above 1e-3 |v0| with v < 0) the gap h is used as the
/// independent variable, which keeps accuracy uniform as h -> 0; otherwise
/// time is. Contact is declared when h reaches 1e-12 h0 (drag models diverge
/// at h = 0), rest when |v| falls below 1e-10 |v0| away from contact.
Trajectory simulate(const DragModel& drag, double h0, double v0, double t_max, double tol);

/// First integral of the contact equation: the velocity at gap h along a
/// descending trajectory, v0 + int_h^h0 F(s) ds. Physical only while the
/// result stays negative.
double velocity_at_gap(const DragModel& drag, double h0, double v0, double h,
                       const QuadConfig& cfg = {});

/// Decides whether the solid reaches the wall in finite time: true iff the
/// drag impulse int_0^h0 F converges (assessed by a geometric sequence of
/// vanishing lower limits with a Richardson-style tail estimate) and its
/// value is below |v0|. Throws IndeterminateError when the increment ratios
/// do not classify cleanly.
bool predicts_contact(const DragModel& drag, double h0, double v0, const QuadConfig& cfg = {});

/// CSV export: header "t,h,v", one row per sample, 17 significant digits.
void write_csv(const Trajectory& trajectory, std::ostream& os);

} // namespace lubridrag::dynamics

#endif
