#include "lubridrag/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace lubridrag::dynamics {

namespace {

using Vec2 = std::array<double, 2>;
using Rhs = std::function<Vec2(double, const Vec2&)>;

// Dormand-Prince 5(4) coefficients.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,      0.0,        500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84,  0.0};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct StepResult {
    Vec2 y;
    double err; // normalized, accept when <= 1
};

StepResult dp45_step(const Rhs& f, double x, const Vec2& y, double dx, double tol) {
    Vec2 k[7];
    k[0] = f(x, y);
    for (int s = 1; s < 7; ++s) {
        Vec2 ys = y;
        for (int j = 0; j < s; ++j) {
            ys[0] += dx * kA[s][j] * k[j][0];
            ys[1] += dx * kA[s][j] * k[j][1];
        }
        k[s] = f(x + kC[s] * dx, ys);
    }
    Vec2 y5 = y, y4 = y;
    for (int s = 0; s < 7; ++s) {
        y5[0] += dx * kB5[s] * k[s][0];
        y5[1] += dx * kB5[s] * k[s][1];
        y4[0] += dx * kB4[s] * k[s][0];
        y4[1] += dx * kB4[s] * k[s][1];
    }
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        const double e = (y5[i] - y4[i]) / scale;
        err += e * e;
    }
    err = std::sqrt(0.5 * err);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    return {y5, err};
}

// PI step controller (Hairer-style), shared by both marching modes.
class StepController {
public:
    double next_factor(double err) {
        constexpr double kSafety = 0.9, kMinFac = 0.2, kMaxFac = 5.0;
        constexpr double kAlpha = 0.7 / 5.0, kBeta = 0.4 / 5.0;
        const double e = std::max(err, 1e-10);
        double fac = kSafety * std::pow(e, -kAlpha) * std::pow(err_prev_, kBeta);
        fac = std::clamp(fac, kMinFac, kMaxFac);
        if (err <= 1.0) err_prev_ = e;
        return fac;
    }

private:
    double err_prev_ = 1.0;
};

constexpr long kMaxSteps = 2000000;

double checked_drag(const DragModel& drag, double h) {
    const double f = drag(h);
    if (!std::isfinite(f))
        throw NonFiniteDragError("drag model returned a non-finite value at h = "
                                 + std::to_string(h));
    return f;
}

} // namespace

Trajectory simulate(const DragModel& drag, double h0, double v0, double t_max, double tol) {
    if (!(h0 > 0.0)) throw std::invalid_argument("simulate: h0 must be > 0");
    if (!(t_max > 0.0)) throw std::invalid_argument("simulate: t_max must be > 0");
    if (!(tol > 0.0) || !(tol < 1.0)) throw std::invalid_argument("simulate: need 0 < tol < 1");

    const double h_contact = 1e-12 * h0;
    const double v_rest = 1e-10 * std::abs(v0);
    const double v_switch = 1e-3 * std::abs(v0);

    Trajectory traj;
    traj.samples.push_back({0.0, h0, v0});

    if (v0 == 0.0) {
        traj.outcome = OutcomeKind::Rest;
        traj.rest_gap = h0;
        return traj;
    }

    double t = 0.0, h = h0, v = v0;
    long steps = 0;

    // Gap-marching phase: h decreasing is the independent variable,
    // state (t, v). Used while the approach is fast.
    if (v0 < 0.0) {
        Rhs rhs = [&drag](double hh, const Vec2& y) -> Vec2 {
            return {1.0 / y[1], -checked_drag(drag, hh)};
        };
        StepController ctrl;
        double dh = -1e-4 * h0;
        while (std::abs(v) >= v_switch) {
            if (++steps > kMaxSteps)
                throw StepFailureError("simulate: step budget exhausted in gap marching");
            bool landing = false;
            if (h + dh <= h_contact) {
                dh = h_contact - h;
                landing = true;
            }
            if (!(h + dh < h)) throw StepFailureError("simulate: gap step underflow");
            StepResult r = dp45_step(rhs, h, {t, v}, dh, tol);
            const bool ok = r.err <= 1.0 && std::isfinite(r.y[0]) && r.y[1] < 0.0;
            const double fac = ctrl.next_factor(r.err);
            if (ok) {
                h += dh;
                t = r.y[0];
                v = r.y[1];
                traj.samples.push_back({t, h, v});
                if (landing || h <= h_contact) {
                    traj.outcome = OutcomeKind::Contact;
                    traj.contact_time = t;
                    return traj;
                }
                dh *= fac;
            } else {
                dh *= 0.5;
            }
        }
    }

    // Time-marching phase: state (h, v).
    {
        Rhs rhs = [&drag](double, const Vec2& y) -> Vec2 {
            return {y[1], -y[1] * checked_drag(drag, y[0])};
        };
        StepController ctrl;
        const double f0 = checked_drag(drag, h);
        double dt = std::min(0.01 * t_max, 0.01 / std::max(f0, 1.0 / t_max));
        while (true) {
            if (std::abs(v) < v_rest) {
                traj.outcome = OutcomeKind::Rest;
                traj.rest_gap = h;
                return traj;
            }
            if (t >= t_max) {
                traj.outcome = OutcomeKind::Truncated;
                return traj;
            }
            if (++steps > kMaxSteps)
                throw StepFailureError("simulate: step budget exhausted in time marching");
            if (t + dt > t_max) dt = t_max - t;
            if (!(t + dt > t)) throw StepFailureError("simulate: time step underflow");
            StepResult r = dp45_step(rhs, t, {h, v}, dt, tol);
            bool ok = r.err <= 1.0 && std::isfinite(r.y[0]);
            if (ok && r.y[0] <= h_contact) {
                // Crossing the contact threshold inside a time step: shrink
                // onto the crossing instead of stepping past the divergence.
                if (h - h_contact <= 1e-6 * h_contact) {
                    traj.samples.push_back({t + dt, r.y[0], r.y[1]});
                    traj.outcome = OutcomeKind::Contact;
                    traj.contact_time = t + dt;
                    return traj;
                }
                dt *= std::max(0.1, 0.5 * (h - h_contact) / (h - r.y[0]));
                continue;
            }
            const double fac = ctrl.next_factor(r.err);
            if (ok) {
                t += dt;
                h = r.y[0];
                v = r.y[1];
                traj.samples.push_back({t, h, v});
                dt *= fac;
            } else {
                dt *= 0.5;
            }
        }
    }
}

double velocity_at_gap(const DragModel& drag, double h0, double v0, double h,
                       const QuadConfig& cfg) {
    if (!(h > 0.0) || !(h <= h0))
        throw std::invalid_argument("velocity_at_gap: need 0 < h <= h0");
    if (h == h0) return v0;
    auto f = [&drag](double s) { return checked_drag(drag, s); };
    return v0 + integrate(f, h, h0, cfg).value;
}

bool predicts_contact(const DragModel& drag, double h0, double v0, const QuadConfig& cfg) {
    if (!(v0 < 0.0)) throw std::invalid_argument("predicts_contact: v0 must be < 0");
    if (!(h0 > 0.0)) throw std::invalid_argument("predicts_contact: h0 must be > 0");

    constexpr double kRatio = 0.1;
    constexpr int kLevels = 12;
    auto f = [&drag](double s) { return checked_drag(drag, s); };

    const double speed = std::abs(v0);
    double upper = h0;
    double total = 0.0;
    std::array<double, kLevels> increments{};
    for (int k = 0; k < kLevels; ++k) {
        const double lower = upper * kRatio;
        increments[k] = integrate(f, lower, upper, cfg).value;
        total += increments[k];
        upper = lower;
        if (total >= speed) return false; // solid stops before this depth
    }

    // Classify the tail from the last increment ratios: q < 1 geometric
    // (integrable), q -> 1 or above logarithmic/power divergence.
    double qmax = 0.0, qmin = std::numeric_limits<double>::infinity();
    for (int k = kLevels - 3; k < kLevels; ++k) {
        if (increments[k - 1] <= 0.0) return total < speed; // drag vanished; tail empty
        const double q = increments[k] / increments[k - 1];
        qmax = std::max(qmax, q);
        qmin = std::min(qmin, q);
    }
    if (qmax < 0.9) {
        const double tail = increments[kLevels - 1] * qmax / (1.0 - qmax);
        return total + tail < speed;
    }
    if (qmin > 0.95) return false; // impulse diverges: no finite-time contact
    throw IndeterminateError("predicts_contact: increment ratios in ["
                             + std::to_string(qmin) + ", " + std::to_string(qmax)
                             + "] do not classify the impulse integral");
}

void write_csv(const Trajectory& trajectory, std::ostream& os) {
    os << "t,h,v\n";
    char buf[96];
    for (const State& s : trajectory.samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.t, s.h, s.v);
        os << buf;
    }
}

} // namespace lubridrag::dynamics
