#ifndef LUBRIDRAG_ORACLE1D_HPP
#define LUBRIDRAG_ORACLE1D_HPP

#include <vector>

#include "lubridrag/banded.hpp"

namespace lubridrag::oracle {

/// Reduced per-radius profile problem on the unit interval: minimize
///     E[Phi] = sum_i w_i |Phi''_i|^2  (+ alpha_s |Phi'(1)|^2 + alpha_p |Phi'(0)|^2)
/// over grid functions with Phi(0) = 0, Phi(1) = 1, where Phi'' is the
/// central second difference on a uniform n-point grid extended by one ghost
/// node per side, w is the trapezoidal weight, and the boundary first
/// derivatives are central through the ghosts. In the Clamped case the
/// boundary terms are absent and Phi'(0) = Phi'(1) = 0 is enforced by
/// eliminating the ghosts (reflection).
struct ProfileProblem {
    enum class Boundary { Clamped, Robin };
    Boundary bc = Boundary::Clamped;
    double alpha_s = 0.0;
    double alpha_p = 0.0;
    int n = 0;

    static ProfileProblem clamped(int n);
    static ProfileProblem robin(double alpha_s, double alpha_p, int n);
};

struct OracleSolution {
    std::vector<double> values; // grid samples, values[0] = 0, values[n-1] = 1
    double energy = 0.0;        // minimal discrete energy
    int n = 0;
    double ghost_left = 0.0;    // optimal ghost samples (derived in the Clamped case)
    double ghost_right = 0.0;
};

/// Exact minimizer of the discrete quadratic via its banded SPD
/// stationarity system.
OracleSolution minimize_profile(const ProfileProblem& p);

/// Discrete energy of an arbitrary grid function satisfying the Dirichlet
/// data. Ghost values are part of the configuration in the Robin case and
/// ignored (derived by reflection) in the Clamped case.
double discrete_energy(const ProfileProblem& p, const std::vector<double>& values,
                       double ghost_left, double ghost_right);

struct ClosedFormReport {
    double max_abs_gap = 0.0; // sup-norm gap between discrete minimizer and the cubic
    double energy_gap = 0.0;  // discrete energy of the sampled cubic minus the minimum
};

/// Compares the discrete minimizer against the closed-form cubic
/// (t^2(3-2t) clamped, the Robin-coefficient cubic otherwise). Both gaps
/// vanish at second order in 1/n.
ClosedFormReport compare_to_closed_form(const ProfileProblem& p);

} // namespace lubridrag::oracle

#endif
