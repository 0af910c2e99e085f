#include "lubridrag/oracle1d.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "lubridrag/slip.hpp"

namespace lubridrag::oracle {

namespace {

// One quadratic energy term: weight * (sum_k coef_k * Phi_{node_k})^2.
// Nodes -1 and n are the ghosts.
struct Term {
    double weight;
    int n_entries;
    std::array<int, 4> node;
    std::array<double, 4> coef;
};

std::vector<Term> energy_terms(const ProfileProblem& p) {
    const int n = p.n;
    const double dt = 1.0 / (n - 1);
    const double inv_dt2 = (n - 1.0) * (n - 1.0);
    std::vector<Term> terms;
    terms.reserve(n + 2);
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 * dt : dt;
        terms.push_back(Term{w, 3, {i - 1, i, i + 1}, {inv_dt2, -2.0 * inv_dt2, inv_dt2}});
    }
    if (p.bc == ProfileProblem::Boundary::Robin) {
        const double half = 0.5 * (n - 1.0); // 1/(2 dt)
        terms.push_back(Term{p.alpha_p, 2, {-1, 1, 0}, {-half, half, 0.0}});
        terms.push_back(Term{p.alpha_s, 2, {n, n - 2, 0}, {half, -half, 0.0}});
    }
    return terms;
}

// Maps an extended node id to (free DOF index or -1, constant part,
// substitute DOF for eliminated nodes). Robin DOFs: [ghostL, 1..n-2, ghostR];
// Clamped DOFs: [1..n-2] with ghosts reflected.
struct DofMap {
    const ProfileProblem& p;

    int count() const {
        return p.bc == ProfileProblem::Boundary::Robin ? p.n : p.n - 2;
    }

    // returns {dof index (-1 if none), constant}
    std::pair<int, double> resolve(int node) const {
        const int n = p.n;
        if (node == 0) return {-1, 0.0};
        if (node == n - 1) return {-1, 1.0};
        const bool robin = p.bc == ProfileProblem::Boundary::Robin;
        if (node == -1) return robin ? std::pair<int, double>{0, 0.0}
                                     : std::pair<int, double>{0, 0.0}; // clamped: ghost = node 1
        if (node == n) return robin ? std::pair<int, double>{n - 1, 0.0}
                                    : std::pair<int, double>{n - 3, 0.0}; // clamped: = node n-2
        return robin ? std::pair<int, double>{node, 0.0}
                     : std::pair<int, double>{node - 1, 0.0};
    }
};

} // namespace

ProfileProblem ProfileProblem::clamped(int n) {
    if (n < 8) throw std::invalid_argument("ProfileProblem: n must be >= 8");
    ProfileProblem p;
    p.bc = Boundary::Clamped;
    p.n = n;
    return p;
}

ProfileProblem ProfileProblem::robin(double alpha_s, double alpha_p, int n) {
    if (n < 8) throw std::invalid_argument("ProfileProblem: n must be >= 8");
    if (!(alpha_s >= 0.0) || !(alpha_p >= 0.0) || !std::isfinite(alpha_s)
        || !std::isfinite(alpha_p))
        throw std::invalid_argument("ProfileProblem: Robin coefficients must be finite and >= 0");
    ProfileProblem p;
    p.bc = Boundary::Robin;
    p.alpha_s = alpha_s;
    p.alpha_p = alpha_p;
    p.n = n;
    return p;
}

OracleSolution minimize_profile(const ProfileProblem& p) {
    if (p.n < 8) throw std::invalid_argument("minimize_profile: n must be >= 8");
    const DofMap map{p};
    const int m = map.count();
    const std::vector<Term> terms = energy_terms(p);

    BandedSPDMatrix K(m, 2);
    std::vector<double> rhs(m, 0.0);

    std::array<int, 4> idx{};
    std::array<double, 4> val{};
    for (const Term& t : terms) {
        int nv = 0;
        double c = 0.0;
        for (int k = 0; k < t.n_entries; ++k) {
            auto [dof, cst] = map.resolve(t.node[k]);
            c += t.coef[k] * cst;
            if (dof < 0) continue;
            bool merged = false;
            for (int q = 0; q < nv; ++q)
                if (idx[q] == dof) {
                    val[q] += t.coef[k];
                    merged = true;
                    break;
                }
            if (!merged) {
                idx[nv] = dof;
                val[nv] = t.coef[k];
                ++nv;
            }
        }
        for (int a = 0; a < nv; ++a) {
            for (int b = 0; b <= a; ++b) {
                double contrib = t.weight * val[a] * val[b];
                if (idx[a] == idx[b]) K.add(idx[a], idx[b], contrib);
                else K.add(idx[a], idx[b], contrib); // off-diagonal stored once
            }
            rhs[static_cast<size_t>(idx[a])] -= t.weight * val[a] * c;
        }
    }

    K.factorize();
    const std::vector<double> x = K.solve(rhs);

    OracleSolution sol;
    sol.n = p.n;
    sol.values.assign(p.n, 0.0);
    sol.values[p.n - 1] = 1.0;
    if (p.bc == ProfileProblem::Boundary::Robin) {
        for (int j = 1; j <= p.n - 2; ++j) sol.values[j] = x[j];
        sol.ghost_left = x[0];
        sol.ghost_right = x[p.n - 1];
    } else {
        for (int j = 1; j <= p.n - 2; ++j) sol.values[j] = x[j - 1];
        sol.ghost_left = sol.values[1];
        sol.ghost_right = sol.values[p.n - 2];
    }
    sol.energy = discrete_energy(p, sol.values, sol.ghost_left, sol.ghost_right);
    return sol;
}

double discrete_energy(const ProfileProblem& p, const std::vector<double>& values,
                       double ghost_left, double ghost_right) {
    if (static_cast<int>(values.size()) != p.n)
        throw std::invalid_argument("discrete_energy: values must have n entries");
    if (values.front() != 0.0 || values.back() != 1.0)
        throw std::invalid_argument("discrete_energy: Dirichlet data Phi(0)=0, Phi(1)=1 required");
    if (p.bc == ProfileProblem::Boundary::Clamped) {
        ghost_left = values[1];
        ghost_right = values[p.n - 2];
    }
    auto at = [&](int node) {
        if (node == -1) return ghost_left;
        if (node == p.n) return ghost_right;
        return values[static_cast<size_t>(node)];
    };
    double e = 0.0;
    for (const Term& t : energy_terms(p)) {
        double s = 0.0;
        for (int k = 0; k < t.n_entries; ++k) s += t.coef[k] * at(t.node[k]);
        e += t.weight * s * s;
    }
    return e;
}

ClosedFormReport compare_to_closed_form(const ProfileProblem& p) {
    const OracleSolution sol = minimize_profile(p);

    slip::CubicProfile cubic;
    if (p.bc == ProfileProblem::Boundary::Clamped) {
        cubic = slip::CubicProfile{-2.0, 3.0, 0.0}; // t^2 (3 - 2t)
    } else {
        cubic = slip::minimizing_cubic(slip::RobinCoeffs{p.alpha_s, p.alpha_p});
    }

    const double dt = 1.0 / (p.n - 1);
    double max_gap = 0.0;
    std::vector<double> sampled(p.n);
    for (int i = 0; i < p.n; ++i) {
        sampled[i] = cubic.value(i * dt);
        max_gap = std::max(max_gap, std::abs(sol.values[i] - sampled[i]));
    }
    sampled[0] = 0.0;
    sampled[p.n - 1] = 1.0;
    const double cubic_energy =
        discrete_energy(p, sampled, cubic.value(-dt), cubic.value(1.0 + dt));

    ClosedFormReport report;
    report.max_abs_gap = max_gap;
    report.energy_gap = cubic_energy - sol.energy;
    return report;
}

} // namespace lubridrag::oracle
