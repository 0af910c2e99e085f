#include "lubridrag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace lubridrag {

namespace {

// 15-point Kronrod nodes on [-1,1] (nonnegative half) and weights,
// with the embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.99145537112081263920685469752633, 0.94910791234275852452618968404785,
    0.86486442335976907278971278864093, 0.74153118559939443986386477328079,
    0.58608723546769113029414483825873, 0.40584515137739716690660641207696,
    0.20778495500789846760068940377324, 0.0};

constexpr double kWgk[8] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318921,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923465, 0.20948214108472782801299917489171};

constexpr double kWg[4] = {
    0.12948496616886969327061143267908, 0.27970539148927666790146777142378,
    0.38183005050511894495036977548898, 0.41795918367346938775510204081633};

struct Panel {
    double a, b;
    double value;
    double err;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a; // deterministic tie break
    }
};

// Gauss-Kronrod 15/7 on one panel with the QUADPACK-style error estimate.
Panel gk15(const Integrand& f, double a, double b, long& n_evals) {
    const double hlgth = 0.5 * (b - a);
    const double centr = 0.5 * (a + b);

    double fv[15];
    double resg = 0.0, resk = 0.0;
    const double fc = f(centr);
    ++n_evals;
    resg = fc * kWg[3];
    resk = fc * kWgk[7];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        n_evals += 2;
        fv[j] = f1;
        fv[14 - j] = f2;
        const double fsum = f1 + f2;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
    }
    if (!std::isfinite(resk))
        throw NonFiniteError("integrand returned a non-finite value on ["
                             + std::to_string(a) + ", " + std::to_string(b) + "]");

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
    resasc *= std::abs(hlgth);

    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));

    return Panel{a, b, resk * hlgth, err};
}

} // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate: requires finite a < b");
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) || cfg.max_subdivisions < 1)
        throw std::invalid_argument("integrate: tolerances must be positive, max_subdivisions >= 1");

    long n_evals = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    double total_value = 0.0, total_err = 0.0;

    Panel first = gk15(f, a, b, n_evals);
    total_value = first.value;
    total_err = first.err;
    queue.push(first);

    int splits = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value))) {
        if (splits >= cfg.max_subdivisions)
            throw NonConvergenceError("integrate: tolerance not met after "
                                      + std::to_string(splits) + " subdivisions (err="
                                      + std::to_string(total_err) + ")");
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw NonConvergenceError("integrate: interval too small to bisect near "
                                      + std::to_string(worst.a));
        Panel left = gk15(f, worst.a, mid, n_evals);
        Panel right = gk15(f, mid, worst.b, n_evals);
        total_value += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
        ++splits;
    }

    // Fixed-order reduction: sum panels sorted by position.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, err = 0.0;
    for (const Panel& p : panels) {
        value += p.value;
        err += p.err;
    }
    return QuadResult{value, err, n_evals};
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg) {
    if (!std::isfinite(a))
        throw std::invalid_argument("integrate_semi_infinite: lower limit must be finite");
    auto g = [&f, a](double t) {
        const double u = 1.0 - t;
        return f(a + t / u) / (u * u);
    };
    return integrate(g, 0.0, 1.0, cfg);
}

} // namespace lubridrag
