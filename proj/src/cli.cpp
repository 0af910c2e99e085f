#include "lubridrag/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "lubridrag/corrugated.hpp"
#include "lubridrag/dynamics.hpp"
#include "lubridrag/geometry.hpp"
#include "lubridrag/noslip.hpp"
#include "lubridrag/oracle1d.hpp"
#include "lubridrag/quadrature.hpp"
#include "lubridrag/slip.hpp"

namespace lubridrag::cli {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct GridAxis {
    std::string name;
    std::vector<double> points;
};

GridAxis parse_grid_spec(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("grid spec '" + spec + "': expected name=start:stop:count[:log]");
    GridAxis axis;
    axis.name = spec.substr(0, eq);
    for (auto& c : axis.name)
        if (c == '-') c = '_';

    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw std::invalid_argument("grid spec '" + spec + "': expected start:stop:count[:log]");
    const bool logspace = parts.size() == 4;
    if (logspace && parts[3] != "log")
        throw std::invalid_argument("grid spec '" + spec + "': unknown suffix '" + parts[3] + "'");

    double start = 0, stop = 0;
    long count = 0;
    try {
        start = std::stod(parts[0]);
        stop = std::stod(parts[1]);
        count = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid spec '" + spec + "': malformed number");
    }
    if (count < 1) throw std::invalid_argument("grid spec '" + spec + "': count must be >= 1");
    if (logspace && (!(start > 0.0) || !(stop > 0.0)))
        throw std::invalid_argument("grid spec '" + spec + "': log spacing needs positive limits");

    axis.points.reserve(count);
    if (count == 1) {
        axis.points.push_back(start);
    } else {
        for (long i = 0; i < count; ++i) {
            const double f = static_cast<double>(i) / (count - 1);
            axis.points.push_back(logspace ? start * std::pow(stop / start, f)
                                           : start + f * (stop - start));
        }
    }
    return axis;
}

std::string method_name(DragMethod m) { return to_string(m); }

json estimate_to_json(const DragEstimate& est) {
    json j;
    j["value"] = est.value;
    j["method"] = method_name(est.method);
    j["err_estimate"] = est.err_estimate ? json(*est.err_estimate) : json(nullptr);
    j["regime"] = est.regime ? json(*est.regime) : json(nullptr);
    j["regime_warning"] = est.regime_warning;
    return j;
}

// All options of one invocation; CLI11 fills it, the command handlers read it.
struct Options {
    std::string model;
    double h = 0.0;
    double eps = 0.0;
    double alpha = 0.0;
    double beta_s = 0.0;
    double beta_p = 0.0;
    double lambda = 0.0;
    double beta_eff = 0.0;
    double r0 = 0.5;
    double tol = 1e-10;
    std::vector<std::string> grids;
    int n = 200;
    double h0 = 0.0;
    double v0 = 0.0;
    double t_max = 10.0;
    double sim_tol = 1e-8;
    std::string format = "json";
    std::string output;
    int threads = 0;

    bool has_beta_eff = false;
    bool has_alpha_s = false;
    bool has_alpha_p = false;
    double alpha_s = 0.0;
    double alpha_p = 0.0;

    QuadConfig quad() const {
        QuadConfig cfg;
        cfg.abs_tol = tol;
        cfg.rel_tol = tol;
        return cfg;
    }
};

GapProfile profile_from(const Options& opt) {
    return GapProfile::rough_power(opt.eps, opt.alpha, opt.r0);
}

std::string branch_name(double beta, double alpha) {
    if (beta <= 1.0) return "small_beta";
    if (noslip::is_log_branch(alpha)) return "large_beta_alpha_one_third";
    return alpha > 1.0 / 3.0 ? "large_beta_alpha_above_third" : "large_beta_alpha_below_third";
}

// ---- drag ---------------------------------------------------------------

std::string cmd_drag(const Options& opt) {
    json out;
    out["command"] = "drag";
    out["model"] = opt.model;
    std::vector<std::pair<std::string, double>> cols;
    if (opt.model == "noslip") {
        out["params"] = {{"h", opt.h}, {"eps", opt.eps}, {"alpha", opt.alpha}, {"r0", opt.r0}};
        const DragEstimate est = noslip::drag_integral(profile_from(opt), opt.h, opt.quad());
        const double beta = regime_beta(opt.h, opt.eps, opt.alpha);
        out["estimate"] = estimate_to_json(est);
        out["regime_beta"] = beta;
        cols = {{"value", est.value},
                {"err_estimate", est.err_estimate.value_or(0.0)},
                {"regime_beta", beta}};
    } else if (opt.model == "slip") {
        out["params"] = {{"h", opt.h}, {"beta_s", opt.beta_s}, {"beta_p", opt.beta_p},
                         {"eps", opt.eps}, {"alpha", opt.alpha}, {"r0", opt.r0}};
        const DragEstimate est = slip::drag_integral_slip(profile_from(opt), opt.h,
                                                          {opt.beta_s, opt.beta_p}, opt.quad());
        out["estimate"] = estimate_to_json(est);
        cols = {{"value", est.value}, {"err_estimate", est.err_estimate.value_or(0.0)}};
    } else if (opt.model == "corrugated") {
        out["params"] = {{"h", opt.h}, {"eps", opt.eps}, {"lambda", opt.lambda}};
        auto [lower, upper] = corrugated::drag_bounds(opt.h, {opt.eps, opt.lambda});
        out["lower"] = estimate_to_json(lower);
        out["upper"] = estimate_to_json(upper);
        cols = {{"lower", lower.value}, {"upper", upper.value}};
        if (opt.has_beta_eff) {
            out["params"]["beta_eff"] = opt.beta_eff;
            const DragEstimate shifted =
                corrugated::shifted_wall_drag(opt.h, opt.eps, opt.beta_eff);
            out["shifted"] = estimate_to_json(shifted);
            cols.emplace_back("shifted", shifted.value);
        } else {
            out["shifted"] = nullptr;
        }
    } else {
        throw std::invalid_argument("drag: unknown model '" + opt.model + "'");
    }
    if (opt.format == "json") return out.dump(2) + "\n";
    std::string header, row;
    for (size_t i = 0; i < cols.size(); ++i) {
        header += (i ? "," : "") + cols[i].first;
        row += (i ? "," : "") + fmt17(cols[i].second);
    }
    return header + "\n" + row + "\n";
}

// ---- asym ---------------------------------------------------------------

std::string cmd_asym(const Options& opt) {
    json out;
    out["command"] = "asym";
    out["model"] = opt.model;
    DragEstimate est;
    std::string branch;
    if (opt.model == "noslip") {
        out["params"] = {{"h", opt.h}, {"eps", opt.eps}, {"alpha", opt.alpha}};
        est = noslip::asym_drag(opt.h, opt.eps, opt.alpha, opt.quad());
        branch = branch_name(est.regime.value_or(0.0), opt.alpha);
    } else if (opt.model == "slip") {
        out["params"] = {{"h", opt.h}, {"beta_s", opt.beta_s}, {"beta_p", opt.beta_p}};
        est = slip::hocking_asym(opt.h, {opt.beta_s, opt.beta_p});
        branch = "hocking_log";
    } else if (opt.model == "corrugated") {
        out["params"] = {{"h", opt.h}, {"eps", opt.eps}, {"beta_eff", opt.beta_eff}};
        est = corrugated::shifted_wall_drag(opt.h, opt.eps, opt.beta_eff);
        branch = "shifted_wall";
    } else {
        throw std::invalid_argument("asym: unknown model '" + opt.model + "'");
    }
    out["estimate"] = estimate_to_json(est);
    out["branch"] = branch;
    if (opt.format == "json") return out.dump(2) + "\n";
    return "value,regime,branch\n" + fmt17(est.value) + "," + fmt17(est.regime.value_or(0.0))
           + "," + branch + "\n";
}

// ---- sweep --------------------------------------------------------------

struct SweepPlan {
    std::vector<std::string> columns;
    std::vector<GridAxis> axes;
    std::function<std::vector<double>(const std::vector<double>&)> eval;
};

SweepPlan make_sweep_plan(const Options& opt) {
    std::vector<GridAxis> axes;
    for (const std::string& spec : opt.grids) axes.push_back(parse_grid_spec(spec));
    if (axes.empty()) throw std::invalid_argument("sweep: at least one --grid is required");

    auto axis_value = [&axes](const std::vector<double>& pt, const std::string& name,
                              double fallback) {
        for (size_t i = 0; i < axes.size(); ++i)
            if (axes[i].name == name) return pt[i];
        return fallback;
    };

    SweepPlan plan;
    plan.axes = axes;
    const QuadConfig cfg = opt.quad();

    auto known = [&](std::initializer_list<const char*> names) {
        for (const GridAxis& a : axes) {
            bool ok = false;
            for (const char* n : names)
                if (a.name == n) ok = true;
            if (!ok)
                throw std::invalid_argument("sweep: axis '" + a.name
                                            + "' not valid for model");
        }
    };

    if (opt.model == "noslip") {
        known({"h", "eps", "alpha"});
        plan.columns = {"h", "eps", "alpha", "beta", "value", "err_estimate"};
        const Options base = opt;
        plan.eval = [base, axis_value, cfg](const std::vector<double>& pt) {
            const double h = axis_value(pt, "h", base.h);
            const double eps = axis_value(pt, "eps", base.eps);
            const double alpha = axis_value(pt, "alpha", base.alpha);
            const GapProfile profile = GapProfile::rough_power(eps, alpha, base.r0);
            const DragEstimate est = noslip::drag_integral(profile, h, cfg);
            return std::vector<double>{h, eps, alpha, regime_beta(h, eps, alpha), est.value,
                                       est.err_estimate.value_or(0.0)};
        };
    } else if (opt.model == "slip") {
        known({"h", "beta_s", "beta_p", "eps", "alpha"});
        plan.columns = {"h", "beta_s", "beta_p", "value", "err_estimate"};
        const Options base = opt;
        plan.eval = [base, axis_value, cfg](const std::vector<double>& pt) {
            const double h = axis_value(pt, "h", base.h);
            const double bs = axis_value(pt, "beta_s", base.beta_s);
            const double bp = axis_value(pt, "beta_p", base.beta_p);
            const double eps = axis_value(pt, "eps", base.eps);
            const double alpha = axis_value(pt, "alpha", base.alpha);
            const GapProfile profile = GapProfile::rough_power(eps, alpha, base.r0);
            const DragEstimate est = slip::drag_integral_slip(profile, h, {bs, bp}, cfg);
            return std::vector<double>{h, bs, bp, est.value, est.err_estimate.value_or(0.0)};
        };
    } else if (opt.model == "corrugated") {
        known({"h", "eps", "lambda", "beta_eff"});
        plan.columns = {"h", "eps", "lambda", "beta_eff", "lower", "upper", "shifted"};
        const Options base = opt;
        plan.eval = [base, axis_value](const std::vector<double>& pt) {
            const double h = axis_value(pt, "h", base.h);
            const double eps = axis_value(pt, "eps", base.eps);
            const double lambda = axis_value(pt, "lambda", base.lambda);
            const double beff = axis_value(pt, "beta_eff", base.beta_eff);
            auto [lower, upper] = corrugated::drag_bounds(h, {eps, lambda});
            const DragEstimate shifted = corrugated::shifted_wall_drag(h, eps, beff);
            return std::vector<double>{h, eps, lambda, beff, lower.value, upper.value,
                                       shifted.value};
        };
    } else {
        throw std::invalid_argument("sweep: unknown model '" + opt.model + "'");
    }
    return plan;
}

std::string cmd_sweep(const Options& opt) {
    const SweepPlan plan = make_sweep_plan(opt);

    size_t total = 1;
    for (const GridAxis& a : plan.axes) total *= a.points.size();
    // Row order is the odometer order of the --grid axes, last axis fastest.
    std::vector<std::vector<double>> points(total);
    for (size_t row = 0; row < total; ++row) {
        std::vector<double> pt(plan.axes.size());
        size_t rem = row;
        for (size_t a = plan.axes.size(); a-- > 0;) {
            const size_t na = plan.axes[a].points.size();
            pt[a] = plan.axes[a].points[rem % na];
            rem /= na;
        }
        points[row] = std::move(pt);
    }

    std::vector<std::vector<double>> rows(total);
    int n_threads = opt.threads > 0
                        ? opt.threads
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    n_threads = static_cast<int>(std::min<size_t>(n_threads, total));

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= total) return;
            try {
                rows[i] = plan.eval(points[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (opt.format == "json") {
        json out;
        out["command"] = "sweep";
        out["model"] = opt.model;
        out["columns"] = plan.columns;
        out["rows"] = rows;
        return out.dump(2) + "\n";
    }
    std::string text;
    for (size_t i = 0; i < plan.columns.size(); ++i)
        text += (i ? "," : "") + plan.columns[i];
    text += "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            text += (i ? "," : "") + fmt17(row[i]);
        text += "\n";
    }
    return text;
}

// ---- oracle -------------------------------------------------------------

std::string cmd_oracle(const Options& opt) {
    if (opt.has_alpha_s != opt.has_alpha_p)
        throw std::invalid_argument("oracle: give both --alpha-s and --alpha-p or neither");
    const bool robin = opt.has_alpha_s;
    const oracle::ProfileProblem problem =
        robin ? oracle::ProfileProblem::robin(opt.alpha_s, opt.alpha_p, opt.n)
              : oracle::ProfileProblem::clamped(opt.n);

    const oracle::OracleSolution sol = oracle::minimize_profile(problem);
    const oracle::ClosedFormReport report = oracle::compare_to_closed_form(problem);
    double continuum = 12.0;
    if (robin) {
        const slip::RobinCoeffs rc{opt.alpha_s, opt.alpha_p};
        continuum = slip::drag_integrand_i1(rc) + slip::drag_integrand_i2(rc);
    }

    json out;
    out["command"] = "oracle";
    out["bc"] = robin ? "robin" : "clamped";
    out["n"] = opt.n;
    if (robin) {
        out["alpha_s"] = opt.alpha_s;
        out["alpha_p"] = opt.alpha_p;
    }
    out["energy"] = sol.energy;
    out["continuum_energy"] = continuum;
    out["max_abs_gap"] = report.max_abs_gap;
    out["energy_gap"] = report.energy_gap;
    if (opt.format == "json") return out.dump(2) + "\n";
    return "bc,n,energy,continuum_energy,max_abs_gap,energy_gap\n"
           + std::string(robin ? "robin" : "clamped") + "," + std::to_string(opt.n) + ","
           + fmt17(sol.energy) + "," + fmt17(continuum) + "," + fmt17(report.max_abs_gap) + ","
           + fmt17(report.energy_gap) + "\n";
}

// ---- simulate -----------------------------------------------------------

dynamics::DragModel drag_handle(const Options& opt) {
    const QuadConfig cfg = opt.quad();
    if (opt.model == "noslip") {
        const GapProfile profile = profile_from(opt);
        return [profile, cfg](double h) { return noslip::drag_integral(profile, h, cfg).value; };
    }
    if (opt.model == "slip") {
        const GapProfile profile = profile_from(opt);
        const slip::SlipParams sp{opt.beta_s, opt.beta_p};
        return [profile, sp, cfg](double h) {
            return slip::drag_integral_slip(profile, h, sp, cfg).value;
        };
    }
    if (opt.model == "corrugated") {
        const double eps = opt.eps, beff = opt.beta_eff;
        return [eps, beff](double h) {
            return corrugated::shifted_wall_drag(h, eps, beff).value;
        };
    }
    throw std::invalid_argument("simulate: unknown model '" + opt.model + "'");
}

std::string cmd_simulate(const Options& opt) {
    if (!(opt.h0 > 0.0)) throw std::invalid_argument("simulate: --h0 must be > 0");
    const dynamics::Trajectory traj =
        dynamics::simulate(drag_handle(opt), opt.h0, opt.v0, opt.t_max, opt.sim_tol);

    if (opt.format == "csv") {
        std::ostringstream os;
        dynamics::write_csv(traj, os);
        return os.str();
    }
    json out;
    out["command"] = "simulate";
    out["model"] = opt.model;
    json outcome;
    switch (traj.outcome) {
    case dynamics::OutcomeKind::Contact:
        outcome["kind"] = "contact";
        outcome["contact_time"] = traj.contact_time;
        break;
    case dynamics::OutcomeKind::Rest:
        outcome["kind"] = "rest";
        outcome["rest_gap"] = traj.rest_gap;
        break;
    case dynamics::OutcomeKind::Truncated:
        outcome["kind"] = "truncated";
        outcome["t_max"] = opt.t_max;
        break;
    }
    out["outcome"] = outcome;
    out["n_samples"] = traj.samples.size();
    const dynamics::State& last = traj.samples.back();
    out["final"] = {{"t", last.t}, {"h", last.h}, {"v", last.v}};
    return out.dump(2) + "\n";
}

// ---- constants ----------------------------------------------------------

std::string cmd_constants(const Options& opt) {
    std::vector<double> alphas;
    if (!opt.grids.empty()) {
        for (const std::string& spec : opt.grids) {
            const GridAxis axis = parse_grid_spec(spec);
            if (axis.name != "alpha")
                throw std::invalid_argument("constants: only alpha grids are meaningful");
            alphas.insert(alphas.end(), axis.points.begin(), axis.points.end());
        }
    } else {
        alphas.push_back(opt.alpha);
    }

    std::vector<noslip::AlphaConstants> table;
    table.reserve(alphas.size());
    for (double a : alphas) table.push_back(noslip::alpha_constants(a, opt.quad()));

    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& c : table) {
            json j;
            j["alpha"] = c.alpha;
            j["lambda_alpha"] = c.lambda_alpha;
            j["mu_alpha"] = c.mu_alpha ? json(*c.mu_alpha) : json(nullptr);
            rows.push_back(j);
        }
        json out;
        out["command"] = "constants";
        out["rows"] = rows;
        if (table.size() == 1) {
            out["alpha"] = table[0].alpha;
            out["lambda_alpha"] = table[0].lambda_alpha;
            out["mu_alpha"] = table[0].mu_alpha ? json(*table[0].mu_alpha) : json(nullptr);
        }
        return out.dump(2) + "\n";
    }
    std::string text = "alpha,lambda_alpha,mu_alpha\n";
    for (const auto& c : table) {
        text += fmt17(c.alpha) + "," + fmt17(c.lambda_alpha) + ","
                + (c.mu_alpha ? fmt17(*c.mu_alpha) : "") + "\n";
    }
    return text;
}

// ---- driver -------------------------------------------------------------

void emit(const Options& opt, const std::string& payload) {
    if (opt.output.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + opt.output + "'");
    file << payload;
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const NonConvergenceError*>(&e)) return "non_convergence";
    if (dynamic_cast<const NonFiniteError*>(&e)) return "non_finite_integrand";
    if (dynamic_cast<const SingularSystemError*>(&e)) return "singular_system";
    if (dynamic_cast<const dynamics::StepFailureError*>(&e)) return "step_failure";
    if (dynamic_cast<const dynamics::NonFiniteDragError*>(&e)) return "non_finite_drag";
    if (dynamic_cast<const dynamics::IndeterminateError*>(&e)) return "indeterminate";
    return "runtime_error";
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Lubrication drag of a solid near a wall: exact reduced integrals, "
                 "closed-form asymptotics, variational oracle, contact dynamics"};
    app.name("lubridrag");
    app.require_subcommand(1);
    app.set_help_flag("--help", "print usage");

    Options opt;

    auto add_common = [&opt](CLI::App* cmd, bool with_model) {
        cmd->set_help_flag("--help", "print usage");
        if (with_model)
            cmd->add_option("--model", opt.model, "roughness model")
                ->check(CLI::IsMember({"noslip", "slip", "corrugated"}))
                ->required();
        cmd->add_option("--h", opt.h, "gap between solid tip and wall");
        cmd->add_option("--eps", opt.eps, "roughness or corrugation amplitude");
        cmd->add_option("--alpha", opt.alpha, "roughness exponent in [0,1)");
        cmd->add_option("--beta-s", opt.beta_s, "solid slip length");
        cmd->add_option("--beta-p", opt.beta_p, "wall slip length");
        cmd->add_option("--lambda", opt.lambda, "corrugation depth (-min of oscillation)");
        auto* be = cmd->add_option("--beta-eff", opt.beta_eff,
                                   "effective slip scale of the corrugated wall");
        be->each([&opt](const std::string&) { opt.has_beta_eff = true; });
        cmd->add_option("--r0", opt.r0, "chart cutoff radius in (0,1]");
        cmd->add_option("--tol", opt.tol, "quadrature tolerance");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", opt.output, "output path (default stdout)");
        cmd->add_option("--threads", opt.threads, "worker threads for sweeps");
    };

    CLI::App* drag = app.add_subcommand("drag", "exact drag for one parameter point");
    add_common(drag, true);

    CLI::App* asym = app.add_subcommand("asym", "closed-form asymptotic drag");
    add_common(asym, true);

    CLI::App* sweep = app.add_subcommand("sweep", "drag over a Cartesian parameter grid");
    add_common(sweep, true);
    sweep->add_option("--grid", opt.grids, "axis spec name=start:stop:count[:log]")
        ->expected(-1)
        ->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "discrete variational oracle");
    add_common(oracle_cmd, false);
    oracle_cmd->add_option("--n", opt.n, "grid point count (>= 8)");
    oracle_cmd->add_option("--alpha-s", opt.alpha_s, "Robin coefficient at the solid side")
        ->each([&opt](const std::string&) { opt.has_alpha_s = true; });
    oracle_cmd->add_option("--alpha-p", opt.alpha_p, "Robin coefficient at the wall side")
        ->each([&opt](const std::string&) { opt.has_alpha_p = true; });

    CLI::App* simulate = app.add_subcommand("simulate", "integrate the contact dynamics");
    add_common(simulate, true);
    simulate->add_option("--h0", opt.h0, "initial gap")->required();
    simulate->add_option("--v0", opt.v0, "initial velocity");
    simulate->add_option("--t-max", opt.t_max, "time horizon");
    simulate->add_option("--step-tol", opt.sim_tol, "integrator step tolerance");

    CLI::App* constants = app.add_subcommand("constants", "lambda/mu coefficient tables");
    add_common(constants, false);
    constants->add_option("--grid", opt.grids, "alpha grid, alpha=start:stop:count[:log]")
        ->expected(-1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "lubridrag: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string payload;
        if (drag->parsed()) payload = cmd_drag(opt);
        else if (asym->parsed()) payload = cmd_asym(opt);
        else if (sweep->parsed()) payload = cmd_sweep(opt);
        else if (oracle_cmd->parsed()) payload = cmd_oracle(opt);
        else if (simulate->parsed()) payload = cmd_simulate(opt);
        else if (constants->parsed()) payload = cmd_constants(opt);
        emit(opt, payload);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lubridrag: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
        try {
            emit(opt, err.dump(2) + "\n");
        } catch (const std::exception&) {
            std::cout << err.dump(2) << "\n";
        }
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace lubridrag::cli
