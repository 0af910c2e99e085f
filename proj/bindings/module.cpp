#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lubridrag/corrugated.hpp"
#include "lubridrag/dynamics.hpp"
#include "lubridrag/geometry.hpp"
#include "lubridrag/noslip.hpp"
#include "lubridrag/oracle1d.hpp"
#include "lubridrag/quadrature.hpp"
#include "lubridrag/slip.hpp"

namespace py = pybind11;
using namespace lubridrag;

PYBIND11_MODULE(_lubridrag, m) {
    m.doc() = "Lubrication drag of a solid approaching a wall: exact reduced "
              "integrals, asymptotics, variational oracle, contact dynamics";

    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
    py::register_exception<NonFiniteError>(m, "NonFiniteError", PyExc_RuntimeError);
    py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_RuntimeError);
    py::register_exception<dynamics::StepFailureError>(m, "StepFailureError", PyExc_RuntimeError);
    py::register_exception<dynamics::IndeterminateError>(m, "IndeterminateError",
                                                         PyExc_RuntimeError);

    py::class_<QuadConfig>(m, "QuadConfig")
        .def(py::init<>())
        .def(py::init([](double abs_tol, double rel_tol, int max_subdivisions) {
                 return QuadConfig{abs_tol, rel_tol, max_subdivisions};
             }),
             py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10,
             py::arg("max_subdivisions") = 2000)
        .def_readwrite("abs_tol", &QuadConfig::abs_tol)
        .def_readwrite("rel_tol", &QuadConfig::rel_tol)
        .def_readwrite("max_subdivisions", &QuadConfig::max_subdivisions);

    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("err_estimate", &QuadResult::err_estimate)
        .def_readonly("n_evals", &QuadResult::n_evals)
        .def("__repr__", [](const QuadResult& q) {
            return "QuadResult(value=" + std::to_string(q.value) + ")";
        });

    m.def("integrate", &integrate, py::arg("f"), py::arg("a"), py::arg("b"),
          py::arg("cfg") = QuadConfig{});
    m.def("integrate_semi_infinite", &integrate_semi_infinite, py::arg("f"), py::arg("a"),
          py::arg("cfg") = QuadConfig{});

    py::enum_<ProfileKind>(m, "ProfileKind")
        .value("SmoothSphere", ProfileKind::SmoothSphere)
        .value("RoughPower", ProfileKind::RoughPower)
        .value("Corrugated", ProfileKind::Corrugated);

    py::class_<GapProfile>(m, "GapProfile")
        .def_static("smooth_sphere", &GapProfile::smooth_sphere, py::arg("r0") = 0.5)
        .def_static("rough_power", &GapProfile::rough_power, py::arg("eps"), py::arg("alpha"),
                    py::arg("r0") = 0.5)
        .def_static("corrugated", &GapProfile::corrugated, py::arg("eps"), py::arg("depth"),
                    py::arg("r0") = 0.5)
        .def_readonly("kind", &GapProfile::kind)
        .def_readonly("eps", &GapProfile::eps)
        .def_readonly("alpha", &GapProfile::alpha)
        .def_readonly("depth", &GapProfile::depth)
        .def_readonly("r0", &GapProfile::r0);

    m.def("gamma_s", &gamma_s, py::arg("profile"), py::arg("r"));
    m.def("gamma_s_prime", &gamma_s_prime, py::arg("profile"), py::arg("r"));
    m.def("gap", &gap, py::arg("profile"), py::arg("h"), py::arg("r"));
    m.def("regime_beta", &regime_beta, py::arg("h"), py::arg("eps"), py::arg("alpha"));

    py::enum_<DragMethod>(m, "DragMethod")
        .value("ExactIntegral", DragMethod::ExactIntegral)
        .value("Asymptotic", DragMethod::Asymptotic)
        .value("LowerBound", DragMethod::LowerBound)
        .value("UpperBound", DragMethod::UpperBound);

    py::class_<DragEstimate>(m, "DragEstimate")
        .def_readonly("value", &DragEstimate::value)
        .def_readonly("method", &DragEstimate::method)
        .def_readonly("regime", &DragEstimate::regime)
        .def_readonly("err_estimate", &DragEstimate::err_estimate)
        .def_readonly("regime_warning", &DragEstimate::regime_warning)
        .def("__repr__", [](const DragEstimate& d) {
            return "DragEstimate(value=" + std::to_string(d.value) + ", method="
                   + to_string(d.method) + ")";
        });

    auto ns = m.def_submodule("noslip", "non-smooth solid over a no-slip wall");
    ns.def("drag_integral", &noslip::drag_integral, py::arg("profile"), py::arg("h"),
           py::arg("cfg") = QuadConfig{});
    ns.def("reduction_factor", &noslip::reduction_factor, py::arg("beta"), py::arg("alpha"),
           py::arg("cfg") = QuadConfig{});
    ns.def("remainder_integral", &noslip::remainder_integral, py::arg("beta"), py::arg("h"),
           py::arg("alpha"), py::arg("r0"), py::arg("cfg") = QuadConfig{});
    ns.def("lambda_alpha", &noslip::lambda_alpha, py::arg("alpha"));
    ns.def("mu_alpha", &noslip::mu_alpha, py::arg("alpha"), py::arg("cfg") = QuadConfig{});
    ns.def("asym_drag", &noslip::asym_drag, py::arg("h"), py::arg("eps"), py::arg("alpha"),
           py::arg("cfg") = QuadConfig{});
    ns.def("asym_drag_small_beta", &noslip::asym_drag_small_beta, py::arg("h"), py::arg("eps"),
           py::arg("alpha"));
    ns.def("asym_drag_large_beta", &noslip::asym_drag_large_beta, py::arg("h"), py::arg("eps"),
           py::arg("alpha"), py::arg("cfg") = QuadConfig{});

    py::class_<slip::SlipParams>(m, "SlipParams")
        .def(py::init([](double beta_s, double beta_p) {
                 return slip::SlipParams{beta_s, beta_p};
             }),
             py::arg("beta_s"), py::arg("beta_p"))
        .def_readwrite("beta_s", &slip::SlipParams::beta_s)
        .def_readwrite("beta_p", &slip::SlipParams::beta_p);

    py::class_<slip::RobinCoeffs>(m, "RobinCoeffs")
        .def(py::init([](double alpha_s, double alpha_p) {
                 return slip::RobinCoeffs{alpha_s, alpha_p};
             }),
             py::arg("alpha_s"), py::arg("alpha_p"))
        .def_readwrite("alpha_s", &slip::RobinCoeffs::alpha_s)
        .def_readwrite("alpha_p", &slip::RobinCoeffs::alpha_p);

    py::class_<slip::CubicProfile>(m, "CubicProfile")
        .def_readonly("c3", &slip::CubicProfile::c3)
        .def_readonly("c2", &slip::CubicProfile::c2)
        .def_readonly("c1", &slip::CubicProfile::c1)
        .def("value", &slip::CubicProfile::value, py::arg("t"))
        .def("deriv", &slip::CubicProfile::deriv, py::arg("t"))
        .def("second_deriv", &slip::CubicProfile::second_deriv, py::arg("t"));

    auto sl = m.def_submodule("slip", "smooth sphere with Navier slip");
    sl.def("robin_coeffs", &slip::robin_coeffs, py::arg("profile"), py::arg("h"), py::arg("r"),
           py::arg("params"));
    sl.def("minimizing_cubic", &slip::minimizing_cubic, py::arg("rc"));
    sl.def("drag_integrand_i1", &slip::drag_integrand_i1, py::arg("rc"));
    sl.def("drag_integrand_i2", &slip::drag_integrand_i2, py::arg("rc"));
    sl.def("drag_integral_slip", &slip::drag_integral_slip, py::arg("profile"), py::arg("h"),
           py::arg("params"), py::arg("cfg") = QuadConfig{});
    sl.def("hocking_asym", &slip::hocking_asym, py::arg("h"), py::arg("params"));
    sl.def("drag_bounds_order_one", &slip::drag_bounds_order_one, py::arg("h"));

    py::class_<corrugated::MobilityTensor>(m, "MobilityTensor")
        .def(py::init([](double beta_x, double beta_y) {
                 return corrugated::MobilityTensor{beta_x, beta_y};
             }),
             py::arg("beta_x"), py::arg("beta_y"))
        .def_readwrite("beta_x", &corrugated::MobilityTensor::beta_x)
        .def_readwrite("beta_y", &corrugated::MobilityTensor::beta_y);

    py::class_<corrugated::CorrugationData>(m, "CorrugationData")
        .def(py::init([](double eps, double depth) {
                 return corrugated::CorrugationData{eps, depth};
             }),
             py::arg("eps"), py::arg("depth"))
        .def_readwrite("eps", &corrugated::CorrugationData::eps)
        .def_readwrite("depth", &corrugated::CorrugationData::depth);

    auto co = m.def_submodule("corrugated", "sphere above a corrugated wall");
    co.def("drag_bounds", &corrugated::drag_bounds, py::arg("h"), py::arg("data"));
    co.def("effective_beta", &corrugated::effective_beta, py::arg("tensor"));
    co.def("shifted_wall_drag", &corrugated::shifted_wall_drag, py::arg("h"), py::arg("eps"),
           py::arg("beta"));

    py::class_<oracle::ProfileProblem>(m, "ProfileProblem")
        .def_static("clamped", &oracle::ProfileProblem::clamped, py::arg("n"))
        .def_static("robin", &oracle::ProfileProblem::robin, py::arg("alpha_s"),
                    py::arg("alpha_p"), py::arg("n"))
        .def_readonly("n", &oracle::ProfileProblem::n)
        .def_readonly("alpha_s", &oracle::ProfileProblem::alpha_s)
        .def_readonly("alpha_p", &oracle::ProfileProblem::alpha_p);

    py::class_<oracle::OracleSolution>(m, "OracleSolution")
        .def_readonly("values", &oracle::OracleSolution::values)
        .def_readonly("energy", &oracle::OracleSolution::energy)
        .def_readonly("n", &oracle::OracleSolution::n);

    py::class_<oracle::ClosedFormReport>(m, "ClosedFormReport")
        .def_readonly("max_abs_gap", &oracle::ClosedFormReport::max_abs_gap)
        .def_readonly("energy_gap", &oracle::ClosedFormReport::energy_gap);

    auto orc = m.def_submodule("oracle", "discrete variational oracle");
    orc.def("minimize_profile", &oracle::minimize_profile, py::arg("problem"));
    orc.def("compare_to_closed_form", &oracle::compare_to_closed_form, py::arg("problem"));
    orc.def("discrete_energy", &oracle::discrete_energy, py::arg("problem"), py::arg("values"),
            py::arg("ghost_left") = 0.0, py::arg("ghost_right") = 0.0);

    py::class_<dynamics::State>(m, "State")
        .def_readonly("t", &dynamics::State::t)
        .def_readonly("h", &dynamics::State::h)
        .def_readonly("v", &dynamics::State::v);

    py::enum_<dynamics::OutcomeKind>(m, "OutcomeKind")
        .value("Contact", dynamics::OutcomeKind::Contact)
        .value("Rest", dynamics::OutcomeKind::Rest)
        .value("Truncated", dynamics::OutcomeKind::Truncated);

    py::class_<dynamics::Trajectory>(m, "Trajectory")
        .def_readonly("samples", &dynamics::Trajectory::samples)
        .def_readonly("outcome", &dynamics::Trajectory::outcome)
        .def_readonly("contact_time", &dynamics::Trajectory::contact_time)
        .def_readonly("rest_gap", &dynamics::Trajectory::rest_gap);

    auto dy = m.def_submodule("dynamics", "reduced contact dynamics");
    dy.def("simulate", &dynamics::simulate, py::arg("drag"), py::arg("h0"), py::arg("v0"),
           py::arg("t_max"), py::arg("tol"));
    dy.def("velocity_at_gap", &dynamics::velocity_at_gap, py::arg("drag"), py::arg("h0"),
           py::arg("v0"), py::arg("h"), py::arg("cfg") = QuadConfig{});
    dy.def("predicts_contact", &dynamics::predicts_contact, py::arg("drag"), py::arg("h0"),
           py::arg("v0"), py::arg("cfg") = QuadConfig{});
}
