#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ptcoulomb/errors.hpp"
#include "ptcoulomb/pseudonorm.hpp"
#include "ptcoulomb/verification.hpp"

namespace py = pybind11;
using namespace ptc;

namespace {

QuadratureMode parse_mode(const std::string& s) {
    if (s == "half-line") return QuadratureMode::half_line;
    if (s == "real-line") return QuadratureMode::real_line;
    throw py::value_error("mode must be 'half-line' or 'real-line'");
}

InnerProductRoute parse_route(const std::string& s) {
    if (s == "half-line") return InnerProductRoute::half_line;
    if (s == "real-line") return InnerProductRoute::real_line;
    throw py::value_error("route must be 'half-line' or 'real-line'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "PT-symmetric one-dimensional Coulomb model";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", domain.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
    py::register_exception<StepSizeError>(m, "StepSizeError", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"), py::arg("c"))
        .def_property_readonly("alpha", &ModelParams::alpha)
        .def_property_readonly("beta", &ModelParams::beta)
        .def_property_readonly("c", &ModelParams::c)
        .def_property_readonly("core_strength", &ModelParams::core_strength)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(alpha=" + std::to_string(p.alpha()) + ", beta=" + std::to_string(p.beta()) +
                   ", c=" + std::to_string(p.c()) + ")";
        });

    py::class_<StateLabel>(m, "StateLabel")
        .def(py::init<int, int>(), py::arg("q"), py::arg("n"))
        .def_property_readonly("q", &StateLabel::q)
        .def_property_readonly("n", &StateLabel::n)
        .def(py::self == py::self)
        .def("__repr__", [](const StateLabel& l) {
            return "StateLabel(q=" + std::to_string(l.q()) + ", n=" + std::to_string(l.n()) + ")";
        });

    py::enum_<Admissibility>(m, "Admissibility")
        .value("admissible", Admissibility::admissible)
        .value("flown_away", Admissibility::flown_away)
        .value("not_normalizable", Admissibility::not_normalizable);

    py::class_<BoundState>(m, "BoundState")
        .def_readonly("label", &BoundState::label)
        .def_readonly("energy", &BoundState::energy)
        .def_readonly("gamma", &BoundState::gamma)
        .def_readonly("norm_magnitude", &BoundState::norm_magnitude);

    py::class_<ExcludedState>(m, "ExcludedState")
        .def_readonly("label", &ExcludedState::label)
        .def_readonly("status", &ExcludedState::status);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("states", &Spectrum::states)
        .def_readonly("excluded", &Spectrum::excluded);

    m.def("admissibility", &admissibility, py::arg("params"), py::arg("label"));
    m.def("energy", &energy, py::arg("params"), py::arg("label"));
    m.def("gamma_scale", &gamma_scale, py::arg("params"), py::arg("label"));
    m.def("list_spectrum", &list_spectrum, py::arg("params"), py::arg("n_max"));
    m.def("potential", py::vectorize([](ModelParams p, double x) { return potential(p, x); }),
          py::arg("params"), py::arg("x"));
    m.def("wavefunction",
          py::vectorize([](ModelParams p, StateLabel l, double x, bool normalized) {
              return wavefunction(p, l, x, normalized);
          }),
          py::arg("params"), py::arg("label"), py::arg("x"), py::arg("normalized") = false);

    py::class_<PseudoNormResult>(m, "PseudoNormResult")
        .def_readonly("value", &PseudoNormResult::value)
        .def_readonly("sigma", &PseudoNormResult::sigma)
        .def_property_readonly("method", [](const PseudoNormResult& r) { return std::string(to_string(r.method)); })
        .def_readonly("imag_residual", &PseudoNormResult::imag_residual)
        .def_readonly("error_estimate", &PseudoNormResult::error_estimate)
        .def_readonly("tail_bound", &PseudoNormResult::tail_bound);

    m.def("pseudo_norm_closed", &pseudo_norm_closed, py::arg("params"), py::arg("label"));
    m.def(
        "pseudo_norm_quadrature",
        [](const ModelParams& p, const StateLabel& l, const std::string& mode) {
            return pseudo_norm_quadrature(p, l, parse_mode(mode));
        },
        py::arg("params"), py::arg("label"), py::arg("mode") = "half-line");
    m.def(
        "contour_segment_term",
        [](const ModelParams& p, const StateLabel& l) { return contour_segment_term(p, l); },
        py::arg("params"), py::arg("label"));
    m.def("normalization_coefficient", &normalization_coefficient, py::arg("params"), py::arg("label"));
    m.def(
        "pseudo_inner_product",
        [](const ModelParams& p, const StateLabel& a, const StateLabel& b, const std::string& route) {
            return pseudo_inner_product(p, a, b, parse_route(route));
        },
        py::arg("params"), py::arg("a"), py::arg("b"), py::arg("route") = "real-line");

    py::class_<PTCheckResult>(m, "PTCheckResult")
        .def_readonly("max_deviation", &PTCheckResult::max_deviation)
        .def_readonly("phase_phi", &PTCheckResult::phase_phi);
    m.def(
        "check_pt_potential",
        [](const ModelParams& p, const std::vector<double>& xs) { return check_pt_potential(p, xs); },
        py::arg("params"), py::arg("xs"));
    m.def(
        "check_pt_wavefunction",
        [](const ModelParams& p, const StateLabel& l, const std::vector<double>& xs) {
            return check_pt_wavefunction(p, l, xs);
        },
        py::arg("params"), py::arg("label"), py::arg("xs"));

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("grid_step", &ResidualReport::grid_step)
        .def_readonly("residual_norm", &ResidualReport::residual_norm)
        .def_readonly("refined_residual_norm", &ResidualReport::refined_residual_norm)
        .def_readonly("convergence_order", &ResidualReport::convergence_order);
    m.def(
        "schrodinger_residual",
        [](const ModelParams& p, const StateLabel& l, double x_min, double x_max, double step) {
            return schrodinger_residual(p, l, ResidualGrid{x_min, x_max, step});
        },
        py::arg("params"), py::arg("label"), py::arg("x_min"), py::arg("x_max"), py::arg("step"));

    py::class_<ShootingConfig>(m, "ShootingConfig")
        .def(py::init<double, double, std::pair<double, double>, double>(), py::arg("t_start"),
             py::arg("t_match"), py::arg("e_bracket"), py::arg("tolerance"))
        .def_readwrite("t_start", &ShootingConfig::t_start)
        .def_readwrite("t_match", &ShootingConfig::t_match)
        .def_readwrite("e_bracket", &ShootingConfig::e_bracket)
        .def_readwrite("tolerance", &ShootingConfig::tolerance);
    m.def("default_shooting_config", &default_shooting_config, py::arg("params"), py::arg("label"));
    m.def("shooting_eigensolve", &shooting_eigensolve, py::arg("params"), py::arg("q"), py::arg("e_bracket"),
          py::arg("config"));
    m.def("shooting_scan", &shooting_scan, py::arg("params"), py::arg("q"), py::arg("e_deep"),
          py::arg("e_shallow"), py::arg("points"));

    py::class_<HermitianLimitReport>(m, "HermitianLimitReport")
        .def_readonly("max_discrepancy", &HermitianLimitReport::max_discrepancy)
        .def_readonly("max_c_dependence", &HermitianLimitReport::max_c_dependence)
        .def_readonly("states_checked", &HermitianLimitReport::states_checked);
    m.def("hermitian_limit_check", &hermitian_limit_check, py::arg("params"), py::arg("n_max"));

    m.def(
        "alpha_sweep",
        [](double beta, int q, int n, const std::vector<double>& alphas) {
            py::list out;
            for (const auto& row : alpha_sweep(beta, q, n, alphas)) {
                out.append(py::make_tuple(row.alpha, row.status, row.energy));
            }
            return out;
        },
        py::arg("beta"), py::arg("q"), py::arg("n"), py::arg("alphas"));
}
