#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "respole/contour.hpp"
#include "respole/exact.hpp"
#include "respole/jordan.hpp"
#include "respole/model.hpp"
#include "respole/states.hpp"

namespace py = pybind11;
using namespace respole;

PYBIND11_MODULE(_core, m) {
    m.doc() = "resonance-pole toolkit: pole terms, Jordan-block evolution, state operators";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PoleEvaluationError>(m, "PoleEvaluationError", PyExc_ArithmeticError);

    py::enum_<Normalization>(m, "Normalization")
        .value("DERIVATIVE", Normalization::Derivative)
        .value("JORDAN", Normalization::Jordan)
        .value("PSI_G", Normalization::PsiG);

    py::enum_<BraKind>(m, "BraKind")
        .value("SCATTERING_PLUS", BraKind::ScatteringPlus)
        .value("DECAY_MINUS", BraKind::DecayMinus);

    py::class_<ResonanceModel>(m, "ResonanceModel")
        .def(py::init<double, double, int, std::vector<double>>(), py::arg("E_R"),
             py::arg("Gamma"), py::arg("r"), py::arg("gamma") = std::vector<double>{})
        .def_readonly("E_R", &ResonanceModel::E_R)
        .def_readonly("Gamma", &ResonanceModel::Gamma)
        .def_readonly("r", &ResonanceModel::r)
        .def_readonly("gamma_coeffs", &ResonanceModel::gamma_coeffs)
        .def_property_readonly("z_R", &ResonanceModel::z_R)
        .def("smatrix", [](const ResonanceModel& mm, cplx w) { return smatrix_eval(mm, w); },
             py::arg("w"))
        .def("__repr__", [](const ResonanceModel& mm) {
            return "ResonanceModel(E_R=" + std::to_string(mm.E_R) +
                   ", Gamma=" + std::to_string(mm.Gamma) + ", r=" + std::to_string(mm.r) + ")";
        });

    py::class_<HardyPole>(m, "HardyPole")
        .def(py::init([](cplx position, int mult) {
                 return HardyPole{position, mult};
             }),
             py::arg("position"), py::arg("multiplicity") = 1)
        .def_readonly("position", &HardyPole::position)
        .def_readonly("multiplicity", &HardyPole::multiplicity);

    py::class_<HardyFunction>(m, "HardyFunction")
        .def(py::init([](const std::vector<cplx>& numer,
                         const std::vector<std::pair<cplx, int>>& poles) {
                 HardyFunction f;
                 f.numer = Poly(numer);
                 for (const auto& [pos, mult] : poles) f.poles.push_back({pos, mult});
                 return f;
             }),
             py::arg("numer"), py::arg("poles"))
        .def("eval", &HardyFunction::eval, py::arg("z"))
        .def("derivative", &HardyFunction::derivative)
        .def_property_readonly("decay_degree", &HardyFunction::decay_degree)
        .def_property_readonly("numer",
                               [](const HardyFunction& f) { return f.numer.coeffs(); })
        .def_property_readonly("poles", [](const HardyFunction& f) {
            std::vector<std::pair<cplx, int>> out;
            for (const auto& p : f.poles) out.emplace_back(p.position, p.multiplicity);
            return out;
        });

    m.def("smatrix_eval", &smatrix_eval, py::arg("model"), py::arg("w"));
    m.def("laurent_principal",
          [](const ResonanceModel& mm) { return laurent_principal(mm).a; }, py::arg("model"));
    m.def("hardy_derivative", &hardy_derivative, py::arg("f"), py::arg("z"), py::arg("k"));
    m.def("hardy_validate", [](const HardyFunction& f) {
        std::vector<std::string> out;
        for (const auto& v : hardy_validate(f).violations) out.push_back(v.detail);
        return out;
    });

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("circle_radius", &QuadratureSpec::circle_radius)
        .def_readwrite("panels", &QuadratureSpec::panels)
        .def_readwrite("e_max", &QuadratureSpec::e_max)
        .def_readwrite("tol", &QuadratureSpec::tol);

    py::class_<PoleTermResult>(m, "PoleTermResult")
        .def_readonly("total", &PoleTermResult::total)
        .def_readonly("per_order", &PoleTermResult::per_order)
        .def_readonly("gauge_included", &PoleTermResult::gauge_included);

    py::class_<IntegralResult>(m, "IntegralResult")
        .def_readonly("value", &IntegralResult::value)
        .def_readonly("error_estimate", &IntegralResult::error_estimate)
        .def_readonly("tail_bound", &IntegralResult::tail_bound)
        .def_readonly("e_max", &IntegralResult::e_max);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("direct", &IdentityReport::direct)
        .def_readonly("background", &IdentityReport::background)
        .def_readonly("pole_total", &IdentityReport::pole_total)
        .def_readonly("defect", &IdentityReport::defect)
        .def_readonly("rel_defect", &IdentityReport::rel_defect)
        .def_readonly("tol", &IdentityReport::tol)
        .def_readonly("ok", &IdentityReport::pass);

    py::class_<CauchyResult>(m, "CauchyResult")
        .def_readonly("value", &CauchyResult::value)
        .def_readonly("error_estimate", &CauchyResult::error_estimate)
        .def_readonly("converged", &CauchyResult::converged)
        .def_readonly("panels_used", &CauchyResult::panels_used);

    m.def("cauchy_derivative", &cauchy_derivative, py::arg("g"), py::arg("z0"), py::arg("n"),
          py::arg("quadrature") = QuadratureSpec{});
    m.def("pole_term", &pole_term, py::arg("model"), py::arg("psi"), py::arg("phi"));
    m.def("direct_integral", &direct_integral, py::arg("model"), py::arg("psi"), py::arg("phi"),
          py::arg("quadrature") = QuadratureSpec{});
    m.def("background_integral", &background_integral, py::arg("model"), py::arg("psi"),
          py::arg("phi"), py::arg("quadrature") = QuadratureSpec{});
    m.def("contour_identity_check", &contour_identity_check, py::arg("model"), py::arg("psi"),
          py::arg("phi"), py::arg("quadrature") = QuadratureSpec{}, py::arg("tol") = 1e-8);
    m.def("expansion_coefficients", &expansion_coefficients, py::arg("model"), py::arg("phi"));
    m.def("pole_term_from_expansion", &pole_term_from_expansion, py::arg("model"),
          py::arg("psi"), py::arg("phi"));

    py::class_<GamowComponents>(m, "GamowComponents")
        .def_readonly("values", &GamowComponents::values)
        .def_readonly("norm", &GamowComponents::norm)
        .def_readonly("z_R", &GamowComponents::z_R)
        .def_readonly("Gamma", &GamowComponents::Gamma)
        .def_readonly("r", &GamowComponents::r)
        .def("to", &GamowComponents::to, py::arg("target"));

    m.def("gamow_components", &gamow_components, py::arg("model"), py::arg("psi"));

    py::class_<JordanOperator>(m, "JordanOperator")
        .def_readonly("entries", &JordanOperator::entries)
        .def_readonly("z_R", &JordanOperator::z_R)
        .def_readonly("Gamma", &JordanOperator::Gamma)
        .def_readonly("r", &JordanOperator::r)
        .def("ket_action", &JordanOperator::ket_action);

    m.def("hamiltonian_block", &hamiltonian_block, py::arg("model"));
    m.def("nilpotency_check", &nilpotency_check, py::arg("model"), py::arg("k"));
    m.def("lagrange_sylvester", &lagrange_sylvester, py::arg("model"), py::arg("f_derivatives"));
    m.def("evolution_matrix", &evolution_matrix, py::arg("model"), py::arg("t"));
    m.def("matrix_exp_oracle", &matrix_exp_oracle, py::arg("model"), py::arg("t"));
    m.def("evolve_components", &evolve_components, py::arg("components"), py::arg("t"));

    py::class_<DyadCoefficients>(m, "DyadCoefficients")
        .def_readonly("c", &DyadCoefficients::c)
        .def_readonly("bra", &DyadCoefficients::bra)
        .def_readonly("z_R", &DyadCoefficients::z_R)
        .def_readonly("Gamma", &DyadCoefficients::Gamma)
        .def_readonly("r", &DyadCoefficients::r)
        .def("to_derivative_basis", &DyadCoefficients::to_derivative_basis);

    m.def("state_operator", &state_operator, py::arg("model"), py::arg("n"),
          py::arg("bra_kind") = BraKind::DecayMinus);
    m.def("full_state_operator", &full_state_operator, py::arg("model"),
          py::arg("bra_kind") = BraKind::DecayMinus);
    m.def("evolve_dyad", &evolve_dyad, py::arg("model"), py::arg("k"), py::arg("m"),
          py::arg("t"));
    m.def("evolve_coefficients", &evolve_coefficients, py::arg("w"), py::arg("t"));
    m.def("evolve_state_triple_sum", &evolve_state_triple_sum, py::arg("model"), py::arg("n"),
          py::arg("t"));
    m.def("evolve_state_closed", &evolve_state_closed, py::arg("model"), py::arg("n"),
          py::arg("t"));
    m.def("pair_with_observable", &pair_with_observable, py::arg("w"), py::arg("psi"));
    m.def("scattering_probability_evolution", &scattering_probability_evolution,
          py::arg("model"), py::arg("psi"), py::arg("phi"), py::arg("t"));

    m.def("binom_product_identity", &binom_product_identity, py::arg("n"), py::arg("k"),
          py::arg("l"), py::arg("m"));
    m.def("reorder_check", &reorder_check, py::arg("n"));
    m.def("binom_cancellation_ok", [](int n, int mm, int l) {
        const auto p = binom_cancellation(n, mm, l);
        return l == n - mm ? p.is_constant_one() : p.is_zero();
    });
    m.def("symbolic_evolution_matches", [](int n) {
        return symbolic_state_evolution(n).matches_antidiagonal();
    });
}
