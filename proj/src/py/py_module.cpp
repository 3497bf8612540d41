#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabbounds/bounds.hpp"
#include "stabbounds/measurement_file.hpp"
#include "stabbounds/noise.hpp"

namespace py = pybind11;
using namespace stabbounds;

namespace {

std::vector<std::vector<cdouble>> matrix_rows(const CMatrix& m) {
    std::vector<std::vector<cdouble>> rows(static_cast<size_t>(m.dim));
    for (int r = 0; r < m.dim; ++r) {
        rows[static_cast<size_t>(r)].resize(static_cast<size_t>(m.dim));
        for (int c = 0; c < m.dim; ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = m(r, c);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "certified fidelity and entanglement bounds from stabilizer measurements";

    py::register_exception<InfeasibleDataError>(mod, "InfeasibleDataError", PyExc_ValueError);
    py::register_exception<ParseError>(mod, "MeasurementParseError", PyExc_ValueError);

    py::class_<PauliString>(mod, "PauliString")
        .def(py::init([](const std::string& label, int sign) {
                 return PauliString::from_label(label, sign);
             }),
             py::arg("label"), py::arg("sign") = 1)
        .def_readonly("n", &PauliString::n)
        .def_readonly("x", &PauliString::x)
        .def_readonly("z", &PauliString::z)
        .def_readonly("sign", &PauliString::sign)
        .def("label", &PauliString::label)
        .def("commutes_with", &PauliString::commutes_with)
        .def("__repr__", [](const PauliString& p) {
            return std::string(p.sign < 0 ? "-" : "+") + p.label();
        });

    mod.def("multiply", &multiply, py::arg("a"), py::arg("b"));
    mod.def("pt_sign", &pt_sign, py::arg("p"), py::arg("parties"));
    mod.def("dephasing_weight", &dephasing_weight, py::arg("p"));
    mod.def("pauli_matrix", [](const PauliString& p) { return matrix_rows(to_dense(p)); });

    py::class_<StabilizerSpec>(mod, "StabilizerSpec")
        .def_static("graph", &StabilizerSpec::graph, py::arg("n"), py::arg("edges"))
        .def_static("ghz", &StabilizerSpec::ghz, py::arg("n"))
        .def_static("line_cluster", &StabilizerSpec::line_cluster, py::arg("n"))
        .def_static("cycle_cluster", &StabilizerSpec::cycle_cluster, py::arg("n"))
        .def_readonly("n", &StabilizerSpec::n)
        .def_readonly("edges", &StabilizerSpec::edges)
        .def_readonly("generators", &StabilizerSpec::generators);

    mod.def("group_element", &group_element, py::arg("spec"), py::arg("index"));

    py::class_<SymState>(mod, "SymState")
        .def(py::init<StabilizerSpec, std::vector<double>>(), py::arg("spec"), py::arg("coeffs"))
        .def_static("pure_state", &SymState::pure_state)
        .def_static("maximally_mixed", &SymState::maximally_mixed)
        .def_readonly("spec", &SymState::spec)
        .def_readonly("coeffs", &SymState::coeffs)
        .def("qubit_count", &SymState::qubit_count);

    mod.def("eigenvalues",
            [](const SymState& s) { return eigenvalues(s).values; }, py::arg("state"));
    mod.def("trace_of", &trace_of, py::arg("state"));
    mod.def("partial_transpose", &partial_transpose, py::arg("state"), py::arg("parties"));
    mod.def("state_matrix", [](const SymState& s) { return matrix_rows(to_dense(s)); });
    mod.def("walsh_transform", [](std::vector<double> data) {
        walsh_transform(data);
        return data;
    });

    mod.def(
        "dephase",
        [](const StabilizerSpec& spec, double gamma, double time) {
            return dephase({spec, gamma, time});
        },
        py::arg("spec"), py::arg("gamma") = 0.1, py::arg("time") = 1.0);
    mod.def("generator_outcomes", &generator_outcomes, py::arg("state"));

    py::class_<MeasurementRecord>(mod, "MeasurementRecord")
        .def(py::init<StabilizerSpec, std::vector<double>,
                      std::vector<std::pair<PauliString, double>>, std::string>(),
             py::arg("spec"), py::arg("outcomes"),
             py::arg("extra_observables") = std::vector<std::pair<PauliString, double>>{},
             py::arg("label") = "")
        .def_readonly("spec", &MeasurementRecord::spec)
        .def_readonly("outcomes", &MeasurementRecord::outcomes)
        .def_readonly("extra_observables", &MeasurementRecord::extra_observables)
        .def_readonly("label", &MeasurementRecord::label);

    py::enum_<Quantity>(mod, "Quantity")
        .value("FIDELITY", Quantity::Fidelity)
        .value("GRE", Quantity::Gre)
        .value("LOG_NEGATIVITY", Quantity::LogNegativity);
    py::enum_<Method>(mod, "Method")
        .value("CLOSED", Method::Closed)
        .value("SYMMETRIC_LP", Method::SymmetricLp)
        .value("GENERAL_SDP", Method::GeneralSdp);
    py::enum_<MethodChoice>(mod, "MethodChoice")
        .value("AUTO", MethodChoice::Auto)
        .value("CLOSED", MethodChoice::Closed)
        .value("LP", MethodChoice::Lp)
        .value("SDP", MethodChoice::Sdp);
    py::enum_<NegativityVariant>(mod, "NegativityVariant")
        .value("PLAIN", NegativityVariant::Plain)
        .value("HALF", NegativityVariant::Half);

    py::class_<Certificate>(mod, "Certificate")
        .def_readonly("mu", &Certificate::mu)
        .def_readonly("cut_coeffs", &Certificate::cut_coeffs)
        .def_readonly("dual_objective", &Certificate::dual_objective);

    py::class_<Diagnostics>(mod, "Diagnostics")
        .def_readonly("primal_dual_gap", &Diagnostics::primal_dual_gap)
        .def_readonly("max_primal_residual", &Diagnostics::max_primal_residual)
        .def_readonly("max_dual_residual", &Diagnostics::max_dual_residual)
        .def_readonly("iterations", &Diagnostics::iterations)
        .def_readonly("notes", &Diagnostics::notes);

    py::class_<BoundResult>(mod, "BoundResult")
        .def_readonly("quantity", &BoundResult::quantity)
        .def_readonly("method", &BoundResult::method)
        .def_readonly("value", &BoundResult::value)
        .def_readonly("exact", &BoundResult::exact)
        .def_readonly("certificate", &BoundResult::certificate)
        .def_readonly("diagnostics", &BoundResult::diagnostics)
        .def("__repr__", [](const BoundResult& r) {
            return "<BoundResult value=" + std::to_string(r.value) + ">";
        });

    mod.def("fidelity_bound_lp", &fidelity_bound_lp, py::arg("record"));
    mod.def("fidelity_bound_closed", &fidelity_bound_closed, py::arg("record"));
    mod.def("gre_bound_lp", &gre_bound_lp, py::arg("record"));
    mod.def("gre_bound_closed", &gre_bound_closed, py::arg("record"));
    mod.def("gre_exact_symmetric", &gre_exact_symmetric, py::arg("state"));
    mod.def("gre_bound_general", &gre_bound_general, py::arg("record"));
    mod.def("negativity_bound_closed", &negativity_bound_closed, py::arg("ax"), py::arg("az"),
            py::arg("ay") = std::optional<double>{}, py::arg("variant") = NegativityVariant::Plain);
    mod.def("compute_bound", &compute_bound, py::arg("record"), py::arg("quantity"),
            py::arg("method") = MethodChoice::Auto,
            py::arg("variant") = NegativityVariant::Plain);

    py::class_<FidelityCertificate>(mod, "FidelityCertificate")
        .def_readonly("n", &FidelityCertificate::n)
        .def_readonly("lambda_identity", &FidelityCertificate::lambda_identity)
        .def_readonly("lambda_generator", &FidelityCertificate::lambda_generator)
        .def_readonly("residual_eigenvalues", &FidelityCertificate::residual_eigenvalues)
        .def_readonly("min_eigenvalue", &FidelityCertificate::min_eigenvalue)
        .def_readonly("valid", &FidelityCertificate::valid);
    mod.def("fidelity_dual_certificate", &fidelity_dual_certificate, py::arg("spec"));

    py::class_<OperatorInequalityCheck>(mod, "OperatorInequalityCheck")
        .def_readonly("name", &OperatorInequalityCheck::name)
        .def_readonly("worst", &OperatorInequalityCheck::worst)
        .def_readonly("ok", &OperatorInequalityCheck::ok);
    py::class_<CertificateSuiteReport>(mod, "CertificateSuiteReport")
        .def_readonly("name", &CertificateSuiteReport::name)
        .def_readonly("mu", &CertificateSuiteReport::mu)
        .def_readonly("checks", &CertificateSuiteReport::checks)
        .def_readonly("dual_objective", &CertificateSuiteReport::dual_objective)
        .def_readonly("all_ok", &CertificateSuiteReport::all_ok);
    mod.def("verify_box_cluster_certificate", &verify_box_cluster_certificate,
            py::arg("flip_cut") = -1, py::arg("flip_index") = -1);
    mod.def("verify_two_qubit_dual_point", &verify_two_qubit_dual_point);

    mod.def("parse_measurement_text", &parse_measurement_text, py::arg("text"));
    mod.def("load_measurement_file", &load_measurement_file, py::arg("path"));
    mod.def("format_measurement_record", &format_measurement_record, py::arg("record"));
    mod.def("save_measurement_file", &save_measurement_file, py::arg("record"), py::arg("path"));
}
