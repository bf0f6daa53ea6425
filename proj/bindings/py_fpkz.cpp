#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpkz/analysis.hpp"
#include "fpkz/construct.hpp"
#include "fpkz/json_io.hpp"
#include "fpkz/kz.hpp"
#include "fpkz/oracle.hpp"
#include "fpkz/selftest.hpp"

#include <iostream>
#include <sstream>

namespace py = pybind11;
using namespace fpkz;

namespace {

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

json py_to_json(const py::object& obj) {
    std::string dumped = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return json::parse(dumped);
}

Perm perm_or_identity(const KzInstance& inst, const std::optional<std::vector<int>>& sigma) {
    if (!sigma) return identity_perm(inst.n);
    return Perm(sigma->begin(), sigma->end());
}

} // namespace

PYBIND11_MODULE(_fpkz, m) {
    m.doc() = "exact F_p-hypergeometric solutions of the KZ system";

    py::register_exception<Error>(m, "FpkzError");

    py::class_<KzInstance>(m, "KzInstance")
        .def_readonly("p", &KzInstance::p)
        .def_readonly("q", &KzInstance::q)
        .def_readonly("n", &KzInstance::n)
        .def_readonly("m", &KzInstance::m)
        .def_readonly("M", &KzInstance::M)
        .def_readonly("r", &KzInstance::r)
        .def_readonly("ample", &KzInstance::ample)
        .def("sum_M", &KzInstance::sum_M)
        .def("delta", &KzInstance::delta, py::arg("l"))
        .def("__repr__", [](const KzInstance& inst) {
            std::ostringstream os;
            os << "KzInstance(p=" << inst.p << ", q=" << inst.q << ", n=" << inst.n
               << ", r=" << inst.r << (inst.ample ? ", ample" : "") << ")";
            return os.str();
        });

    m.def("make_instance", &make_instance, py::arg("p"), py::arg("q"), py::arg("m"));

    m.def(
        "gamma", [](i64 x, i64 p) { return gamma_fp(x, p).value(); }, py::arg("x"), py::arg("p"),
        "mod-p Morita gamma, p-periodic on Z");
    m.def(
        "binom", [](i64 a, i64 b, i64 p) { return binom_mod_p(a, b, p).value(); }, py::arg("a"),
        py::arg("b"), py::arg("p"), "binomial coefficient mod p by Lucas' theorem");
    m.def(
        "beta", [](i64 a, i64 b, i64 p) { return beta_fp(a, b, p).value(); }, py::arg("a"),
        py::arg("b"), py::arg("p"), "the F_p-beta value -a! b! / (a+b-p+1)!");

    m.def(
        "solve",
        [](const KzInstance& inst, int l) {
            return json_to_py(solution_to_json(inst, hypergeometric_solution(inst, l)));
        },
        py::arg("instance"), py::arg("l"), "the solution I^[l] as a JSON-shaped dict");

    m.def(
        "verify",
        [](const KzInstance& inst, const py::object& solution) {
            VecPoly I = solution_payload_from_json(py_to_json(solution));
            return json_to_py(verification_report_to_json(verify_kz_solution(inst, I)));
        },
        py::arg("instance"), py::arg("solution"));

    m.def(
        "leading",
        [](const KzInstance& inst, int l, const std::optional<std::vector<int>>& sigma) {
            LeadingPrediction pred = leading_prediction(inst, l, perm_or_identity(inst, sigma));
            json j{{"schema", kSchemaTag},      {"l", pred.l},
                   {"sigma", pred.sigma},       {"i_of_l", pred.i_of_l},
                   {"scalar", pred.scalar},     {"coeff", pred.coeff_vector.a_coords},
                   {"coeff_w", pred.coeff_vector.w_coords}, {"exponents", pred.exponents}};
            return json_to_py(j);
        },
        py::arg("instance"), py::arg("l"), py::arg("sigma") = py::none());

    m.def(
        "det_report",
        [](const KzInstance& inst) { return json_to_py(det_report_to_json(verify_determinant(inst))); },
        py::arg("instance"));

    m.def(
        "search",
        [](const KzInstance& inst, int degree, std::size_t cap) {
            return json_to_py(basis_to_json(solve_homogeneous(inst, degree, cap)));
        },
        py::arg("instance"), py::arg("degree"), py::arg("cap") = std::size_t(20000));

    m.def(
        "reduce",
        [](const KzInstance& inst, const py::object& solution) {
            VecPoly I = solution_payload_from_json(py_to_json(solution));
            return json_to_py(reduce_result_to_json(inst, reduce_to_hypergeometric(inst, I)));
        },
        py::arg("instance"), py::arg("solution"));

    m.def("initial_value", &initial_value, py::arg("instance"), py::arg("x"), py::arg("w"));

    m.def(
        "selftest",
        []() {
            auto results = selftest::run_all(std::cout);
            return selftest::all_passed(results);
        },
        "run the full verification grid, printing one line per criterion");
}
