#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfdesc/descriptor.hpp"
#include "selfdesc/digits.hpp"
#include "selfdesc/errors.hpp"
#include "selfdesc/search.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const selfdesc::BigUint& value) {
    const std::string text = value.to_decimal();
    PyObject* obj = PyLong_FromString(text.c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

selfdesc::BigUint to_big_uint(const py::int_& value) {
    return selfdesc::BigUint::from_decimal(static_cast<std::string>(py::str(value)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace selfdesc;

    m.doc() = "Self-descriptive number toolkit: verification, enumeration by "
              "brute force or case analysis, and the canonical construction.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<DigitString>(m, "DigitString")
        .def(py::init([](int base, const std::vector<int>& digits) {
                 return DigitString(Base(base), digits);
             }),
             py::arg("base"), py::arg("digits"))
        .def_property_readonly("base", [](const DigitString& ds) { return ds.base().value(); })
        .def_property_readonly("digits",
                               [](const DigitString& ds) { return ds.digits(); })
        .def_property_readonly("text",
                               [](const DigitString& ds) { return format_digit_string(ds); })
        .def_property_readonly("value",
                               [](const DigitString& ds) { return to_py_int(value_of(ds)); })
        .def("reinterpret",
             [](const DigitString& ds, int base) { return ds.reinterpret(Base(base)); },
             py::arg("base"))
        .def("__str__", [](const DigitString& ds) { return format_digit_string(ds); })
        .def("__repr__",
             [](const DigitString& ds) {
                 return "DigitString(base=" + std::to_string(ds.base().value()) + ", '" +
                        format_digit_string(ds) + "')";
             })
        .def("__eq__",
             [](const DigitString& a, const DigitString& b) { return a == b; },
             py::is_operator())
        .def("__len__", [](const DigitString& ds) { return ds.size(); });

    py::class_<EnumerationResult>(m, "EnumerationResult")
        .def_property_readonly("base",
                               [](const EnumerationResult& r) { return r.base.value(); })
        .def_property_readonly(
            "method",
            [](const EnumerationResult& r) { return std::string(method_name(r.method)); })
        .def_readonly("numbers", &EnumerationResult::numbers)
        .def_readonly("work_count", &EnumerationResult::work_count)
        .def("__repr__", [](const EnumerationResult& r) {
            return "EnumerationResult(base=" + std::to_string(r.base.value()) + ", method='" +
                   std::string(method_name(r.method)) + "', " +
                   std::to_string(r.numbers.size()) + " numbers)";
        });

    py::class_<SolverBranch>(m, "SolverBranch")
        .def_property_readonly(
            "case_label",
            [](const SolverBranch& b) { return std::string(case_label_name(b.label)); })
        .def_readonly("open", &SolverBranch::open)
        .def_readonly("reason", &SolverBranch::reason)
        .def_readonly("candidate", &SolverBranch::candidate)
        .def("__repr__", [](const SolverBranch& b) {
            return "SolverBranch('" + std::string(case_label_name(b.label)) + "', " +
                   (b.open ? "open" : "closed") + ")";
        });

    py::class_<SolverTrace>(m, "SolverTrace")
        .def_property_readonly("base", [](const SolverTrace& t) { return t.base.value(); })
        .def_readonly("branches", &SolverTrace::branches);

    py::class_<CrossCheckRow>(m, "CrossCheckRow")
        .def_readonly("base", &CrossCheckRow::base)
        .def_readonly("oracle_count", &CrossCheckRow::oracle_count)
        .def_readonly("solver_count", &CrossCheckRow::solver_count)
        .def_readonly("agree", &CrossCheckRow::agree)
        .def_readonly("work_count", &CrossCheckRow::work_count);

    py::class_<CrossCheckReport>(m, "CrossCheckReport")
        .def_readonly("rows", &CrossCheckReport::rows)
        .def_readonly("all_agree", &CrossCheckReport::all_agree);

    m.def(
        "parse",
        [](const std::string& text, int base) { return parse_digit_string(text, Base(base)); },
        py::arg("text"), py::arg("base"),
        "Parse a compact or dotted digit string.");

    m.def(
        "digit_string_from_value",
        [](const py::int_& value, int base) {
            return digit_string_from_value(to_big_uint(value), Base(base));
        },
        py::arg("value"), py::arg("base"),
        "Minimal-length digit string of a nonnegative integer.");

    m.def(
        "descriptor_counts",
        [](const DigitString& ds) { return descriptor_counts(ds).counts; }, py::arg("digits"),
        "Occurrence count of each digit value (requires length == base).");

    m.def("is_self_descriptive",
          py::overload_cast<const DigitString&>(&is_self_descriptive), py::arg("digits"),
          "True iff the string equals its own descriptor counts.");

    m.def(
        "verify",
        [](const std::string& text, int base) {
            return is_self_descriptive(parse_digit_string(text, Base(base)));
        },
        py::arg("text"), py::arg("base"),
        "Parse and check in one step.");

    m.def("satisfies_sum_lemma", &satisfies_sum_lemma, py::arg("digits"),
          "Necessary condition: length == base and digit sum == base.");

    m.def(
        "restricted_partition",
        [](int m) { return restricted_partition(m).parts; }, py::arg("m"),
        "The unique partition of m into m-1 positive parts: [2, 1, ..., 1].");

    m.def(
        "brute_force_enumerate",
        [](int base, std::optional<std::uint64_t> work_cap) {
            return brute_force_enumerate(Base(base), work_cap);
        },
        py::arg("base"), py::arg("work_cap") = std::nullopt,
        "Exhaustive enumeration over the digit-sum candidate space.");

    m.def(
        "solver_enumerate",
        [](int base) { return solver_enumerate(Base(base)); }, py::arg("base"),
        "Case-analysis enumeration; returns (result, trace).");

    m.def(
        "construct_canonical",
        [](int base) { return construct_canonical(Base(base)); }, py::arg("base"),
        "The canonical self-descriptive number of a base >= 7.");

    m.def(
        "autobiographical",
        [](int base) { return autobiographical(Base(base)); }, py::arg("base"),
        "Self-descriptive numbers of bases 2..b, reinterpreted in base b.");

    m.def(
        "cross_check",
        [](int from, int to, std::optional<std::uint64_t> work_cap) {
            return cross_check(from, to, work_cap);
        },
        py::arg("from_base"), py::arg("to_base"), py::arg("work_cap") = std::nullopt,
        "Assert oracle and solver agree on every base in the range.");
}
