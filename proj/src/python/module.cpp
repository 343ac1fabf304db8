#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccsym/curve.hpp"
#include "ccsym/expr.hpp"
#include "ccsym/poly.hpp"
#include "ccsym/symbols.hpp"
#include "ccsym/verify.hpp"
#include "ccsym/witt.hpp"

namespace py = pybind11;
using namespace ccsym;

namespace {

py::dict decomposition_dict(const CCDecomposition& d) {
    py::dict neg;
    for (const auto& [i, a] : d.neg) neg[py::int_(i)] = a.to_string();
    py::list pos;
    size_t len = d.pos.size();
    while (len > 0 && d.pos[len - 1].is_zero()) --len;
    for (size_t i = 0; i < len; ++i) pos.append(d.pos[i].to_string());
    py::dict out;
    out["n"] = d.n;
    out["lambda"] = d.lambda.to_string();
    out["neg"] = neg;
    out["pos"] = pos;
    return out;
}

py::dict reciprocity_dict(const ReciprocityResult& r) {
    py::list locals_;
    for (const auto& lv : r.locals) {
        py::dict row;
        row["point"] = lv.point.to_string();
        row["degree"] = lv.point.degree();
        row["local"] = lv.value;
        locals_.append(row);
    }
    py::dict out;
    out["points"] = locals_;
    out["product"] = r.product;
    return out;
}

}  // namespace

PYBIND11_MODULE(_ccsym, m) {
    m.doc() = "exact local symbols on P^1 over artinian coefficient rings";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "CCSymError");

    py::class_<AlgebraDescriptor, std::shared_ptr<AlgebraDescriptor>>(m, "Algebra")
        .def(py::init([](const std::string& s) {
                 return std::const_pointer_cast<AlgebraDescriptor>(parse_algebra(s));
             }),
             py::arg("descriptor"))
        .def_property_readonly("characteristic", &AlgebraDescriptor::characteristic)
        .def_property_readonly("nilpotency_index", &AlgebraDescriptor::nilpotency_index)
        .def_property_readonly("extension_degree", &AlgebraDescriptor::extension_degree)
        .def_property_readonly("is_finite", &AlgebraDescriptor::is_finite)
        .def("cardinality", &AlgebraDescriptor::cardinality)
        .def("unit_group_order", [](const AlgebraPtr& a) { return unit_group_order(a); })
        .def("__repr__", &AlgebraDescriptor::to_string)
        .def("__str__", &AlgebraDescriptor::to_string);

    py::class_<RingElement>(m, "Element")
        .def(py::init([](const AlgebraPtr& a, const std::string& s) {
                 return parse_element(a, s);
             }),
             py::arg("algebra"), py::arg("expr"))
        .def_property_readonly("is_unit", &RingElement::is_unit)
        .def_property_readonly("is_nilpotent", &RingElement::is_nilpotent)
        .def("nilindex", &RingElement::nilindex)
        .def("inverse", &RingElement::inverse)
        .def("__add__", [](const RingElement& a, const RingElement& b) { return a + b; })
        .def("__sub__", [](const RingElement& a, const RingElement& b) { return a - b; })
        .def("__mul__", [](const RingElement& a, const RingElement& b) { return a * b; })
        .def("__truediv__", [](const RingElement& a, const RingElement& b) { return a / b; })
        .def("__neg__", [](const RingElement& a) { return -a; })
        .def("__pow__", [](const RingElement& a, long long k) { return a.pow(k); })
        .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
        .def("__repr__", &RingElement::to_string)
        .def("__str__", &RingElement::to_string);

    py::class_<LaurentSeries>(m, "Series")
        .def(py::init([](const AlgebraPtr& a, const std::string& s, long prec) {
                 return parse_series(a, s, prec);
             }),
             py::arg("algebra"), py::arg("expr"), py::arg("prec") = 16)
        .def_property_readonly("is_unit", &LaurentSeries::is_unit)
        .def_property_readonly("is_exact", &LaurentSeries::is_exact)
        .def("valuation", &LaurentSeries::valuation)
        .def("coeff", &LaurentSeries::coeff, py::arg("k"))
        .def("first_unknown", &LaurentSeries::first_unknown)
        .def("__mul__", [](const LaurentSeries& a, const LaurentSeries& b) { return a * b; })
        .def("__add__", [](const LaurentSeries& a, const LaurentSeries& b) { return a + b; })
        .def("__sub__", [](const LaurentSeries& a, const LaurentSeries& b) { return a - b; })
        .def("__neg__", [](const LaurentSeries& a) { return -a; })
        .def("inverse", [](const LaurentSeries& a) { return a.inverse(); })
        .def("__repr__", &LaurentSeries::to_string)
        .def("__str__", &LaurentSeries::to_string);

    py::class_<SymbolValue>(m, "SymbolValue")
        .def_property_readonly("value", &SymbolValue::value)
        .def_property_readonly("mu_order",
                               [](const SymbolValue& v) -> py::object {
                                   if (v.mu_order()) return py::int_(*v.mu_order());
                                   return py::none();
                               })
        .def("__eq__", [](const SymbolValue& a, const SymbolValue& b) { return a == b; })
        .def("__repr__", &SymbolValue::to_string)
        .def("__str__", &SymbolValue::to_string);

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init([](const AlgebraPtr& a, const std::string& s) {
                 return parse_rational(a, s);
             }),
             py::arg("algebra"), py::arg("expr"))
        .def_property_readonly("is_unit", &RationalFunction::is_unit)
        .def("__mul__",
             [](const RationalFunction& a, const RationalFunction& b) { return a * b; })
        .def("inverse", &RationalFunction::inverse)
        .def("__repr__", &RationalFunction::to_string)
        .def("__str__", &RationalFunction::to_string);

    py::class_<ClosedPoint>(m, "ClosedPoint")
        .def_property_readonly("is_infinity", &ClosedPoint::is_infinity)
        .def_property_readonly("degree", &ClosedPoint::degree)
        .def("__eq__", [](const ClosedPoint& a, const ClosedPoint& b) { return a == b; })
        .def("__repr__", &ClosedPoint::to_string)
        .def("__str__", &ClosedPoint::to_string);

    // symbols
    m.def("cc_symbol", &cc_symbol, py::arg("u"), py::arg("w"));
    m.def("cc_symbol_residue", &cc_symbol_residue, py::arg("u"), py::arg("w"));
    m.def("tame_symbol", &tame_symbol, py::arg("f"), py::arg("g"));
    m.def("norm_symbol", &norm_symbol, py::arg("u"), py::arg("w"), py::arg("deg_p"));
    m.def(
        "phi_symbol",
        [](const LaurentSeries& u, const LaurentSeries& w, long N, int deg_p) {
            return phi_symbol(u, w, Character{N}, deg_p);
        },
        py::arg("u"), py::arg("w"), py::arg("N"), py::arg("deg_p") = 1);
    m.def("hilbert_symbol", &hilbert_symbol, py::arg("u"), py::arg("w"), py::arg("m"));
    m.def(
        "decompose",
        [](const LaurentSeries& u, long pos_limit) {
            return decomposition_dict(cc_decompose(u, pos_limit));
        },
        py::arg("u"), py::arg("pos_limit") = -1);
    m.def("required_precision", &required_precision, py::arg("u"), py::arg("w"));

    // algebra extras
    m.def("norm", &norm, py::arg("x"));
    m.def("exp_nilpotent", &exp_nilpotent, py::arg("x"));
    m.def("log_unipotent", &log_unipotent, py::arg("u"));

    // witt vectors, coordinatewise over element lists
    m.def(
        "witt_add",
        [](const std::vector<RingElement>& x, const std::vector<RingElement>& y) {
            auto s = witt_add(WittVector(x[0].algebra(), x), WittVector(y[0].algebra(), y));
            return s.coords();
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "witt_to_series_coeffs",
        [](const std::vector<RingElement>& x) {
            return witt_to_series(WittVector(x[0].algebra(), x)).coeffs();
        },
        py::arg("x"));
    m.def(
        "cocycle",
        [](int h, const std::vector<RingElement>& x, const std::vector<RingElement>& y) {
            return cocycle_f(h, WittVector(x[0].algebra(), x), WittVector(y[0].algebra(), y));
        },
        py::arg("h"), py::arg("x"), py::arg("y"));

    // curve
    m.def("support", &support, py::arg("f"), py::arg("g"));
    m.def("local_expand", &local_expand, py::arg("f"), py::arg("p"), py::arg("width"));
    m.def(
        "local_symbol",
        [](const RationalFunction& f, const RationalFunction& g, const ClosedPoint& p, long N) {
            return local_symbol(f, g, p, Character{N});
        },
        py::arg("f"), py::arg("g"), py::arg("p"), py::arg("N") = 1);
    m.def(
        "reciprocity",
        [](const RationalFunction& f, const RationalFunction& g, long N) {
            return reciprocity_dict(reciprocity_product(f, g, Character{N}));
        },
        py::arg("f"), py::arg("g"), py::arg("N") = 1);
    m.def(
        "hilbert_reciprocity",
        [](const RationalFunction& f, const RationalFunction& g, long m2) {
            return reciprocity_dict(hilbert_reciprocity(f, g, m2));
        },
        py::arg("f"), py::arg("g"), py::arg("m"));

    // verification suites
    m.def(
        "verify",
        [](const std::string& suite, uint64_t seed, long cases) {
            SuiteResult r = run_suite(suite, seed, cases);
            py::dict out;
            out["suite"] = r.name;
            out["cases"] = r.cases;
            out["failures"] = r.failures;
            out["notes"] = r.failure_notes;
            return out;
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("cases") = 100);
    m.def("suites", &suite_names);
}
