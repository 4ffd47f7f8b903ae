#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewdet/acceptance.hpp"
#include "skewdet/json_io.hpp"
#include "skewdet/mstrip.hpp"
#include "skewdet/nested_det.hpp"
#include "skewdet/tableaux.hpp"

namespace py = pybind11;
using namespace skewdet;

namespace {

// Python ints take arbitrary precision, so big integers cross as decimal strings.
py::int_ to_py(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

SkewShape shape_of(const Partition& lambda, const Partition& mu) { return SkewShape::make(lambda, mu); }

Decomposition decomposition_of(const std::string& json_text) {
    return decomposition_from_json(Json::parse(json_text));
}

py::dict polynomial_dict(const Polynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::tuple(py::cast(e))] = to_py(c);
    return d;
}

}  // namespace

PYBIND11_MODULE(_skewdet, m) {
    m.doc() = "Skew Schur determinants from thickened-strip decompositions";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    m.def(
        "count",
        [](const Partition& lambda, const Partition& mu, const std::string& method) {
            auto s = shape_of(lambda, mu);
            if (method == "brute") return to_py(count_syt_bruteforce(s));
            if (method != "aitken") throw std::invalid_argument("method must be aitken or brute");
            return to_py(count_syt_aitken(s));
        },
        py::arg("lam"), py::arg("mu") = Partition{}, py::arg("method") = "aitken",
        "Number of standard Young tableaux of lam/mu.");

    m.def(
        "schur",
        [](const Partition& lambda, const Partition& mu, int nvars, const std::string& method) {
            auto s = shape_of(lambda, mu);
            if (method == "direct") return polynomial_dict(schur_direct(s, nvars));
            if (method != "jt") throw std::invalid_argument("method must be direct or jt");
            return polynomial_dict(schur_jacobi_trudi(s, nvars));
        },
        py::arg("lam"), py::arg("mu") = Partition{}, py::arg("nvars") = 3, py::arg("method") = "jt",
        "Skew Schur polynomial as {exponent tuple: coefficient}.");

    m.def(
        "decompose",
        [](const Partition& lambda, const Partition& mu, const std::string& strategy) {
            auto s = shape_of(lambda, mu);
            auto d = strategy == "thick-rim" ? peel_thick_rim(s) : peel_rim(s);
            return to_json(d).dump();
        },
        py::arg("lam"), py::arg("mu") = Partition{}, py::arg("strategy") = "rim",
        "Peel a shape into outer strips; returns the decomposition as JSON text.");

    m.def(
        "validate",
        [](const std::string& json_text) {
            auto d = decomposition_of(json_text);
            auto rep = validate_decomposition(d);
            py::dict out;
            out["ok"] = rep.ok;
            out["message"] = rep.message;
            out["r"] = d.r();
            out["nested"] = rep.ok && is_nested(d);
            return out;
        },
        py::arg("decomposition_json"));

    m.def(
        "verify",
        [](const std::string& json_text, int nvars) {
            auto rep = verify_identity(decomposition_of(json_text), nvars);
            py::dict out;
            out["equal"] = rep.equal;
            out["r"] = rep.r;
            out["g"] = rep.g;
            out["degree"] = rep.degree;
            out["conclusive"] = rep.conclusive;
            out["note"] = rep.note;
            return out;
        },
        py::arg("decomposition_json"), py::arg("nvars") = 3);

    m.def(
        "sharp",
        [](const std::string& json_text, int i, int j) -> py::object {
            auto s = sharp(i, j, decomposition_of(json_text));
            if (s.kind == SharpResult::Empty) return py::str("empty");
            if (s.kind == SharpResult::Undefined) return py::none();
            auto shape = s.shape();
            return py::make_tuple(shape->lambda, shape->mu);
        },
        py::arg("decomposition_json"), py::arg("i"), py::arg("j"),
        "(lam, mu) of the segment, \"empty\", or None when undefined; indices are 0-based.");

    m.def(
        "mstrip",
        [](int mm, int n, const Partition& head, const Partition& tail) {
            MStripSpec spec{mm, n, head, tail};
            return to_py(count_mstrip_thm(spec, 0).value);
        },
        py::arg("m"), py::arg("n"), py::arg("head") = Partition{}, py::arg("tail") = Partition{});

    m.def(
        "sequences",
        [](int limit) {
            auto t = andre_numbers(limit);
            py::list out;
            for (const auto& a : t.A) out.append(to_py(a));
            return out;
        },
        py::arg("limit"), "Andre numbers A_0..A_limit.");

    m.def("three_strip_example", [] { return to_json(reference_thick_decomposition().decomposition).dump(); },
          "The three-strip nested cover of (6,6,6,4)/(3,1) as JSON text.");
}
