#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "skewlab/classifier.hpp"
#include "skewlab/cli.hpp"
#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"
#include "skewlab/invariants.hpp"
#include "skewlab/json_io.hpp"
#include "skewlab/staircase.hpp"
#include "skewlab/symfunc.hpp"

namespace py = pybind11;
using namespace skewlab;

namespace {

py::object py_int(const Integer& v) { return py::module_::import("builtins").attr("int")(py::str(v.str())); }

template <class Tag>
py::dict to_dict(const SparseVector<Tag>& f) {
    py::dict out;
    for (const auto& [key, c] : f.terms()) out[py::tuple(py::cast(key.vec()))] = py_int(c);
    return out;
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Composition comp(const std::vector<int>& parts) { return Composition(parts); }

Side side_of(const std::string& s) {
    if (s == "se") return Side::se;
    if (s == "nw") return Side::nw;
    throw py::value_error("side must be 'se' or 'nw'");
}

}  // namespace

PYBIND11_MODULE(_skewlab, m) {
    m.doc() = "Skew diagrams, skew Schur functions and skew-equivalence";

    static py::exception<SkewError> skew_error(m, "SkewError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SkewError& e) {
            py::object err = skew_error;
            PyErr_SetObject(err.ptr(), py::make_tuple(std::string(e.name()), e.what()).ptr());
        }
    });

    py::class_<SkewShape>(m, "SkewShape")
        .def(py::init([](const std::vector<int>& outer, const std::vector<int>& inner) {
                 return SkewShape::from_partitions(Partition(outer), Partition(inner));
             }),
             py::arg("outer"), py::arg("inner") = std::vector<int>{})
        .def_property_readonly("outer", [](const SkewShape& d) { return d.outer().vec(); })
        .def_property_readonly("inner", [](const SkewShape& d) { return d.inner().vec(); })
        .def_property_readonly("size", &SkewShape::size)
        .def_property_readonly("num_rows", &SkewShape::num_rows)
        .def_property_readonly("num_cols", &SkewShape::num_cols)
        .def("is_connected", &SkewShape::is_connected)
        .def("is_ribbon", &SkewShape::is_ribbon)
        .def("compact", &SkewShape::compact)
        .def("ascii", &SkewShape::ascii)
        .def("cells", [](const SkewShape& d) {
            std::vector<std::pair<int, int>> out;
            for (const Cell& c : d.cells()) out.emplace_back(c.row, c.col);
            return out;
        })
        .def("transpose", [](const SkewShape& d) { return transpose(d); })
        .def("rotate", [](const SkewShape& d) { return rotate180(d); })
        .def("__eq__", [](const SkewShape& a, const SkewShape& b) { return a == b; })
        .def("__hash__", [](const SkewShape& d) { return SkewShapeHash{}(d); })
        .def("__repr__", [](const SkewShape& d) { return "SkewShape('" + d.compact() + "')"; });

    m.def("parse_compact", [](const std::string& s) { return parse_compact(s); });
    m.def("parse_ascii", [](const std::string& s) { return parse_ascii(s); });
    m.def("ribbon", [](const std::vector<int>& parts) { return ribbon_to_shape(comp(parts)); });
    m.def("ribbon_composition", [](const SkewShape& d) { return shape_to_ribbon(d).vec(); });
    m.def("enumerate_connected", &enumerate_connected);
    m.def("components", &components);

    m.def("concat", [](const SkewShape& a, const SkewShape& b) { return concat(a, b); });
    m.def("near_concat", [](const SkewShape& a, const SkewShape& b) { return near_concat(a, b); });
    m.def("compose_alpha", [](const std::vector<int>& alpha, const SkewShape& d) { return compose_alpha_D(comp(alpha), d); });
    m.def("compose_beta", [](const SkewShape& d, const std::vector<int>& beta) { return compose_D_beta(d, comp(beta)); });
    m.def("amalgamate", [](const SkewShape& a, const SkewShape& b, const std::vector<int>& omega) {
        return amalgamate(a, b, comp(omega));
    });
    m.def("amalgamated_compose", [](const std::vector<int>& alpha, const SkewShape& d, const std::vector<int>& omega) {
        return amalgamated_compose(comp(alpha), d, comp(omega));
    });
    m.def("staircase", [](const std::vector<int>& alpha, int mm, int k) { return staircase(comp(alpha), mm, k).vec(); });
    m.def(
        "build_staircase",
        [](const std::vector<int>& alpha, int mm, int k, const std::string& nesting, const std::string& side) {
            return build_from_staircase({comp(alpha), mm, k, Nesting(nesting), side_of(side)});
        },
        py::arg("alpha"), py::arg("m"), py::arg("k"), py::arg("nesting"), py::arg("side") = "se");
    m.def(
        "detect_staircase",
        [](const SkewShape& d, const std::string& side) -> py::object {
            const auto p = detect_staircase(d, side_of(side));
            if (!p) return py::none();
            py::dict out;
            out["alpha"] = p->alpha.vec();
            out["m"] = p->m;
            out["k"] = p->k;
            out["nesting"] = p->nesting.word();
            out["side"] = side;
            return out;
        },
        py::arg("d"), py::arg("side") = "se");

    m.def(
        "expand",
        [](const SkewShape& d, const std::string& algo, const std::string& side) {
            if (algo == "lr") return to_dict(schur_expand_lr(d));
            if (algo == "jt") return to_dict(to_schur(jacobi_trudi(d)));
            if (algo == "hg") return to_dict(schur_expand_hg(d, side_of(side)));
            throw py::value_error("algo must be lr, jt or hg");
        },
        py::arg("d"), py::arg("algo") = "lr", py::arg("side") = "se");
    m.def("jacobi_trudi", [](const SkewShape& d) { return to_dict(jacobi_trudi(d)); });
    m.def("kostka", [](const SkewShape& d) { return to_dict(kostka_expand(d)); });
    m.def("characters", [](const SkewShape& d) { return to_dict(characters(d)); });
    m.def("pictures", [](const SkewShape& d) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const Picture& p : pictures(d)) out.push_back(p.tableau);
        return out;
    });
    m.def("equivalent", [](const SkewShape& a, const SkewShape& b) { return fingerprint(a) == fingerprint(b); });
    m.def("frobenius_rank", &frobenius_rank);
    m.def("invariants", [](const SkewShape& d) { return from_json(invariants_to_json(d)); });

    m.def(
        "classify",
        [](int n, unsigned jobs) {
            ClassificationReport report;
            {
                py::gil_scoped_release release;
                report = classify(n, {jobs, true});
            }
            return from_json(to_json(report));
        },
        py::arg("n"), py::arg("jobs") = 1);
    m.def("verify_sporadics", []() {
        py::list out;
        for (const SporadicResult& r : verify_sporadics(fixture_dir(), false)) out.append(from_json(to_json(r)));
        return out;
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> argv{"skewlab"};
        argv.insert(argv.end(), args.begin(), args.end());
        const int code = cli::run(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
