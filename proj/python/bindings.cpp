#include "mgraph/analysis.hpp"
#include "mgraph/error.hpp"
#include "mgraph/exact_count.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/kirchhoff.hpp"
#include "mgraph/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mgraph;

namespace {

// Through hex: CPython caps int() on long decimal strings.
py::int_ to_py(const BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.get_str(16), 16);
}

py::object to_py(const Rational& x) {
    return py::module_::import("fractions").attr("Fraction")(to_py(BigInt(x.get_num())), to_py(BigInt(x.get_den())));
}

py::object parse_json(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spanning-tree counts and structure of the iterated graphs M(t)";

    // Later registrations are tried first, so the subclasses win over Error.
    const auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", base.ptr());
    py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());

    py::class_<MGraph>(m, "MGraph")
        .def_property_readonly("level", &MGraph::level)
        .def_property_readonly("num_vertices", &MGraph::num_vertices)
        .def_property_readonly("num_edges", &MGraph::num_edges)
        .def_property_readonly("hub_pair", &MGraph::hub_pair)
        .def_property_readonly("boundary", &MGraph::boundary)
        .def("degree", &MGraph::degree, py::arg("v"))
        .def("neighbors",
             [](const MGraph& g, VertexId v) {
                 if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
                 const auto n = g.neighbors(v);
                 return std::vector<VertexId>(n.begin(), n.end());
             },
             py::arg("v"))
        .def("edges",
             [](const MGraph& g) {
                 std::vector<std::pair<VertexId, VertexId>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("export",
             [](const MGraph& g, const std::string& format) { return export_graph(g, parse_export_format(format)); },
             py::arg("format") = "edge-list")
        .def("__repr__", [](const MGraph& g) {
            return "<MGraph t=" + std::to_string(g.level()) + " V=" + std::to_string(g.num_vertices()) +
                   " E=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("build", &build, py::arg("t"), py::arg("max_level") = kDefaultMaxBuildLevel);

    m.def("s_recurrence", [](unsigned t, unsigned limit) { return to_py(s_recurrence(t, limit)); }, py::arg("t"),
          py::arg("limit") = kDefaultMaterializeLimit);
    m.def("s_recurrence_mod", &s_recurrence_mod, py::arg("t"), py::arg("p"));
    m.def("s_theorem1", [](unsigned t, unsigned limit) { return to_py(s_theorem1(t, limit)); }, py::arg("t"),
          py::arg("limit") = kDefaultMaterializeLimit);
    m.def("g_value", [](unsigned t, unsigned limit) { return to_py(g_value(t, limit)); }, py::arg("t"),
          py::arg("limit") = kDefaultMaterializeLimit);
    m.def("q_recurrence", [](unsigned t) { return to_py(q_recurrence(t)); }, py::arg("t"));
    m.def("q_closed_form", [](unsigned t) { return to_py(q_closed_form(t)); }, py::arg("t"));
    m.def(
        "entropy",
        [](unsigned t, unsigned precision) {
            const EntropyEstimate e = entropy(t, precision);
            py::dict d;
            d["t"] = e.t;
            d["precision"] = e.precision;
            d["h_t"] = e.h_t.to_fixed(static_cast<int>(precision));
            d["value"] = e.h_t.to_double();
            d["digits"] = to_py(e.digits);
            d["tail_bound"] = entropy_tail_bound(t);
            return d;
        },
        py::arg("t"), py::arg("precision") = 30);

    m.def("count_trees", [](const MGraph& g) { return to_py(count_trees(g)); }, py::arg("g"));
    m.def("count_separating_2forests",
          [](const MGraph& g, VertexId u, VertexId v) { return to_py(count_separating_2forests(g, u, v)); },
          py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("count_trees_mod", [](const MGraph& g, std::uint64_t p) { return count_trees_mod(g, p); }, py::arg("g"),
          py::arg("p"));

    m.def("analyze", [](const MGraph& g) { return parse_json(to_json(analyze(g))); }, py::arg("g"));
    m.def("entropy_table", [] {
        py::list rows;
        for (const EntropyRow& r : entropy_table()) {
            py::dict d;
            d["family"] = r.family;
            d["entropy"] = r.value;
            d["source"] = r.source;
            d["computed"] = r.computed;
            rows.append(d);
        }
        return rows;
    });
    m.def(
        "verify",
        [](unsigned t_max, bool inject_fault) {
            VerifyOptions opts;
            opts.t_max = t_max;
            opts.inject_fault = inject_fault;
            const auto results = run_verification(opts);
            return parse_json(verification_json(opts, results));
        },
        py::arg("t_max") = 6, py::arg("inject_fault") = false);
}
