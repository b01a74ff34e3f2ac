#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "recol/chromatic.hpp"
#include "recol/errors.hpp"
#include "recol/family.hpp"
#include "recol/graph.hpp"
#include "recol/oracle.hpp"
#include "recol/patterns.hpp"
#include "recol/path.hpp"
#include "recol/recolor.hpp"
#include "recol/structure.hpp"

namespace py = pybind11;
using namespace recol;

PYBIND11_MODULE(_recol, m) {
    m.doc() = "Recolorability of (P2+P3,C4)-free graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("induced", &Graph::induced)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) +
                   ", m=" + std::to_string(g.m()) + ")";
        });

    py::class_<RecolorStep>(m, "RecolorStep")
        .def_readonly("vertex", &RecolorStep::vertex)
        .def_readonly("from_color", &RecolorStep::from)
        .def_readonly("to_color", &RecolorStep::to)
        .def("__repr__", [](const RecolorStep& s) {
            return "RecolorStep(v=" + std::to_string(s.vertex) + ", " +
                   std::to_string(s.from) + "->" + std::to_string(s.to) + ")";
        });

    py::class_<RecolorPath>(m, "RecolorPath")
        .def_readonly("ell", &RecolorPath::ell)
        .def_readonly("start", &RecolorPath::start)
        .def_readonly("steps", &RecolorPath::steps)
        .def("end", &RecolorPath::end)
        .def("__len__", [](const RecolorPath& p) { return p.steps.size(); })
        .def("per_vertex_counts", &RecolorPath::per_vertex_counts);

    py::class_<Decision>(m, "Decision")
        .def_readonly("recolorable", &Decision::recolorable)
        .def_readonly("core", &Decision::core)
        .def_readonly("witness", &Decision::witness)
        .def_readonly("witness_ell", &Decision::witness_ell);

    py::class_<ReconfigSummary>(m, "ReconfigSummary")
        .def_readonly("num_colorings", &ReconfigSummary::num_colorings)
        .def_readonly("num_components", &ReconfigSummary::num_components)
        .def_readonly("num_frozen", &ReconfigSummary::num_frozen)
        .def_readonly("connected", &ReconfigSummary::connected)
        .def_readonly("component_sizes", &ReconfigSummary::component_sizes);

    m.def("build_family",
          [](const std::string& s) { return build_family(parse_family_spec(s)); },
          py::arg("spec"));
    m.def("read_graph_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    });
    m.def("write_graph_text", &write_graph);

    m.def("in_scope_class", &in_scope_class);
    m.def("chromatic_number",
          [](const Graph& g) { return chromatic_number(g).first; });
    m.def("optimal_coloring",
          [](const Graph& g) { return chromatic_number(g).second; });
    m.def("degeneracy", [](const Graph& g) { return degeneracy(g).first; });
    m.def("is_chordal", &is_chordal);
    m.def("check_proper", &check_proper);
    m.def("check_frozen", &check_frozen);

    m.def("decide_recolorable", &decide_recolorable);
    m.def("recolor_path", &recolor_path, py::arg("g"), py::arg("phi"),
          py::arg("psi"), py::arg("ell"), py::arg("budget") = 0,
          py::arg("force_oracle") = false);
    m.def("validate_path", &validate_path);

    m.def("certificate_text",
          [](const Graph& g) { return write_certificate(decompose(g)); });

    m.def("is_mixing", &is_mixing, py::arg("g"), py::arg("ell"),
          py::arg("budget") = 0);
    m.def("reconfig_summary", &reconfig_summary, py::arg("g"), py::arg("ell"),
          py::arg("budget") = 0);
    m.def("reconfig_diameter", &reconfig_diameter, py::arg("g"), py::arg("ell"),
          py::arg("budget") = 0);
    m.def("oracle_path", &oracle_path, py::arg("g"), py::arg("ell"),
          py::arg("from_coloring"), py::arg("to_coloring"), py::arg("budget") = 0);
    m.def("find_frozen",
          [](const Graph& g, int ell, long long budget)
              -> std::optional<Coloring> { return find_frozen(g, ell, budget); },
          py::arg("g"), py::arg("ell"), py::arg("budget") = 0);
}
