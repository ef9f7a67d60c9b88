#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcoal/coalition.hpp"
#include "rcoal/domination.hpp"
#include "rcoal/families.hpp"
#include "rcoal/graph.hpp"
#include "rcoal/survey.hpp"

namespace py = pybind11;
using namespace rcoal;

namespace {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet list_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
        s |= vertex_bit(v);
    }
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dominating / restrained-dominating coalition numbers for small graphs";

    py::enum_<Kind>(m, "Kind")
        .value("DOMINATING", Kind::Dominating)
        .value("RESTRAINED", Kind::Restrained);

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def_property_readonly("n", &Graph::order)
        .def("degree", &Graph::degree)
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("neighbors", [](const Graph& g, int v) { return set_to_list(g.neighbors(v)); })
        .def("closed_neighborhood",
             [](const Graph& g, int v) { return set_to_list(g.closed_neighborhood(v)); })
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("is_complete", &Graph::is_complete)
        .def("is_tree", &Graph::is_tree)
        .def("edge_count", &Graph::edge_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6='" + write_graph6(g) + "')";
        });

    m.def("is_dominating",
          [](const Graph& g, const std::vector<int>& s) { return is_dominating(g, list_to_set(s)); });
    m.def("is_restrained_dominating", [](const Graph& g, const std::vector<int>& s) {
        return is_restrained_dominating(g, list_to_set(s));
    });
    m.def("domination_number", &domination_number);
    m.def("restrained_domination_number",
          [](const Graph& g) { return restrained_domination_number(g); });
    m.def("all_qualifying_sets", [](const Graph& g, Kind kind) {
        std::vector<std::vector<int>> out;
        for (VertexSet s : all_qualifying_sets(g, kind)) out.push_back(set_to_list(s));
        return out;
    });

    m.def("is_coalition",
          [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b, Kind kind) {
              return is_coalition(g, list_to_set(a), list_to_set(b), kind);
          });

    py::class_<Partition>(m, "Partition")
        .def_static("from_assignment", &Partition::from_assignment, py::arg("n"),
                    py::arg("assignment"))
        .def_readonly("n", &Partition::n)
        .def_readonly("assignment", &Partition::assignment)
        .def("class_count", &Partition::class_count)
        .def("classes", [](const Partition& pi) {
            std::vector<std::vector<int>> out;
            for (VertexSet c : pi.classes()) out.push_back(set_to_list(c));
            return out;
        });

    py::class_<Justification>(m, "Justification")
        .def_readonly("self_sufficient", &Justification::self_sufficient)
        .def_readonly("partner", &Justification::partner);

    py::class_<CoalitionCertificate>(m, "CoalitionCertificate")
        .def_readonly("partition", &CoalitionCertificate::partition)
        .def_readonly("kind", &CoalitionCertificate::kind)
        .def_readonly("justification", &CoalitionCertificate::justification)
        .def("to_json", &certificate_to_json);

    py::class_<Violation>(m, "Violation")
        .def_readonly("class_index", &Violation::class_index)
        .def_readonly("rule", &Violation::rule);

    m.def("verify_partition", [](const Graph& g, const Partition& pi, Kind kind) -> py::object {
        auto verdict = verify_partition(g, pi, kind);
        if (auto* cert = std::get_if<CoalitionCertificate>(&verdict)) return py::cast(*cert);
        return py::cast(std::get<Violation>(verdict));
    });
    m.def("coalition_graph", &coalition_graph);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("node_budget", &SolverConfig::node_budget)
        .def_readwrite("time_budget_seconds", &SolverConfig::time_budget_seconds)
        .def_readwrite("upper_bound", &SolverConfig::upper_bound)
        .def_readwrite("prune_qualifying_class", &SolverConfig::prune_qualifying_class)
        .def_readwrite("prune_pendant_merge", &SolverConfig::prune_pendant_merge)
        .def_readwrite("prune_partner_feasibility", &SolverConfig::prune_partner_feasibility);

    py::class_<SearchStats>(m, "SearchStats")
        .def_readonly("nodes", &SearchStats::nodes)
        .def_readonly("seconds", &SearchStats::seconds);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("feasible", &SolveResult::feasible)
        .def_readonly("budget_exceeded", &SolveResult::budget_exceeded)
        .def_readonly("value", &SolveResult::value)
        .def_readonly("certificate", &SolveResult::certificate)
        .def_readonly("stats", &SolveResult::stats);

    m.def("max_coalition_number", &max_coalition_number, py::arg("graph"), py::arg("kind"),
          py::arg("config") = SolverConfig{});
    m.def("find_partition_of_size",
          [](const Graph& g, int k, Kind kind, const SolverConfig& config) {
              return find_partition_of_size(g, k, kind, config);
          },
          py::arg("graph"), py::arg("k"), py::arg("kind"), py::arg("config") = SolverConfig{});
    m.def("naive_max_oracle", &naive_max_oracle);

    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("star_graph", &star_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("rc_cycle_expected", &rc_cycle_expected);
    m.def("rc_path_expected", &rc_path_expected);
    m.def("cn_cycle_upper", &cn_cycle_upper);
    m.def("free_trees", &free_trees);

    m.def("export_dot", &export_dot);
}
