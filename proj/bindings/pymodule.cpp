#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "codim/codim_dp.hpp"
#include "codim/cotree.hpp"
#include "codim/digraph.hpp"
#include "codim/errors.hpp"
#include "codim/hardness.hpp"
#include "codim/resolve.hpp"

namespace py = pybind11;
using namespace codim;

PYBIND11_MODULE(_codim, m) {
    m.doc() = "minimum resolving sets for digraphs and directed co-graphs";

    py::register_exception<ParseError>(m, "CodimParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "CodimDomainError", PyExc_RuntimeError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<>())
        .def("add_vertex", &Digraph::add_vertex)
        .def("add_edge", &Digraph::add_edge)
        .def("vertex_count", &Digraph::vertex_count)
        .def("edge_count", &Digraph::edge_count)
        .def("has_edge", &Digraph::has_edge)
        .def("out_neighbors", &Digraph::out_neighbors)
        .def("label", &Digraph::label)
        .def("find_vertex", [](const Digraph& g, const std::string& s) {
            return g.find_vertex(s);
        })
        .def("to_dot", [](const Digraph& g) { return to_dot(g); })
        .def("to_edge_list", [](const Digraph& g) { return to_edge_list(g); });

    py::class_<DistanceTable>(m, "DistanceTable")
        .def("at", [](const DistanceTable& d, Vertex u, Vertex v) { return d.at(u, v); })
        .def("size", &DistanceTable::size)
        .def("all_defined", &DistanceTable::all_defined);

    m.def("from_edge_list", [](const std::string& s) { return from_edge_list(s); });
    m.def("bfs_distances", &bfs_distances);
    m.def("distance_table", &distance_table);
    m.def("is_strongly_connected", &is_strongly_connected);
    m.def("is_acyclic", &is_acyclic);

    py::enum_<VertexClass>(m, "VertexClass")
        .value("One", VertexClass::One)
        .value("Two", VertexClass::Two)
        .value("Neither", VertexClass::Neither);

    m.def("resolves", &resolves);
    m.def("is_resolving_set", [](const Digraph& g, const std::vector<int>& r) {
        return is_resolving_set(g, r);
    });
    m.def("is_resolving_for",
          [](const Digraph& g, const std::vector<int>& r, const std::vector<int>& u) {
              return is_resolving_for(g, r, u);
          });
    m.def("classify_vertex", [](const Digraph& g, const std::vector<int>& r, Vertex u) {
        return classify_vertex(g, r, u);
    });
    m.def("is_double_remover",
          [](const Digraph& g, const std::vector<int>& r, Vertex u1, Vertex u2, Vertex v) {
              return is_double_remover(g, r, u1, u2, v);
          });
    m.def("min_resolving_set_bruteforce", &min_resolving_set_bruteforce,
          py::arg("graph"), py::arg("max_n") = 20);

    py::class_<CoTree>(m, "CoTree")
        .def("leaf_count", &CoTree::leaf_count)
        .def("node_count", &CoTree::node_count)
        .def("to_expression", [](const CoTree& t) { return to_expression(t); });

    m.def("parse_cotree", [](const std::string& s) { return parse_cotree(s); });
    m.def("parse_cotree_document",
          [](const std::string& s) { return parse_cotree_document(s); });
    m.def("normalize", &normalize);
    m.def("materialize", [](const CoTree& t) {
        Materialized mat = materialize(t);
        return py::make_tuple(std::move(mat.graph), mat.leaves.labels);
    });
    m.def("cotree_strongly_connected", &cotree_strongly_connected);
    m.def("random_cotree", &random_cotree, py::arg("seed"), py::arg("n_leaves"),
          py::arg("force_join_root") = false);
    m.def("to_expression", &to_expression);

    py::enum_<StateType>(m, "StateType")
        .value("T0", StateType::T0)
        .value("T1", StateType::T1)
        .value("T2", StateType::T2)
        .value("T12", StateType::T12);

    py::class_<CographSolution>(m, "CographSolution")
        .def_readonly("size", &CographSolution::size)
        .def_readonly("type", &CographSolution::type)
        .def_readonly("set", &CographSolution::set)
        .def_readonly("set_labels", &CographSolution::set_labels);

    m.def("min_resolving_set_cograph", &min_resolving_set_cograph);

    py::class_<HittingSetInstance>(m, "HittingSetInstance")
        .def_readonly("elements", &HittingSetInstance::elements)
        .def_readonly("sets", &HittingSetInstance::sets)
        .def("n", &HittingSetInstance::n)
        .def("m", &HittingSetInstance::m);

    py::class_<Role>(m, "Role")
        .def("__repr__", [](const Role& r) { return role_name(r); });

    py::class_<ReductionResult>(m, "ReductionResult")
        .def_readonly("graph", &ReductionResult::graph)
        .def_readonly("n", &ReductionResult::n)
        .def_readonly("m", &ReductionResult::m)
        .def("role", [](const ReductionResult& r, Vertex v) {
            return role_name(r.roles.at(v));
        })
        .def("vertex_a", &ReductionResult::vertex_a)
        .def("vertex_b", &ReductionResult::vertex_b)
        .def("vertex_c", &ReductionResult::vertex_c)
        .def("vertex_of_element", &ReductionResult::vertex_of_element)
        .def("vertex_of_set", &ReductionResult::vertex_of_set)
        .def("vertex_of_set_prime", &ReductionResult::vertex_of_set_prime);

    m.def("parse_hitting_set", [](const std::string& s) { return parse_hitting_set(s); });
    m.def("normalize_instance", &normalize_instance);
    m.def("reduce", &reduce);
    m.def("hitting_to_resolving", &hitting_to_resolving);
    m.def("resolving_to_hitting", &resolving_to_hitting);
    m.def("min_hitting_set_bruteforce", &min_hitting_set_bruteforce,
          py::arg("instance"), py::arg("max_n") = 20);
}
