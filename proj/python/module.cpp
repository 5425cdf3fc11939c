#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "zforce/catalog.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/recognizer.hpp"
#include "zforce/spanning_tree.hpp"
#include "zforce/spectral.hpp"

namespace py = pybind11;
using namespace zforce;

namespace {

VertexSet to_set(const std::vector<Vertex>& vs) {
  VertexSet s;
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw py::index_error("vertex out of range: " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(zforce, m) {
  m.doc() = "Zero forcing numbers and maximum nullity bounds for small graphs";

  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<SpectralError>(m, "SpectralError", PyExc_ArithmeticError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &edge_list)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
        return g.neighbors(v).to_vector();
      })
      .def("degree", &Graph::degree)
      .def("is_cubic", &Graph::is_cubic)
      .def("is_connected", &Graph::is_connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  py::class_<ZeroForcingResult>(m, "ZeroForcingResult")
      .def_readonly("complete", &ZeroForcingResult::complete)
      .def_readonly("value", &ZeroForcingResult::value)
      .def_readonly("lower_bound", &ZeroForcingResult::lower_bound)
      .def_readonly("closures", &ZeroForcingResult::closures)
      .def_property_readonly("witness", [](const ZeroForcingResult& r) { return r.witness.to_vector(); });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("write_graph6", &write_graph6, py::arg("g"));
  m.def("edge_connectivity", &edge_connectivity, py::arg("g"));
  m.def("are_isomorphic", [](const Graph& g, const Graph& h) { return are_isomorphic(g, h).mapping; },
        py::arg("g"), py::arg("h"), "Vertex mapping g -> h, or None.");

  m.def(
      "closure",
      [](const Graph& g, const std::vector<Vertex>& initial) {
        const Closure c = closure(g, to_set(initial));
        std::vector<std::pair<Vertex, Vertex>> trace;
        for (const Force& f : c.trace) trace.emplace_back(f.forcer, f.forced);
        return py::make_tuple(c.black.to_vector(), trace);
      },
      py::arg("g"), py::arg("initial"), "Returns (final black vertices, [(forcer, forced), ...]).");
  m.def(
      "is_zero_forcing_set",
      [](const Graph& g, const std::vector<Vertex>& s) { return is_zero_forcing_set(g, to_set(s)); },
      py::arg("g"), py::arg("s"));
  m.def(
      "zero_forcing_number",
      [](const Graph& g, std::optional<int> budget, int threads) {
        ZeroForcingOptions o;
        o.budget = budget;
        o.threads = threads;
        py::gil_scoped_release release;
        return zero_forcing_number(g, o);
      },
      py::arg("g"), py::arg("budget") = py::none(), py::arg("threads") = 1);

  m.def("heawood", &heawood);
  m.def("counterexample16", &counterexample16);
  m.def("necklace", &necklace, py::arg("beads"));
  m.def("petersen", &petersen);
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("permutation_prism", &permutation_prism, py::arg("n"), py::arg("transposition") = py::none());
  m.def("connected_cubic_graphs", &connected_cubic_graphs, py::arg("n"));
  m.def(
      "enumerate_family",
      [](int order) {
        std::vector<std::pair<Graph, std::string>> out;
        for (const FamilyMember& f : enumerate_family(order)) out.emplace_back(f.graph, f.spec.to_string());
        return out;
      },
      py::arg("order"), "List of (graph, spec string).");

  m.def(
      "recognize_z3",
      [](const Graph& g) {
        const RecognitionResult r = recognize_z3(g);
        py::dict d;
        d["member"] = r.member;
        d["summary"] = r.summary();
        d["edge_connectivity"] = r.edge_connectivity;
        d["zero_forcing_number"] = r.zero_forcing_number;
        d["mapping"] = r.mapping;
        return d;
      },
      py::arg("g"));

  m.def(
      "spanning_tree",
      [](const Graph& g, Vertex root) {
        const SpanningTree t = spanning_tree(g, root);
        const DegreeCensus c = degree_census(t);
        py::dict d;
        d["tree"] = t.tree;
        d["parent"] = t.parent;
        std::vector<std::vector<Vertex>> layers;
        for (VertexSet s : t.layers) layers.push_back(s.to_vector());
        d["layers"] = layers;
        d["n1"] = c.n1();
        d["n2"] = c.n2();
        d["n3"] = c.n3();
        return d;
      },
      py::arg("g"), py::arg("root") = 0);

  m.def(
      "eigenvalues",
      [](const Graph& g) { return eigen_decomposition(SymMatrix::adjacency(g)).eigenvalues; },
      py::arg("g"), "Ascending adjacency eigenvalues.");
  m.def("max_multiplicity_bound", &max_multiplicity_bound, py::arg("g"), py::arg("cluster_gap") = 1e-6);
  m.def("twin_bound", &twin_bound, py::arg("g"));
  m.def(
      "bounds_report",
      [](const Graph& g, std::optional<int> budget) {
        BoundsOptions o;
        o.budget = budget;
        BoundsReport r;
        {
          py::gil_scoped_release release;
          r = bounds_report(g, {}, o);
        }
        py::dict d;
        d["lower"] = r.lower;
        d["lower_sources"] = r.lower_sources;
        d["eigenvalue_bound"] = r.eigenvalue_bound;
        d["twin_bound"] = r.twin_bound;
        d["minor_bound"] = r.minor_bound;
        d["upper"] = r.upper.complete ? py::object(py::int_(r.upper.value)) : py::object(py::none());
        d["witness"] = r.upper.witness.to_vector();
        d["verdict"] = r.verdict();
        d["text"] = r.to_text();
        return d;
      },
      py::arg("g"), py::arg("budget") = py::none());
}
