#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mimred/balancing.hpp"
#include "mimred/cli.hpp"
#include "mimred/constants.hpp"
#include "mimred/error.hpp"
#include "mimred/formula.hpp"
#include "mimred/io.hpp"
#include "mimred/matching.hpp"
#include "mimred/step1.hpp"
#include "mimred/step2.hpp"
#include "mimred/step3.hpp"
#include "mimred/widths.hpp"

namespace py = pybind11;
using namespace mimred;

namespace {

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full{"mimred"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

PYBIND11_MODULE(_mimred, m) {
  m.doc() = "Mim-width reduction toolkit";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<NaeFormula>(m, "NaeFormula")
      .def(py::init<>())
      .def_readwrite("num_vars", &NaeFormula::num_vars)
      .def_readwrite("clauses", &NaeFormula::clauses)
      .def("is_four_occurrence", &NaeFormula::is_four_occurrence)
      .def("to_dimacs", [](const NaeFormula& f) { return to_dimacs(f); })
      .def("__eq__", [](const NaeFormula& a, const NaeFormula& b) { return a == b; });

  m.def("parse_nae_dimacs", py::overload_cast<const std::string&, bool>(&parse_nae_dimacs),
        py::arg("text"), py::arg("strict") = true);
  m.def("eval_nae", &eval_nae);
  m.def("brute_force_nae", &brute_force_nae, py::arg("formula"), py::arg("cap") = kDefaultBruteForceCap);

  py::class_<Constants>(m, "Constants")
      .def(py::init<>())
      .def_readwrite("tau", &Constants::tau)
      .def_readwrite("gamma", &Constants::gamma)
      .def_readwrite("lambda_", &Constants::lambda)
      .def_readwrite("a", &Constants::a)
      .def_readwrite("b", &Constants::b)
      .def("__repr__", [](const Constants& c) { return "Constants(" + profile_to_string(c) + ")"; });
  m.def("parse_profile", &parse_profile);
  m.def("validate_constants", &validate_constants);

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init<int>(), py::arg("vertices") = 0)
      .def("add_edge", &WeightedGraph::add_edge)
      .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
      .def_property_readonly("edge_count", &WeightedGraph::edge_count)
      .def("edges", [](const WeightedGraph& g) {
        std::vector<std::tuple<int, int, Weight>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
        return out;
      })
      .def("vertex_weight", [](const WeightedGraph& g, int v) { return vertex_weight(g, v); })
      .def("is_triangle_free", &WeightedGraph::is_triangle_free)
      .def("to_json", [](const WeightedGraph& g) { return io::dump(io::weighted_graph_to_json(g)); });

  m.def("check_balancing_order",
        [](const WeightedGraph& g, const LinearOrder& ord, Weight t) { return check_balancing_order(g, ord, t).ok; });
  m.def("solve_balancing_order", &solve_balancing_order, py::arg("graph"), py::arg("threshold"),
        py::arg("budget") = kDefaultSearchBudget);

  py::class_<HInstance>(m, "HInstance")
      .def_readonly("graph", &HInstance::graph)
      .def_readonly("constants", &HInstance::constants)
      .def_readonly("var", &HInstance::var)
      .def_readonly("clause", &HInstance::clause)
      .def_readonly("X", &HInstance::X)
      .def_readonly("Y", &HInstance::Y);
  m.def("build_H", &build_H);
  m.def("witness_order", &witness_order);
  m.def("decode_assignment", &decode_assignment);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def_static("complete", &Graph::complete)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle);

  py::class_<PartitionedGraph>(m, "PartitionedGraph")
      .def(py::init<const WeightedGraph&>())
      .def_property_readonly("vertex_count", &PartitionedGraph::vertex_count)
      .def_property_readonly("part_count", &PartitionedGraph::part_count)
      .def("part_vertices", &PartitionedGraph::part_vertices)
      .def("adjacent", &PartitionedGraph::adjacent)
      .def("matching_edge_count", &PartitionedGraph::matching_edge_count)
      .def("dummy_edge_count", &PartitionedGraph::dummy_edge_count)
      .def("validate", &PartitionedGraph::validate);

  auto cut = [](const GraphView& g, const std::vector<int>& A, const std::vector<int>& B, const std::string& kind,
                std::optional<int> threshold) {
    CutOptions opt;
    if (kind == "sim")
      opt.kind = MatchingKind::sim;
    else if (kind != "mim")
      throw ValidationError("kind must be mim or sim");
    opt.threshold = threshold;
    CutValue cv = cut_value(g, A, B, opt);
    return py::make_tuple(cv.value, cv.at_least, cv.matching);
  };
  m.def("cut_value", [cut](const Graph& g, const std::vector<int>& A, const std::vector<int>& B,
                           const std::string& kind, std::optional<int> threshold) { return cut(g, A, B, kind, threshold); },
        py::arg("graph"), py::arg("A"), py::arg("B"), py::arg("kind") = "mim", py::arg("threshold") = py::none());
  m.def("cut_value", [cut](const PartitionedGraph& g, const std::vector<int>& A, const std::vector<int>& B,
                           const std::string& kind, std::optional<int> threshold) { return cut(g, A, B, kind, threshold); },
        py::arg("graph"), py::arg("A"), py::arg("B"), py::arg("kind") = "mim", py::arg("threshold") = py::none());

  m.def("path_mapping_value",
        [](const PartitionedGraph& g, const LinearOrder& ord, const std::string& kind) {
          CutOptions opt;
          opt.kind = kind == "sim" ? MatchingKind::sim : MatchingKind::mim;
          return mapping_value(g, path_mapping_from_order(g, ord), opt).value;
        },
        py::arg("graph"), py::arg("order"), py::arg("kind") = "mim");

  m.def("exact_width",
        [](const Graph& g, const std::string& kind, bool linear, std::optional<int> cap) {
          const WidthKind k = width_kind_from_name(kind);
          WidthResult r = cap ? exact_width(g, k, linear, *cap) : exact_width(g, k, linear);
          return py::make_tuple(r.value, r.layouts);
        },
        py::arg("graph"), py::arg("kind") = "mim", py::arg("linear") = false, py::arg("cap") = py::none());

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
