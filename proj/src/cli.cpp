#include "mimred/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mimred/balancing.hpp"
#include "mimred/error.hpp"
#include "mimred/io.hpp"
#include "mimred/widths.hpp"

namespace mimred {
namespace {

using io::Json;

struct Options {
  std::string input, output, cnf, witness, order, cut, layout, hybrid, mapping, assignment;
  std::string profile = "small";
  std::optional<std::string> profile_override;
  std::string kind = "mim";
  std::string filter = "all";
  bool lax = false, tree = false, linear = false;
  Weight threshold = 0;
  std::optional<int> cut_threshold;
  std::optional<int> cap;
  std::optional<int> gadget;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t edge_limit = io::kDefaultExplicitEdgeLimit;
  int nae_cap = kDefaultBruteForceCap;
};

NaeFormula read_formula(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return parse_nae_dimacs(in, strict);
}

void emit(const Options& o, std::ostream& out, const Json& doc) {
  if (o.output.empty()) {
    out << io::dump(doc);
  } else {
    io::write_json_file(o.output, doc);
  }
}

EdgeFilter parse_filter(const std::string& s) {
  if (s == "all") return EdgeFilter::all;
  if (s == "matching") return EdgeFilter::matching_only;
  if (s == "dummy") return EdgeFilter::dummy_only;
  throw ValidationError("unknown edge filter '" + s + "'");
}

MatchingKind parse_matching_kind(const std::string& s) {
  if (s == "mim") return MatchingKind::mim;
  if (s == "sim") return MatchingKind::sim;
  throw ValidationError("cut kind must be mim or sim, got '" + s + "'");
}

Json matching_json(const std::vector<CutEdge>& m) {
  Json out = Json::array();
  for (auto [a, b] : m) out.push_back({a, b});
  return out;
}

int cmd_nae_check(const Options& o, std::ostream& out) {
  NaeFormula f = read_formula(o.cnf, !o.lax);
  if (o.assignment.empty()) {
    out << "valid: " << f.num_vars << " variables, " << f.clauses.size() << " clauses\n";
    return kExitYes;
  }
  Assignment a = assignment_from_string(o.assignment);
  const bool ok = eval_nae(f, a);
  out << (ok ? "true" : "false") << "\n";
  return ok ? kExitYes : kExitNo;
}

int cmd_nae_solve(const Options& o, std::ostream& out) {
  NaeFormula f = read_formula(o.cnf, !o.lax);
  auto a = brute_force_nae(f, o.nae_cap);
  if (!a) {
    out << "UNSAT\n";
    return kExitNo;
  }
  out << assignment_to_string(*a) << "\n";
  return kExitYes;
}

Json step1_doc(const std::string& cnf, const std::string& profile) {
  NaeFormula f = read_formula(cnf, true);
  Constants c = parse_profile(profile);
  HInstance h = build_H(f, c);
  return io::h_instance_to_json(f, h, profile);
}

Json step2_doc(const Json& h_doc, std::uint64_t edge_limit) {
  WeightedGraph h = io::weighted_graph_from_json(h_doc);
  Json extra = Json::object();
  const Json& meta = h_doc.at("meta");
  if (meta.is_object() && meta.contains("constants")) extra["constants"] = meta.at("constants");
  if (meta.is_object() && meta.contains("profile")) extra["profile"] = meta.at("profile");
  PartitionedGraph g = build_partitioned(h);
  g.validate();
  return io::partitioned_to_json(g, edge_limit, extra);
}

Json step3_doc(const Json& g_doc, const std::optional<std::string>& profile, std::uint64_t edge_limit) {
  PartitionedGraph g = io::partitioned_from_json(g_doc);
  Constants c;
  if (profile) {
    c = parse_profile(*profile);
  } else if (g_doc.at("meta").contains("constants")) {
    c = io::constants_from_json(g_doc.at("meta").at("constants"));
  } else {
    throw ValidationError("no constants in the input; pass --profile");
  }
  GStar gs = build_Gstar(g, c);
  gs.validate();
  return io::gstar_to_json(gs, edge_limit);
}

int cmd_reduce(const std::string& step, const Options& o, std::ostream& out) {
  if (step == "step1") {
    emit(o, out, step1_doc(o.input, o.profile_override.value_or(o.profile)));
  } else if (step == "step2") {
    emit(o, out, step2_doc(io::read_json_file(o.input), o.edge_limit));
  } else if (step == "step3") {
    emit(o, out, step3_doc(io::read_json_file(o.input), o.profile_override, o.edge_limit));
  } else {
    if (o.output.empty()) throw ValidationError("reduce all needs -o <directory>");
    std::filesystem::create_directories(o.output);
    const std::string profile = o.profile_override.value_or(o.profile);
    const auto dir = std::filesystem::path(o.output);
    Json h = step1_doc(o.input, profile);
    io::write_json_file((dir / "H.json").string(), h);
    Json g = step2_doc(h, o.edge_limit);
    io::write_json_file((dir / "G.json").string(), g);
    Json gs = step3_doc(g, profile, o.edge_limit);
    io::write_json_file((dir / "Gstar.json").string(), gs);
    out << "wrote H.json (" << h.at("vertices").size() << " vertices), G.json ("
        << g.at("vertices").size() << " vertices), Gstar.json (" << gs.at("vertices").size()
        << " vertices)\n";
  }
  return kExitYes;
}

int cmd_witness(const std::string& what, const Options& o, std::ostream& out) {
  if (what == "order") {
    auto [f, h] = io::h_instance_from_json(io::read_json_file(o.input));
    Assignment a;
    if (!o.assignment.empty()) {
      a = assignment_from_string(o.assignment);
    } else {
      auto found = brute_force_nae(f, o.nae_cap);
      if (!found) {
        out << "UNSAT\n";
        return kExitNo;
      }
      a = *found;
    }
    emit(o, out, io::order_to_json(witness_order(f, h, a)));
    return kExitYes;
  }
  if (what == "decode") {
    auto [f, h] = io::h_instance_from_json(io::read_json_file(o.input));
    Assignment a = decode_assignment(f, h, io::order_from_json(io::read_json_file(o.order)));
    out << assignment_to_string(a) << "\n";
    return kExitYes;
  }
  if (what == "path-mapping") {
    PartitionedGraph g = io::partitioned_from_json(io::read_json_file(o.input));
    emit(o, out, io::tree_mapping_to_json(
                     path_mapping_from_order(g, io::order_from_json(io::read_json_file(o.order)))));
    return kExitYes;
  }
  GStar gs = io::gstar_from_json(io::read_json_file(o.input));
  emit(o, out, io::tree_layout_to_json(
                   caterpillar_layout(gs, io::order_from_json(io::read_json_file(o.order)))));
  return kExitYes;
}

int cmd_balance(const std::string& what, const Options& o, std::ostream& out) {
  WeightedGraph g = io::weighted_graph_from_json(io::read_json_file(o.input));
  if (what == "solve") {
    if (o.tree) {
      auto bt = solve_balancing_tree(g, o.threshold, o.cap.value_or(kDefaultTreeSolverCap));
      if (!bt) {
        out << "none\n";
        return kExitNo;
      }
      emit(o, out, io::balancing_tree_to_json(*bt));
    } else {
      auto ord = solve_balancing_order(g, o.threshold, o.budget);
      if (!ord) {
        out << "none\n";
        return kExitNo;
      }
      emit(o, out, io::order_to_json(*ord));
    }
    return kExitYes;
  }
  Json w = io::read_json_file(o.witness);
  const std::string kind = io::kind_of(w);
  if (kind == "linear_order") {
    auto chk = check_balancing_order(g, io::order_from_json(w), o.threshold);
    if (chk) {
      out << "true\n";
      return kExitYes;
    }
    out << "false: vertex " << chk.violator << " (" << g.vertex(chk.violator).label << ") left "
        << chk.weights.left << " right " << chk.weights.right << "\n";
    return kExitNo;
  }
  if (kind == "balancing_tree") {
    auto chk = check_balancing_tree(g, io::balancing_tree_from_json(w), o.threshold);
    if (chk) {
      out << "true\n";
      return kExitYes;
    }
    out << "false: vertex " << chk.vertex << " across tree edge " << chk.tree_edge.first << "-"
        << chk.tree_edge.second << " weight " << chk.cut_weight << "\n";
    return kExitNo;
  }
  throw ValidationError("witness must be a linear_order or balancing_tree document");
}

int cmd_cutval(const Options& o, std::ostream& out) {
  auto g = io::graph_view_from_json(io::read_json_file(o.input));
  auto [A, B] = io::cut_from_json(io::read_json_file(o.cut));
  CutOptions opt{parse_matching_kind(o.kind), o.cut_threshold, o.budget, parse_filter(o.filter)};
  CutValue v = cut_value(*g, A, B, opt);
  Json report = {{"kind", o.kind},
                 {"value", v.value},
                 {"at_least", v.at_least},
                 {"matching", matching_json(v.matching)},
                 {"nodes", v.nodes}};
  out << io::dump(report);
  return kExitYes;
}

int cmd_width(const Options& o, std::ostream& out) {
  Graph g = io::explicit_graph_from_json(io::read_json_file(o.input));
  const WidthKind kind = width_kind_from_name(o.kind);
  const int cap = o.cap.value_or(o.linear ? kDefaultLinearWidthCap : kDefaultGeneralWidthCap);
  WidthResult r = exact_width(g, kind, o.linear, cap);
  Json report = {{"kind", o.kind},
                 {"linear", o.linear},
                 {"value", r.value},
                 {"layouts", r.layouts},
                 {"cuts", r.cuts},
                 {"witness", io::tree_layout_to_json(r.witness)}};
  out << io::dump(report);
  if (!o.output.empty()) io::write_json_file(o.output, io::tree_layout_to_json(r.witness));
  return kExitYes;
}

HybridTree read_hybrid(const std::string& path) {
  Json doc = io::read_json_file(path);
  if (io::kind_of(doc) == "tree_layout") return HybridTree::from_layout(io::tree_layout_from_json(doc));
  return io::hybrid_tree_from_json(doc);
}

int cmd_layout(const std::string& what, const Options& o, std::ostream& out) {
  if (what == "group") {
    GStar gs = io::gstar_from_json(io::read_json_file(o.input));
    HybridTree ht = read_hybrid(o.layout);
    ht.validate(gs);
    HybridTree result = o.gadget ? group_gadget(gs, ht, *o.gadget).tree : group_all(gs, ht);
    result.validate(gs);
    emit(o, out, io::hybrid_tree_to_json(result));
    return kExitYes;
  }
  if (what == "to-mapping") {
    GStar gs = io::gstar_from_json(io::read_json_file(o.input));
    HybridTree ht = read_hybrid(o.hybrid);
    ht.validate(gs);
    emit(o, out, io::tree_mapping_to_json(hybrid_to_tree_mapping(gs, ht)));
    return kExitYes;
  }
  if (what == "project") {
    PartitionedGraph g = io::partitioned_from_json(io::read_json_file(o.input));
    emit(o, out, io::tree_mapping_to_json(
                     project_mapping_to_G(g, io::tree_mapping_from_json(io::read_json_file(o.mapping)))));
    return kExitYes;
  }
  // value
  Json doc = io::read_json_file(o.input);
  Json dec = io::read_json_file(o.layout);
  const std::string dkind = io::kind_of(dec);
  Json report = {{"kind", o.kind}};
  if (dkind == "tree_mapping") {
    auto view = io::graph_view_from_json(doc);
    auto* parts = dynamic_cast<const PartitionView*>(view.get());
    if (!parts) throw ValidationError("tree mappings need a partitioned graph or G*");
    MappingValue v = mapping_value(*parts, io::tree_mapping_from_json(dec),
                                   {parse_matching_kind(o.kind), std::nullopt, o.budget});
    report["value"] = v.value;
    report["worst_edge"] = {v.worst_edge.first, v.worst_edge.second};
  } else {
    auto view = io::graph_view_from_json(doc);
    HybridTree ht = dkind == "tree_layout" ? HybridTree::from_layout(io::tree_layout_from_json(dec))
                                           : io::hybrid_tree_from_json(dec);
    if (static_cast<int>(ht.placement.size()) != view->vertex_count())
      throw ValidationError("decomposition does not cover the graph");
    const WidthKind kind = width_kind_from_name(o.kind);
    int best = 0;
    std::pair<int, int> worst{-1, -1};
    for (auto e : ht.tree.edges()) {
      auto [A, B] = hybrid_cut(ht, e);
      const int v = cut_width_value(*view, A, B, kind, o.budget);
      if (v > best || worst.first < 0) {
        best = v;
        worst = e;
      }
    }
    report["value"] = best;
    report["worst_edge"] = {worst.first, worst.second};
  }
  out << io::dump(report);
  return kExitYes;
}

int report_error(std::ostream& err, const char* category, const std::string& message, int code,
                 std::optional<std::pair<std::size_t, std::size_t>> where = std::nullopt) {
  Json diag = {{"error", category}, {"message", message}, {"exit_code", code}};
  if (where) {
    diag["line"] = where->first;
    diag["column"] = where->second;
  }
  err << io::dump(diag);
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction pipeline from NAE-3-SAT to mim/sim-width instances"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Search node budget");
  };

  auto* nae = app.add_subcommand("nae", "Positive NAE-3-SAT formulas")->require_subcommand(1);
  for (const char* name : {"check", "solve"}) {
    auto* c = nae->add_subcommand(name, name == std::string("check") ? "Validate (and evaluate)" : "Brute-force solve");
    c->add_option("cnf", o.cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
    c->add_flag("--lax", o.lax, "Skip the four-occurrence check");
    c->add_option("--cap", o.nae_cap, "Maximum number of variables for brute force");
    if (name == std::string("check")) c->add_option("--assignment", o.assignment, "Bit string, variable 1 first");
    c->callback([&, name] { chosen = std::string("nae ") + name; });
  }

  auto* reduce = app.add_subcommand("reduce", "Build the reduction's graphs")->require_subcommand(1);
  for (const char* name : {"step1", "step2", "step3", "all"}) {
    auto* c = reduce->add_subcommand(name, "");
    c->add_option("--profile", o.profile_override, "paper | small | custom:tau,gamma,lambda,a,b");
    c->add_option("-i,--input", o.input)->required()->check(CLI::ExistingFile);
    c->add_option("-o,--output", o.output, std::string(name) == "all" ? "Output directory" : "Output JSON (stdout if absent)");
    c->add_option("--edge-limit", o.edge_limit, "Largest edge count written explicitly");
    c->callback([&, name] { chosen = std::string("reduce ") + name; });
  }

  auto* witness = app.add_subcommand("witness", "Witness constructions")->require_subcommand(1);
  {
    auto* c = witness->add_subcommand("order", "Balancing order of H from a satisfying assignment");
    c->add_option("-i,--input", o.input, "H document")->required()->check(CLI::ExistingFile);
    c->add_option("--assignment", o.assignment, "Bit string; brute force if absent");
    c->add_option("-o,--output", o.output);
    c->callback([&] { chosen = "witness order"; });
    c = witness->add_subcommand("decode", "Assignment from a balancing order of H");
    c->add_option("-i,--input", o.input, "H document")->required()->check(CLI::ExistingFile);
    c->add_option("--order", o.order)->required()->check(CLI::ExistingFile);
    c->callback([&] { chosen = "witness decode"; });
    c = witness->add_subcommand("path-mapping", "Path mapping of (G, S) from an order of H");
    c->add_option("-i,--input", o.input, "partitioned graph")->required()->check(CLI::ExistingFile);
    c->add_option("--order", o.order)->required()->check(CLI::ExistingFile);
    c->add_option("-o,--output", o.output);
    c->callback([&] { chosen = "witness path-mapping"; });
    c = witness->add_subcommand("caterpillar", "Caterpillar layout of G* from an order of H");
    c->add_option("-i,--input", o.input, "G* document")->required()->check(CLI::ExistingFile);
    c->add_option("--order", o.order)->required()->check(CLI::ExistingFile);
    c->add_option("-o,--output", o.output);
    c->callback([&] { chosen = "witness caterpillar"; });
  }

  auto* balance = app.add_subcommand("balance", "Degree balancing")->require_subcommand(1);
  for (const char* name : {"solve", "check"}) {
    auto* c = balance->add_subcommand(name, "");
    c->add_option("-i,--input", o.input, "weighted graph")->required()->check(CLI::ExistingFile);
    c->add_option("--threshold", o.threshold)->required();
    c->add_flag("--tree", o.tree, "Balancing trees instead of orders");
    if (name == std::string("solve")) {
      c->add_option("-o,--output", o.output);
      c->add_option("--cap", o.cap, "Vertex cap of the tree solver");
      add_budget(c);
    } else {
      c->add_option("--witness", o.witness, "linear_order or balancing_tree document")
          ->required()
          ->check(CLI::ExistingFile);
    }
    c->callback([&, name] { chosen = std::string("balance ") + name; });
  }

  {
    auto* c = app.add_subcommand("cutval", "Maximum (semi-)induced matching across a cut");
    c->add_option("-i,--input", o.input, "graph document")->required()->check(CLI::ExistingFile);
    c->add_option("--cut", o.cut)->required()->check(CLI::ExistingFile);
    c->add_option("--kind", o.kind)->check(CLI::IsMember({"mim", "sim"}));
    c->add_option("--threshold", o.cut_threshold, "Stop once a matching this large is found");
    c->add_option("--filter", o.filter)->check(CLI::IsMember({"all", "matching", "dummy"}));
    add_budget(c);
    c->callback([&] { chosen = "cutval"; });
  }

  auto* width = app.add_subcommand("width", "Width oracles")->require_subcommand(1);
  {
    auto* c = width->add_subcommand("exact", "Exact width by exhaustive search");
    c->add_option("-i,--input", o.input, "graph document")->required()->check(CLI::ExistingFile);
    c->add_option("--kind", o.kind)->check(CLI::IsMember({"mim", "sim", "omim"}));
    c->add_flag("--linear", o.linear);
    c->add_option("--cap", o.cap, "Vertex cap (default 8, or 10 with --linear)");
    c->add_option("-o,--output", o.output, "Write the witness layout here");
    c->callback([&] { chosen = "width exact"; });
  }

  auto* layout = app.add_subcommand("layout", "Decompositions of G*")->require_subcommand(1);
  {
    auto* c = layout->add_subcommand("group", "Group gadgets onto single nodes");
    c->add_option("-i,--input", o.input, "G* document")->required()->check(CLI::ExistingFile);
    c->add_option("--layout", o.layout, "tree_layout or hybrid_tree document")->required()->check(CLI::ExistingFile);
    c->add_option("--gadget", o.gadget, "Only this gadget (default: all, ascending)");
    c->add_option("-o,--output", o.output);
    c->callback([&] { chosen = "layout group"; });
    c = layout->add_subcommand("to-mapping", "Contract a grouped hybrid tree into a tree mapping");
    c->add_option("-i,--input", o.input, "G* document")->required()->check(CLI::ExistingFile);
    c->add_option("--hybrid", o.hybrid)->required()->check(CLI::ExistingFile);
    c->add_option("-o,--output", o.output);
    c->callback([&] { chosen = "layout to-mapping"; });
    c = layout->add_subcommand("project", "Rename gadgets to parts of (G, S)");
    c->add_option("-i,--input", o.input, "partitioned graph")->required()->check(CLI::ExistingFile);
    c->add_option("--mapping", o.mapping)->required()->check(CLI::ExistingFile);
    c->add_option("-o,--output", o.output);
    c->callback([&] { chosen = "layout project"; });
    c = layout->add_subcommand("value", "Value of a layout, hybrid tree or tree mapping");
    c->add_option("-i,--input", o.input, "graph document")->required()->check(CLI::ExistingFile);
    c->add_option("--layout", o.layout, "decomposition document")->required()->check(CLI::ExistingFile);
    c->add_option("--kind", o.kind)->check(CLI::IsMember({"mim", "sim", "omim"}));
    add_budget(c);
    c->callback([&] { chosen = "layout value"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    const auto space = chosen.find(' ');
    const std::string group = chosen.substr(0, space);
    const std::string sub = space == std::string::npos ? "" : chosen.substr(space + 1);
    if (group == "nae") return sub == "check" ? cmd_nae_check(o, out) : cmd_nae_solve(o, out);
    if (group == "reduce") return cmd_reduce(sub, o, out);
    if (group == "witness") return cmd_witness(sub, o, out);
    if (group == "balance") return cmd_balance(sub, o, out);
    if (group == "cutval") return cmd_cutval(o, out);
    if (group == "width") return cmd_width(o, out);
    if (group == "layout") return cmd_layout(sub, o, out);
    return report_error(err, "usage", "no command given", kExitUsage);
  } catch (const ParseError& e) {
    return report_error(err, "parse", e.what(), kExitValidation, std::pair{e.line(), e.column()});
  } catch (const BudgetExceeded& e) {
    return report_error(err, "budget", e.what(), kExitBudget);
  } catch (const Error& e) {
    return report_error(err, "validation", e.what(), kExitValidation);
  } catch (const std::filesystem::filesystem_error& e) {
    return report_error(err, "io", e.what(), kExitValidation);
  }
}

}  // namespace mimred
