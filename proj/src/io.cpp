#include "mimred/io.hpp"

#include <fstream>
#include <sstream>

#include "mimred/error.hpp"

namespace mimred::io {
namespace {

Json header(const std::string& kind) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["kind"] = kind;
  return doc;
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<int> int_list(const Json& j, const char* key) { return get<std::vector<int>>(j, key); }

Json vertex_records(int n, const std::function<std::pair<std::string, std::string>(int)>& rec) {
  Json out = Json::array();
  for (int v = 0; v < n; ++v) {
    auto [label, role] = rec(v);
    out.push_back({{"id", v}, {"label", label}, {"role", role}});
  }
  return out;
}

void check_dense_ids(const Json& vertices) {
  if (!vertices.is_array()) throw ValidationError("'vertices' must be an array");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (get<int>(vertices[i], "id") != static_cast<int>(i))
      throw ValidationError("vertex ids must be dense from 0 (entry " + std::to_string(i) + ")");
}

Json explicit_edges(const GraphView& g) {
  Json edges = Json::array();
  Graph m = materialize(g);
  for (const auto& [uv, kind] : m.edges())
    edges.push_back({{"u", uv.first}, {"v", uv.second}, {"kind", edge_kind_name(kind)}});
  return edges;
}

/// For explicit encodings, the stored edge list must equal the rebuilt graph.
void check_edges(const Json& doc, const GraphView& g) {
  const auto encoding = get<std::string>(doc, "edge_encoding");
  if (encoding == "implicit") return;
  if (encoding != "explicit") throw ValidationError("unknown edge encoding '" + encoding + "'");
  if (explicit_edges(g) != doc.at("edges"))
    throw ValidationError("stored edges differ from the construction rule");
}

Json parts_json(const PartitionView& g) {
  Json parts = Json::array();
  for (int p = 0; p < g.part_count(); ++p) {
    auto [lo, hi] = g.part_range(p);
    parts.push_back({{"part", p}, {"first", lo}, {"size", hi - lo}});
  }
  return parts;
}

std::string path_tag_name(PathTag t) {
  switch (t) {
    case PathTag::original: return "original";
    case PathTag::subdivision: return "subdivision";
    case PathTag::appended: return "appended";
  }
  return "subdivision";
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << dump(doc);
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

std::string kind_of(const Json& doc) {
  if (get<int>(doc, "format_version") != kFormatVersion)
    throw ValidationError("unsupported format_version " + doc.at("format_version").dump());
  return get<std::string>(doc, "kind");
}

void expect_kind(const Json& doc, const std::string& kind) {
  const auto k = kind_of(doc);
  if (k != kind) throw ValidationError("expected a '" + kind + "' document, got '" + k + "'");
}

Json constants_to_json(const Constants& c) {
  return {{"tau", c.tau}, {"gamma", c.gamma}, {"lambda", c.lambda}, {"a", c.a}, {"b", c.b}};
}

Constants constants_from_json(const Json& j) {
  Constants c{get<Weight>(j, "tau"), get<Weight>(j, "gamma"), get<Weight>(j, "lambda"),
              get<Weight>(j, "a"), get<Weight>(j, "b")};
  validate_constants(c);
  return c;
}

Json weighted_graph_to_json(const WeightedGraph& g, const Json& meta) {
  Json doc = header("weighted_graph");
  doc["vertices"] = vertex_records(g.vertex_count(), [&](int v) {
    return std::pair{g.vertex(v).label, std::string(role_name(g.vertex(v).role))};
  });
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  doc["edges"] = std::move(edges);
  doc["meta"] = meta;
  return doc;
}

WeightedGraph weighted_graph_from_json(const Json& doc) {
  expect_kind(doc, "weighted_graph");
  const Json& vertices = doc.at("vertices");
  check_dense_ids(vertices);
  WeightedGraph g;
  for (const auto& v : vertices)
    g.add_vertex(get<std::string>(v, "label"), role_from_name(get<std::string>(v, "role")));
  if (!doc.contains("edges") || !doc.at("edges").is_array())
    throw ValidationError("weighted graph needs an 'edges' array");
  for (const auto& e : doc.at("edges")) {
    if (!e.contains("weight")) throw ValidationError("weighted graph edge without weight");
    g.add_edge(get<int>(e, "u"), get<int>(e, "v"), get<Weight>(e, "weight"));
  }
  return g;
}

Json h_instance_to_json(const NaeFormula& f, const HInstance& h, const std::string& profile) {
  Json groups = {
      {"var", h.var},     {"var_bar", h.var_bar}, {"t", h.t},           {"t_bar", h.t_bar},
      {"f", h.f},         {"f_bar", h.f_bar},     {"clause", h.clause}, {"s", h.seq.s},
      {"X", h.X},         {"Y", h.Y},
  };
  Json roots = Json::array({h.seq.b1_plus.root(), h.seq.b2_plus.root()});
  if (!h.pad_left.spine_b.empty()) {
    roots.push_back(h.pad_left.root());
    roots.push_back(h.pad_right.root());
  }
  groups["roots"] = roots;
  Json meta = {
      {"step", "step1"},
      {"profile", profile},
      {"constants", constants_to_json(h.constants)},
      {"unit_constants", constants_to_json(h.unit)},
      {"formula", to_dimacs(f)},
      {"groups", groups},
      {"pre_padding_vertices", h.pre_padding_vertices},
  };
  return weighted_graph_to_json(h.graph, meta);
}

std::pair<NaeFormula, HInstance> h_instance_from_json(const Json& doc) {
  WeightedGraph stored = weighted_graph_from_json(doc);
  const Json& meta = doc.at("meta");
  if (!meta.is_object() || !meta.contains("formula"))
    throw ValidationError("graph document carries no formula; not built by reduce step1");
  NaeFormula f = parse_nae_dimacs(get<std::string>(meta, "formula"), true);
  Constants c = constants_from_json(meta.at("constants"));
  HInstance h = build_H(f, c);
  if (!(h.graph == stored)) throw ValidationError("stored graph differs from H rebuilt from its formula");
  return {std::move(f), std::move(h)};
}

Json graph_to_json(const Graph& g) {
  Json doc = header("graph");
  doc["vertices"] = vertex_records(g.vertex_count(), [](int v) {
    return std::pair{std::to_string(v), std::string("plain")};
  });
  doc["edge_encoding"] = "explicit";
  doc["edges"] = explicit_edges(g);
  doc["meta"] = Json::object();
  return doc;
}

Graph graph_from_json(const Json& doc) {
  expect_kind(doc, "graph");
  check_dense_ids(doc.at("vertices"));
  Graph g(static_cast<int>(doc.at("vertices").size()));
  for (const auto& e : doc.at("edges")) {
    EdgeKind kind = e.contains("kind") ? edge_kind_from_name(get<std::string>(e, "kind")) : EdgeKind::plain;
    g.add_edge(get<int>(e, "u"), get<int>(e, "v"), kind);
  }
  return g;
}

Json partitioned_to_json(const PartitionedGraph& g, std::uint64_t explicit_edge_limit,
                         const Json& extra_meta) {
  Json doc = header("partitioned_graph");
  doc["vertices"] = vertex_records(g.vertex_count(), [&](int x) {
    const Block& b = g.blocks()[g.block_of(x)];
    return std::pair{"I(" + std::to_string(b.u) + "," + std::to_string(b.v) + ")." +
                         std::to_string(x - b.offset),
                     std::string("plain")};
  });
  const std::uint64_t m = g.edge_count();
  doc["edge_count"] = m;
  if (m <= explicit_edge_limit) {
    doc["edge_encoding"] = "explicit";
    doc["edges"] = explicit_edges(g);
  } else {
    doc["edge_encoding"] = "implicit";
  }
  doc["parts"] = parts_json(g);
  Json blocks = Json::array();
  for (const auto& b : g.blocks())
    blocks.push_back({{"u", b.u}, {"v", b.v}, {"first", b.offset}, {"size", b.size}});
  doc["blocks"] = std::move(blocks);
  Json meta = extra_meta.is_object() ? extra_meta : Json::object();
  meta["step"] = "step2";
  meta["base"] = weighted_graph_to_json(g.base());
  doc["meta"] = std::move(meta);
  return doc;
}

PartitionedGraph partitioned_from_json(const Json& doc) {
  expect_kind(doc, "partitioned_graph");
  check_dense_ids(doc.at("vertices"));
  PartitionedGraph g(weighted_graph_from_json(doc.at("meta").at("base")));
  g.validate();
  if (static_cast<int>(doc.at("vertices").size()) != g.vertex_count())
    throw ValidationError("vertex count differs from the base graph's construction");
  if (get<std::uint64_t>(doc, "edge_count") != g.edge_count())
    throw ValidationError("edge_count differs from the construction");
  if (doc.at("parts") != parts_json(g)) throw ValidationError("parts differ from the construction");
  Json blocks = Json::array();
  for (const auto& b : g.blocks())
    blocks.push_back({{"u", b.u}, {"v", b.v}, {"first", b.offset}, {"size", b.size}});
  if (doc.at("blocks") != blocks) throw ValidationError("blocks differ from the construction");
  check_edges(doc, g);
  return g;
}

Json gstar_to_json(const GStar& g, std::uint64_t explicit_edge_limit) {
  Json doc = header("gstar");
  doc["vertices"] = vertex_records(g.vertex_count(), [&](int x) {
    StarVertex s = g.info(x);
    return std::pair{"G(" + std::to_string(s.owner) + ")." + std::to_string(s.copy) + "." +
                         std::to_string(s.position),
                     std::string("plain")};
  });
  const std::uint64_t m = g.edge_count();
  doc["edge_count"] = m;
  if (m <= explicit_edge_limit) {
    doc["edge_encoding"] = "explicit";
    doc["edges"] = explicit_edges(g);
  } else {
    doc["edge_encoding"] = "implicit";
  }
  doc["parts"] = parts_json(g);
  Json gadgets = Json::array();
  for (int u = 0; u < g.part_count(); ++u) {
    const Gadget& gd = g.gadget(u);
    Json path = Json::array();
    for (const auto& e : gd.path()) {
      Json entry = {{"tag", path_tag_name(e.tag)}};
      if (e.tag == PathTag::original) entry["g"] = e.g_vertex;
      path.push_back(std::move(entry));
    }
    gadgets.push_back({{"owner", u},
                       {"copies", gd.copies()},
                       {"first", g.part_range(u).first},
                       {"path", std::move(path)}});
  }
  doc["gadgets"] = std::move(gadgets);
  doc["meta"] = {{"step", "step3"},
                 {"constants", constants_to_json(g.constants())},
                 {"base", weighted_graph_to_json(g.base().base())}};
  return doc;
}

GStar gstar_from_json(const Json& doc) {
  expect_kind(doc, "gstar");
  check_dense_ids(doc.at("vertices"));
  const Json& meta = doc.at("meta");
  GStar g(PartitionedGraph(weighted_graph_from_json(meta.at("base"))),
          constants_from_json(meta.at("constants")));
  g.validate();
  if (static_cast<int>(doc.at("vertices").size()) != g.vertex_count())
    throw ValidationError("vertex count differs from the construction");
  if (doc.at("parts") != parts_json(g)) throw ValidationError("parts differ from the construction");
  Json rebuilt = gstar_to_json(g, 0);
  if (doc.at("gadgets") != rebuilt.at("gadgets"))
    throw ValidationError("gadgets differ from the construction");
  if (get<std::uint64_t>(doc, "edge_count") != rebuilt.at("edge_count").get<std::uint64_t>())
    throw ValidationError("edge_count differs from the construction");
  check_edges(doc, g);
  return g;
}

std::unique_ptr<GraphView> graph_view_from_json(const Json& doc) {
  const auto kind = kind_of(doc);
  if (kind == "graph") return std::make_unique<Graph>(graph_from_json(doc));
  if (kind == "partitioned_graph") return std::make_unique<PartitionedGraph>(partitioned_from_json(doc));
  if (kind == "gstar") return std::make_unique<GStar>(gstar_from_json(doc));
  if (kind == "weighted_graph") {
    WeightedGraph w = weighted_graph_from_json(doc);
    auto g = std::make_unique<Graph>(w.vertex_count());
    for (const auto& e : w.edges()) g->add_edge(e.u, e.v);
    return g;
  }
  throw ValidationError("'" + kind + "' is not a graph document");
}

Graph explicit_graph_from_json(const Json& doc) {
  auto view = graph_view_from_json(doc);
  if (auto* g = dynamic_cast<Graph*>(view.get())) return std::move(*g);
  return materialize(*view);
}

Json order_to_json(const LinearOrder& ord) {
  Json doc = header("linear_order");
  doc["order"] = ord;
  return doc;
}

LinearOrder order_from_json(const Json& doc) {
  expect_kind(doc, "linear_order");
  return int_list(doc, "order");
}

Json tree_to_parents(const Tree& t, int root) {
  if (t.size() == 0) return Json::array();
  return t.parents(root);
}

Tree tree_from_parents(const Json& parents) {
  if (!parents.is_array()) throw ValidationError("'parent' must be an array");
  if (parents.empty()) return Tree();
  Tree t = Tree::from_parents(parents.get<std::vector<int>>());
  if (!t.is_tree()) throw ValidationError("parent array does not describe a tree");
  return t;
}

Json balancing_tree_to_json(const BalancingTree& bt) {
  Json doc = header("balancing_tree");
  doc["parent"] = tree_to_parents(bt.tree);
  doc["placement"] = bt.placement;
  return doc;
}

BalancingTree balancing_tree_from_json(const Json& doc) {
  expect_kind(doc, "balancing_tree");
  return BalancingTree{tree_from_parents(doc.at("parent")), int_list(doc, "placement")};
}

Json tree_layout_to_json(const TreeLayout& lay) {
  Json doc = header("tree_layout");
  doc["parent"] = tree_to_parents(lay.tree, lay.root >= 0 ? lay.root : 0);
  doc["leaf_of"] = lay.leaf_of;
  doc["linear"] = lay.linear;
  doc["root"] = lay.root;
  return doc;
}

TreeLayout tree_layout_from_json(const Json& doc) {
  expect_kind(doc, "tree_layout");
  TreeLayout lay;
  lay.tree = tree_from_parents(doc.at("parent"));
  lay.leaf_of = int_list(doc, "leaf_of");
  lay.linear = get<bool>(doc, "linear");
  lay.root = get<int>(doc, "root");
  lay.validate(static_cast<int>(lay.leaf_of.size()));
  return lay;
}

Json tree_mapping_to_json(const TreeMapping& m) {
  Json doc = header("tree_mapping");
  doc["parent"] = tree_to_parents(m.tree);
  doc["placement"] = m.placement;
  doc["path"] = m.path;
  return doc;
}

TreeMapping tree_mapping_from_json(const Json& doc) {
  expect_kind(doc, "tree_mapping");
  TreeMapping m{tree_from_parents(doc.at("parent")), int_list(doc, "placement"), get<bool>(doc, "path")};
  m.validate(static_cast<int>(m.placement.size()));
  return m;
}

Json hybrid_tree_to_json(const HybridTree& ht) {
  Json doc = header("hybrid_tree");
  doc["parent"] = tree_to_parents(ht.tree);
  doc["placement"] = ht.placement;
  doc["preimages"] = ht.preimages();
  return doc;
}

HybridTree hybrid_tree_from_json(const Json& doc) {
  expect_kind(doc, "hybrid_tree");
  HybridTree ht{tree_from_parents(doc.at("parent")), int_list(doc, "placement")};
  for (int node : ht.placement)
    if (node < 0 || node >= ht.tree.size()) throw ValidationError("placement outside the tree");
  if (doc.contains("preimages") && doc.at("preimages") != Json(ht.preimages()))
    throw ValidationError("preimages disagree with the placement");
  return ht;
}

Json cut_to_json(const std::vector<int>& A, const std::vector<int>& B) {
  Json doc = header("cut");
  doc["A"] = A;
  doc["B"] = B;
  return doc;
}

std::pair<std::vector<int>, std::vector<int>> cut_from_json(const Json& doc) {
  expect_kind(doc, "cut");
  return {int_list(doc, "A"), int_list(doc, "B")};
}

}  // namespace mimred::io
