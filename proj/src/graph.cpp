#include "mimred/graph.hpp"

#include <algorithm>
#include <string>

#include "mimred/error.hpp"

namespace mimred {

std::string_view edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::plain: return "plain";
    case EdgeKind::matching: return "matching";
    case EdgeKind::dummy: return "dummy";
    case EdgeKind::gadget: return "gadget";
  }
  return "plain";
}

EdgeKind edge_kind_from_name(std::string_view name) {
  if (name == "plain") return EdgeKind::plain;
  if (name == "matching") return EdgeKind::matching;
  if (name == "dummy") return EdgeKind::dummy;
  if (name == "gadget") return EdgeKind::gadget;
  throw ValidationError("unknown edge kind '" + std::string(name) + "'");
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void Graph::check(int v) const {
  if (v < 0 || v >= vertex_count())
    throw ValidationError("vertex id " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v, EdgeKind kind) {
  check(u);
  check(v);
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  auto insert = [&](int a, int b) {
    auto& list = adj_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Entry& e, int x) { return e.vertex < x; });
    if (it != list.end() && it->vertex == b)
      throw ValidationError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    list.insert(it, Entry{b, kind});
  };
  insert(u, v);
  insert(v, u);
  ++edge_count_;
}

const Graph::Entry* Graph::find(int u, int v) const {
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Entry& e, int x) { return e.vertex < x; });
  return it != list.end() && it->vertex == v ? &*it : nullptr;
}

bool Graph::adjacent(int u, int v) const { return find(u, v) != nullptr; }

EdgeKind Graph::edge_kind(int u, int v) const {
  const Entry* e = find(u, v);
  return e ? e->kind : EdgeKind::plain;
}

void Graph::neighbors(int v, std::vector<int>& out) const {
  out.clear();
  for (const auto& e : adj_[v]) out.push_back(e.vertex);
}

std::vector<std::pair<std::pair<int, int>, EdgeKind>> Graph::edges() const {
  std::vector<std::pair<std::pair<int, int>, EdgeKind>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (const auto& e : adj_[u])
      if (u < e.vertex) out.push_back({{u, e.vertex}, e.kind});
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> idx(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check(keep[i]);
    if (idx[keep[i]] != -1) throw ValidationError("repeated vertex in induced subgraph");
    idx[keep[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (const auto& e : adj_[keep[i]])
      if (idx[e.vertex] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), idx[e.vertex], e.kind);
  return h;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph materialize(const GraphView& g) {
  Graph out(g.vertex_count());
  std::vector<int> nb;
  for (int u = 0; u < g.vertex_count(); ++u) {
    g.neighbors(u, nb);
    for (int v : nb)
      if (u < v) out.add_edge(u, v, g.edge_kind(u, v));
  }
  return out;
}

}  // namespace mimred
