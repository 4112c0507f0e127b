#include "mimred/weighted_graph.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "mimred/error.hpp"

namespace mimred {

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 14> kRoleNames{{
    {Role::variable, "variable"},
    {Role::variable_bar, "variable_bar"},
    {Role::t, "t"},
    {Role::f, "f"},
    {Role::t_bar, "t_bar"},
    {Role::f_bar, "f_bar"},
    {Role::clause, "clause"},
    {Role::spine_a, "spine_a"},
    {Role::spine_b, "spine_b"},
    {Role::root, "root"},
    {Role::s_terminal, "s_terminal"},
    {Role::pad_x, "pad_x"},
    {Role::pad_y, "pad_y"},
    {Role::plain, "plain"},
}};

}  // namespace

std::string_view role_name(Role r) {
  for (const auto& [role, name] : kRoleNames)
    if (role == r) return name;
  return "plain";
}

Role role_from_name(std::string_view name) {
  for (const auto& [role, n] : kRoleNames)
    if (n == name) return role;
  throw ValidationError("unknown vertex role '" + std::string(name) + "'");
}

WeightedGraph::WeightedGraph(int plain_vertices) {
  for (int i = 0; i < plain_vertices; ++i) add_vertex();
}

int WeightedGraph::check(int v) const {
  if (v < 0 || v >= vertex_count())
    throw ValidationError("unknown vertex id " + std::to_string(v));
  return v;
}

int WeightedGraph::add_vertex(std::string label, Role role) {
  vertices_.push_back({std::move(label), role});
  adj_.emplace_back();
  return vertex_count() - 1;
}

void WeightedGraph::add_edge(int u, int v, Weight w) {
  check(u);
  check(v);
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (w < 1) throw ValidationError("edge weight must be positive");
  if (adjacent(u, v))
    throw ValidationError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  edges_.push_back({u, v, w});
  adj_[u].push_back({v, w});
  adj_[v].push_back({u, w});
}

void WeightedGraph::scale_weights(Weight factor) {
  if (factor < 1) throw ValidationError("scale factor must be positive");
  for (auto& e : edges_) e.weight *= factor;
  for (auto& l : adj_)
    for (auto& nb : l) nb.weight *= factor;
}

std::optional<Weight> WeightedGraph::weight(int u, int v) const {
  const auto& a = adj_[check(u)];
  const auto& b = adj_[check(v)];
  const auto& shorter = a.size() <= b.size() ? a : b;
  int target = a.size() <= b.size() ? v : u;
  for (const auto& nb : shorter)
    if (nb.vertex == target) return nb.weight;
  return std::nullopt;
}

Weight WeightedGraph::total_weight() const {
  Weight s = 0;
  for (const auto& e : edges_) s += e.weight;
  return s;
}

WeightedGraph WeightedGraph::induced(const std::vector<int>& keep) const {
  std::unordered_map<int, int> index;
  WeightedGraph sub;
  for (int v : keep) {
    index.emplace(v, sub.add_vertex(vertex(v).label, vertex(v).role));
  }
  for (const auto& e : edges_) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu != index.end() && iv != index.end()) sub.add_edge(iu->second, iv->second, e.weight);
  }
  return sub;
}

bool WeightedGraph::is_triangle_free() const {
  std::vector<char> mark(vertices_.size(), 0);
  for (const auto& e : edges_) {
    for (const auto& nb : adj_[e.u]) mark[nb.vertex] = 1;
    bool found = false;
    for (const auto& nb : adj_[e.v])
      if (mark[nb.vertex]) found = true;
    for (const auto& nb : adj_[e.u]) mark[nb.vertex] = 0;
    if (found) return false;
  }
  return true;
}

std::vector<int> order_positions(const LinearOrder& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw ValidationError("order has " + std::to_string(order.size()) +
                          " entries, graph has " + std::to_string(n) + " vertices");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] != -1)
      throw ValidationError("order is not a permutation of the vertex ids");
    pos[v] = i;
  }
  return pos;
}

}  // namespace mimred
