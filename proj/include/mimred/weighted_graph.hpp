#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mimred {

using Weight = std::int64_t;

enum class Role {
  variable,
  variable_bar,
  t,
  f,
  t_bar,
  f_bar,
  clause,
  spine_a,
  spine_b,
  root,
  s_terminal,
  pad_x,
  pad_y,
  plain,
};

std::string_view role_name(Role r);
Role role_from_name(std::string_view name);

struct WeightedEdge {
  int u;
  int v;
  Weight weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct VertexRecord {
  std::string label;
  Role role = Role::plain;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// Undirected graph with positive integer edge weights and annotated vertices.
class WeightedGraph {
 public:
  struct Neighbor {
    int vertex;
    Weight weight;
  };

  WeightedGraph() = default;
  explicit WeightedGraph(int plain_vertices);

  int add_vertex(std::string label = {}, Role role = Role::plain);
  /// Rejects self-loops, duplicate pairs and weights below 1.
  void add_edge(int u, int v, Weight w);
  /// Multiplies every edge weight by `factor`.
  void scale_weights(Weight factor);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int v) const { return adj_[check(v)]; }
  const VertexRecord& vertex(int v) const { return vertices_[check(v)]; }
  void set_role(int v, Role r) { vertices_[check(v)].role = r; }
  void set_label(int v, std::string label) { vertices_[check(v)].label = std::move(label); }

  std::optional<Weight> weight(int u, int v) const;
  bool adjacent(int u, int v) const { return weight(u, v).has_value(); }
  Weight total_weight() const;

  /// Induced subgraph on `keep` (ids renumbered in the given order).
  WeightedGraph induced(const std::vector<int>& keep) const;

  bool is_triangle_free() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  int check(int v) const;

  std::vector<VertexRecord> vertices_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

/// A permutation of vertex ids, first element leftmost.
using LinearOrder = std::vector<int>;

/// Positions of each vertex in `order`; throws unless `order` is a
/// permutation of 0..n-1.
std::vector<int> order_positions(const LinearOrder& order, int n);

}  // namespace mimred
