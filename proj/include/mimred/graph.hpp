#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace mimred {

/// gadget: an edge inside one gadget of the step-3 graph.
enum class EdgeKind : std::uint8_t { plain, matching, dummy, gadget };

std::string_view edge_kind_name(EdgeKind k);
EdgeKind edge_kind_from_name(std::string_view name);

/// Read-only adjacency interface shared by explicit and implicitly defined graphs.
class GraphView {
 public:
  virtual ~GraphView() = default;
  virtual int vertex_count() const = 0;
  virtual bool adjacent(int u, int v) const = 0;
  /// Kind of the edge uv; only meaningful when adjacent(u, v).
  virtual EdgeKind edge_kind(int, int) const { return EdgeKind::plain; }
  /// Neighbours of v in ascending order, appended to `out` after clearing it.
  virtual void neighbors(int v, std::vector<int>& out) const = 0;
};

/// Simple undirected graph with sorted adjacency and per-edge kinds.
class Graph final : public GraphView {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int add_vertex();
  /// Rejects self-loops and duplicates.
  void add_edge(int u, int v, EdgeKind kind = EdgeKind::plain);

  int vertex_count() const override { return static_cast<int>(adj_.size()); }
  bool adjacent(int u, int v) const override;
  EdgeKind edge_kind(int u, int v) const override;
  void neighbors(int v, std::vector<int>& out) const override;

  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  /// Edges (u, v, kind) with u < v, sorted.
  std::vector<std::pair<std::pair<int, int>, EdgeKind>> edges() const;

  Graph induced(const std::vector<int>& keep) const;

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  struct Entry {
    int vertex;
    EdgeKind kind;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  const Entry* find(int u, int v) const;
  void check(int v) const;

  std::vector<std::vector<Entry>> adj_;
  std::size_t edge_count_ = 0;
};

/// Copies any view into an explicit graph (adjacency and kinds).
Graph materialize(const GraphView& g);

}  // namespace mimred
