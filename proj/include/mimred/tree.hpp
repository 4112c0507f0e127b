#pragma once

#include <utility>
#include <vector>

namespace mimred {

/// Unrooted tree on nodes 0..size()-1, stored as sorted adjacency lists.
class Tree {
 public:
  Tree() = default;
  explicit Tree(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  static Tree path(int nodes);
  /// Builds from a parent array; exactly one entry must be -1.
  static Tree from_parents(const std::vector<int>& parent);
  /// Decodes a Prüfer sequence over nodes 0..n-1 (n = seq.size() + 2).
  static Tree from_pruefer(const std::vector<int>& seq);

  int size() const { return static_cast<int>(adj_.size()); }
  int add_node();
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  /// Edges (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  /// Connected and acyclic.
  bool is_tree() const;
  bool is_path() const;

  /// Nodes reachable from `from` without crossing the edge (from, to).
  std::vector<int> side(int from, int to) const;
  /// Membership flags of side(from, to).
  std::vector<char> side_mask(int from, int to) const;

  /// Parent array rooted at `root` (root gets -1).
  std::vector<int> parents(int root = 0) const;

  /// Nodes in breadth-first order from `root`, neighbors visited ascending.
  std::vector<int> bfs_order(int root) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

}  // namespace mimred
