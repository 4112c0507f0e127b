#include "mimred/layout.hpp"

#include <string>

#include "mimred/error.hpp"

namespace mimred {

std::pair<std::vector<int>, std::vector<int>> placement_cut(const Tree& tree,
                                                            const std::vector<int>& placement,
                                                            std::pair<int, int> edge) {
  if (!tree.has_edge(edge.first, edge.second)) throw ValidationError("not a tree edge");
  auto mask = tree.side_mask(edge.first, edge.second);
  std::pair<std::vector<int>, std::vector<int>> out;
  for (std::size_t v = 0; v < placement.size(); ++v)
    (mask[placement[v]] ? out.first : out.second).push_back(static_cast<int>(v));
  return out;
}

void TreeLayout::validate(int vertex_count) const {
  if (static_cast<int>(leaf_of.size()) != vertex_count)
    throw ValidationError("layout covers " + std::to_string(leaf_of.size()) + " vertices, expected " +
                          std::to_string(vertex_count));
  if (tree.size() > 0 && !tree.is_tree()) throw ValidationError("layout tree is not a tree");
  std::vector<char> used(static_cast<std::size_t>(tree.size()), 0);
  for (int node : leaf_of) {
    if (node < 0 || node >= tree.size() || used[node])
      throw ValidationError("leaf map is not injective");
    if (tree.degree(node) > 1) throw ValidationError("vertex placed on an internal node");
    used[node] = 1;
  }
  for (int t = 0; t < tree.size(); ++t) {
    if (used[t]) continue;
    const int d = tree.degree(t);
    if (d <= 1) throw ValidationError("leaf " + std::to_string(t) + " carries no vertex");
    const bool root_ok = linear && t == root && d == 2;
    if (d != 3 && !root_ok)
      throw ValidationError("internal node " + std::to_string(t) + " has degree " + std::to_string(d));
  }
  if (linear && vertex_count >= 2) {
    if (root < 0 || root >= tree.size() || tree.degree(root) != 2)
      throw ValidationError("linear layout needs a degree-2 root");
    int spine = 0;
    for (int t = 0; t < tree.size(); ++t)
      if (!used[t]) ++spine;
    // Internal nodes form a path.
    Tree inner(tree.size());
    for (auto [a, b] : tree.edges())
      if (!used[a] && !used[b]) inner.add_edge(a, b);
    int inner_edges = inner.edge_count();
    if (inner_edges != spine - 1) throw ValidationError("internal nodes of a linear layout must form a path");
    for (int t = 0; t < tree.size(); ++t)
      if (inner.degree(t) > 2) throw ValidationError("internal nodes of a linear layout must form a path");
  }
}

std::vector<int> TreeLayout::linear_order() const {
  const int n = static_cast<int>(leaf_of.size());
  if (!linear) throw ValidationError("layout is not linear");
  if (n <= 1) return n == 1 ? std::vector<int>{0} : std::vector<int>{};
  std::vector<int> vertex_at(static_cast<std::size_t>(tree.size()), -1);
  for (int v = 0; v < n; ++v) vertex_at[leaf_of[v]] = v;
  std::vector<int> order;
  int prev = -1, cur = root;
  while (cur >= 0) {
    int next = -1;
    std::vector<int> leaves;
    for (int x : tree.neighbors(cur)) {
      if (x == prev) continue;
      if (vertex_at[x] >= 0) leaves.push_back(vertex_at[x]);
      else next = x;
    }
    if (next >= 0) {
      if (leaves.size() != 1) throw ValidationError("malformed caterpillar");
      order.push_back(leaves[0]);
    } else {
      // Last spine node: its two leaves in id order of their nodes.
      std::vector<int> nodes;
      for (int x : tree.neighbors(cur))
        if (x != prev) nodes.push_back(x);
      for (int x : nodes) order.push_back(vertex_at[x]);
    }
    prev = cur;
    cur = next;
  }
  return order;
}

TreeLayout caterpillar_from_order(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  TreeLayout lay;
  lay.linear = true;
  lay.leaf_of.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return lay;
  if (n == 1) {
    lay.tree = Tree(1);
    lay.leaf_of[order[0]] = 0;
    lay.root = 0;
    return lay;
  }
  const int spine = n - 1;
  lay.tree = Tree(spine + n);
  for (int j = 0; j + 1 < spine; ++j) lay.tree.add_edge(j, j + 1);
  for (int j = 0; j < n; ++j) {
    const int leaf = spine + j;
    lay.tree.add_edge(std::min(j, spine - 1), leaf);
    if (order[j] < 0 || order[j] >= n || lay.leaf_of[order[j]] != -1)
      throw ValidationError("caterpillar order is not a permutation");
    lay.leaf_of[order[j]] = leaf;
  }
  lay.root = 0;
  return lay;
}

}  // namespace mimred
