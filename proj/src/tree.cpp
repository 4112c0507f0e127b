#include "mimred/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "mimred/error.hpp"

namespace mimred {

Tree Tree::path(int nodes) {
  Tree t(nodes);
  for (int i = 0; i + 1 < nodes; ++i) t.add_edge(i, i + 1);
  return t;
}

Tree Tree::from_parents(const std::vector<int>& parent) {
  Tree t(static_cast<int>(parent.size()));
  int roots = 0;
  for (int v = 0; v < t.size(); ++v) {
    int p = parent[v];
    if (p == -1) {
      ++roots;
      continue;
    }
    if (p < 0 || p >= t.size() || p == v)
      throw ValidationError("parent array entry out of range at node " + std::to_string(v));
    t.add_edge(v, p);
  }
  if (roots != 1 || !t.is_tree())
    throw ValidationError("parent array does not describe a tree");
  return t;
}

Tree Tree::from_pruefer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  Tree t(n);
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  int u = *leaves.begin();
  int w = *std::next(leaves.begin());
  t.add_edge(u, w);
  return t;
}

int Tree::add_node() {
  adj_.emplace_back();
  return size() - 1;
}

void Tree::add_edge(int a, int b) {
  auto& la = adj_[a];
  auto& lb = adj_[b];
  la.insert(std::lower_bound(la.begin(), la.end(), b), b);
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
}

void Tree::remove_edge(int a, int b) {
  auto& la = adj_[a];
  auto& lb = adj_[b];
  auto ia = std::lower_bound(la.begin(), la.end(), b);
  auto ib = std::lower_bound(lb.begin(), lb.end(), a);
  if (ia == la.end() || *ia != b || ib == lb.end() || *ib != a)
    throw ValidationError("edge not in tree");
  la.erase(ia);
  lb.erase(ib);
}

bool Tree::has_edge(int a, int b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Tree::max_degree() const {
  int d = 0;
  for (const auto& l : adj_) d = std::max(d, static_cast<int>(l.size()));
  return d;
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

int Tree::edge_count() const {
  int s = 0;
  for (const auto& l : adj_) s += static_cast<int>(l.size());
  return s / 2;
}

bool Tree::is_tree() const {
  if (size() == 0) return false;
  if (edge_count() != size() - 1) return false;
  return static_cast<int>(bfs_order(0).size()) == size();
}

bool Tree::is_path() const {
  if (!is_tree()) return false;
  return max_degree() <= 2;
}

std::vector<int> Tree::side(int from, int to) const {
  std::vector<int> out;
  std::vector<char> seen(adj_.size(), 0);
  seen[from] = 1;
  seen[to] = 1;
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> Tree::side_mask(int from, int to) const {
  std::vector<char> mask(adj_.size(), 0);
  for (int v : side(from, to)) mask[v] = 1;
  return mask;
}

std::vector<int> Tree::parents(int root) const {
  std::vector<int> parent(adj_.size(), -2);
  parent[root] = -1;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v])
      if (parent[w] == -2) {
        parent[w] = v;
        q.push(w);
      }
  }
  return parent;
}

std::vector<int> Tree::bfs_order(int root) const {
  std::vector<int> order;
  std::vector<char> seen(adj_.size(), 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return order;
}

}  // namespace mimred
