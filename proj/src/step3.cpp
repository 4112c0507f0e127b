#include "mimred/step3.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "mimred/error.hpp"

namespace mimred {

std::vector<PathEntry> build_Pu(const PartitionedGraph& g, int u, const Constants& c) {
  if (u < 0 || u >= g.part_count()) throw ValidationError("unknown part " + std::to_string(u));
  if (c.a < 1) throw ValidationError("a must be positive");
  std::vector<const Block*> mine;
  for (const auto& b : g.blocks())
    if (b.u == u) mine.push_back(&b);
  for (const Block* b : mine)
    if (b->size % c.a != 0)
      throw ValidationError("block I(" + std::to_string(b->u) + "," + std::to_string(b->v) +
                            ") of size " + std::to_string(b->size) + " is not divisible by a = " +
                            std::to_string(c.a));
  std::vector<PathEntry> path;
  const int a = static_cast<int>(c.a);
  for (int i = 0; i < a; ++i)
    for (const Block* b : mine) {
      const int chunk = b->size / a;
      for (int k = 0; k < chunk; ++k) {
        path.push_back({PathTag::original, b->offset + i * chunk + k});
        path.push_back({PathTag::subdivision, -1});
      }
    }
  if (!path.empty()) path.back().tag = PathTag::appended;
  return path;
}

Gadget::Gadget(int owner, std::vector<PathEntry> path, int copies)
    : owner_(owner), path_(std::move(path)), b_(copies) {
  if (b_ < 1) throw ValidationError("gadget needs at least one copy");
}

bool Gadget::excluded(int i, int p, int j, int q) const {
  // y = (j, q) in N_Q[Copies(x)] for x = (i, p).
  (void)i;
  const int last = path_length() - 1;
  if (q == p || q == p - 1 || q == p + 1) return true;
  if (p == last && q == 0 && j >= 1) return true;
  if (p == 0 && q == last && j <= b_ - 2) return true;
  return false;
}

bool Gadget::adjacent(int x, int y) const {
  if (x == y) return false;
  const int i = copy_of(x), p = position_of(x), j = copy_of(y), q = position_of(y);
  const int last = path_length() - 1;
  if (i == j) return p - q == 1 || q - p == 1;
  if ((j == i + 1 && p == last && q == 0) || (i == j + 1 && q == last && p == 0)) return true;
  return !excluded(i, p, j, q) && !excluded(j, q, i, p);
}

void Gadget::neighbors(int x, std::vector<int>& out) const {
  out.clear();
  for (int y = 0; y < size(); ++y)
    if (adjacent(x, y)) out.push_back(y);
}

Graph Gadget::materialize() const {
  Graph g(size());
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (adjacent(x, y)) g.add_edge(x, y, EdgeKind::gadget);
  return g;
}

Gadget build_gadget(const PartitionedGraph& g, int u, const Constants& c) {
  if (c.b < 1) throw ValidationError("b must be at least 1");
  if (c.b > std::numeric_limits<int>::max()) throw ValidationError("b too large");
  return Gadget(u, build_Pu(g, u, c), static_cast<int>(c.b));
}

GStar::GStar(const PartitionedGraph& g, const Constants& c) : g_(g), c_(c) {
  path_pos_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  offset_.push_back(0);
  std::int64_t total = 0;
  for (int u = 0; u < g.part_count(); ++u) {
    gadgets_.push_back(build_gadget(g, u, c));
    const auto& path = gadgets_.back().path();
    for (std::size_t p = 0; p < path.size(); ++p)
      if (path[p].tag == PathTag::original) path_pos_[path[p].g_vertex] = static_cast<int>(p);
    total += gadgets_.back().size();
    if (total > std::numeric_limits<int>::max()) throw ValidationError("G* too large");
    offset_.push_back(static_cast<int>(total));
  }
  n_ = static_cast<int>(total);
}

int GStar::part_of(int v) const {
  if (v < 0 || v >= n_) throw ValidationError("vertex id " + std::to_string(v) + " out of range");
  auto it = std::upper_bound(offset_.begin(), offset_.end(), v);
  return static_cast<int>(it - offset_.begin()) - 1;
}

StarVertex GStar::info(int v) const {
  StarVertex s;
  s.owner = part_of(v);
  const Gadget& gd = gadgets_[s.owner];
  const int x = v - offset_[s.owner];
  s.copy = gd.copy_of(x);
  s.position = gd.position_of(x);
  s.tag = gd.path()[s.position].tag;
  s.g_vertex = gd.path()[s.position].g_vertex;
  return s;
}

int GStar::vertex_id(int owner, int copy, int position) const {
  const Gadget& gd = gadgets_.at(owner);
  if (copy < 0 || copy >= gd.copies() || position < 0 || position >= gd.path_length())
    throw ValidationError("gadget coordinates out of range");
  return offset_[owner] + gd.local(copy, position);
}

std::vector<int> GStar::copies_of_original(int x) const {
  const int u = g_.part_of(x);
  const int p = path_pos_[x];
  std::vector<int> out;
  for (int i = 0; i < gadgets_[u].copies(); ++i) out.push_back(vertex_id(u, i, p));
  return out;
}

std::vector<int> GStar::copy_vertices(int u, int copy) const {
  const Gadget& gd = gadgets_.at(u);
  std::vector<int> out(static_cast<std::size_t>(gd.path_length()));
  std::iota(out.begin(), out.end(), offset_[u] + gd.local(copy, 0));
  return out;
}

bool GStar::adjacent(int x, int y) const {
  const int ux = part_of(x), uy = part_of(y);
  if (ux == uy) return gadgets_[ux].adjacent(x - offset_[ux], y - offset_[uy]);
  const auto& px = gadgets_[ux].path()[gadgets_[ux].position_of(x - offset_[ux])];
  const auto& py = gadgets_[uy].path()[gadgets_[uy].position_of(y - offset_[uy])];
  if (px.tag != PathTag::original || py.tag != PathTag::original) return false;
  return g_.adjacent(px.g_vertex, py.g_vertex);
}

EdgeKind GStar::edge_kind(int x, int y) const {
  const int ux = part_of(x), uy = part_of(y);
  if (ux == uy) return EdgeKind::gadget;
  return g_.edge_kind(info(x).g_vertex, info(y).g_vertex);
}

void GStar::neighbors(int v, std::vector<int>& out) const {
  const int u = part_of(v);
  const Gadget& gd = gadgets_[u];
  std::vector<int> local;
  gd.neighbors(v - offset_[u], local);
  std::vector<int> result;
  for (int x : local) result.push_back(offset_[u] + x);
  const auto& entry = gd.path()[gd.position_of(v - offset_[u])];
  if (entry.tag == PathTag::original) {
    std::vector<int> gnb;
    g_.neighbors(entry.g_vertex, gnb);
    for (int y : gnb) {
      auto copies = copies_of_original(y);
      result.insert(result.end(), copies.begin(), copies.end());
    }
  }
  std::sort(result.begin(), result.end());
  out = std::move(result);
}

std::uint64_t GStar::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& gd : gadgets_) {
    const auto g = gd.materialize();
    total += g.edge_count();
  }
  const std::uint64_t b = static_cast<std::uint64_t>(c_.b);
  return total + g_.edge_count() * b * b;
}

void GStar::validate() const {
  g_.validate();
  if (static_cast<int>(gadgets_.size()) != g_.part_count()) throw ValidationError("gadget count mismatch");
  std::vector<char> seen(static_cast<std::size_t>(g_.vertex_count()), 0);
  for (int u = 0; u < part_count(); ++u) {
    const Gadget& gd = gadgets_[u];
    auto [lo, hi] = g_.part_range(u);
    if (gd.path_length() != 2 * (hi - lo)) throw ValidationError("|P_u| differs from 2|S(u)|");
    if (offset_[u + 1] - offset_[u] != gd.size()) throw ValidationError("gadget range mismatch");
    for (int p = 0; p < gd.path_length(); ++p) {
      const auto& e = gd.path()[p];
      const bool even = p % 2 == 0;
      if (even != (e.tag == PathTag::original))
        throw ValidationError("originals must sit at even positions of P_u");
      if (e.tag == PathTag::appended && p != gd.path_length() - 1)
        throw ValidationError("appended vertex must be last");
      if (e.tag == PathTag::original) {
        if (e.g_vertex < lo || e.g_vertex >= hi || seen[e.g_vertex])
          throw ValidationError("P_u originals must enumerate S(u) once");
        seen[e.g_vertex] = 1;
      }
    }
    if (gd.path_length() > 0 && gd.path().back().tag != PathTag::appended)
      throw ValidationError("P_u must end with the appended vertex");
  }
}

GStar build_Gstar(const PartitionedGraph& g, const Constants& c) { return GStar(g, c); }

TreeLayout caterpillar_layout(const GStar& gs, const LinearOrder& ord) {
  auto pos = order_positions(ord, gs.part_count());
  (void)pos;
  std::vector<int> leaves;
  leaves.reserve(static_cast<std::size_t>(gs.vertex_count()));
  for (int u : ord) {
    auto [lo, hi] = gs.part_range(u);
    for (int v = lo; v < hi; ++v) leaves.push_back(v);
  }
  return caterpillar_from_order(leaves);
}

HybridTree HybridTree::from_layout(const TreeLayout& layout) {
  return HybridTree{layout.tree, layout.leaf_of};
}

std::vector<std::vector<int>> HybridTree::preimages() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(tree.size()));
  for (std::size_t v = 0; v < placement.size(); ++v) out[placement[v]].push_back(static_cast<int>(v));
  return out;
}

void HybridTree::validate(const GStar& gs) const {
  if (static_cast<int>(placement.size()) != gs.vertex_count())
    throw ValidationError("hybrid tree placement does not cover G*");
  if (tree.size() > 0 && !tree.is_tree()) throw ValidationError("hybrid tree is not a tree");
  if (tree.max_degree() > 3) throw ValidationError("hybrid tree is not subcubic");
  for (int node : placement)
    if (node < 0 || node >= tree.size()) throw ValidationError("placement outside the tree");
  auto pre = preimages();
  for (int t = 0; t < tree.size(); ++t) {
    if (pre[t].size() <= 1) continue;
    const int u = gs.part_of(pre[t].front());
    auto [lo, hi] = gs.part_range(u);
    if (static_cast<int>(pre[t].size()) != hi - lo || pre[t].front() != lo || pre[t].back() != hi - 1)
      throw ValidationError("node " + std::to_string(t) + " holds a partial gadget");
  }
}

std::pair<std::vector<int>, std::vector<int>> hybrid_cut(const HybridTree& ht, std::pair<int, int> edge) {
  return placement_cut(ht.tree, ht.placement, edge);
}

DefaultEdge find_default_edge(const GStar& gs, const HybridTree& ht, int u) {
  if (u < 0 || u >= gs.part_count()) throw ValidationError("unknown gadget " + std::to_string(u));
  auto [lo, hi] = gs.part_range(u);
  DefaultEdge out;
  if (hi == lo) throw ValidationError("gadget " + std::to_string(u) + " is empty");
  {
    const int node = ht.placement[lo];
    bool together = true;
    for (int v = lo; v < hi && together; ++v) together = ht.placement[v] == node;
    if (together) {
      int count = 0;
      for (int node_of : ht.placement) count += node_of == node;
      if (count == hi - lo) {
        out.node = node;
        return out;
      }
    }
  }
  const Gadget& gd = gs.gadget(u);
  const int b = gd.copies(), len = gd.path_length();
  const int nodes = ht.tree.size();
  // Per-node counts of each copy's vertices, accumulated over subtrees rooted at 0.
  std::vector<std::vector<int>> count(static_cast<std::size_t>(nodes), std::vector<int>(b, 0));
  for (int v = lo; v < hi; ++v) ++count[ht.placement[v]][gd.copy_of(v - lo)];
  auto parent = ht.tree.parents(0);
  auto bfs = ht.tree.bfs_order(0);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (parent[*it] >= 0)
      for (int i = 0; i < b; ++i) count[parent[*it]][i] += count[*it][i];
  for (int child : bfs) {
    const int p = parent[child];
    if (p < 0) continue;
    bool inside = false, outside = false;
    for (int i = 0; i < b; ++i) {
      inside |= count[child][i] == len;
      outside |= count[child][i] == 0;
    }
    if (inside && outside) {
      out.edge = {p, child};
      return out;
    }
  }
  throw ValidationError("no node holds gadget " + std::to_string(u) +
                        " and no edge has a whole copy of P_u on both sides");
}

GroupResult group_gadget(const GStar& gs, const HybridTree& ht, int u) {
  DefaultEdge d = find_default_edge(gs, ht, u);
  GroupResult r;
  if (d.node) {
    r.tree = ht;
    r.gadget_node = *d.node;
    for (auto e : ht.tree.edges()) r.correspondence.push_back({e, e});
    return r;
  }
  r.tree = ht;
  auto [x, y] = d.edge;
  r.tree.tree.remove_edge(x, y);
  const int t = r.tree.tree.add_node();
  r.tree.tree.add_edge(x, t);
  r.tree.tree.add_edge(t, y);
  auto [lo, hi] = gs.part_range(u);
  for (int v = lo; v < hi; ++v) r.tree.placement[v] = t;
  r.gadget_node = t;
  const std::pair<int, int> old{std::min(x, y), std::max(x, y)};
  for (auto e : r.tree.tree.edges())
    r.correspondence.push_back({e, (e.first == t || e.second == t) ? old : e});
  return r;
}

HybridTree group_all(const GStar& gs, const HybridTree& ht) {
  HybridTree cur = ht;
  for (int u = 0; u < gs.part_count(); ++u) {
    auto [lo, hi] = gs.part_range(u);
    if (lo == hi) continue;
    cur = group_gadget(gs, cur, u).tree;
  }
  return cur;
}

TreeMapping hybrid_to_tree_mapping(const GStar& gs, const HybridTree& ht) {
  const int nodes = ht.tree.size();
  std::vector<int> owner(static_cast<std::size_t>(nodes), -1);
  auto pre = ht.preimages();
  for (int t = 0; t < nodes; ++t) {
    if (pre[t].empty()) continue;
    const int u = gs.part_of(pre[t].front());
    auto [lo, hi] = gs.part_range(u);
    if (static_cast<int>(pre[t].size()) != hi - lo || pre[t].front() != lo || pre[t].back() != hi - 1)
      throw ValidationError("node " + std::to_string(t) + " does not hold a whole gadget");
    owner[t] = u;
  }
  for (int u = 0; u < gs.part_count(); ++u) {
    auto [lo, hi] = gs.part_range(u);
    if (lo == hi) throw ValidationError("empty gadget " + std::to_string(u) + " cannot be placed");
  }
  // Multi-source BFS: each empty node joins the first gadget region reaching it,
  // which is a valid sequence of contractions.
  std::vector<int> region = owner;
  std::deque<int> queue;
  for (int t = 0; t < nodes; ++t)
    if (owner[t] >= 0) queue.push_back(t);
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int x : ht.tree.neighbors(t))
      if (region[x] < 0) {
        region[x] = region[t];
        queue.push_back(x);
      }
  }
  TreeMapping m;
  m.tree = Tree(gs.part_count());
  m.placement.resize(static_cast<std::size_t>(gs.part_count()));
  for (int u = 0; u < gs.part_count(); ++u) m.placement[u] = u;
  for (auto [a, b] : ht.tree.edges()) {
    if (region[a] < 0 || region[b] < 0) throw ValidationError("hybrid tree holds no gadget");
    if (region[a] != region[b] && !m.tree.has_edge(region[a], region[b]))
      m.tree.add_edge(region[a], region[b]);
  }
  m.path = m.tree.is_path();
  m.validate(gs.part_count());
  return m;
}

TreeMapping project_mapping_to_G(const PartitionedGraph& g, const TreeMapping& m) {
  m.validate(g.part_count());
  return m;
}

}  // namespace mimred
