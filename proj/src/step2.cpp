#include "mimred/step2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mimred/error.hpp"

namespace mimred {

std::vector<int> PartitionView::part_vertices(int p) const {
  auto [lo, hi] = part_range(p);
  std::vector<int> out(static_cast<std::size_t>(hi - lo));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

PartitionedGraph::PartitionedGraph(const WeightedGraph& h) : h_(h) {
  const int parts = h.vertex_count();
  part_start_.assign(static_cast<std::size_t>(parts) + 1, 0);
  std::int64_t offset = 0;
  for (int u = 0; u < parts; ++u) {
    part_start_[u] = static_cast<int>(offset);
    auto nbs = h.neighbors(u);
    std::sort(nbs.begin(), nbs.end(),
              [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    for (const auto& nb : nbs) {
      if (nb.weight < 1) throw ValidationError("edge weights must be positive");
      blocks_.push_back(Block{u, nb.vertex, static_cast<int>(offset), static_cast<int>(nb.weight)});
      offset += nb.weight;
      if (offset > std::numeric_limits<int>::max())
        throw ValidationError("partitioned graph too large");
    }
  }
  part_start_[parts] = static_cast<int>(offset);
  n_ = static_cast<int>(offset);
  twin_.resize(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) twin_[i] = block_index(blocks_[i].v, blocks_[i].u);
}

int PartitionedGraph::block_of(int v) const {
  if (v < 0 || v >= n_) throw ValidationError("vertex id " + std::to_string(v) + " out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), v,
                             [](int x, const Block& b) { return x < b.offset; });
  return static_cast<int>(it - blocks_.begin()) - 1;
}

int PartitionedGraph::block_index(int u, int v) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), std::pair{u, v},
                             [](const Block& b, std::pair<int, int> key) {
                               return std::pair{b.u, b.v} < key;
                             });
  if (it == blocks_.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - blocks_.begin());
}

int PartitionedGraph::partner(int v) const {
  const int bi = block_of(v);
  const Block& b = blocks_[bi];
  return blocks_[twin_[bi]].offset + (v - b.offset);
}

bool PartitionedGraph::adjacent(int x, int y) const {
  const int bx = block_of(x), by = block_of(y);
  if (twin_[bx] == by) return x - blocks_[bx].offset == y - blocks_[by].offset;
  return disjoint_edges(blocks_[bx], blocks_[by]);
}

EdgeKind PartitionedGraph::edge_kind(int x, int y) const {
  return twin_[block_of(x)] == block_of(y) ? EdgeKind::matching : EdgeKind::dummy;
}

void PartitionedGraph::neighbors(int v, std::vector<int>& out) const {
  out.clear();
  const int bv = block_of(v);
  const Block& b = blocks_[bv];
  const int mate = partner(v);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& o = blocks_[i];
    if (static_cast<int>(i) == twin_[bv]) {
      out.push_back(mate);
    } else if (disjoint_edges(b, o)) {
      for (int k = 0; k < o.size; ++k) out.push_back(o.offset + k);
    }
  }
}

std::uint64_t PartitionedGraph::matching_edge_count() const {
  std::uint64_t total = 0;
  for (const auto& e : h_.edges()) total += static_cast<std::uint64_t>(e.weight);
  return total;
}

std::uint64_t PartitionedGraph::dummy_edge_count() const {
  // Pairs of disjoint H-edges: all pairs minus pairs sharing an endpoint
  // (H is simple, so two distinct edges share at most one endpoint).
  const auto& edges = h_.edges();
  std::uint64_t w_total = 0;
  std::uint64_t sum = 0, sum_sq = 0;
  for (const auto& e : edges) {
    w_total += static_cast<std::uint64_t>(e.weight);
    sum_sq += static_cast<std::uint64_t>(e.weight) * static_cast<std::uint64_t>(e.weight);
  }
  sum = static_cast<std::uint64_t>(w_total) * w_total;
  std::uint64_t all_pairs = (sum - sum_sq) / 2;
  std::uint64_t sharing = 0;
  for (int u = 0; u < h_.vertex_count(); ++u) {
    std::uint64_t s = 0, sq = 0;
    for (const auto& nb : h_.neighbors(u)) {
      s += static_cast<std::uint64_t>(nb.weight);
      sq += static_cast<std::uint64_t>(nb.weight) * static_cast<std::uint64_t>(nb.weight);
    }
    sharing += (s * s - sq) / 2;
  }
  // Each disjoint pair contributes four block pairs of w(e) w(f) edges.
  return 4 * (all_pairs - sharing);
}

void PartitionedGraph::validate() const {
  if (part_start_.size() != static_cast<std::size_t>(part_count()) + 1)
    throw ValidationError("part table size mismatch");
  int expected = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    if (b.offset != expected) throw ValidationError("blocks are not contiguous");
    if (i > 0 && std::pair{blocks_[i - 1].u, blocks_[i - 1].v} >= std::pair{b.u, b.v})
      throw ValidationError("blocks are not in ascending (u, v) order");
    auto w = h_.weight(b.u, b.v);
    if (!w || *w != b.size)
      throw ValidationError("block I(" + std::to_string(b.u) + "," + std::to_string(b.v) +
                            ") size does not match the edge weight");
    const int t = twin_[i];
    if (t < 0 || blocks_[t].u != b.v || blocks_[t].v != b.u || blocks_[t].size != b.size)
      throw ValidationError("twin block mismatch");
    expected += b.size;
  }
  if (expected != n_) throw ValidationError("vertex count mismatch");
  for (int u = 0; u < part_count(); ++u) {
    auto [lo, hi] = part_range(u);
    if (lo > hi) throw ValidationError("part ranges out of order");
    Weight total = 0;
    for (const auto& nb : h_.neighbors(u)) total += nb.weight;
    if (hi - lo != total) throw ValidationError("part size differs from vertex weight");
  }
  if (std::uint64_t(n_) != 2 * matching_edge_count())
    throw ValidationError("|V(G)| differs from twice the total weight");
}

PartitionedGraph build_partitioned(const WeightedGraph& h) { return PartitionedGraph(h); }

void TreeMapping::validate(int part_count) const {
  if (static_cast<int>(placement.size()) != part_count)
    throw ValidationError("mapping covers " + std::to_string(placement.size()) + " parts, expected " +
                          std::to_string(part_count));
  if (tree.size() != part_count) throw ValidationError("mapping tree size differs from part count");
  if (part_count > 0 && !tree.is_tree()) throw ValidationError("mapping tree is not a tree");
  std::vector<char> used(static_cast<std::size_t>(part_count), 0);
  for (int node : placement) {
    if (node < 0 || node >= part_count || used[node])
      throw ValidationError("mapping placement is not a bijection");
    used[node] = 1;
  }
  if (path && !tree.is_path()) throw ValidationError("path mapping on a non-path tree");
}

std::vector<int> TreeMapping::part_at_node() const {
  std::vector<int> out(placement.size(), -1);
  for (std::size_t p = 0; p < placement.size(); ++p) out[placement[p]] = static_cast<int>(p);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> mapping_cut(const PartitionView& g,
                                                          const TreeMapping& m,
                                                          std::pair<int, int> edge) {
  if (!m.tree.has_edge(edge.first, edge.second))
    throw ValidationError("not an edge of the mapping tree");
  auto mask = m.tree.side_mask(edge.first, edge.second);
  std::vector<int> A, B;
  for (int p = 0; p < g.part_count(); ++p) {
    auto [lo, hi] = g.part_range(p);
    auto& dst = mask[m.placement[p]] ? A : B;
    for (int v = lo; v < hi; ++v) dst.push_back(v);
  }
  return {std::move(A), std::move(B)};
}

MappingValue mapping_value(const PartitionView& g, const TreeMapping& m, const CutOptions& opt) {
  m.validate(g.part_count());
  MappingValue out;
  for (const auto& e : m.tree.edges()) {
    auto [A, B] = mapping_cut(g, m, e);
    CutValue cv = cut_value(g, A, B, opt);
    out.edge_values.push_back(cv.value);
    if (cv.value > out.value || out.worst_edge.first < 0) {
      out.value = cv.value;
      out.worst_edge = e;
    }
    if (cv.at_least) {
      out.at_least = true;
      out.value = cv.value;
      out.worst_edge = e;
      break;
    }
  }
  return out;
}

TreeMapping path_mapping_from_order(const PartitionView& g, const LinearOrder& ord) {
  auto pos = order_positions(ord, g.part_count());
  TreeMapping m;
  m.tree = Tree::path(g.part_count());
  m.placement = std::move(pos);
  m.path = true;
  return m;
}

BalancingTree balancing_tree_from_mapping(const WeightedGraph& h, const PartitionView& g,
                                          const TreeMapping& m) {
  if (h.vertex_count() != g.part_count())
    throw ValidationError("weighted graph and partition disagree on the vertex count");
  m.validate(g.part_count());
  BalancingTree bt{m.tree, m.placement};
  bt.validate(h.vertex_count());
  return bt;
}

}  // namespace mimred
