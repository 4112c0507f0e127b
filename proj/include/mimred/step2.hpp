#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mimred/balancing.hpp"
#include "mimred/graph.hpp"
#include "mimred/matching.hpp"
#include "mimred/tree.hpp"
#include "mimred/weighted_graph.hpp"

namespace mimred {

/// A graph whose vertex set is split into contiguous parts 0..part_count()-1.
class PartitionView : public GraphView {
 public:
  virtual int part_count() const = 0;
  /// Half-open id range [first, second) of a part.
  virtual std::pair<int, int> part_range(int p) const = 0;
  virtual int part_of(int v) const = 0;
  std::vector<int> part_vertices(int p) const;
};

/// Block I(u, v): a contiguous id range inside S(u) of size w(uv).
struct Block {
  int u = 0;
  int v = 0;
  int offset = 0;
  int size = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// The graph G built from a weighted graph H, with parts S(u) and blocks
/// I(u, v). Blocks are laid out by ascending (u, v), so S(u) is contiguous.
/// Adjacency is answered from the block structure:
///  - j-th vertex of I(u,v) ~ j-th vertex of I(v,u) (matching edge);
///  - I(u,v) x I(x,y) complete whenever {u,v} and {x,y} are disjoint edges (dummy).
class PartitionedGraph final : public PartitionView {
 public:
  PartitionedGraph() = default;
  explicit PartitionedGraph(const WeightedGraph& h);

  int vertex_count() const override { return n_; }
  bool adjacent(int x, int y) const override;
  EdgeKind edge_kind(int x, int y) const override;
  void neighbors(int v, std::vector<int>& out) const override;

  int part_count() const override { return h_.vertex_count(); }
  std::pair<int, int> part_range(int u) const override { return {part_start_[u], part_start_[u + 1]}; }
  int part_of(int v) const override { return blocks_[block_of(v)].u; }

  const WeightedGraph& base() const { return h_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Index into blocks() of the block holding vertex v.
  int block_of(int v) const;
  /// Index of I(u, v), or -1 when uv is not an edge of H.
  int block_index(int u, int v) const;
  /// Matching partner of v (the same position in the twin block).
  int partner(int v) const;

  std::uint64_t matching_edge_count() const;
  std::uint64_t dummy_edge_count() const;
  std::uint64_t edge_count() const { return matching_edge_count() + dummy_edge_count(); }

  /// Checks the partition, block sizes and twin-block symmetry in linear time.
  void validate() const;

 private:
  bool disjoint_edges(const Block& a, const Block& b) const {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
  }

  WeightedGraph h_;
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> part_start_;
  std::vector<int> twin_;  ///< block index of I(v,u) for I(u,v)
};

PartitionedGraph build_partitioned(const WeightedGraph& h);

/// Bijection from parts to the nodes of a tree.
struct TreeMapping {
  Tree tree;
  std::vector<int> placement;  ///< part -> node
  bool path = false;

  void validate(int part_count) const;
  /// Parts placed on each node.
  std::vector<int> part_at_node() const;
};

/// The cut defined by tree edge (x, y): parts on x's side form A.
std::pair<std::vector<int>, std::vector<int>> mapping_cut(const PartitionView& g,
                                                          const TreeMapping& m,
                                                          std::pair<int, int> edge);

struct MappingValue {
  int value = 0;
  bool at_least = false;
  std::pair<int, int> worst_edge{-1, -1};
  std::vector<int> edge_values;  ///< per tree edge, in Tree::edges() order
};

/// Maximum cut value over the tree edges. With a threshold, stops at the
/// first cut that reaches it.
MappingValue mapping_value(const PartitionView& g, const TreeMapping& m, const CutOptions& opt = {});

/// Path mapping placing S(ord[i]) on node i.
TreeMapping path_mapping_from_order(const PartitionView& g, const LinearOrder& ord);

/// Keeps the tree and places each vertex v of H where S(v) sits.
BalancingTree balancing_tree_from_mapping(const WeightedGraph& h, const PartitionView& g,
                                          const TreeMapping& m);

}  // namespace mimred
