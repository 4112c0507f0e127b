#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mimred/constants.hpp"
#include "mimred/graph.hpp"
#include "mimred/layout.hpp"
#include "mimred/step2.hpp"

namespace mimred {

enum class PathTag : std::uint8_t { original, subdivision, appended };

struct PathEntry {
  PathTag tag = PathTag::subdivision;
  int g_vertex = -1;  ///< vertex of G for originals
  friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

/// The subdivided path P_u: originals at even (0-based) positions, each
/// followed by a subdivision vertex; the last vertex is tagged appended.
std::vector<PathEntry> build_Pu(const PartitionedGraph& g, int u, const Constants& c);

/// G(u): b copies of P_u concatenated into Q_u, plus every edge between two
/// distinct copies except inside N_Q[Copies(.)], taken symmetrically.
/// Local ids are copy * |P_u| + position.
class Gadget {
 public:
  Gadget() = default;
  Gadget(int owner, std::vector<PathEntry> path, int copies);

  int owner() const { return owner_; }
  int copies() const { return b_; }
  int path_length() const { return static_cast<int>(path_.size()); }
  int size() const { return b_ * path_length(); }
  const std::vector<PathEntry>& path() const { return path_; }

  int local(int copy, int pos) const { return copy * path_length() + pos; }
  int copy_of(int x) const { return x / path_length(); }
  int position_of(int x) const { return x % path_length(); }

  bool adjacent(int x, int y) const;
  void neighbors(int x, std::vector<int>& out) const;
  Graph materialize() const;

 private:
  bool excluded(int i, int p, int j, int q) const;

  int owner_ = -1;
  std::vector<PathEntry> path_;
  int b_ = 1;
};

Gadget build_gadget(const PartitionedGraph& g, int u, const Constants& c);

struct StarVertex {
  int owner = -1;
  int copy = 0;
  int position = 0;
  PathTag tag = PathTag::subdivision;
  int g_vertex = -1;
};

/// G*: the gadgets G(u), one per vertex of H, laid out by ascending u, plus a
/// biclique between Copies(x) and Copies(y) for every edge xy of G.
/// Parts are the gadget vertex sets.
class GStar final : public PartitionView {
 public:
  GStar(const PartitionedGraph& g, const Constants& c);

  int vertex_count() const override { return n_; }
  bool adjacent(int x, int y) const override;
  EdgeKind edge_kind(int x, int y) const override;
  void neighbors(int v, std::vector<int>& out) const override;

  int part_count() const override { return static_cast<int>(gadgets_.size()); }
  std::pair<int, int> part_range(int u) const override { return {offset_[u], offset_[u + 1]}; }
  int part_of(int v) const override;

  const PartitionedGraph& base() const { return g_; }
  const Constants& constants() const { return c_; }
  const Gadget& gadget(int u) const { return gadgets_[u]; }
  StarVertex info(int v) const;
  int vertex_id(int owner, int copy, int position) const;
  /// The copies of G-vertex x, one per copy index.
  std::vector<int> copies_of_original(int x) const;
  /// Vertices of copy i of P_u.
  std::vector<int> copy_vertices(int u, int copy) const;

  std::uint64_t edge_count() const;
  /// Structural checks: sizes, path order, original coverage.
  void validate() const;

 private:
  PartitionedGraph g_;
  Constants c_;
  std::vector<Gadget> gadgets_;
  std::vector<int> offset_;
  std::vector<int> path_pos_;  ///< G-vertex -> position in its P_u
  int n_ = 0;
};

GStar build_Gstar(const PartitionedGraph& g, const Constants& c);

/// Caterpillar over G* whose leaves follow Q_{ord[0]}, Q_{ord[1]}, ...
TreeLayout caterpillar_layout(const GStar& gs, const LinearOrder& ord);

/// Tree whose nodes each hold a whole gadget or at most one vertex.
struct HybridTree {
  Tree tree;
  std::vector<int> placement;  ///< G* vertex -> node

  static HybridTree from_layout(const TreeLayout& layout);
  void validate(const GStar& gs) const;
  std::vector<std::vector<int>> preimages() const;
};

struct DefaultEdge {
  std::optional<int> node;         ///< node already holding V(G(u))
  std::pair<int, int> edge{-1, -1};
};

/// A node holding the whole gadget, else the first edge (BFS from node 0)
/// with a whole copy of P_u on each side. Throws ValidationError when none exists.
DefaultEdge find_default_edge(const GStar& gs, const HybridTree& ht, int u);

struct GroupResult {
  HybridTree tree;
  /// Edge of the new tree -> corresponding edge of the old one, in the order
  /// of the new tree's edges().
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> correspondence;
  int gadget_node = -1;
};

/// Subdivides the default edge and moves V(G(u)) onto the new node (identity
/// when the gadget is already grouped).
GroupResult group_gadget(const GStar& gs, const HybridTree& ht, int u);

/// Groups every gadget in ascending owner order.
HybridTree group_all(const GStar& gs, const HybridTree& ht);

/// Contracts empty nodes into neighbouring gadget nodes. Every node must hold
/// a whole gadget or nothing.
TreeMapping hybrid_to_tree_mapping(const GStar& gs, const HybridTree& ht);

/// Same tree with each gadget renamed to its part S(u).
TreeMapping project_mapping_to_G(const PartitionedGraph& g, const TreeMapping& m);

/// Cut of G* defined by a hybrid-tree edge.
std::pair<std::vector<int>, std::vector<int>> hybrid_cut(const HybridTree& ht, std::pair<int, int> edge);

}  // namespace mimred
