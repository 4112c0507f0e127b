#pragma once

#include <utility>
#include <vector>

#include "mimred/tree.hpp"

namespace mimred {

/// Vertices placed on tree nodes; each edge defines the cut between the
/// vertices on its two sides.
std::pair<std::vector<int>, std::vector<int>> placement_cut(const Tree& tree,
                                                            const std::vector<int>& placement,
                                                            std::pair<int, int> edge);

/// Branch decomposition: vertices on the leaves of a tree whose internal nodes
/// have degree 3. Linear layouts are caterpillars rooted at a degree-2 node.
struct TreeLayout {
  Tree tree;
  std::vector<int> leaf_of;  ///< vertex -> leaf node
  bool linear = false;
  int root = -1;  ///< degree-2 root of a linear layout

  void validate(int vertex_count) const;
  /// Vertices left to right for a linear layout.
  std::vector<int> linear_order() const;
};

/// Canonical caterpillar for an order v_1..v_N: spine nodes p_1..p_{N-1}
/// (ids 0..N-2), leaf l_j (id N-2+j) under p_j, with l_N also under p_{N-1}.
/// Rooted at p_1.
TreeLayout caterpillar_from_order(const std::vector<int>& order);

}  // namespace mimred
