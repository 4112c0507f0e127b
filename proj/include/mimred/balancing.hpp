#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mimred/tree.hpp"
#include "mimred/weighted_graph.hpp"

namespace mimred {

/// Sum of incident edge weights.
Weight vertex_weight(const WeightedGraph& g, int v);

struct SideWeights {
  Weight left = 0;
  Weight right = 0;
  Weight delta() const { return left > right ? left : right; }
};

/// Weight of v's edges to earlier (left) and later (right) vertices of `order`.
SideWeights side_weights(const WeightedGraph& g, const LinearOrder& order, int v);

struct OrderCheck {
  bool ok = true;
  int violator = -1;       ///< first violating vertex along the order
  SideWeights weights{};   ///< its side weights
  explicit operator bool() const { return ok; }
};

/// Every vertex has left and right weight at most `threshold`.
OrderCheck check_balancing_order(const WeightedGraph& g, const LinearOrder& order,
                                 Weight threshold);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Optional precedence constraints for the order search: before[v] lists
/// vertices that must precede v.
using Precedence = std::vector<std::vector<int>>;

/// Depth-first search over prefixes, vertices tried in ascending id. A vertex
/// can be appended only when its left weight w.r.t. the prefix lies in
/// [weight - threshold, threshold]; prefixes known to be dead are memoized.
/// Returns the first order found, nullopt if none exists, and throws
/// BudgetExceeded after `budget` search nodes.
std::optional<LinearOrder> solve_balancing_order(const WeightedGraph& g, Weight threshold,
                                                 std::uint64_t budget = kDefaultSearchBudget);

/// Enumerates balancing orders in the solver's order; `visit` returns false to
/// stop. Returns the number of orders visited.
std::uint64_t enumerate_balancing_orders(
    const WeightedGraph& g, Weight threshold,
    const std::function<bool(const LinearOrder&)>& visit,
    std::uint64_t budget = kDefaultSearchBudget, const Precedence* precedence = nullptr);

/// Exact number of balancing orders (optionally respecting `precedence`), by
/// dynamic programming over placed sets. Requires at most 20 vertices.
std::uint64_t count_balancing_orders(const WeightedGraph& g, Weight threshold,
                                     const Precedence* precedence = nullptr);

/// Tree-shaped placement: vertex v sits on tree node placement[v].
struct BalancingTree {
  Tree tree;
  std::vector<int> placement;

  static BalancingTree path(const LinearOrder& order);
  void validate(int vertex_count) const;
};

struct TreeCheck {
  bool ok = true;
  int vertex = -1;
  std::pair<int, int> tree_edge{-1, -1};
  Weight cut_weight = 0;
  explicit operator bool() const { return ok; }
};

/// For every vertex v and every tree edge e at v's node, the weight of v's
/// edges crossing e is at most `threshold`.
TreeCheck check_balancing_tree(const WeightedGraph& g, const BalancingTree& bt,
                               Weight threshold);

inline constexpr int kDefaultTreeSolverCap = 8;

/// Exhaustive search over labeled trees on the vertex set (Prüfer sequences in
/// lexicographic order, identity placement). Every (tree, bijection) pair is
/// isomorphic to one of these. Throws BudgetExceeded above `cap` vertices.
std::optional<BalancingTree> solve_balancing_tree(const WeightedGraph& g, Weight threshold,
                                                  int cap = kDefaultTreeSolverCap);

}  // namespace mimred
