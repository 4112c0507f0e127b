#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mimred/balancing.hpp"
#include "mimred/graph.hpp"

namespace mimred {

/// mim: induced in the bipartite graph G[A,B] (semi-induced).
/// sim: induced in G itself.
enum class MatchingKind { mim, sim };

enum class EdgeFilter { all, matching_only, dummy_only };

using CutEdge = std::pair<int, int>;  ///< (A endpoint, B endpoint)

struct CutOptions {
  MatchingKind kind = MatchingKind::mim;
  /// Stop as soon as a matching of this size is found.
  std::optional<int> threshold;
  std::uint64_t budget = kDefaultSearchBudget;
  EdgeFilter filter = EdgeFilter::all;
};

struct CutValue {
  int value = 0;
  /// The search stopped at the threshold; the true value is >= value.
  bool at_least = false;
  std::vector<CutEdge> matching;
  std::uint64_t nodes = 0;
};

/// Edges of G between A and B that pass `filter`, sorted.
std::vector<CutEdge> cut_edges(const GraphView& g, const std::vector<int>& A,
                               const std::vector<int>& B, EdgeFilter filter = EdgeFilter::all);

/// Maximum (semi-)induced matching between disjoint A and B. Branch and bound
/// over the compatibility graph of cut edges with a greedy colouring bound.
/// Throws BudgetExceeded after `budget` search nodes.
CutValue cut_value(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B,
                   const CutOptions& opt = {});

/// Upper-induced matching number of X: maximum induced matching between X and
/// its complement after deleting the edges inside the complement.
CutValue uim(const GraphView& g, const std::vector<int>& X,
             std::uint64_t budget = kDefaultSearchBudget);

/// Whether `m` is a matching of the requested kind between A and B.
bool is_cut_matching(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B,
                     const std::vector<CutEdge>& m, MatchingKind kind);

/// Visits every inclusion-maximal (semi-)induced matching between A and B made
/// of edges passing `filter` (Bron-Kerbosch with pivoting). `visit` returns
/// false to stop. Returns the number visited.
std::uint64_t enumerate_maximal_cut_matchings(
    const GraphView& g, const std::vector<int>& A, const std::vector<int>& B, MatchingKind kind,
    EdgeFilter filter, const std::function<bool(const std::vector<CutEdge>&)>& visit,
    std::uint64_t budget = kDefaultSearchBudget);

}  // namespace mimred
