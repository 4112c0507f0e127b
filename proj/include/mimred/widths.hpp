#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "mimred/balancing.hpp"
#include "mimred/graph.hpp"
#include "mimred/layout.hpp"

namespace mimred {

enum class WidthKind { mim, sim, omim };

std::string_view width_kind_name(WidthKind k);
WidthKind width_kind_from_name(std::string_view name);

/// Value of one cut: mim, sim, or min(uim(A), uim(B)).
int cut_width_value(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B,
                    WidthKind kind, std::uint64_t budget = kDefaultSearchBudget);

struct LayoutValue {
  int value = 0;
  std::pair<int, int> worst_edge{-1, -1};
};

/// Maximum cut value over the layout's edges.
LayoutValue layout_value(const GraphView& g, const TreeLayout& layout, WidthKind kind,
                         std::uint64_t budget = kDefaultSearchBudget);

inline constexpr int kDefaultGeneralWidthCap = 8;
inline constexpr int kDefaultLinearWidthCap = 10;

struct WidthResult {
  int value = 0;
  TreeLayout witness;
  std::uint64_t layouts = 0;  ///< layouts (or DP states) examined
  std::uint64_t cuts = 0;     ///< distinct cuts evaluated
};

/// Exact width by exhaustive search: every ternary tree with labelled leaves
/// (general) or a subset DP over vertex orders (linear). The witness is the
/// first optimum in enumeration order; for linear layouts, the
/// lexicographically least optimal order. Throws ValidationError above `cap`.
WidthResult exact_width(const Graph& g, WidthKind kind, bool linear, int cap);
WidthResult exact_width(const Graph& g, WidthKind kind, bool linear);

/// Visits every ternary tree layout with `leaves` labelled leaves, built by
/// inserting leaf i into each edge of a layout on leaves 0..i-1. Returns the
/// number visited; `visit` returns false to stop.
std::uint64_t enumerate_ternary_layouts(int leaves,
                                        const std::function<bool(const TreeLayout&)>& visit);

}  // namespace mimred
