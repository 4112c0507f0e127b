#include "mimred/widths.hpp"

#include <algorithm>
#include <string>

#include "mimred/error.hpp"
#include "mimred/matching.hpp"

namespace mimred {

std::string_view width_kind_name(WidthKind k) {
  switch (k) {
    case WidthKind::mim: return "mim";
    case WidthKind::sim: return "sim";
    case WidthKind::omim: return "omim";
  }
  return "mim";
}

WidthKind width_kind_from_name(std::string_view name) {
  if (name == "mim") return WidthKind::mim;
  if (name == "sim") return WidthKind::sim;
  if (name == "omim") return WidthKind::omim;
  throw ValidationError("unknown width kind '" + std::string(name) + "'");
}

int cut_width_value(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B,
                    WidthKind kind, std::uint64_t budget) {
  switch (kind) {
    case WidthKind::mim:
      return cut_value(g, A, B, {MatchingKind::mim, std::nullopt, budget}).value;
    case WidthKind::sim:
      return cut_value(g, A, B, {MatchingKind::sim, std::nullopt, budget}).value;
    case WidthKind::omim:
      return std::min(uim(g, A, budget).value, uim(g, B, budget).value);
  }
  return 0;
}

LayoutValue layout_value(const GraphView& g, const TreeLayout& layout, WidthKind kind,
                         std::uint64_t budget) {
  layout.validate(g.vertex_count());
  LayoutValue out;
  for (auto e : layout.tree.edges()) {
    auto [A, B] = placement_cut(layout.tree, layout.leaf_of, e);
    const int v = cut_width_value(g, A, B, kind, budget);
    if (v > out.value || out.worst_edge.first < 0) {
      out.value = v;
      out.worst_edge = e;
    }
  }
  return out;
}

namespace {

std::vector<int> members(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

/// Cut values by side mask, computed on demand.
class CutMemo {
 public:
  CutMemo(const Graph& g, WidthKind kind)
      : g_(g), kind_(kind), n_(g.vertex_count()), memo_(std::size_t{1} << n_, -1) {}

  int operator()(std::uint32_t mask) {
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    if (mask & 1) mask = full & ~mask;  // both sides give the same value
    int& slot = memo_[mask];
    if (slot < 0) {
      slot = cut_width_value(g_, members(mask, n_), members(full & ~mask, n_), kind_);
      ++evaluated_;
    }
    return slot;
  }
  std::uint64_t evaluated() const { return evaluated_; }

 private:
  const Graph& g_;
  WidthKind kind_;
  int n_;
  std::vector<int> memo_;
  std::uint64_t evaluated_ = 0;
};

TreeLayout layout_from_edges(int leaves, int nodes, const std::vector<std::pair<int, int>>& edges) {
  TreeLayout lay;
  lay.tree = Tree(nodes);
  for (auto [a, b] : edges) lay.tree.add_edge(a, b);
  lay.leaf_of.resize(static_cast<std::size_t>(leaves));
  for (int v = 0; v < leaves; ++v) lay.leaf_of[v] = v;
  return lay;
}

}  // namespace

std::uint64_t enumerate_ternary_layouts(int leaves,
                                        const std::function<bool(const TreeLayout&)>& visit) {
  if (leaves < 0) throw ValidationError("negative leaf count");
  if (leaves <= 2) {
    std::vector<std::pair<int, int>> edges;
    if (leaves == 2) edges.emplace_back(0, 1);
    visit(layout_from_edges(leaves, leaves, edges));
    return 1;
  }
  // Leaves are nodes 0..L-1; internal nodes L, L+1, ... in insertion order.
  std::vector<std::pair<int, int>> edges{{0, leaves}, {1, leaves}, {2, leaves}};
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(int)> insert = [&](int next) {
    if (next == leaves) {
      ++visited;
      if (!visit(layout_from_edges(leaves, 2 * leaves - 2, edges))) stop = true;
      return;
    }
    const int s = leaves + (next - 2);
    const std::size_t m = edges.size();
    for (std::size_t i = 0; i < m && !stop; ++i) {
      auto [a, b] = edges[i];
      edges[i] = {a, s};
      edges.emplace_back(s, b);
      edges.emplace_back(next, s);
      insert(next + 1);
      edges.pop_back();
      edges.pop_back();
      edges[i] = {a, b};
    }
  };
  insert(3);
  return visited;
}

WidthResult exact_width(const Graph& g, WidthKind kind, bool linear) {
  return exact_width(g, kind, linear, linear ? kDefaultLinearWidthCap : kDefaultGeneralWidthCap);
}

WidthResult exact_width(const Graph& g, WidthKind kind, bool linear, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw ValidationError("graph has " + std::to_string(n) + " vertices, above the cap of " +
                          std::to_string(cap));
  if (n > 20) throw ValidationError("exact width supports at most 20 vertices");
  WidthResult out;
  CutMemo memo(g, kind);
  if (!linear) {
    bool first = true;
    out.layouts = enumerate_ternary_layouts(n, [&](const TreeLayout& lay) {
      int value = 0;
      for (auto e : lay.tree.edges()) {
        auto mask_nodes = lay.tree.side_mask(e.first, e.second);
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
          if (mask_nodes[lay.leaf_of[v]]) mask |= std::uint32_t{1} << v;
        value = std::max(value, memo(mask));
        if (!first && value >= out.value) break;
      }
      if (first || value < out.value) {
        out.value = value;
        out.witness = lay;
        first = false;
      }
      return true;
    });
    out.cuts = memo.evaluated();
    return out;
  }
  const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  std::vector<int> best(std::size_t{1} << n, 0);
  for (std::uint32_t s = full; s-- > 0;) {
    int b = -1;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      const std::uint32_t t = s | (std::uint32_t{1} << v);
      const int here = std::max(t == full ? 0 : memo(t), best[t]);
      if (b < 0 || here < b) b = here;
    }
    best[s] = b;
    ++out.layouts;
  }
  std::vector<int> order;
  std::uint32_t s = 0;
  while (s != full) {
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) continue;
      const std::uint32_t t = s | (std::uint32_t{1} << v);
      if (std::max(t == full ? 0 : memo(t), best[t]) == best[s]) {
        order.push_back(v);
        s = t;
        break;
      }
    }
  }
  int singleton = 0;
  for (int v = 0; v < n && n >= 2; ++v) singleton = std::max(singleton, memo(std::uint32_t{1} << v));
  out.value = n == 0 ? 0 : std::max(best[0], singleton);
  out.witness = caterpillar_from_order(order);
  out.cuts = memo.evaluated();
  return out;
}

}  // namespace mimred
