#include "mimred/balancing.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "mimred/error.hpp"

namespace mimred {

Weight vertex_weight(const WeightedGraph& g, int v) {
  Weight s = 0;
  for (const auto& nb : g.neighbors(v)) s += nb.weight;
  return s;
}

SideWeights side_weights(const WeightedGraph& g, const LinearOrder& order, int v) {
  auto pos = order_positions(order, g.vertex_count());
  SideWeights sw;
  for (const auto& nb : g.neighbors(v)) {
    if (pos[nb.vertex] < pos[v]) {
      sw.left += nb.weight;
    } else {
      sw.right += nb.weight;
    }
  }
  return sw;
}

OrderCheck check_balancing_order(const WeightedGraph& g, const LinearOrder& order,
                                 Weight threshold) {
  auto pos = order_positions(order, g.vertex_count());
  for (int v : order) {
    SideWeights sw;
    for (const auto& nb : g.neighbors(v)) {
      if (pos[nb.vertex] < pos[v]) {
        sw.left += nb.weight;
      } else {
        sw.right += nb.weight;
      }
    }
    if (sw.delta() > threshold) return {false, v, sw};
  }
  return {};
}

namespace {

class OrderSearch {
 public:
  OrderSearch(const WeightedGraph& g, Weight threshold, std::uint64_t budget,
              const Precedence* precedence)
      : g_(g),
        n_(g.vertex_count()),
        threshold_(threshold),
        budget_(budget),
        precedence_(precedence),
        placed_(n_, 0),
        left_(n_, 0),
        missing_preds_(n_, 0),
        weight_(n_, 0) {
    for (int v = 0; v < n_; ++v) weight_[v] = vertex_weight(g, v);
    if (precedence_) {
      if (static_cast<int>(precedence_->size()) != n_)
        throw ValidationError("precedence table size mismatch");
      successors_.resize(n_);
      for (int v = 0; v < n_; ++v)
        for (int u : (*precedence_)[v]) {
          ++missing_preds_[v];
          successors_[u].push_back(v);
        }
    }
    memo_enabled_ = n_ <= 64;
  }

  std::uint64_t run(const std::function<bool(const LinearOrder&)>& visit) {
    visit_ = &visit;
    prefix_.clear();
    found_ = 0;
    stop_ = false;
    dfs(0);
    return found_;
  }

 private:
  bool can_place(int v) const {
    if (placed_[v] || missing_preds_[v] != 0) return false;
    Weight left = left_[v];
    return left <= threshold_ && weight_[v] - left <= threshold_;
  }

  void place(int v) {
    placed_[v] = 1;
    set_ |= memo_enabled_ ? (std::uint64_t{1} << v) : 0;
    for (const auto& nb : g_.neighbors(v)) left_[nb.vertex] += nb.weight;
    if (precedence_)
      for (int s : successors_[v]) --missing_preds_[s];
    prefix_.push_back(v);
  }

  void unplace(int v) {
    prefix_.pop_back();
    if (precedence_)
      for (int s : successors_[v]) ++missing_preds_[s];
    for (const auto& nb : g_.neighbors(v)) left_[nb.vertex] -= nb.weight;
    set_ &= memo_enabled_ ? ~(std::uint64_t{1} << v) : ~std::uint64_t{0};
    placed_[v] = 0;
  }

  // Returns true when at least one completion was reported from this prefix.
  bool dfs(int depth) {
    if (depth == n_) {
      ++found_;
      if (!(*visit_)(prefix_)) stop_ = true;
      return true;
    }
    if (memo_enabled_ && dead_.count(set_)) return false;
    bool any = false;
    for (int v = 0; v < n_ && !stop_; ++v) {
      if (!can_place(v)) continue;
      if (++nodes_ > budget_)
        throw BudgetExceeded("balancing-order search exceeded " + std::to_string(budget_) +
                             " nodes");
      place(v);
      any |= dfs(depth + 1);
      unplace(v);
    }
    if (!any && !stop_ && memo_enabled_) dead_.insert(set_);
    return any;
  }

  const WeightedGraph& g_;
  int n_;
  Weight threshold_;
  std::uint64_t budget_;
  const Precedence* precedence_;
  std::vector<char> placed_;
  std::vector<Weight> left_;
  std::vector<int> missing_preds_;
  std::vector<std::vector<int>> successors_;
  std::vector<Weight> weight_;
  bool memo_enabled_ = false;
  std::uint64_t set_ = 0;
  std::unordered_set<std::uint64_t> dead_;
  LinearOrder prefix_;
  const std::function<bool(const LinearOrder&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
  bool stop_ = false;
};

}  // namespace

std::optional<LinearOrder> solve_balancing_order(const WeightedGraph& g, Weight threshold,
                                                 std::uint64_t budget) {
  std::optional<LinearOrder> result;
  OrderSearch search(g, threshold, budget, nullptr);
  search.run([&](const LinearOrder& ord) {
    result = ord;
    return false;
  });
  return result;
}

std::uint64_t enumerate_balancing_orders(const WeightedGraph& g, Weight threshold,
                                         const std::function<bool(const LinearOrder&)>& visit,
                                         std::uint64_t budget, const Precedence* precedence) {
  OrderSearch search(g, threshold, budget, precedence);
  return search.run(visit);
}

std::uint64_t count_balancing_orders(const WeightedGraph& g, Weight threshold,
                                     const Precedence* precedence) {
  const int n = g.vertex_count();
  if (n > 20) throw BudgetExceeded("order counting limited to 20 vertices");
  std::vector<std::uint32_t> adj_mask(n, 0);
  std::vector<std::uint32_t> pred_mask(n, 0);
  std::vector<Weight> weight(n);
  for (int v = 0; v < n; ++v) {
    weight[v] = vertex_weight(g, v);
    for (const auto& nb : g.neighbors(v)) adj_mask[v] |= 1u << nb.vertex;
    if (precedence)
      for (int u : (*precedence)[v]) pred_mask[v] |= 1u << u;
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  std::function<std::uint64_t(std::uint32_t)> count = [&](std::uint32_t set) -> std::uint64_t {
    if (set == full) return 1;
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) {
      std::uint32_t bit = 1u << v;
      if ((set & bit) || (pred_mask[v] & ~set)) continue;
      Weight left = 0;
      for (const auto& nb : g.neighbors(v))
        if (set & (1u << nb.vertex)) left += nb.weight;
      if (left > threshold || weight[v] - left > threshold) continue;
      total += count(set | bit);
    }
    memo.emplace(set, total);
    return total;
  };
  return count(0);
}

BalancingTree BalancingTree::path(const LinearOrder& order) {
  BalancingTree bt;
  bt.tree = Tree::path(static_cast<int>(order.size()));
  bt.placement.assign(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) bt.placement[order[i]] = static_cast<int>(i);
  return bt;
}

void BalancingTree::validate(int vertex_count) const {
  if (!tree.is_tree()) throw ValidationError("balancing tree is not a tree");
  if (tree.size() != vertex_count || static_cast<int>(placement.size()) != vertex_count)
    throw ValidationError("balancing tree size does not match the graph");
  std::vector<char> used(vertex_count, 0);
  for (int node : placement) {
    if (node < 0 || node >= vertex_count || used[node])
      throw ValidationError("balancing tree placement is not a bijection");
    used[node] = 1;
  }
}

TreeCheck check_balancing_tree(const WeightedGraph& g, const BalancingTree& bt,
                               Weight threshold) {
  const int n = g.vertex_count();
  bt.validate(n);
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[bt.placement[v]] = v;
  for (int v = 0; v < n; ++v) {
    int node = bt.placement[v];
    for (int other : bt.tree.neighbors(node)) {
      auto far = bt.tree.side_mask(other, node);
      Weight w = 0;
      for (const auto& nb : g.neighbors(v))
        if (far[bt.placement[nb.vertex]]) w += nb.weight;
      if (w > threshold) return {false, v, {node, other}, w};
    }
  }
  return {};
}

std::optional<BalancingTree> solve_balancing_tree(const WeightedGraph& g, Weight threshold,
                                                  int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw BudgetExceeded("tree search limited to " + std::to_string(cap) + " vertices, graph has " +
                         std::to_string(n));
  BalancingTree bt;
  bt.placement.resize(n);
  std::iota(bt.placement.begin(), bt.placement.end(), 0);
  if (n <= 2) {
    bt.tree = Tree::path(n);
    if (n == 0) return bt;
    if (check_balancing_tree(g, bt, threshold)) return bt;
    return std::nullopt;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    bt.tree = Tree::from_pruefer(seq);
    if (check_balancing_tree(g, bt, threshold)) return bt;
    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) break;
    ++seq[k];
  }
  return std::nullopt;
}

}  // namespace mimred
