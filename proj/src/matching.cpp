#include "mimred/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "mimred/error.hpp"

namespace mimred {
namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// First set index, or size().
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }
  std::size_t size() const { return size_; }

  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  void subtract(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w; w &= w - 1)
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

std::vector<char> sides(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B) {
  std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
  auto mark = [&](const std::vector<int>& s, char tag) {
    for (int v : s) {
      if (v < 0 || v >= g.vertex_count())
        throw ValidationError("cut vertex " + std::to_string(v) + " out of range");
      if (side[v] != 0) throw ValidationError("cut sides overlap at vertex " + std::to_string(v));
      side[v] = tag;
    }
  };
  mark(A, 1);
  mark(B, 2);
  return side;
}

bool passes(const GraphView& g, int u, int v, EdgeFilter filter) {
  switch (filter) {
    case EdgeFilter::all: return true;
    case EdgeFilter::matching_only: return g.edge_kind(u, v) == EdgeKind::matching;
    case EdgeFilter::dummy_only: return g.edge_kind(u, v) == EdgeKind::dummy;
  }
  return true;
}

/// Compatibility graph on cut edges: two edges can sit in the same matching.
struct Compat {
  std::vector<CutEdge> edges;
  std::vector<Bits> adj;
};

Compat build_compat(const GraphView& g, std::vector<CutEdge> edges, bool check_a, bool check_b) {
  const std::size_t k = edges.size();
  std::vector<Bits> adj(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto [a2, b2] = edges[j];
      if (a == a2 || b == b2) continue;
      if (g.adjacent(a, b2) || g.adjacent(a2, b)) continue;
      if (check_a && g.adjacent(a, a2)) continue;
      if (check_b && g.adjacent(b, b2)) continue;
      adj[i].set(j);
      adj[j].set(i);
    }
  }
  // Highest degree first helps the colouring bound.
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> deg(k);
  for (std::size_t i = 0; i < k; ++i) deg[i] = adj[i].count();
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
  std::vector<std::size_t> inv(k);
  for (std::size_t i = 0; i < k; ++i) inv[perm[i]] = i;
  Compat c;
  c.edges.resize(k);
  c.adj.assign(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i) {
    c.edges[i] = edges[perm[i]];
    adj[perm[i]].for_each([&](std::size_t j) { c.adj[i].set(inv[j]); });
  }
  return c;
}

class CliqueSearch {
 public:
  CliqueSearch(const Compat& c, std::optional<int> threshold, std::uint64_t budget)
      : c_(c), threshold_(threshold), budget_(budget) {}

  void run() {
    Bits all(c_.edges.size());
    for (std::size_t i = 0; i < c_.edges.size(); ++i) all.set(i);
    if (threshold_ && *threshold_ <= 0) {
      stop_ = true;
      return;
    }
    if (all.any()) expand(all);
  }

  int best() const { return static_cast<int>(best_.size()); }
  const std::vector<std::size_t>& best_set() const { return best_; }
  bool stopped() const { return stop_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(Bits p) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("cut search exceeded " + std::to_string(budget_) + " nodes");
    std::vector<std::size_t> order;
    std::vector<int> colour;
    {
      Bits uncoloured = p;
      int k = 0;
      while (uncoloured.any()) {
        ++k;
        Bits q = uncoloured;
        while (q.any()) {
          std::size_t v = q.first();
          q.reset(v);
          uncoloured.reset(v);
          q.subtract(c_.adj[v]);
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (static_cast<int>(current_.size()) + colour[i] <= best()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next = p & c_.adj[v];
      if (next.any()) {
        expand(next);
      } else if (current_.size() > best_.size()) {
        best_ = current_;
        if (threshold_ && best() >= *threshold_) stop_ = true;
      }
      current_.pop_back();
      if (stop_) return;
      p.reset(v);
    }
  }

  const Compat& c_;
  std::optional<int> threshold_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  std::vector<std::size_t> current_, best_;
};

CutValue search(const GraphView& g, std::vector<CutEdge> edges, bool check_a, bool check_b,
                std::optional<int> threshold, std::uint64_t budget) {
  Compat c = build_compat(g, std::move(edges), check_a, check_b);
  CliqueSearch s(c, threshold, budget);
  s.run();
  CutValue out;
  out.value = s.best();
  out.at_least = s.stopped();
  out.nodes = s.nodes();
  for (std::size_t i : s.best_set()) out.matching.push_back(c.edges[i]);
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

}  // namespace

std::vector<CutEdge> cut_edges(const GraphView& g, const std::vector<int>& A,
                               const std::vector<int>& B, EdgeFilter filter) {
  auto side = sides(g, A, B);
  std::vector<CutEdge> out;
  std::vector<int> nb;
  std::vector<int> sorted_a = A;
  std::sort(sorted_a.begin(), sorted_a.end());
  for (int a : sorted_a) {
    g.neighbors(a, nb);
    for (int b : nb)
      if (side[b] == 2 && passes(g, a, b, filter)) out.emplace_back(a, b);
  }
  return out;
}

CutValue cut_value(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B,
                   const CutOptions& opt) {
  const bool induced = opt.kind == MatchingKind::sim;
  return search(g, cut_edges(g, A, B, opt.filter), induced, induced, opt.threshold, opt.budget);
}

CutValue uim(const GraphView& g, const std::vector<int>& X, std::uint64_t budget) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : X) {
    if (v < 0 || v >= g.vertex_count())
      throw ValidationError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  std::vector<int> rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) rest.push_back(v);
  return search(g, cut_edges(g, X, rest), true, false, std::nullopt, budget);
}

bool is_cut_matching(const GraphView& g, const std::vector<int>& A, const std::vector<int>& B,
                     const std::vector<CutEdge>& m, MatchingKind kind) {
  auto side = sides(g, A, B);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto [a, b] = m[i];
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) return false;
    if (side[a] != 1 || side[b] != 2 || !g.adjacent(a, b)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const auto [a2, b2] = m[j];
      if (a == a2 || b == b2 || g.adjacent(a, b2) || g.adjacent(a2, b)) return false;
      if (kind == MatchingKind::sim && (g.adjacent(a, a2) || g.adjacent(b, b2))) return false;
    }
  }
  return true;
}

std::uint64_t enumerate_maximal_cut_matchings(
    const GraphView& g, const std::vector<int>& A, const std::vector<int>& B, MatchingKind kind,
    EdgeFilter filter, const std::function<bool(const std::vector<CutEdge>&)>& visit,
    std::uint64_t budget) {
  const bool induced = kind == MatchingKind::sim;
  Compat c = build_compat(g, cut_edges(g, A, B, filter), induced, induced);
  const std::size_t k = c.edges.size();
  std::uint64_t nodes = 0, visited = 0;
  bool stop = false;
  std::vector<std::size_t> r;
  std::function<void(Bits, Bits)> bk = [&](Bits p, Bits x) {
    if (++nodes > budget)
      throw BudgetExceeded("matching enumeration exceeded " + std::to_string(budget) + " nodes");
    if (!p.any() && !x.any()) {
      std::vector<CutEdge> m;
      for (std::size_t i : r) m.push_back(c.edges[i]);
      std::sort(m.begin(), m.end());
      ++visited;
      if (!visit(m)) stop = true;
      return;
    }
    // Pivot: vertex of P or X with most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      std::size_t d = (p & c.adj[u]).count();
      if (!have || d > best) {
        pivot = u;
        best = d;
        have = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bits candidates = p;
    candidates.subtract(c.adj[pivot]);
    std::vector<std::size_t> list;
    candidates.for_each([&](std::size_t v) { list.push_back(v); });
    for (std::size_t v : list) {
      r.push_back(v);
      bk(p & c.adj[v], x & c.adj[v]);
      r.pop_back();
      if (stop) return;
      p.reset(v);
      x.set(v);
    }
  };
  Bits p(k), x(k);
  for (std::size_t i = 0; i < k; ++i) p.set(i);
  bk(p, x);
  return visited;
}

}  // namespace mimred
