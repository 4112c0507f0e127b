// Independent reference implementations used by the tests. Everything here is
// written from the definitions, without the library's search code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mimred/formula.hpp"
#include "mimred/graph.hpp"
#include "mimred/weighted_graph.hpp"

namespace oracle {

using mimred::Assignment;
using mimred::NaeFormula;
using mimred::Weight;
using mimred::WeightedGraph;

using Matrix = std::vector<std::vector<char>>;

inline bool nae(const NaeFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    int t = 0;
    for (int x : c) t += a[x - 1] ? 1 : 0;
    if (t == 0 || t == 3) return false;
  }
  return true;
}

/// All satisfying assignments, in counting order with variable 1 as the high bit.
inline std::vector<Assignment> all_solutions(const NaeFormula& f) {
  std::vector<Assignment> out;
  const int n = f.num_vars;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = (bits >> (n - 1 - i)) & 1;
    if (nae(f, a)) out.push_back(a);
  }
  return out;
}

/// Random formulas where every variable occurs four times in distinct-variable
/// clauses (each variable's four slots shuffled into triples, with rejection).
inline std::vector<NaeFormula> random_strict_formulas(int n, int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::set<std::vector<mimred::Clause>> seen;
  std::vector<NaeFormula> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < 100000) {
    ++attempts;
    std::vector<int> slots;
    for (int x = 1; x <= n; ++x)
      for (int k = 0; k < 4; ++k) slots.push_back(x);
    std::shuffle(slots.begin(), slots.end(), rng);
    NaeFormula f;
    f.num_vars = n;
    bool ok = true;
    for (std::size_t i = 0; i < slots.size(); i += 3) {
      mimred::Clause c{slots[i], slots[i + 1], slots[i + 2]};
      if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) ok = false;
      f.clauses.push_back(c);
    }
    if (!ok) continue;
    if (!seen.insert(f.clauses).second) continue;
    out.push_back(f);
  }
  return out;
}

inline Weight weight_between(const WeightedGraph& g, int u, int v) {
  for (const auto& e : g.edges())
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.weight;
  return 0;
}

/// max(left, right) for every vertex, straight from the edge list.
inline bool balancing(const WeightedGraph& g, const std::vector<int>& order, Weight t) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<Weight> left(order.size(), 0), right(order.size(), 0);
  for (const auto& e : g.edges()) {
    const int first = pos[e.u] < pos[e.v] ? e.u : e.v;
    const int second = first == e.u ? e.v : e.u;
    right[first] += e.weight;
    left[second] += e.weight;
  }
  for (std::size_t v = 0; v < order.size(); ++v)
    if (left[v] > t || right[v] > t) return false;
  return true;
}

/// Every order of the vertices, lexicographic.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline Matrix matrix_of(const mimred::GraphView& g) {
  const int n = g.vertex_count();
  Matrix m(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) m[u][v] = g.adjacent(u, v) ? 1 : 0;
  return m;
}

/// Largest set of A-B edges that is a matching where no other edge of the
/// graph joins two matched vertices across the cut (and, for `induced`, on
/// the same side too). Plain include/exclude recursion.
inline int max_cut_matching(const Matrix& adj, const std::vector<int>& A, const std::vector<int>& B,
                            bool induced, int cap = 1 << 30) {
  std::vector<std::pair<int, int>> edges;
  for (int a : A)
    for (int b : B)
      if (adj[a][b]) edges.emplace_back(a, b);
  std::vector<std::pair<int, int>> chosen;
  int best = 0;
  auto fits = [&](std::pair<int, int> e) {
    for (auto [a, b] : chosen) {
      if (a == e.first || b == e.second) return false;
      if (adj[a][e.second] || adj[e.first][b]) return false;
      if (induced && (adj[a][e.first] || adj[b][e.second])) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (best >= cap) return;
    if (chosen.size() + (edges.size() - i) <= static_cast<std::size_t>(best)) return;
    for (std::size_t k = i; k < edges.size(); ++k) {
      if (!fits(edges[k])) continue;
      chosen.push_back(edges[k]);
      go(k + 1);
      chosen.pop_back();
      if (best >= cap) return;
    }
  };
  go(0);
  return best;
}

/// Upper-induced matching of X: delete edges inside the complement, then an
/// induced matching between X and the complement.
inline int uim(const Matrix& adj, const std::vector<int>& X) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> in(n, 0);
  for (int x : X) in[x] = 1;
  Matrix cut = adj;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!in[v]) rest.push_back(v);
  for (int u : rest)
    for (int v : rest) cut[u][v] = 0;
  return max_cut_matching(cut, X, rest, true);
}

/// The step-2 graph written straight from its definition: blocks I(u,v) in
/// ascending (u,v), matching pairs by index, dummy bicliques between blocks of
/// disjoint edges. Returns (adjacency, kind matrix with 1=matching, 2=dummy).
struct NaiveG {
  int n = 0;
  std::vector<std::tuple<int, int, int, int>> blocks;  // u, v, first, size
  Matrix kind;
  std::vector<int> part;
};

inline NaiveG naive_partitioned(const WeightedGraph& h) {
  NaiveG g;
  std::vector<std::pair<int, int>> keys;
  for (const auto& e : h.edges()) {
    keys.emplace_back(e.u, e.v);
    keys.emplace_back(e.v, e.u);
  }
  std::sort(keys.begin(), keys.end());
  for (auto [u, v] : keys) {
    const int w = static_cast<int>(weight_between(h, u, v));
    g.blocks.emplace_back(u, v, g.n, w);
    for (int k = 0; k < w; ++k) g.part.push_back(u);
    g.n += w;
  }
  g.kind.assign(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v, f1, s1] : g.blocks)
    for (auto [x, y, f2, s2] : g.blocks) {
      std::set<int> e1{u, v}, e2{x, y};
      bool disjoint = true;
      for (int z : e1) disjoint &= !e2.count(z);
      if (u == y && v == x) {
        for (int k = 0; k < s1; ++k) g.kind[f1 + k][f2 + k] = 1;
      } else if (disjoint) {
        for (int i = 0; i < s1; ++i)
          for (int j = 0; j < s2; ++j) g.kind[f1 + i][f2 + j] = 2;
      }
    }
  return g;
}

/// Gadget adjacency from the definition: Q is the path through all copies,
/// and x, y in distinct copies are joined unless one lies in the closed Q-
/// neighbourhood of the other's copies. Q edges are always present.
inline Matrix naive_gadget(int len, int copies) {
  const int n = len * copies;
  Matrix q(n, std::vector<char>(n, 0));
  for (int v = 0; v + 1 < n; ++v) q[v][v + 1] = q[v + 1][v] = 1;
  auto closed_nbhd_of_copies = [&](int x) {
    std::set<int> s;
    for (int c = 0; c < copies; ++c) {
      const int y = c * len + x % len;
      s.insert(y);
      for (int z = 0; z < n; ++z)
        if (q[y][z]) s.insert(z);
    }
    return s;
  };
  std::vector<std::set<int>> closed(n);
  for (int x = 0; x < n; ++x) closed[x] = closed_nbhd_of_copies(x);
  Matrix m = q;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || x / len == y / len) continue;
      if (!closed[x].count(y) && !closed[y].count(x)) m[x][y] = 1;
    }
  return m;
}

/// (2L-5)!! for L >= 3; 1 for L <= 2.
inline std::uint64_t ternary_tree_count(int leaves) {
  std::uint64_t r = 1;
  for (int k = 2 * leaves - 5; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

/// Canonical form of a small graph (bitmask of the upper triangle minimised
/// over all relabellings).
inline std::uint32_t canonical(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::uint32_t best = ~0u;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (adj[p[i]][p[j]]) code |= 1u << bit;
    best = std::min(best, code);
  });
  return best;
}

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<mimred::Graph> nonisomorphic_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::uint32_t> seen;
  std::vector<mimred::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Matrix adj(n, std::vector<char>(n, 0));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) adj[pairs[k].first][pairs[k].second] = adj[pairs[k].second][pairs[k].first] = 1;
    if (!seen.insert(canonical(adj)).second) continue;
    mimred::Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(g);
  }
  return out;
}

/// Cut value of (S, V \ S) for S given as a bitmask: 0 = mim, 1 = sim, 2 = omim.
inline int mask_cut_value(const Matrix& adj, std::uint32_t S, int kind) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> A, B;
  for (int v = 0; v < n; ++v) (S >> v & 1 ? A : B).push_back(v);
  if (kind == 2) return std::min(uim(adj, A), uim(adj, B));
  return max_cut_matching(adj, A, B, kind == 1);
}

/// Width over all branch decompositions, by recursion on rooted subtrees:
/// f(S) = max(cut(S), min over splits of max(f(S1), f(S2))).
inline int general_width(const Matrix& adj, int kind) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> cut(full + 1), f(full + 1, 1 << 30);
  for (std::uint32_t S = 1; S < full; ++S) cut[S] = mask_cut_value(adj, S, kind);
  for (std::uint32_t S = 1; S < full; ++S) {
    if ((S & (S - 1)) == 0) {
      f[S] = cut[S];
      continue;
    }
    int best = 1 << 30;
    for (std::uint32_t S1 = (S - 1) & S; S1 > 0; S1 = (S1 - 1) & S)
      best = std::min(best, std::max(f[S1], f[S ^ S1]));
    f[S] = std::max(cut[S], best);
  }
  int best = 1 << 30;
  for (std::uint32_t S = 1; S < full; ++S)
    if (S & 1) best = std::min(best, std::max(f[S], f[full ^ S]));
  return best;
}

/// Width over all vertex orders, each scored by its prefix cuts.
inline int linear_width(const Matrix& adj, int kind) {
  const int n = static_cast<int>(adj.size());
  int best = 1 << 30;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    int worst = 0;
    std::uint32_t S = 0;
    for (int i = 0; i + 1 < n && worst < best; ++i) {
      S |= 1u << p[i];
      worst = std::max(worst, mask_cut_value(adj, S, kind));
    }
    best = std::min(best, worst);
  });
  return n <= 1 ? 0 : best;
}

inline mimred::Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  mimred::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
