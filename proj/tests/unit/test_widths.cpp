#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mimred/error.hpp"
#include "mimred/layout.hpp"
#include "mimred/step2.hpp"
#include "mimred/widths.hpp"
#include "oracles.hpp"

using namespace mimred;

namespace {

/// Every vertex its own part.
class Singletons final : public PartitionView {
 public:
  explicit Singletons(const Graph& g) : g_(g) {}
  int vertex_count() const override { return g_.vertex_count(); }
  bool adjacent(int u, int v) const override { return g_.adjacent(u, v); }
  void neighbors(int v, std::vector<int>& out) const override { g_.neighbors(v, out); }
  int part_count() const override { return g_.vertex_count(); }
  std::pair<int, int> part_range(int p) const override { return {p, p + 1}; }
  int part_of(int v) const override { return v; }

 private:
  const Graph& g_;
};

int oracle_kind(WidthKind k) { return k == WidthKind::mim ? 0 : k == WidthKind::sim ? 1 : 2; }

}  // namespace

TEST(LayoutValue, Examples) {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    EXPECT_EQ(layout_value(Graph::complete(n), caterpillar_from_order(ord), WidthKind::mim).value, 1);
    EXPECT_EQ(layout_value(Graph(n), caterpillar_from_order(ord), WidthKind::mim).value, 0);
  }
  EXPECT_EQ(layout_value(Graph::path(4), caterpillar_from_order({0, 1, 2, 3}), WidthKind::mim).value, 1);
  // Both endpoints first: the cut {0,3} carries an induced matching of size 2.
  EXPECT_EQ(layout_value(Graph::path(4), caterpillar_from_order({0, 3, 1, 2}), WidthKind::mim).value, 2);
}

TEST(LayoutValue, LinearMatchesSingletonPathMapping) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(8, 0.4, rng);
    std::vector<int> ord(8);
    std::iota(ord.begin(), ord.end(), 0);
    std::shuffle(ord.begin(), ord.end(), rng);
    Singletons s(g);
    for (auto kind : {MatchingKind::mim, MatchingKind::sim}) {
      const WidthKind wk = kind == MatchingKind::mim ? WidthKind::mim : WidthKind::sim;
      EXPECT_EQ(layout_value(g, caterpillar_from_order(ord), wk).value,
                mapping_value(s, path_mapping_from_order(s, ord), {kind}).value);
    }
  }
}

TEST(Caterpillar, CanonicalShape) {
  TreeLayout lay = caterpillar_from_order({3, 1, 0, 2});
  EXPECT_TRUE(lay.linear);
  EXPECT_EQ(lay.root, 0);
  EXPECT_NO_THROW(lay.validate(4));
  EXPECT_EQ(lay.linear_order(), (std::vector<int>{3, 1, 0, 2}));
  EXPECT_TRUE(lay.tree.has_edge(0, 1));
  EXPECT_TRUE(lay.tree.has_edge(1, 2));
  EXPECT_EQ(lay.leaf_of[3], 3);
  EXPECT_EQ(lay.leaf_of[2], 6);
  EXPECT_TRUE(lay.tree.has_edge(2, 6));
  EXPECT_TRUE(lay.tree.has_edge(2, 5));
  EXPECT_THROW(caterpillar_from_order({0, 0}), ValidationError);
}

TEST(TernaryLayouts, CountsMatchDoubleFactorial) {
  for (int L = 1; L <= 8; ++L) {
    std::set<std::set<std::vector<int>>> distinct;
    std::uint64_t n = enumerate_ternary_layouts(L, [&](const TreeLayout& lay) {
      EXPECT_NO_THROW(lay.validate(L));
      if (L <= 6) {
        // A layout is determined by its set of leaf bipartitions.
        std::set<std::vector<int>> splits;
        for (auto e : lay.tree.edges()) {
          auto [A, B] = placement_cut(lay.tree, lay.leaf_of, e);
          splits.insert(std::find(A.begin(), A.end(), 0) != A.end() ? B : A);
        }
        distinct.insert(splits);
      }
      return true;
    });
    EXPECT_EQ(n, oracle::ternary_tree_count(L)) << L;
    if (L <= 6) EXPECT_EQ(distinct.size(), n);
  }
  EXPECT_EQ(oracle::ternary_tree_count(8), 10395u);
}

TEST(ExactWidth, Cliques) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(exact_width(Graph::complete(n), WidthKind::mim, false).value, 1);
}

TEST(ExactWidth, SmallGoldens) {
  EXPECT_EQ(exact_width(Graph::complete(4), WidthKind::mim, false).value, 1);
  EXPECT_EQ(exact_width(Graph::cycle(5), WidthKind::mim, true).value,
            oracle::linear_width(oracle::matrix_of(Graph::cycle(5)), 0));
  EXPECT_EQ(exact_width(Graph::cycle(5), WidthKind::mim, true).value, 2);
  EXPECT_EQ(exact_width(Graph::path(4), WidthKind::mim, true).value, 1);
  EXPECT_EQ(exact_width(Graph(3), WidthKind::sim, false).value, 0);
}

TEST(ExactWidth, LinearWitnessIsLeastOptimalOrder) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = oracle::random_graph(6, 0.5, rng);
    auto adj = oracle::matrix_of(g);
    WidthResult r = exact_width(g, WidthKind::mim, true);
    std::vector<int> least;
    oracle::for_each_permutation(6, [&](const std::vector<int>& p) {
      if (!least.empty()) return;
      int worst = 0;
      std::uint32_t S = 0;
      for (int i = 0; i + 1 < 6; ++i) {
        S |= 1u << p[i];
        worst = std::max(worst, oracle::mask_cut_value(adj, S, 0));
      }
      if (worst == r.value) least = p;
    });
    EXPECT_EQ(r.witness.linear_order(), least);
    EXPECT_EQ(layout_value(g, r.witness, WidthKind::mim).value, r.value);
  }
}

TEST(ExactWidth, AgreesWithSubsetRecursion) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + trial % 4;
    Graph g = oracle::random_graph(n, 0.45, rng);
    auto adj = oracle::matrix_of(g);
    for (auto kind : {WidthKind::mim, WidthKind::sim, WidthKind::omim}) {
      WidthResult gen = exact_width(g, kind, false);
      EXPECT_EQ(gen.value, oracle::general_width(adj, oracle_kind(kind)));
      EXPECT_EQ(layout_value(g, gen.witness, kind).value, gen.value);
      EXPECT_EQ(exact_width(g, kind, true).value, oracle::linear_width(adj, oracle_kind(kind)));
    }
  }
}

TEST(ExactWidth, InequalityChainOnFiveVertexGraphs) {
  auto graphs = oracle::nonisomorphic_graphs(5);
  EXPECT_EQ(graphs.size(), 34u);
  for (const Graph& g : graphs) {
    const int sim = exact_width(g, WidthKind::sim, false).value;
    const int omim = exact_width(g, WidthKind::omim, false).value;
    const int mim = exact_width(g, WidthKind::mim, false).value;
    const int lmim = exact_width(g, WidthKind::mim, true).value;
    const int lsim = exact_width(g, WidthKind::sim, true).value;
    EXPECT_LE(sim, omim);
    EXPECT_LE(omim, mim);
    EXPECT_LE(mim, lmim);
    EXPECT_LE(sim, lsim);
  }
}

TEST(ExactWidth, CapIsEnforced) {
  EXPECT_THROW(exact_width(Graph::complete(4), WidthKind::mim, false, 3), ValidationError);
  EXPECT_THROW(exact_width(Graph::complete(9), WidthKind::mim, false), ValidationError);
  EXPECT_THROW(exact_width(Graph::complete(11), WidthKind::mim, true), ValidationError);
}

TEST(WidthKind, Names) {
  for (auto k : {WidthKind::mim, WidthKind::sim, WidthKind::omim})
    EXPECT_EQ(width_kind_from_name(width_kind_name(k)), k);
  EXPECT_THROW(width_kind_from_name("rank"), ValidationError);
}
