// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "mimred/balancing.hpp"
#include "mimred/cli.hpp"
#include "mimred/constants.hpp"
#include "mimred/error.hpp"
#include "mimred/io.hpp"
#include "mimred/layout.hpp"
#include "mimred/matching.hpp"
#include "mimred/step1.hpp"
#include "mimred/step2.hpp"
#include "mimred/step3.hpp"
#include "mimred/widths.hpp"
#include "oracles.hpp"

using namespace mimred;
namespace fs = std::filesystem;

namespace {

/// Thrown by require() with the reason a criterion failed.
struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(const std::string& name, double limit_s, const std::function<std::string()>& body) {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.why;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double dt = seconds_since(t0);
  if (ok && limit_s > 0 && dt > limit_s) {
    ok = false;
    detail += "; took longer than " + std::to_string(static_cast<int>(limit_s)) + " s";
  }
  if (!ok) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ", " << dt << " s)";
  std::cout << line.str() << std::endl;
}

NaeFormula four_copies() { return NaeFormula{3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}; }

/// Strict satisfiable instances: the only n = 3 formula, then n = 6 ones.
std::vector<NaeFormula> satisfiable_instances(int want) {
  std::vector<NaeFormula> out{four_copies()};
  for (const auto& f : oracle::random_strict_formulas(6, 200, 2024)) {
    if (static_cast<int>(out.size()) >= want) break;
    if (brute_force_nae(f)) out.push_back(f);
  }
  return out;
}

struct Witnessed {
  NaeFormula f;
  Constants c;
  HInstance h;
  LinearOrder order;
};

std::vector<Witnessed>& witnessed() {
  static std::vector<Witnessed> all;
  return all;
}

WeightedGraph random_toy_h(std::mt19937& rng, Weight max_total) {
  for (;;) {
    const int n = 3 + static_cast<int>(rng() % 4);
    WeightedGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) h.add_edge(u, v, 1 + static_cast<Weight>(rng() % 3));
    if (h.edge_count() >= 2 && h.total_weight() <= max_total) return h;
  }
}

bool precedes(const std::vector<int>& pos, const std::vector<int>& A, const std::vector<int>& B) {
  for (int a : A)
    for (int b : B)
      if (pos[a] > pos[b]) return false;
  return true;
}

int sim_of(const GraphView& g, const std::pair<std::vector<int>, std::vector<int>>& cut) {
  return cut_value(g, cut.first, cut.second, {MatchingKind::sim}).value;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mimred");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
  criterion("witness soundness", 10, [] {
    auto formulas = satisfiable_instances(24);
    require(formulas.size() >= 20, "only " + std::to_string(formulas.size()) + " satisfiable instances");
    int checked = 0;
    for (const Constants& c : {small_profile(), paper_profile()})
      for (const auto& f : formulas) {
        auto a = brute_force_nae(f);
        require(a.has_value(), "brute force lost a solution");
        HInstance h = build_H(f, c);
        LinearOrder ord = witness_order(f, h, *a);
        require(check_balancing_order(h.graph, ord, c.tau).ok, "library checker rejects a witness");
        require(oracle::balancing(h.graph, ord, c.tau), "edge-list checker rejects a witness");
        witnessed().push_back({f, c, std::move(h), std::move(ord)});
        ++checked;
      }
    return std::to_string(formulas.size()) + " instances x 2 profiles, " + std::to_string(checked) +
           " witnesses balanced at tau";
  });

  criterion("decode round trip", 0, [] {
    require(!witnessed().empty(), "no witnesses from the previous criterion");
    for (const auto& w : witnessed()) {
      Assignment a = decode_assignment(w.f, w.h, w.order);
      require(oracle::nae(w.f, a), "decoded assignment is not NAE-satisfying");
      LinearOrder rev(w.order.rbegin(), w.order.rend());
      Assignment b = decode_assignment(w.f, w.h, rev);
      require(oracle::nae(w.f, b) && b == complement(a), "reversed witness does not decode to the complement");
    }
    return std::to_string(witnessed().size()) + " witnesses and their reversals";
  });

  criterion("bottleneck order structure", 0, [] {
    std::uint64_t orders = 0;
    int shapes = 0;
    for (const Constants& c : {unit_constants(small_profile()), small_profile()})
      for (int k = 1; k <= 3; ++k) {
        const Weight lo = c.gamma + 1, hi = c.tau - c.gamma - 1;
        for (const std::vector<Weight>& ws : {std::vector<Weight>{lo, hi, lo}, std::vector<Weight>{hi, lo, (lo + hi) / 2}}) {
          WeightedGraph g(k);
          std::vector<Attachment> terms;
          for (int i = 0; i < k; ++i) terms.emplace_back(i, ws[i]);
          auto b = build_bottleneck(g, terms, c);
          ++shapes;
          std::uint64_t here = 0;
          oracle::for_each_permutation(g.vertex_count(), [&](const std::vector<int>& p) {
            if (!oracle::balancing(g, p, c.tau + c.gamma)) return;
            ++here;
            auto pos = order_positions(p, g.vertex_count());
            std::vector<int> spine;
            for (int i = 0; i < k; ++i) {
              spine.push_back(b.spine_a[i]);
              spine.push_back(b.spine_b[i]);
            }
            const bool fwd = pos[b.spine_a.back()] < pos[b.root()];
            for (std::size_t i = 0; i + 1 < spine.size(); ++i)
              require(fwd == (pos[spine[i]] < pos[spine[i + 1]]), "spine out of order");
            for (int i = 0; i < k; ++i)
              require(fwd == (pos[i] < pos[b.spine_a[i]]), "terminal on the wrong side of its a_i");
          });
          require(here > 0, "no balancing order at all");
          orders += here;
        }
      }
    return std::to_string(shapes) + " bottlenecks, " + std::to_string(orders) + " balancing orders enumerated";
  });

  criterion("forcing the terminal-set order", 0, [] {
    const Constants c = small_profile();
    WeightedGraph g(3);
    auto seq = build_bottleneck_sequence(g, {{0, c.tau - c.lambda}}, {{1, c.tau - 2 * c.lambda}},
                                         {{2, c.tau - c.lambda}}, c);
    std::uint64_t seen = 0;
    enumerate_balancing_orders(
        g, c.tau + c.gamma,
        [&](const LinearOrder& o) {
          auto pos = order_positions(o, g.vertex_count());
          const auto& S = seq.sets;
          const bool fwd = precedes(pos, S[0], S[1]) && precedes(pos, S[1], S[2]);
          const bool bwd = precedes(pos, S[2], S[1]) && precedes(pos, S[1], S[0]);
          require(fwd || bwd, "an order mixes the terminal sets");
          require(oracle::balancing(g, o, c.tau + c.gamma), "solver returned a non-balancing order");
          return ++seen < 1000;
        },
        10'000'000);
    require(seen >= 100, "only " + std::to_string(seen) + " orders enumerated");
    return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(seen) + " orders checked";
  });

  criterion("saturation", 0, [] {
    require(!witnessed().empty(), "no instances");
    for (const auto& w : witnessed()) {
      const auto& c = w.c;
      int low = 0;
      for (int v = 0; v < w.h.graph.vertex_count(); ++v) {
        Weight s = 0;
        for (const auto& e : w.h.graph.edges())
          if (e.u == v || e.v == v) s += e.weight;
        if (s < c.tau + c.gamma + 1) {
          ++low;
          require(s == c.tau, "low vertex of weight " + std::to_string(s));
        }
      }
      require(low == 2, std::to_string(low) + " low vertices");
    }
    return std::to_string(witnessed().size()) + " graphs, two weight-tau vertices each";
  });

  criterion("step-2 cut structure", 0, [] {
    std::mt19937 rng(314);
    int instances = 0, cuts = 0, matchings = 0, searches = 0;
    while (instances < 40) {
      WeightedGraph h = random_toy_h(rng, 30);
      PartitionedGraph g = build_partitioned(h);
      require(g.vertex_count() <= 60, "instance too large");
      ++instances;
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<char> inA(g.part_count());
        std::vector<int> A, B;
        for (int u = 0; u < g.part_count(); ++u) {
          inA[u] = rng() & 1;
          for (int v : g.part_vertices(u)) (inA[u] ? A : B).push_back(v);
        }
        ++cuts;
        for (const Block& p : g.blocks())
          for (const Block& q : g.blocks()) {
            if (!inA[p.u] || inA[q.u]) continue;
            bool dummy = false;
            for (int i = 0; i < p.size && !dummy; ++i)
              for (int j = 0; j < q.size && !dummy; ++j)
                dummy = g.adjacent(p.offset + i, q.offset + j) &&
                        g.edge_kind(p.offset + i, q.offset + j) == EdgeKind::dummy;
            if (!dummy) require(p.u == q.v || p.v == q.u || p.v == q.v, "dummy-free block pair without a shared endpoint");
          }
        enumerate_maximal_cut_matchings(g, A, B, MatchingKind::mim, EdgeFilter::matching_only,
                                        [&](const std::vector<CutEdge>& m) {
          ++matchings;
          bool same_a = true, same_b = true;
          for (const auto& [a, b] : m) {
            same_a &= g.part_of(a) == g.part_of(m.front().first);
            same_b &= g.part_of(b) == g.part_of(m.front().second);
          }
          require(same_a || same_b, "matching-edge matching spread over several parts");
          return true;
        });
        for (int u = 0; u < g.part_count(); ++u) {
          if (!inA[u] || g.part_vertices(u).empty()) continue;
          CutOptions opt;
          opt.filter = EdgeFilter::dummy_only;
          opt.threshold = 7;
          CutValue cv = cut_value(g, g.part_vertices(u), B, opt);
          ++searches;
          require(!cv.at_least && cv.value <= 6, "dummy matching of size 7 anchored in one part");
        }
      }
    }
    return std::to_string(instances) + " graphs, " + std::to_string(cuts) + " cuts, " +
           std::to_string(matchings) + " maximal matchings, " + std::to_string(searches) + " anchored searches";
  });

  criterion("path-mapping bound", 60, [] {
    const Constants c = small_profile();
    std::mt19937 rng(271);
    int worst_gap = -1 << 30, done = 0;
    while (done < 25) {
      WeightedGraph h = random_toy_h(rng, 30);
      PartitionedGraph g = build_partitioned(h);
      auto ord = solve_balancing_order(h, c.tau);
      require(ord.has_value(), "toy graph without a tau-balancing order");
      TreeMapping m = path_mapping_from_order(g, *ord);
      CutOptions opt;
      opt.threshold = static_cast<int>(c.tau) + 51;
      MappingValue mv = mapping_value(g, m, opt);
      require(!mv.at_least && mv.value <= c.tau + 50, "mim value above tau + 50");
      // Tighter form: the order's own balancing threshold t.
      Weight t = 0;
      for (int v = 0; v < h.vertex_count(); ++v) t = std::max(t, side_weights(h, *ord, v).delta());
      MappingValue exact = mapping_value(g, m, {MatchingKind::mim});
      require(exact.value <= t + 50, "mim value above t + 50");
      for (const auto& e : m.tree.edges()) {
        auto [A, B] = mapping_cut(g, m, e);
        CutOptions mo;
        mo.filter = EdgeFilter::matching_only;
        require(cut_value(g, A, B, mo).value <= t, "more than t matching edges in a semi-induced matching");
      }
      worst_gap = std::max(worst_gap, exact.value - static_cast<int>(t));
      ++done;
    }
    return std::to_string(done) + " toy graphs, max (mim value - t) = " + std::to_string(worst_gap);
  });

  criterion("gadget cut bound", 60, [] {
    WeightedGraph h(4);
    for (int leaf = 1; leaf <= 3; ++leaf) h.add_edge(0, leaf, 3);
    PartitionedGraph g = build_partitioned(h);
    GStar gs = build_Gstar(g, small_profile(3));
    const Gadget& gd = gs.gadget(0);
    require(gd.size() == 54, "gadget has " + std::to_string(gd.size()) + " vertices");
    Graph m = gd.materialize();
    std::vector<int> ord(gd.size());
    std::iota(ord.begin(), ord.end(), 0);
    TreeLayout lay = caterpillar_from_order(ord);
    int worst = 0;
    for (auto e : lay.tree.edges()) {
      auto [A, B] = placement_cut(lay.tree, lay.leaf_of, e);
      CutOptions opt;
      opt.threshold = 8;
      CutValue cv = cut_value(m, A, B, opt);
      require(!cv.at_least, "cut with an induced matching of size 8");
      worst = std::max(worst, cv.value);
    }
    require(worst <= 7, "cut value above 7");
    return "54 vertices, " + std::to_string(lay.tree.edge_count()) + " cuts, max mim " + std::to_string(worst);
  });

  criterion("grouping monotonicity and projection", 0, [] {
    WeightedGraph one(2);
    one.add_edge(0, 1, 3);
    WeightedGraph two(3);
    two.add_edge(0, 1, 3);
    two.add_edge(1, 2, 3);
    int compared = 0;
    std::string values;
    for (const WeightedGraph& h : {one, two}) {
      PartitionedGraph g = build_partitioned(h);
      GStar gs = build_Gstar(g, small_profile(3));
      LinearOrder ord(gs.part_count());
      std::iota(ord.begin(), ord.end(), 0);
      HybridTree cur = HybridTree::from_layout(caterpillar_layout(gs, ord));
      int hybrid_value = 0;
      for (int u = 0; u < gs.part_count(); ++u) {
        GroupResult r = group_gadget(gs, cur, u);
        r.tree.validate(gs);
        for (const auto& [now, before] : r.correspondence) {
          require(sim_of(gs, hybrid_cut(r.tree, now)) <= sim_of(gs, hybrid_cut(cur, before)),
                  "grouping raised a corresponding cut");
          ++compared;
        }
        cur = r.tree;
      }
      for (auto e : cur.tree.edges()) hybrid_value = std::max(hybrid_value, sim_of(gs, hybrid_cut(cur, e)));
      TreeMapping star = hybrid_to_tree_mapping(gs, cur);
      TreeMapping proj = project_mapping_to_G(g, star);
      proj.validate(g.part_count());
      const int in_g = mapping_value(g, proj, {MatchingKind::sim}).value;
      require(in_g <= hybrid_value, "projected mapping has a larger sim value");
      values += (values.empty() ? "" : "; ") + std::to_string(gs.part_count()) + " gadgets: G " +
                std::to_string(in_g) + " <= hybrid " + std::to_string(hybrid_value);
    }
    return std::to_string(compared) + " edge pairs compared, " + values;
  });

  criterion("width oracle sanity", 300, [] {
    for (int n = 2; n <= 8; ++n)
      require(exact_width(Graph::complete(n), WidthKind::mim, false).value == 1, "K_n mim-width is not 1");
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    int graphs = 0;
    for (int n = 0; n <= 6; ++n) {
      auto all = oracle::nonisomorphic_graphs(n);
      require(all.size() == expected[n], "wrong number of graphs on " + std::to_string(n) + " vertices");
      for (const Graph& g : all) {
        const int sim = exact_width(g, WidthKind::sim, false).value;
        const int omim = exact_width(g, WidthKind::omim, false).value;
        const int mim = exact_width(g, WidthKind::mim, false).value;
        const int lmim = exact_width(g, WidthKind::mim, true).value;
        const int lsim = exact_width(g, WidthKind::sim, true).value;
        require(sim <= omim && omim <= mim && mim <= lmim && sim <= lsim, "width chain violated");
        ++graphs;
      }
    }
    for (int L = 3; L <= 8; ++L)
      require(enumerate_ternary_layouts(L, [](const TreeLayout&) { return true; }) == oracle::ternary_tree_count(L),
              "layout count differs at L = " + std::to_string(L));
    return std::to_string(graphs) + " graphs on <= 6 vertices, K_2..K_8, layout counts for L <= 8";
  });

  criterion("pipeline smoke", 60, [] {
    const fs::path base = fs::temp_directory_path() / ("mimred-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(base / "a");
    fs::create_directories(base / "b");
    const std::string cnf = (base / "four_copies.cnf").string();
    std::ofstream(cnf) << to_dimacs(four_copies());
    std::string detail;
    try {
      for (const char* run : {"a", "b"})
        require(run_cli({"reduce", "all", "--profile", "small", "-i", cnf, "-o", (base / run).string()}) == 0,
                "reduce all failed");
      for (const char* name : {"H.json", "G.json", "Gstar.json"}) {
        const std::string a = slurp((base / "a" / name).string());
        require(!a.empty() && a == slurp((base / "b" / name).string()), std::string(name) + " differs between runs");
      }
      auto [f, h] = io::h_instance_from_json(io::read_json_file((base / "a" / "H.json").string()));
      require(check_balancing_order(h.graph, witness_order(f, h, *brute_force_nae(f)), h.constants.tau).ok,
              "reloaded H has no witness");
      PartitionedGraph g = io::partitioned_from_json(io::read_json_file((base / "a" / "G.json").string()));
      g.validate();
      require(g.vertex_count() == 2 * h.graph.total_weight(), "|V(G)| differs from twice the weight of H");
      GStar gs = io::gstar_from_json(io::read_json_file((base / "a" / "Gstar.json").string()));
      gs.validate();
      require(gs.vertex_count() == 2 * 3 * g.vertex_count(), "|V(G*)| differs from 2b|V(G)|");
      detail = "|V(H)| = " + std::to_string(h.graph.vertex_count()) + ", |V(G)| = " +
               std::to_string(g.vertex_count()) + ", |V(G*)| = " + std::to_string(gs.vertex_count()) +
               ", byte-identical reruns";
    } catch (...) {
      fs::remove_all(base);
      throw;
    }
    fs::remove_all(base);
    return detail;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
