#include "mimred/step1.hpp"

#include <algorithm>
#include <set>

#include "mimred/balancing.hpp"
#include "mimred/error.hpp"

namespace mimred {

LinearOrder BottleneckHandle::direct_order() const {
  LinearOrder order;
  for (const auto& [v, w] : terminals) order.push_back(v);
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < spine_a.size(); ++i) {
    order.push_back(spine_a[i]);
    order.push_back(spine_b[i]);
  }
  return order;
}

LinearOrder BottleneckHandle::reverse_order() const {
  auto order = direct_order();
  std::reverse(order.begin(), order.end());
  return order;
}

BottleneckHandle build_bottleneck(WeightedGraph& g, const std::vector<Attachment>& terminals,
                                  const Constants& c, const std::string& label,
                                  std::optional<int> shared_root) {
  if (terminals.empty()) throw ValidationError("bottleneck needs at least one terminal");
  for (const auto& [v, w] : terminals) {
    if (v < 0 || v >= g.vertex_count())
      throw ValidationError("bottleneck terminal " + std::to_string(v) + " not in graph");
    if (w < c.gamma + 1 || w > c.tau - c.gamma - 1)
      throw ValidationError("attachment weight " + std::to_string(w) + " outside [" +
                            std::to_string(c.gamma + 1) + ", " +
                            std::to_string(c.tau - c.gamma - 1) + "]");
  }
  BottleneckHandle h;
  h.terminals = terminals;
  const int k = static_cast<int>(terminals.size());
  for (int i = 0; i < k; ++i) {
    const std::string idx = std::to_string(i + 1);
    h.spine_a.push_back(g.add_vertex(label + ".a" + idx, Role::spine_a));
    if (i == k - 1 && shared_root) {
      h.spine_b.push_back(*shared_root);
    } else {
      h.spine_b.push_back(g.add_vertex(label + ".b" + idx, i == k - 1 ? Role::root : Role::spine_b));
    }
  }
  for (int i = 0; i < k; ++i) {
    g.add_edge(h.spine_a[i], h.spine_b[i], c.tau);
    if (i + 1 < k) g.add_edge(h.spine_b[i], h.spine_a[i + 1], c.gamma + 1);
    g.add_edge(terminals[i].first, h.spine_a[i], terminals[i].second);
  }
  return h;
}

std::vector<int> BottleneckSequence::vertices() const {
  std::set<int> all;
  for (const auto* b : {&b1_plus, &b2_minus, &b2_plus, &b3_minus}) {
    for (const auto& [v, w] : b->terminals) all.insert(v);
    all.insert(b->spine_a.begin(), b->spine_a.end());
    all.insert(b->spine_b.begin(), b->spine_b.end());
  }
  return {all.begin(), all.end()};
}

BottleneckSequence build_bottleneck_sequence(WeightedGraph& g, const std::vector<Attachment>& s1,
                                             const std::vector<Attachment>& s2,
                                             const std::vector<Attachment>& s3,
                                             const Constants& c) {
  std::set<int> seen;
  for (const auto* set : {&s1, &s2, &s3})
    for (const auto& [v, w] : *set) {
      if (v < 0 || v >= g.vertex_count())
        throw ValidationError("terminal " + std::to_string(v) + " not in graph");
      if (!seen.insert(v).second)
        throw ValidationError("terminal sets overlap at vertex " + std::to_string(v));
    }
  BottleneckSequence seq;
  for (int i = 0; i < 3; ++i)
    seq.s[i] = g.add_vertex("s" + std::to_string(i + 1), Role::s_terminal);
  auto with_first = [&](int i, const std::vector<Attachment>& set) {
    std::vector<Attachment> out{{seq.s[i], c.gamma + 1}};
    out.insert(out.end(), set.begin(), set.end());
    return out;
  };
  seq.b1_plus = build_bottleneck(g, with_first(0, s1), c, "B1+");
  seq.b2_minus = build_bottleneck(g, with_first(1, s2), c, "B2-", seq.b1_plus.root());
  seq.b2_plus = build_bottleneck(g, with_first(1, s2), c, "B2+");
  seq.b3_minus = build_bottleneck(g, with_first(2, s3), c, "B3-", seq.b2_plus.root());
  seq.s_edge_weight = (c.tau + c.gamma) / 2 + 1;
  g.add_edge(seq.s[0], seq.s[1], seq.s_edge_weight);
  g.add_edge(seq.s[1], seq.s[2], seq.s_edge_weight);
  const std::array<const std::vector<Attachment>*, 3> sets{&s1, &s2, &s3};
  for (int i = 0; i < 3; ++i)
    for (const auto& [v, w] : *sets[i]) seq.sets[i].push_back(v);
  return seq;
}

LinearOrder direct_order_of_sequence(const BottleneckSequence& seq) {
  // Shared roots appear once: B2- and B3- reverse orders start at the root
  // already emitted by B1+ and B2+.
  LinearOrder order = seq.b1_plus.direct_order();
  auto rev = seq.b2_minus.reverse_order();
  order.insert(order.end(), rev.begin() + 1, rev.end());
  auto dir = seq.b2_plus.direct_order();
  const int k2 = seq.b2_plus.size();
  order.insert(order.end(), dir.begin() + k2, dir.end());
  rev = seq.b3_minus.reverse_order();
  order.insert(order.end(), rev.begin() + 1, rev.end());
  return order;
}

HInstance build_H(const NaeFormula& f, const Constants& c) {
  validate_constants(c);
  validate_formula(f, true);
  HInstance h;
  h.constants = c;
  h.unit = unit_constants(c);
  const Constants& u = h.unit;
  validate_constants(u);
  auto& g = h.graph;
  const int n = f.num_vars;

  for (int i = 1; i <= n; ++i) {
    const std::string idx = std::to_string(i);
    h.var.push_back(g.add_vertex("v_x" + idx, Role::variable));
    h.var_bar.push_back(g.add_vertex("vbar_x" + idx, Role::variable_bar));
    h.t.push_back(g.add_vertex("t" + idx, Role::t));
    h.t_bar.push_back(g.add_vertex("tbar" + idx, Role::t_bar));
    h.f.push_back(g.add_vertex("f" + idx, Role::f));
    h.f_bar.push_back(g.add_vertex("fbar" + idx, Role::f_bar));
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    h.clause.push_back(g.add_vertex("c" + std::to_string(j + 1), Role::clause));

  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (int x : f.clauses[j]) g.add_edge(h.var[x - 1], h.clause[j], u.lambda);
  for (int i = 0; i < n; ++i) {
    g.add_edge(h.t[i], h.t_bar[i], u.tau - u.lambda);
    g.add_edge(h.f[i], h.f_bar[i], u.tau - u.lambda);
    g.add_edge(h.var[i], h.t[i], u.lambda);
    g.add_edge(h.var[i], h.f[i], u.lambda);
    g.add_edge(h.var_bar[i], h.t[i], u.lambda);
    g.add_edge(h.var_bar[i], h.f[i], u.lambda);
  }

  std::vector<Attachment> st, sc, sf;
  for (int v : h.t) st.emplace_back(v, u.tau - u.lambda);
  for (int v : h.clause) sc.emplace_back(v, u.tau - 2 * u.lambda);
  for (int v : h.f) sf.emplace_back(v, u.tau - u.lambda);
  h.seq = build_bottleneck_sequence(g, st, sc, sf, u);

  h.pre_padding_vertices = g.vertex_count();
  const Weight saturated = u.tau + u.gamma + 1;
  Weight p = 0;
  for (int v = 0; v < h.pre_padding_vertices; ++v) {
    Weight w = vertex_weight(g, v);
    if (w < saturated) {
      h.deficits.emplace_back(v, saturated - w);
      p += saturated - w;
    }
  }
  for (Weight i = 0; i < p; ++i) h.X.push_back(g.add_vertex("X" + std::to_string(i + 1), Role::pad_x));
  for (Weight i = 0; i < p; ++i) h.Y.push_back(g.add_vertex("Y" + std::to_string(i + 1), Role::pad_y));
  if (p > 0) {
    std::vector<Attachment> ax, ay;
    for (int v : h.X) ax.emplace_back(v, u.tau - u.gamma - 1);
    for (int v : h.Y) ay.emplace_back(v, u.tau - u.gamma - 1);
    h.pad_left = build_bottleneck(g, ax, u, "BL");
    h.pad_right = build_bottleneck(g, ay, u, "BR");
    for (Weight i = 0; i < p; ++i) g.add_edge(h.X[i], h.Y[i], 2 * u.gamma + 2);
    std::size_t next = 0;
    for (const auto& [v, missing] : h.deficits)
      for (Weight k = 0; k < missing; ++k) g.add_edge(v, h.X[next++], 1);
  }
  g.scale_weights(c.a);
  return h;
}

LinearOrder witness_order(const NaeFormula& f, const HInstance& h, const Assignment& a) {
  if (!eval_nae(f, a)) throw ValidationError("assignment does not NAE-satisfy the formula");
  if (static_cast<int>(h.var.size()) != f.num_vars)
    throw ValidationError("graph was not built from this formula");
  const auto& g = h.graph;
  const Weight scale = h.constants.a;
  const Constants& u = h.unit;
  const int n = f.num_vars;

  LinearOrder inner;
  for (int v : h.t_bar) inner.push_back(v);
  for (int i = 0; i < n; ++i) inner.push_back(a[i] ? h.var[i] : h.var_bar[i]);
  auto seq_order = direct_order_of_sequence(h.seq);
  inner.insert(inner.end(), seq_order.begin(), seq_order.end());
  for (int i = 0; i < n; ++i) inner.push_back(a[i] ? h.var_bar[i] : h.var[i]);
  for (int v : h.f_bar) inner.push_back(v);
  if (static_cast<int>(inner.size()) != h.pre_padding_vertices)
    throw ValidationError("graph groups do not cover the unpadded vertices");

  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < inner.size(); ++i) pos[inner[i]] = static_cast<int>(i);

  // X-neighbours of each padded vertex, in X order.
  std::vector<std::vector<int>> pads(h.pre_padding_vertices);
  for (int x : h.X)
    for (const auto& nb : g.neighbors(x))
      if (nb.vertex < h.pre_padding_vertices) pads[nb.vertex].push_back(x);

  LinearOrder order = h.pad_left.spine_a.empty() ? LinearOrder{} : h.pad_left.reverse_order();
  order.resize(order.size() - h.X.size());  // X is emitted interleaved below
  for (int v : inner) {
    Weight left = 0, right = 0;
    for (const auto& nb : g.neighbors(v)) {
      if (nb.vertex >= h.pre_padding_vertices) continue;
      (pos[nb.vertex] < pos[v] ? left : right) += nb.weight / scale;
    }
    const auto& mine = pads[v];
    std::size_t before = mine.size();
    if (!mine.empty() && right <= u.gamma + 1)
      before = static_cast<std::size_t>(u.tau - left);
    if (before > mine.size())
      throw ValidationError("padding split out of range at vertex " + std::to_string(v));
    order.insert(order.end(), mine.begin(), mine.begin() + static_cast<long>(before));
    order.push_back(v);
    order.insert(order.end(), mine.begin() + static_cast<long>(before), mine.end());
  }
  if (!h.pad_right.spine_a.empty()) {
    auto right = h.pad_right.direct_order();
    order.insert(order.end(), right.begin(), right.end());
  }
  order_positions(order, g.vertex_count());
  return order;
}

Assignment decode_assignment(const NaeFormula& f, const HInstance& h, const LinearOrder& order) {
  const auto& c = h.constants;
  auto check = check_balancing_order(h.graph, order, c.tau + c.gamma);
  if (!check)
    throw ValidationError("order is not (τ+γ)-balancing: vertex " +
                          std::to_string(check.violator) + " (" +
                          h.graph.vertex(check.violator).label + ") has weight " +
                          std::to_string(check.weights.delta()));
  auto pos = order_positions(order, h.graph.vertex_count());
  int first_c = h.graph.vertex_count(), last_c = -1;
  for (int v : h.clause) {
    first_c = std::min(first_c, pos[v]);
    last_c = std::max(last_c, pos[v]);
  }
  Assignment a(f.num_vars);
  for (int i = 0; i < f.num_vars; ++i) {
    int p = pos[h.var[i]];
    if (p < first_c) {
      a[i] = true;
    } else if (p > last_c) {
      a[i] = false;
    } else {
      throw ValidationError("variable vertex " + h.graph.vertex(h.var[i]).label +
                            " is surrounded by clause vertices");
    }
  }
  return a;
}

}  // namespace mimred
