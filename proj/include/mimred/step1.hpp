#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mimred/constants.hpp"
#include "mimred/formula.hpp"
#include "mimred/weighted_graph.hpp"

namespace mimred {

/// Terminal vertex together with the weight of its attachment edge.
using Attachment = std::pair<int, Weight>;

/// A weighted caterpillar a_1 b_1 ... a_k b_k with terminal v_i hanging off a_i.
/// Spine weights alternate tau and gamma + 1; the root is b_k.
struct BottleneckHandle {
  std::vector<int> spine_a;
  std::vector<int> spine_b;
  std::vector<Attachment> terminals;

  int root() const { return spine_b.back(); }
  int size() const { return static_cast<int>(terminals.size()); }
  /// terminals (ascending id), a_1, b_1, ..., a_k, b_k
  LinearOrder direct_order() const;
  LinearOrder reverse_order() const;
};

/// Adds a bottleneck on existing terminals. When `shared_root` is given, that
/// vertex plays b_k instead of a fresh one. `label` prefixes new vertex labels.
BottleneckHandle build_bottleneck(WeightedGraph& g, const std::vector<Attachment>& terminals,
                                  const Constants& c, const std::string& label = "B",
                                  std::optional<int> shared_root = std::nullopt);

/// Four bottlenecks B1+, B2-, B2+, B3- glued at their roots, with the
/// extra terminals s_1, s_2, s_3 joined by the edges s_1 s_2 and s_2 s_3.
struct BottleneckSequence {
  std::array<int, 3> s{};
  BottleneckHandle b1_plus;
  BottleneckHandle b2_minus;
  BottleneckHandle b2_plus;
  BottleneckHandle b3_minus;
  std::array<std::vector<int>, 3> sets;
  Weight s_edge_weight = 0;

  /// All vertices of the sequence (terminal sets included), ascending.
  std::vector<int> vertices() const;
};

BottleneckSequence build_bottleneck_sequence(WeightedGraph& g, const std::vector<Attachment>& s1,
                                             const std::vector<Attachment>& s2,
                                             const std::vector<Attachment>& s3,
                                             const Constants& c);

/// Direct orders on B1+ and B2+, reverse orders on B2- and B3-; terminal sets
/// in ascending id. Yields S_1 before S_2 before S_3.
LinearOrder direct_order_of_sequence(const BottleneckSequence& seq);

/// The weighted graph built from a formula, with the named vertex groups
/// needed by the witness constructions.
struct HInstance {
  WeightedGraph graph;
  Constants constants;  ///< as requested
  Constants unit;       ///< constants / a; the construction is built in these
                        ///< units and every weight multiplied by a
  std::vector<int> var, var_bar, t, t_bar, f, f_bar, clause;
  BottleneckSequence seq;
  BottleneckHandle pad_left;   ///< B_L on X
  BottleneckHandle pad_right;  ///< B_R on Y
  std::vector<int> X, Y;
  int pre_padding_vertices = 0;  ///< ids below this form the unpadded graph
  /// (vertex, missing weight in unit weights) for every padded vertex,
  /// ascending id
  std::vector<std::pair<int, Weight>> deficits;
};

/// Builds H(f). The construction uses the unit constants (tau/a, gamma/a,
/// lambda/a), which must satisfy the same four inequalities, and then scales
/// all weights by a, so every weight is a multiple of a.
HInstance build_H(const NaeFormula& f, const Constants& c);

/// Balancing order assembled from an NAE-satisfying assignment; it is
/// tau-balancing. Throws ValidationError if `a` does not satisfy `f`.
LinearOrder witness_order(const NaeFormula& f, const HInstance& h, const Assignment& a);

/// x is true iff v_x precedes every clause vertex. Requires a
/// (tau + gamma)-balancing order.
Assignment decode_assignment(const NaeFormula& f, const HInstance& h, const LinearOrder& order);

}  // namespace mimred
