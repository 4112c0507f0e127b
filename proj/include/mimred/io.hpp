#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <json.hpp>

#include "mimred/balancing.hpp"
#include "mimred/constants.hpp"
#include "mimred/formula.hpp"
#include "mimred/graph.hpp"
#include "mimred/layout.hpp"
#include "mimred/matching.hpp"
#include "mimred/step1.hpp"
#include "mimred/step2.hpp"
#include "mimred/step3.hpp"

namespace mimred::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
/// Graphs with more edges than this store them implicitly (rebuilt from meta).
inline constexpr std::uint64_t kDefaultExplicitEdgeLimit = 200'000;

Json read_json_file(const std::string& path);
/// Compact, key-sorted output with a trailing newline; byte-stable.
void write_json_file(const std::string& path, const Json& doc);
std::string dump(const Json& doc);

/// Throws ValidationError unless `doc` has the current format version and kind.
void expect_kind(const Json& doc, const std::string& kind);
std::string kind_of(const Json& doc);

Json constants_to_json(const Constants& c);
Constants constants_from_json(const Json& j);

Json weighted_graph_to_json(const WeightedGraph& g, const Json& meta = Json::object());
WeightedGraph weighted_graph_from_json(const Json& doc);

/// H(f) document: the graph plus the formula, constants and named groups.
Json h_instance_to_json(const NaeFormula& f, const HInstance& h, const std::string& profile);
/// Rebuilds H from the formula and constants in the meta block and checks it
/// against the stored graph.
std::pair<NaeFormula, HInstance> h_instance_from_json(const Json& doc);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json partitioned_to_json(const PartitionedGraph& g,
                         std::uint64_t explicit_edge_limit = kDefaultExplicitEdgeLimit,
                         const Json& extra_meta = Json::object());
PartitionedGraph partitioned_from_json(const Json& doc);

Json gstar_to_json(const GStar& g, std::uint64_t explicit_edge_limit = kDefaultExplicitEdgeLimit);
GStar gstar_from_json(const Json& doc);

/// Any graph document as an adjacency view (weights dropped).
std::unique_ptr<GraphView> graph_view_from_json(const Json& doc);
/// Any graph document as an explicit graph (must be small enough to materialize).
Graph explicit_graph_from_json(const Json& doc);

Json order_to_json(const LinearOrder& ord);
LinearOrder order_from_json(const Json& doc);

Json balancing_tree_to_json(const BalancingTree& bt);
BalancingTree balancing_tree_from_json(const Json& doc);

Json tree_layout_to_json(const TreeLayout& lay);
TreeLayout tree_layout_from_json(const Json& doc);

Json tree_mapping_to_json(const TreeMapping& m);
TreeMapping tree_mapping_from_json(const Json& doc);

Json hybrid_tree_to_json(const HybridTree& ht);
HybridTree hybrid_tree_from_json(const Json& doc);

Json cut_to_json(const std::vector<int>& A, const std::vector<int>& B);
std::pair<std::vector<int>, std::vector<int>> cut_from_json(const Json& doc);

Json tree_to_parents(const Tree& t, int root = 0);
Tree tree_from_parents(const Json& parents);

}  // namespace mimred::io
