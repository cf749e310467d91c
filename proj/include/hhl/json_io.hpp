#pragma once

#include <hhl/core.hpp>
#include <hhl/learner.hpp>
#include <hhl/twostage.hpp>

#include <json.hpp>

#include <istream>
#include <ostream>

namespace hhl {

/// {"t": <int>, "edges": [[v,...],...]}, 1-based, edges sorted.
nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h);

/// Throws std::runtime_error on malformed input, duplicate edges or
/// vertices, out-of-range vertices and empty edges.
Hypergraph hypergraph_from_json(const nlohmann::ordered_json& j);

Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

nlohmann::ordered_json edges_to_json(const Hypergraph& h);

/// {"t","s","l","queries_total","queries_vertex_search","queries_edge_search",
///  "queries_query_search","result_edges"}
nlohmann::ordered_json to_json(const LearnReport& report);

/// {"t","s","l","epsilon","layers","stage1_queries","stage2_queries",
///  "success","recovered_edges"}
nlohmann::ordered_json to_json(const TwoStageReport& report);

} // namespace hhl
