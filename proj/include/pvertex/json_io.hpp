#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pvertex/decision.hpp"
#include "pvertex/graph.hpp"
#include "pvertex/rat_matrix.hpp"
#include "pvertex/structure.hpp"
#include "pvertex/witness.hpp"

namespace pvertex {

// On-disk / on-pipe graph form. Two encodings:
//   edge list: first line "n m", then m lines "u v" (0-based ids);
//   JSON:      {"n": int, "edges": [[u,v],...], "labels": [str,...]?}.
struct GraphDocument {
  Graph graph;
  std::vector<std::string> labels;  // empty, or one label per vertex
};

enum class GraphFormat { Auto, Json, EdgeList };

// Parses either encoding; Auto sniffs the first non-space character ('{' or
// '[' means JSON). Throws ParseError on malformed input, duplicate edges,
// loops, or out-of-range endpoints.
GraphDocument parse_graph_document(const std::string& text, GraphFormat format = GraphFormat::Auto);

std::string to_edgelist(const GraphDocument& doc);
nlohmann::json to_json(const GraphDocument& doc);
GraphDocument graph_document_from_json(const nlohmann::json& j);

// Rational matrix as {"n": int, "entries": [[rational-string,...],...]}.
// Entries may be JSON integers or "p/q" strings on input.
nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

// {"n", "entries", "det", "minors"} with rationals as strings.
nlohmann::json witness_to_json(const Witness& w);

// {"det", "minors", "pVertexCount", "propertyP"}.
nlohmann::json verification_to_json(const Verification& v);

// {"status", "ruleTrail", "numericOnly", then "witness" or "obstruction",
//  optional "reason" and "rewrites"}.
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json obstruction_to_json(const Obstruction& o);

// {"removed", "terminal" (graph JSON), "terminalVertices", "reason",
//  optional "antennaVertex"}.
nlohmann::json trace_to_json(const ReductionTrace& t);

}  // namespace pvertex
