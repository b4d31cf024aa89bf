#include "pvertex/json_io.hpp"

#include <sstream>

namespace pvertex {

namespace {

using nlohmann::json;

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw ParseError("vertex count is negative");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n = " +
                       std::to_string(n));
    }
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v)) throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.add_edge(u, v);
  }
  return g;
}

GraphDocument parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"");
  if (n < 0 || m < 0) throw ParseError("negative counts in edge list header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw ParseError("edge list promises " + std::to_string(m) + " edges, found " +
                                          std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing tokens after the edge list: \"" + extra + "\"");
  GraphDocument doc;
  doc.graph = build_graph(static_cast<int>(n), edges);
  return doc;
}

}  // namespace

GraphDocument graph_document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  if (!j.contains("n") || !j.contains("edges")) throw ParseError("graph JSON needs \"n\" and \"edges\"");
  const int n = as_int(j.at("n"), "\"n\"");
  if (!j.at("edges").is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [u, v] pair");
    edges.emplace_back(as_int(e.at(0), "edge endpoint"), as_int(e.at(1), "edge endpoint"));
  }
  GraphDocument doc;
  doc.graph = build_graph(n, edges);
  if (j.contains("labels")) {
    if (!j.at("labels").is_array() || static_cast<int>(j.at("labels").size()) != n) {
      throw ParseError("\"labels\" must list one string per vertex");
    }
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  return doc;
}

GraphDocument parse_graph_document(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty graph document");
    format = (text[first] == '{' || text[first] == '[') ? GraphFormat::Json : GraphFormat::EdgeList;
  }
  if (format == GraphFormat::EdgeList) return parse_edgelist(text);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return graph_document_from_json(j);
}

std::string to_edgelist(const GraphDocument& doc) {
  std::ostringstream out;
  out << doc.graph.vertex_count() << ' ' << doc.graph.edge_count() << '\n';
  for (const auto& [u, v] : doc.graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

json to_json(const GraphDocument& doc) {
  json j;
  j["n"] = doc.graph.vertex_count();
  j["edges"] = json::array();
  for (const auto& [u, v] : doc.graph.edges()) j["edges"].push_back({u, v});
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

json matrix_to_json(const RatMatrix& m) {
  json j;
  j["n"] = m.rows();
  j["entries"] = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(rational_to_string(m(i, k)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

RatMatrix matrix_from_json(const json& j) {
  const json* entries = nullptr;
  int n = -1;
  if (j.is_array()) {
    entries = &j;
    n = static_cast<int>(j.size());
  } else if (j.is_object() && j.contains("entries")) {
    entries = &j.at("entries");
    n = j.contains("n") ? as_int(j.at("n"), "\"n\"") : static_cast<int>(entries->size());
  } else {
    throw ParseError("matrix JSON must be an array of rows or {\"n\", \"entries\"}");
  }
  if (!entries->is_array() || static_cast<int>(entries->size()) != n) {
    throw ParseError("matrix needs exactly n rows");
  }
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = entries->at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix rows must have n entries");
    for (int k = 0; k < n; ++k) {
      const json& cell = row.at(static_cast<std::size_t>(k));
      if (cell.is_number_integer()) {
        m(i, k) = make_rational(cell.get<long>());
      } else if (cell.is_string()) {
        m(i, k) = rational_from_string(cell.get<std::string>());
      } else {
        throw ParseError("matrix entries must be integers or rational strings");
      }
    }
  }
  return m;
}

json verification_to_json(const Verification& v) {
  json j;
  j["det"] = rational_to_string(v.determinant);
  j["minors"] = json::array();
  for (const auto& m : v.minors) j["minors"].push_back(rational_to_string(m));
  j["pVertexCount"] = v.p_vertex_count;
  j["propertyP"] = v.property_p();
  return j;
}

json witness_to_json(const Witness& w) {
  json j;
  j["n"] = w.graph.vertex_count();
  j["entries"] = matrix_to_json(w.matrix)["entries"];
  j["det"] = rational_to_string(w.verification.determinant);
  j["minors"] = json::array();
  for (const auto& m : w.verification.minors) j["minors"].push_back(rational_to_string(m));
  return j;
}

json obstruction_to_json(const Obstruction& o) {
  json j;
  j["kind"] = to_string(o.kind);
  j["detail"] = o.detail;
  switch (o.kind) {
    case Obstruction::Kind::IsolatedVertex:
      j["vertex"] = o.vertex;
      break;
    case Obstruction::Kind::Antenna:
      j["vertex"] = o.vertex;
      j["pendantNeighbors"] = o.pendant_neighbors;
      break;
    case Obstruction::Kind::Unbalanced:
      j["partX"] = o.part_x;
      j["partY"] = o.part_y;
      break;
    case Obstruction::Kind::HallViolator:
      j["s"] = o.s;
      j["neighborhood"] = o.neighborhood;
      break;
  }
  return j;
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["status"] = to_string(c.status);
  j["ruleTrail"] = c.rule_trail;
  j["numericOnly"] = c.numeric_only;
  if (c.witness) j["witness"] = witness_to_json(*c.witness);
  if (c.obstruction) j["obstruction"] = obstruction_to_json(*c.obstruction);
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (!c.rewrites.empty()) {
    j["rewrites"] = json::array();
    for (const auto& [p, a] : c.rewrites) j["rewrites"].push_back({p, a});
  }
  return j;
}

json trace_to_json(const ReductionTrace& t) {
  json j;
  j["removed"] = json::array();
  for (const auto& [p, a] : t.removed) j["removed"].push_back({p, a});
  GraphDocument doc;
  doc.graph = t.terminal;
  j["terminal"] = to_json(doc);
  j["terminalVertices"] = t.terminal_vertices;
  switch (t.reason.kind) {
    case TerminalReason::Kind::PendantFree:
      j["reason"] = "pendant-free";
      break;
    case TerminalReason::Kind::Antenna:
      j["reason"] = "antenna";
      j["antennaVertex"] = t.reason.vertex;
      break;
    case TerminalReason::Kind::Empty:
      j["reason"] = "empty";
      break;
  }
  return j;
}

}  // namespace pvertex
