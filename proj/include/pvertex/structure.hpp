#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pvertex/graph.hpp"
#include "pvertex/matching.hpp"

namespace pvertex {

struct TerminalReason {
  enum class Kind { PendantFree, Antenna, Empty };
  Kind kind = Kind::PendantFree;
  int vertex = -1;  // antenna vertex, in the ids of the input graph
};

struct ReductionTrace {
  std::vector<std::pair<int, int>> removed;  // (pendant, attachment), input ids
  Graph terminal;                            // renumbered 0..k-1
  std::vector<int> terminal_vertices;        // new id -> input id, ascending
  TerminalReason reason;
};

// Smallest vertex with at least two degree-1 neighbors, if any.
std::optional<int> antenna_vertex(const Graph& g);

// Repeatedly removes a pendant edge together with both endpoints (smallest
// pendant id first), stopping as soon as the current graph is empty, has an
// antenna vertex, or has no pendant edge. The antenna check runs before every
// removal step.
ReductionTrace pendant_reduce(const Graph& g);

inline bool is_balanced(const Bipartition& bp) { return bp.part_x.size() == bp.part_y.size(); }

struct TriangularOrdering {
  std::vector<int> row_order;  // part_x vertices, row 0 first
  std::vector<int> col_order;  // part_y vertices, column 0 first
};

// Orderings of the parts that make the biadjacency matrix upper triangular
// (entry (i,j) = 0 for i > j), or nullopt when none is found. Greedy
// back-to-front placement, validated on success; on greedy failure an
// exhaustive search with pruning runs for part sizes <= 8.
std::optional<TriangularOrdering> triangular_ordering(const Graph& g, const Bipartition& bp);

}  // namespace pvertex
