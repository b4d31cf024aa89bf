#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pvertex/graph.hpp"

namespace pvertex {

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (x, y), sorted by x
  int size() const { return static_cast<int>(pairs.size()); }
};

struct HallViolator {
  std::vector<int> s;             // subset of part_x, sorted
  std::vector<int> neighborhood;  // exactly N(s), sorted; |neighborhood| < |s|
};

// Checks that the parts partition the vertex set and every edge crosses
// them; throws InvalidBipartitionError otherwise.
void validate_bipartition(const Graph& g, const Bipartition& bp);

// Hopcroft-Karp maximum matching. Vertices are processed in ascending id
// order at every stage, so the result is deterministic for a given graph.
Matching maximum_matching(const Graph& g, const Bipartition& bp);

// Koenig-style witness that Hall's condition fails: S = X-vertices reachable
// by alternating paths from the unmatched ones. Requires |part_x| == |part_y|
// (UnbalancedPartsError); returns nullopt exactly when a perfect matching
// exists.
std::optional<HallViolator> hall_violator(const Graph& g, const Bipartition& bp);

// Convenience: bipartition + matching; throws NotBipartiteError.
bool has_perfect_matching(const Graph& g);

}  // namespace pvertex
