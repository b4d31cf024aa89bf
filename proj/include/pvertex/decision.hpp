#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvertex/graph.hpp"
#include "pvertex/matching.hpp"
#include "pvertex/structure.hpp"
#include "pvertex/witness.hpp"

namespace pvertex {

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);

// Re-checkable reason for a No answer. All vertex ids refer to the ORIGINAL
// input graph; when the certificate records pendant rewrites, the obstruction
// holds in the graph obtained by deleting the rewritten pairs first.
struct Obstruction {
  enum class Kind { IsolatedVertex, Antenna, Unbalanced, HallViolator };
  Kind kind = Kind::IsolatedVertex;
  std::string detail;  // human-readable summary

  int vertex = -1;                     // IsolatedVertex / Antenna
  std::vector<int> pendant_neighbors;  // Antenna: the degree-1 neighbors seen
  std::vector<int> part_x, part_y;     // Unbalanced: the unequal parts
  std::vector<int> s, neighborhood;    // HallViolator: |neighborhood| < |s|
};

std::string to_string(Obstruction::Kind k);

struct Certificate {
  Status status = Status::Unknown;
  std::optional<Witness> witness;         // exact witness for the input graph
  std::optional<Obstruction> obstruction; // populated for No
  bool numeric_only = false;  // Yes rests on a known family property or a
                              // numeric point, with no exact matrix attached
  std::string reason;         // explanation for Unknown / numeric-only Yes
  std::vector<std::string> rule_trail;             // applied rules, in order
  std::vector<std::pair<int, int>> rewrites;       // pendant rewrites applied,
                                                   // (pendant, attachment)
};

// Hook for the numeric fallback, injected so the rule engine stays free of
// floating-point dependencies. Returns the achieved residual on success.
using NumericProber = std::function<std::optional<double>(const Graph&)>;

struct DecideOptions {
  NumericProber numeric_prober;  // null: the fallback rule reports Unknown
};

// Rule cascade deciding the vanishing-minors property. Per recursion step the
// order is: components; singleton; antenna; pendant rewrite; bipartite rules
// (balance, perfect matching, decided no-matching classes); complete graph;
// odd cycle; bridge decomposition into recursively-Yes pieces; fallback.
// Yes certificates carry an exact verified witness for the input graph unless
// numeric_only is set; No certificates carry a re-checkable obstruction.
Certificate decide(const Graph& g, const DecideOptions& options = {});

// Exact determinant test on the 0/1 adjacency matrix. For trees this is
// equivalent to decide(t) == Yes and to the existence of a perfect matching,
// which the tests exploit as an independent oracle. Throws NotATreeError.
bool decide_tree_crosscheck(const Graph& t);

}  // namespace pvertex
