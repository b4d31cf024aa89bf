#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "pvertex/graph.hpp"

namespace pvertex {

enum class Family {
  Path,              // params: n >= 1
  Cycle,             // params: n >= 3
  Complete,          // params: n >= 1
  CompleteBipartite, // params: m, n >= 1
  Star,              // params: t >= 1 leaves
  Hypercube,         // params: d >= 1
  Grid,              // params: rows, cols >= 1
  GenPetersen,       // params: n >= 3, 1 <= k <= (n-1)/2
  Lollipop,          // params: m >= 3, n >= 1
  Barbell,           // params: n >= 1
  GenBarbell,        // params: m, n, l >= 1
  Corona,            // params: t >= 1; base family in `base`
};

struct FamilySpec {
  Family family;
  std::vector<long> params;
  std::shared_ptr<const FamilySpec> base;  // Corona only
};

// Canonical vertex numbering per family:
//   path/cycle: 0..n-1 in order; complete: all pairs;
//   complete bipartite / star: first part (or the center) first;
//   hypercube: vertex id = binary code; grid: row-major;
//   generalized Petersen P(n,k): outer u_i = i, inner v_i = n+i, edges
//     (u_i, u_{i+1}), (v_i, v_{i+k}) mod n, spokes (u_i, v_i);
//   lollipop L(m,n): clique 0..m-1, path m..m+n-1, joined at m-1;
//   barbell B(n): cliques 0..n-1 and n..2n-1 joined by (n-1, n);
//   generalized barbell B(m,n,l): clique 0..m-1, l-1 inner path vertices,
//     clique m+l-1..m+l+n-2, connecting path of length l from m-1 to m+l-1;
//   corona G corona K_t: base ids first, then per base vertex v a K_t copy
//     n+v*t..n+v*t+t-1, every copy vertex joined to v.
Graph generate(const FamilySpec& spec);

Graph corona(const Graph& base, int t);

struct ThreadedComponent {
  Graph graph;
  int bail;  // local vertex id used for every joining edge of this component
};

// Disjoint union of the components (component i occupies the contiguous id
// block starting at the sum of earlier orders, in input order) plus one edge
// per base edge joining the chosen bail vertices. Throws SizeMismatchError
// when the component count differs from the base order, BadBailVertexError
// for out-of-range bails.
Graph threaded_union(const Graph& base, const std::vector<ThreadedComponent>& comps);

struct GeneralizedComponent {
  Graph graph;
  std::vector<int> bail_set;  // distinct local ids; 1 <= size <= deg_base(i)
};

// For each base edge (u, v) with u < v: the chosen (bail in comps[u], bail in
// comps[v]).
using EdgeAssignment = std::map<std::pair<int, int>, std::pair<int, int>>;

// As threaded_union, but every base edge may attach at a different bail drawn
// from each endpoint's bail set. Throws BailBudgetExceededError when a bail
// set is empty or larger than the base degree, InvalidAssignmentError when
// the assignment does not cover exactly the base edge set or picks a vertex
// outside the declared bail sets.
Graph generalized_threaded_union(const Graph& base, const std::vector<GeneralizedComponent>& comps,
                                 const EdgeAssignment& assignment);

}  // namespace pvertex
