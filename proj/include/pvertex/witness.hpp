#pragma once

#include <vector>

#include "pvertex/exact_linalg.hpp"
#include "pvertex/families.hpp"
#include "pvertex/graph.hpp"
#include "pvertex/matching.hpp"
#include "pvertex/rat_matrix.hpp"

namespace pvertex {

// A symmetric rational matrix together with the graph it certifies and its
// exact verification record. Only `checked` constructs these, so holding a
// Witness means det != 0 and every principal (n-1)-minor vanishes.
struct Witness {
  Graph graph;
  RatMatrix matrix;
  Verification verification;

  // Runs verify_property_p; throws UnverifiedInputError when the matrix is
  // nonsingular-with-support but some minor survives (or det == 0).
  static Witness checked(Graph g, RatMatrix m);
};

// diag = 2-n, off-diagonal 1; det = (1-n)^(n-1). Requires n >= 2.
Witness complete_witness(int n);

// Weighted biadjacency witness: zero diagonal, matching edges weighted 2 and
// the rest 1. When that biadjacency happens to be singular, retries up to 16
// seeded uniform integer weight draws from [1, 2n^2], then falls back to
// weighting matching edge k with t^k, t = (n/2)! + 1, which is provably
// nonsingular. Throws InvalidBipartitionError / NotPerfectError.
Witness bipartite_pm_witness(const Graph& g, const Bipartition& bp, const Matching& m);

// Couples witnesses w1, w2 by a single edge (i in w1, j in w2) of weight c:
// the block matrix [[M1, cE_ij], [cE_ij^T, M2]]. det multiplies exactly.
// Throws ZeroCouplingError, ComponentTooSmallError (order-1 component),
// UnverifiedInputError, BadBailVertexError.
Witness thread_bridge(const Witness& w1, const Witness& w2, int i, int j, const Rational& c);

// Closes a triangle of joins: first thread_bridge(w1, w2, v1, u, c), then a
// third block M3 coupled by weight c at (v2, w) and (n1+u, w) — i.e. edges
// (v1,u), (u,w), (v2,w) with u and w each shared by two of them. v1 and v2
// may coincide. det(B) = det(B1) * det(M3) exactly.
Witness close_triangle(const Witness& w1, const Witness& w2, const Witness& w3, int v1, int v2, int u, int w,
                       const Rational& c);

struct ThreadComponentSpec {
  Witness witness;
  int bail;
};

struct ThreadSpec {
  Graph base;  // must pass is_tree_cycle_block
  std::vector<ThreadComponentSpec> components;
  Rational coupling = 1;
};

// Assembles a verified witness for threaded_union(base, components): each
// cycle of the base is realized by removing the three consecutive edges
// (c1,c2), (c2,c3), (c3,c4) starting at its smallest vertex, threading the
// remaining path by repeated thread_bridge and closing with close_triangle;
// block results are then joined across the base's bridges in BFS order from
// the block containing the smallest vertex. The output matrix is permuted to
// the canonical contiguous numbering of threaded_union and re-verified.
Witness thread_over(const ThreadSpec& spec);

struct GenThreadComponentSpec {
  Witness witness;
  std::vector<int> bail_set;
};

struct GenThreadSpec {
  Graph base;
  std::vector<GenThreadComponentSpec> components;
  EdgeAssignment assignment;  // per base edge: (bail in u's set, bail in v's set)
  Rational coupling = 1;
};

// Multi-bail variant. Tree parts accept any bail budgets within the base
// degrees; every base cycle needs two consecutive components with singleton
// bail sets (NoConsecutiveSingletonsError otherwise), and the removed edge
// triple is chosen around the first such pair. With all-singleton bail sets
// the result coincides with thread_over.
Witness generalized_thread_over(const GenThreadSpec& spec);

// Given a witness for g minus {pendant, attachment} (ids ascending after the
// deletion), rebuilds a witness for g across the pendant edge: unit weights
// on the attachment's edges, zero diagonal at the pendant, and the one forced
// diagonal value at the attachment that kills the pendant's minor.
Witness extend_across_pendant(const Witness& reduced, const Graph& g, int pendant, int attachment);

}  // namespace pvertex
