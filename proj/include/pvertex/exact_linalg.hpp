#pragma once

#include <vector>

#include "pvertex/graph.hpp"
#include "pvertex/rat_matrix.hpp"
#include "pvertex/rational.hpp"

namespace pvertex {

// Exact determinant by fraction-free (Bareiss-style) elimination with row
// pivoting. det of the empty 0x0 matrix is 1 (empty product convention).
Rational det(const RatMatrix& m);

// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& m);

// minors[i] = det of m with row i and column i deleted, computed from the
// definition (independent of inverse(), so the Cramer identity
// minors[i]/det = (m^-1)[i][i] stays a meaningful cross-check).
std::vector<Rational> principal_minors(const RatMatrix& m);

struct Verification {
  Rational determinant;
  std::vector<Rational> minors;
  int p_vertex_count = 0;  // number of i with minors[i] == 0

  // Nonsingular and every principal (n-1)-minor vanishes.
  bool property_p() const {
    return determinant != 0 && p_vertex_count == static_cast<int>(minors.size());
  }
};

// Checks that m is symmetric, sized like g, and its off-diagonal support is
// exactly g's edge set (the diagonal is unconstrained), then reports the
// determinant, all principal (n-1)-minors, and how many of them vanish.
// Throws SizeMismatchError / AsymmetricMatrixError / PatternError.
Verification verify_property_p(const RatMatrix& m, const Graph& g);

}  // namespace pvertex
