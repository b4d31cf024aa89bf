#include "pvertex/exact_linalg.hpp"

#include <string>
#include <utility>

namespace pvertex {

// One-step fraction-free elimination: after step k every entry is divided by
// the previous pivot, which is an exact division here (rational arithmetic),
// and keeps entry growth polynomial for integer inputs.
Rational det(const RatMatrix& m) {
  if (!m.square()) throw NonSquareError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;

  RatMatrix w = m;
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (w(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == -1) return 0;  // zero column below the diagonal
      for (int j = k; j < n; ++j) std::swap(w(k, j), w(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw NonSquareError("inverse of a non-square matrix");
  const int n = m.rows();
  RatMatrix w = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (w(r, k) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) throw SingularMatrixError("matrix is singular");
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(w(k, j), w(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Rational p = w(k, k);
    for (int j = 0; j < n; ++j) {
      w(k, j) /= p;
      inv(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      const Rational f = w(i, k);
      for (int j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> principal_minors(const RatMatrix& m) {
  if (!m.square()) throw NonSquareError("principal minors of a non-square matrix");
  std::vector<Rational> minors;
  minors.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) minors.push_back(det(m.without_row_col(i)));
  return minors;
}

Verification verify_property_p(const RatMatrix& m, const Graph& g) {
  const int n = g.vertex_count();
  if (m.rows() != n || m.cols() != n) {
    throw SizeMismatchError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " but the graph has " + std::to_string(n) + " vertices");
  }
  if (!m.is_symmetric()) throw AsymmetricMatrixError("matrix is not symmetric");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool entry = m(i, j) != 0;
      if (entry != g.has_edge(i, j)) {
        throw PatternError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                           (entry ? "nonzero without an edge" : "zero on an edge"));
      }
    }
  }
  Verification v;
  v.determinant = det(m);
  v.minors = principal_minors(m);
  for (const Rational& r : v.minors) {
    if (r == 0) ++v.p_vertex_count;
  }
  return v;
}

}  // namespace pvertex
