#include "pvertex/rat_matrix.hpp"

namespace pvertex {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RatMatrix RatMatrix::without_row_col(int k) const {
  if (!square()) throw NonSquareError("without_row_col on a non-square matrix");
  RatMatrix m(rows_ - 1, cols_ - 1);
  for (int i = 0, mi = 0; i < rows_; ++i) {
    if (i == k) continue;
    for (int j = 0, mj = 0; j < cols_; ++j) {
      if (j == k) continue;
      m(mi, mj) = (*this)(i, j);
      ++mj;
    }
    ++mi;
  }
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw SizeMismatchError("matrix product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j) == 0) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

}  // namespace pvertex
