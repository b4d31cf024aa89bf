#pragma once

#include <cstddef>
#include <vector>

#include "pvertex/errors.hpp"
#include "pvertex/rational.hpp"

namespace pvertex {

// Dense rational matrix, row-major. Entries default to 0.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int i, int j) { return a_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }

  bool is_symmetric() const;
  RatMatrix transposed() const;

  // Copy with row i and column i deleted (square matrices).
  RatMatrix without_row_col(int i) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace pvertex
