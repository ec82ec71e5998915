#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "kissing/bigint.hpp"
#include "kissing/rational.hpp"

namespace kissing {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

// Determinant by fraction-free (Bareiss) elimination.  Every intermediate
// value is a minor of the input, so nothing is ever rounded and the
// divisions are exact by construction.  The empty matrix has determinant 1.
BigInt det_bareiss(const IntMatrix& m);

// Solves m * x = rhs exactly via Cramer's rule, with every determinant
// computed by det_bareiss.  Throws SingularMatrixError when det(m) == 0.
std::vector<BigRational> solve_cramer(const IntMatrix& m,
                                      std::span<const BigInt> rhs);

}  // namespace kissing
