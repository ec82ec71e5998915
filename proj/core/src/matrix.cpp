#include "kissing/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "kissing/errors.hpp"

namespace kissing {
namespace {

// Bareiss elimination on a copy of m.  Pivoting swaps rows only, so the
// returned value already carries the sign of the permutation.
BigInt det_bareiss_destructive(IntMatrix m) {
  const std::size_t n = m.rows();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Exact arithmetic needs no magnitude pivoting; any nonzero entry works.
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Divisible by the previous pivot: Sylvester's identity.
        m(i, j) = BigInt::div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = n == 0 ? BigInt(1) : m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

BigInt det_bareiss(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det_bareiss: matrix is not square");
  }
  return det_bareiss_destructive(m);
}

std::vector<BigRational> solve_cramer(const IntMatrix& m,
                                      std::span<const BigInt> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw std::invalid_argument("solve_cramer: matrix is not square");
  }
  if (rhs.size() != n) {
    throw std::invalid_argument("solve_cramer: rhs size mismatch");
  }
  const BigInt det = det_bareiss(m);
  if (det.is_zero()) {
    throw SingularMatrixError("solve_cramer: singular matrix");
  }
  std::vector<BigRational> x;
  x.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix mj = m;
    for (std::size_t i = 0; i < n; ++i) mj(i, j) = rhs[i];
    x.emplace_back(det_bareiss(mj), det);
  }
  return x;
}

}  // namespace kissing
