#include "kissing/lsq.hpp"

#include <cassert>
#include <stdexcept>

#include "kissing/errors.hpp"

namespace kissing {

PairSystem make_system(const RowList& list, std::span<const int> subset) {
  const std::size_t d = static_cast<std::size_t>(list.d);
  if (subset.size() != d) {
    throw std::invalid_argument("make_system: subset size must equal d");
  }
  PairSystem s{IntMatrix(d, d - 1), std::vector<BigInt>(d), list.split};
  int prev = -1;
  for (std::size_t j = 0; j < d; ++j) {
    const int idx = subset[j];
    if (idx <= prev || static_cast<std::size_t>(idx) >= list.rows.size()) {
      throw std::invalid_argument("make_system: bad subset index");
    }
    prev = idx;
    const auto& entries = list.rows[static_cast<std::size_t>(idx)].entries;
    for (std::size_t c = 0; c + 1 < d; ++c) s.a(j, c) = entries[c];
    s.b[j] = entries[d - 1];
  }
  return s;
}

PairSystem make_system(const SimplexPair& pair) {
  validate(pair);
  const std::size_t d = static_cast<std::size_t>(ambient_dim(pair));
  const std::size_t n = pair.p.size() - 1;
  const std::size_t m = pair.q.size() - 1;
  PairSystem s{IntMatrix(d, n + m), std::vector<BigInt>(d),
               Split{static_cast<int>(n), static_cast<int>(m)}};
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      s.a(j, i) = pair.p[i + 1][j] - pair.p[0][j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      s.a(j, n + i) = pair.q[i + 1][j] - pair.q[0][j];
    }
    s.b[j] = pair.q[0][j] - pair.p[0][j];
  }
  return s;
}

IntMatrix gram(const PairSystem& s) {
  const std::size_t rows = s.a.rows(), cols = s.a.cols();
  IntMatrix g(cols, cols);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = i; j < cols; ++j) {
      BigInt acc;
      for (std::size_t t = 0; t < rows; ++t) acc += s.a(t, i) * s.a(t, j);
      g(i, j) = acc;
      if (i != j) g(j, i) = acc;
    }
  }
  return g;
}

std::vector<BigInt> projected_rhs(const PairSystem& s) {
  const std::size_t rows = s.a.rows(), cols = s.a.cols();
  std::vector<BigInt> rhs(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    BigInt acc;
    for (std::size_t t = 0; t < rows; ++t) acc += s.a(t, j) * s.b[t];
    rhs[j] = acc;
  }
  return rhs;
}

AffineSolution affine_distance(const PairSystem& s) {
  AffineSolution sol;
  BigInt btb;
  for (const auto& v : s.b) btb += v * v;
  if (s.a.cols() == 0) {
    // Point against point: nothing to optimize, the distance is |b|^2.
    sol.squared_distance = BigRational(btb);
    return sol;
  }
  const IntMatrix g = gram(s);
  if (det_bareiss(g).is_zero()) {
    sol.singular = true;
    return sol;
  }
  const std::vector<BigInt> rhs = projected_rhs(s);
  sol.chi = solve_cramer(g, rhs);
  // b^t b - b^t A chi; equals |A chi - b|^2 since A^t(A chi - b) = 0.
  BigRational value{btb};
  for (std::size_t j = 0; j < sol.chi.size(); ++j) {
    value -= BigRational(rhs[j]) * sol.chi[j];
  }
  assert(value.sign() >= 0);
  sol.squared_distance = value;
  return sol;
}

bool sharpness_check(const AffineSolution& sol, const Split& split) {
  if (sol.singular) {
    throw std::invalid_argument("sharpness_check: singular solution");
  }
  const std::size_t n = static_cast<std::size_t>(split.n);
  const std::size_t m = static_cast<std::size_t>(split.m);
  if (sol.chi.size() != n + m) {
    throw std::invalid_argument("sharpness_check: chi/split size mismatch");
  }
  BigRational sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (sol.chi[i].sign() < 0) return false;
    sum += sol.chi[i];
  }
  if (sum > BigRational(1)) return false;
  sum = BigRational();
  for (std::size_t i = n; i < n + m; ++i) {
    if (sol.chi[i].sign() > 0) return false;
    sum += sol.chi[i];
  }
  return sum >= BigRational(-1);
}

BigRational objective_value(const PairSystem& s,
                            std::span<const BigRational> lambda,
                            std::span<const BigRational> mu) {
  if (lambda.size() != static_cast<std::size_t>(s.split.n) ||
      mu.size() != static_cast<std::size_t>(s.split.m)) {
    throw std::invalid_argument("objective_value: length mismatch");
  }
  const std::size_t rows = s.a.rows();
  BigRational total;
  for (std::size_t t = 0; t < rows; ++t) {
    BigRational r = -BigRational(s.b[t]);
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      r += BigRational(s.a(t, j)) * lambda[j];
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
      r -= BigRational(s.a(t, lambda.size() + j)) * mu[j];
    }
    total += r * r;
  }
  return total;
}

}  // namespace kissing
