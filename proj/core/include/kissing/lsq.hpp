#pragma once

#include <span>
#include <vector>

#include "kissing/matrix.hpp"
#include "kissing/rational.hpp"
#include "kissing/rowgen.hpp"
#include "kissing/simplex.hpp"

namespace kissing {

// The linear model of one candidate pair: column j <= n of A holds
// p^j - p^0, columns n+1..n+m hold q^j - q^0, and b = q^0 - p^0.  For
// full candidate systems A is d x (d-1); restrictions to faces (oracle
// use) have fewer columns, so only n + m = cols is enforced here.
struct PairSystem {
  IntMatrix a;
  std::vector<BigInt> b;
  Split split;
};

// Assembles the system whose rows are the chosen canonical rows of the
// list.  pre: subset strictly increasing, size d, valid indices.
PairSystem make_system(const RowList& list, std::span<const int> subset);

// Assembles the system of a concrete vertex pair.
PairSystem make_system(const SimplexPair& pair);

// The Gram matrix A^t A.
IntMatrix gram(const PairSystem& s);

// A^t b, the projected right-hand side of the normal equations.
std::vector<BigInt> projected_rhs(const PairSystem& s);

// The unique minimizer of |A chi - b|^2 over all of R^(n+m), when it
// exists.  chi holds (lambda_1..lambda_n, -mu_1..-mu_m).
struct AffineSolution {
  bool singular = false;
  std::vector<BigRational> chi;      // empty when singular
  BigRational squared_distance;      // meaningless when singular
};

// Solves the normal equations A^t A chi = A^t b exactly.  Reports
// singular (not an error) when det(A^t A) = 0; otherwise the squared
// affine-hull distance is b^t b - b^t A chi, which equals |A chi - b|^2
// by residual orthogonality.
AffineSolution affine_distance(const PairSystem& s);

// The certificate that the affine-hull distance is attained by the
// polytopes themselves: lambda part of chi non-negative summing to at
// most 1, mu part (stored negated) non-positive summing to at least -1.
// pre: sol not singular (throws std::invalid_argument otherwise).
bool sharpness_check(const AffineSolution& sol, const Split& split);

// |A chi - b|^2 at an arbitrary rational point, chi built as
// (lambda, -mu).  pre: vector lengths match s.split.
BigRational objective_value(const PairSystem& s,
                            std::span<const BigRational> lambda,
                            std::span<const BigRational> mu);

}  // namespace kissing
