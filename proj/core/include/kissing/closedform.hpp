#pragma once

#include "kissing/rational.hpp"

namespace kissing {

// Closed forms and small exhaustive scans that cross-check the search
// pipeline from the outside.

// The planar value: eps(2, 1)^2 = 1/2, and 1/((k-1)^2 + k^2) for k >= 2.
// pre: k >= 1.
BigRational epsilon2_squared(int k);

// Smallest positive (x2 x3 - x1 x4)^2 / (x1^2 + x2^2) over x in
// {-k..k}^4: the planar distance quotient, scanned exhaustively.
// Coincides with epsilon2_squared on every k checked.  pre: k >= 1.
BigRational min_quotient_2d_squared(int k);

// The spatial analogue: smallest positive det([A | b])^2 / det(A^t A)
// over 3x3 matrices with entries in {-k..k}, where A is the first two
// columns.  A lower bound for the spatial squared distance, attained at
// k = 1 but strictly below it from k = 2 on (the box scan ignores the
// lattice-polytope structure).  The scan is (2k+1)^9 steps; k > 3 is
// refused unless allow_large is set.  pre: k >= 1.
BigRational min_quotient_3d_squared(int k, bool allow_large = false);

// Squared distance of the standard spatial segment pair for k >= 2:
// 1 / (2 (2k^2 - 4k + 5) (2k^2 - 2k + 1)).  Equals the spatial value
// at k = 2 and k >= 4; at k = 3 an exceptional pair does better.
BigRational segment_pair_3k_squared(int k);

}  // namespace kissing
