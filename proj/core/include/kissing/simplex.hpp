#pragma once

#include <vector>

namespace kissing {

// A pair of candidate simplices with vertices on the lattice {0..k}^d.
// Vertex lists are ordered; affine independence is not required by the
// type and is checked only where an algorithm needs it.
struct SimplexPair {
  int k = 0;
  std::vector<std::vector<int>> p;  // n+1 vertices
  std::vector<std::vector<int>> q;  // m+1 vertices

  friend bool operator==(const SimplexPair&, const SimplexPair&) = default;
};

// Ambient dimension (length of the vertex vectors).  pre: validated pair.
int ambient_dim(const SimplexPair& pair);

// Checks the type invariants: k >= 1, both vertex lists non-empty, all
// vertices of one common dimension >= 1, every coordinate in [0, k].
// Throws std::invalid_argument on violation.
void validate(const SimplexPair& pair);

}  // namespace kissing
