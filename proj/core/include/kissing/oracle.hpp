#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kissing/bigint.hpp"
#include "kissing/rational.hpp"
#include "kissing/simplex.hpp"

namespace kissing {

// One entry of the known-pairs catalog.
struct WitnessFixture {
  int d = 0;
  int k = 0;
  SimplexPair pair;
  // 1/distance^2; loaded catalogs always carry it, hand-written witness
  // files may omit it.
  std::optional<BigInt> expected_inv_squared;
};

// Exact squared distance between two simplices, independent of the
// search pipeline: enumerates every pair of non-empty vertex subsets,
// solves the affine minimization restricted to those faces, keeps the
// candidates whose barycentric coefficients are feasible (closed
// conditions), and returns the smallest one.  Returns 0 when the hulls
// intersect.  Intended for small instances (|P| + |Q| <= 8 or so).
BigRational simplex_distance_squared(const SimplexPair& pair);

struct BruteForceResult {
  BigRational squared;
  SimplexPair witness;
};

// Reference computation straight from the definition: enumerates all
// (d+1)-point subsets of {0..k}^d, splits each into vertex sets of
// sizes n+1 and m+1 with n+m = d-1, and takes the smallest positive
// simplex distance.  Guarded: C((k+1)^d, d+1) must not exceed 10^6.
BruteForceResult brute_force_epsilon(int d, int k);

// Parses fixtures from JSON text: either a catalog object with a
// "fixtures" array, a single fixture object, or a bare pair object
// {"P": [...], "Q": [...]} with optional "k" and "expected_inv_sq".
// Throws ParseError on malformed input.
std::vector<WitnessFixture> parse_witness_json(const std::string& text);

// Loads the catalog shipped with the repository.  The optional path
// argument overrides the built-in location, as does the KISSING_CATALOG
// environment variable; every fixture must carry its expected value.
std::vector<WitnessFixture> witness_catalog();
std::vector<WitnessFixture> witness_catalog(const std::string& path);

}  // namespace kissing
