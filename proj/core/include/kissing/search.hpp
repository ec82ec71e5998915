#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "kissing/combinatorics.hpp"
#include "kissing/rational.hpp"
#include "kissing/rowgen.hpp"
#include "kissing/simplex.hpp"

namespace kissing {

enum class Kernel {
  fast,   // machine integers with overflow checks, per-subset exact fallback
  naive,  // arbitrary-precision normal equations for every subset
};

struct SearchConfig {
  int worker_count = 1;
  Kernel kernel = Kernel::fast;
  // Progress lines go to *progress every progress_interval subsets;
  // either zero disables them.
  u128 progress_interval = 0;
  std::ostream* progress = nullptr;
  // Start the scan at this global subset index (checkpoint restart).
  std::optional<u128> resume_token;
  // Stop after consuming this many subsets.
  std::optional<u128> max_subsets;
};

struct SearchStats {
  u128 subsets_evaluated = 0;
  u128 singular_count = 0;
  u128 zero_count = 0;
  double elapsed_seconds = 0.0;
};

// Outcome of scanning (a window of) the d-subsets of one row list.
struct RangeMinimum {
  bool found = false;            // some positive value was seen
  BigRational squared;           // the smallest one (when found)
  std::vector<int> row_indices;  // its lexicographically first subset
  bool complete = false;         // the window covered the whole space
  SearchStats stats;
};

// Scans C(|L|, d) subsets in lexicographic index order: each subset
// forms a PairSystem from the chosen canonical rows, singular and zero
// results are skipped (counted), and the minimum positive squared
// affine distance is reduced with a first-in-enumeration-order
// tie-break.  The subset range is processed in fixed-size chunks
// claimed by worker threads; chunk results merge in chunk order, so the
// outcome does not depend on worker_count.  Throws EmptySearchError
// when |L| < d.
RangeMinimum enumerate_min(const RowList& list, const SearchConfig& config);

// All simplex-dimension splits scanned for one d: n + m = d - 1 with
// 0 <= n <= m; there are floor((d+1)/2) of them.
std::vector<Split> splits(int d);

// The three search-space sizes discussed alongside the row-list
// strategy: the raw point enumeration, its best-case quotient under the
// hypercube symmetry group (floor division), and the row-list count.
struct SearchSpaceCounts {
  BigInt naive;
  BigInt symmetry_limit;
  BigInt rowlist;
};
SearchSpaceCounts search_space_counts(int d, int k, long row_count);

struct SearchResult {
  int d = 0;
  int k = 0;
  BigRational min_squared_distance;
  BigRational inv_eps_squared;
  bool certified = false;
  bool complete = false;  // no part of the space was skipped
  Split witness_split;
  std::vector<int> witness_row_indices;
  std::optional<SimplexPair> witness;
  SearchStats stats;
};

// The full pipeline: for every split, generate the row list and run
// enumerate_min; take the overall minimum (ties: first split wins);
// re-solve the winning subset exactly; reconstruct the witness pair;
// certify via the sharpness conditions and the independent simplex
// distance.  certified also requires complete: a resumed or capped run
// reports a bound only.  resume_token and max_subsets address the
// concatenation of all split ranges in splits(d) order.  Throws
// NoCandidateError when the scanned window contains no positive value.
SearchResult epsilon(int d, int k, const SearchConfig& config = {});

// Rebuilds the witness vertex lists from the winning rows: coordinate j
// of the vertices comes from the generator tuple realizing the j-th
// chosen row (p^0_j = x0, p^i_j = x_i, q^0_j = y0, q^i_j = y_i).
// Propagates NoExactRealizationError.
SimplexPair reconstruct_witness(const RowList& list,
                                std::span<const int> row_indices, int k);
SimplexPair reconstruct_witness(const SearchResult& result,
                                const RowList& list, int k);

}  // namespace kissing
