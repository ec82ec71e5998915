#pragma once

#include <optional>
#include <vector>

namespace kissing {

// Dimensions (n, m) of the two simplices of a candidate pair, n + m = d - 1.
struct Split {
  int n = 0;
  int m = 0;

  friend bool operator==(const Split&, const Split&) = default;
};

// The per-coordinate data of a candidate pair: the values that one fixed
// coordinate axis assigns to the vertices x^1..x^n, x^0 of P and
// y^1..y^m, y^0 of Q.  All values lie in [0, k].
struct GeneratorTuple {
  int x0 = 0;
  std::vector<int> x;  // length n
  int y0 = 0;
  std::vector<int> y;  // length m

  Split split() const {
    return {static_cast<int>(x.size()), static_cast<int>(y.size())};
  }

  friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;
};

// The difference vector a tuple contributes to one row of (A, b):
// (x_1 - x_0, ..., x_n - x_0, y_1 - y_0, ..., y_m - y_0, y_0 - x_0).
struct RawRow {
  std::vector<int> entries;  // length d = n + m + 1, each in [-k, k]
  GeneratorTuple provenance;
};

RawRow raw_row(const GeneratorTuple& g);

// A deduplicated, normalized row: entries divided by the gcd of their
// absolute values and sign-flipped so the first non-zero entry is
// positive.  divisor * (flipped ? -entries : entries) reproduces the raw
// row of the stored provenance tuple.
struct CanonicalRow {
  std::vector<int> entries;  // length d; gcd 1; first non-zero entry > 0
  int divisor = 1;
  bool flipped = false;
  GeneratorTuple provenance;
};

// The full list of distinct canonical rows for one (d, k, split).
struct RowList {
  int d = 0;
  int k = 0;
  Split split;
  std::vector<CanonicalRow> rows;  // sorted lexicographically by entries
};

// Normalizes one raw row.  Returns nullopt for rows that can never be
// part of a minimizing pair: all entries zero, or all entries of the
// A-part (everything except the last entry) zero.  A zero A-part pins
// the residual at that coordinate to |b_j| >= 1, hence a squared
// distance >= 1, always beaten by the known pairs below distance 1.
std::optional<CanonicalRow> canonicalize(const RawRow& r);

// Builds the row list by running canonicalize over all (k+1)^(d+1)
// generator tuples of the split and deduplicating by entries.  Among
// generators producing the same canonical entries, provenance
// preference is: divisor 1 and unflipped, then divisor 1 flipped, then
// anything, first encountered winning inside each class.
// pre: n >= 0, m >= 1, n + m = d - 1, k >= 1.
RowList generate_rows(int d, int k, int n, int m);

// Finds a generator tuple whose raw row equals c.entries exactly (not
// just up to scaling).  Unflipped divisor-1 rows return their
// provenance; flipped divisor-1 rows return the provenance reflected
// through v -> k - v, which negates every difference; rows with
// divisor > 1 fall back to scanning the generator space.  Throws
// NoExactRealizationError when no tuple matches.
GeneratorTuple realize_row(const CanonicalRow& c, int k);

}  // namespace kissing
