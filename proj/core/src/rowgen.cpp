#include "kissing/rowgen.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "kissing/errors.hpp"

namespace kissing {
namespace {

// Provenance quality, lower is better; ties keep the first tuple seen.
int preference(const CanonicalRow& c) {
  if (c.divisor == 1 && !c.flipped) return 0;
  if (c.divisor == 1) return 1;
  return 2;
}

GeneratorTuple reflect(const GeneratorTuple& g, int k) {
  GeneratorTuple r = g;
  r.x0 = k - r.x0;
  r.y0 = k - r.y0;
  for (int& v : r.x) v = k - v;
  for (int& v : r.y) v = k - v;
  return r;
}

// Iterates every generator tuple of the split in a fixed odometer order
// (x0, x, y0, y as one little-endian counter) and hands it to visit.
// Returning false from visit stops the iteration early.
template <typename Visit>
void for_each_tuple(int k, int n, int m, Visit&& visit) {
  GeneratorTuple g;
  g.x.assign(static_cast<std::size_t>(n), 0);
  g.y.assign(static_cast<std::size_t>(m), 0);
  std::vector<int*> digits;
  digits.reserve(static_cast<std::size_t>(n + m) + 2);
  digits.push_back(&g.x0);
  for (int& v : g.x) digits.push_back(&v);
  digits.push_back(&g.y0);
  for (int& v : g.y) digits.push_back(&v);
  for (;;) {
    if (!visit(std::as_const(g))) return;
    std::size_t i = 0;
    while (i < digits.size() && *digits[i] == k) *digits[i++] = 0;
    if (i == digits.size()) return;
    ++*digits[i];
  }
}

}  // namespace

RawRow raw_row(const GeneratorTuple& g) {
  RawRow r;
  r.entries.reserve(g.x.size() + g.y.size() + 1);
  for (const int xi : g.x) r.entries.push_back(xi - g.x0);
  for (const int yi : g.y) r.entries.push_back(yi - g.y0);
  r.entries.push_back(g.y0 - g.x0);
  r.provenance = g;
  return r;
}

std::optional<CanonicalRow> canonicalize(const RawRow& r) {
  const std::size_t d = r.entries.size();
  bool a_part_zero = true;
  int g = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (r.entries[i] != 0 && i + 1 < d) a_part_zero = false;
    g = std::gcd(g, std::abs(r.entries[i]));
  }
  if (a_part_zero) return std::nullopt;  // covers the all-zero row too

  CanonicalRow c;
  c.entries = r.entries;
  c.divisor = g;
  c.provenance = r.provenance;
  for (int& v : c.entries) v /= g;
  for (const int v : c.entries) {
    if (v == 0) continue;
    if (v < 0) {
      c.flipped = true;
      for (int& w : c.entries) w = -w;
    }
    break;
  }
  return c;
}

RowList generate_rows(int d, int k, int n, int m) {
  if (k < 1 || n < 0 || m < 1 || n + m != d - 1) {
    throw std::invalid_argument("generate_rows: invalid split");
  }
  // Keyed by canonical entries; the map's order is already the final
  // lexicographic row order.
  std::map<std::vector<int>, CanonicalRow> dedup;
  for_each_tuple(k, n, m, [&](const GeneratorTuple& g) {
    if (auto c = canonicalize(raw_row(g))) {
      auto [it, inserted] = dedup.try_emplace(c->entries, *c);
      if (!inserted && preference(*c) < preference(it->second)) {
        it->second = std::move(*c);
      }
    }
    return true;
  });

  RowList list;
  list.d = d;
  list.k = k;
  list.split = {n, m};
  list.rows.reserve(dedup.size());
  for (auto& [entries, row] : dedup) list.rows.push_back(std::move(row));
  return list;
}

GeneratorTuple realize_row(const CanonicalRow& c, int k) {
  if (c.divisor == 1) {
    return c.flipped ? reflect(c.provenance, k) : c.provenance;
  }
  const Split split = c.provenance.split();
  std::optional<GeneratorTuple> found;
  for_each_tuple(k, split.n, split.m, [&](const GeneratorTuple& g) {
    if (raw_row(g).entries == c.entries) {
      found = g;
      return false;
    }
    return true;
  });
  if (!found) {
    throw NoExactRealizationError(
        "realize_row: no generator tuple reproduces the reduced row");
  }
  return *found;
}

}  // namespace kissing
