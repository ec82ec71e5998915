#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kissing/bigint.hpp"

namespace kissing {

// Subset counts overflow 64 bits well inside the supported parameter
// range (e.g. C(3024, 7) needs 69 bits), so indices into the enumeration
// order are carried as unsigned 128-bit integers.
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

std::string u128_to_string(u128 v);
std::optional<u128> u128_from_string(std::string_view text);

// C(n, r), saturating at kU128Max instead of overflowing.
u128 binomial_u128(unsigned n, unsigned r);

// C(n, r) without any size limit.
BigInt binomial_exact(unsigned long n, unsigned long r);

// Lexicographic enumeration of r-subsets of {0, ..., n-1}, each subset
// written as a strictly increasing index vector.

// Fills out with the subset of the given rank.  pre: rank < C(n, r).
void unrank_combination(u128 rank, unsigned n, unsigned r, std::span<int> out);

// Rank of a subset in the enumeration.  pre: comb is strictly increasing
// with entries below n.
u128 rank_combination(std::span<const int> comb, unsigned n);

// Advances comb to its lexicographic successor.  Returns false (leaving
// comb unspecified) when comb was already the last subset.
bool next_combination(std::span<int> comb, unsigned n);

}  // namespace kissing
