#include "kissing/combinatorics.hpp"

#include <algorithm>
#include <cassert>

namespace kissing {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<u128> u128_from_string(std::string_view text) {
  if (text.empty()) return std::nullopt;
  u128 v = 0;
  for (const char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (v > (kU128Max - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  return v;
}

u128 binomial_u128(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  u128 acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    // Multiply before dividing: each prefix product acc * (n-r+i) is
    // i! times a binomial coefficient, so the division is exact.
    const u128 factor = n - r + i;
    if (acc > kU128Max / factor) return kU128Max;
    acc = acc * factor / i;
  }
  return acc;
}

BigInt binomial_exact(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (unsigned long i = 1; i <= r; ++i) {
    acc = BigInt::div_exact(acc * BigInt(static_cast<long>(n - r + i)),
                            BigInt(static_cast<long>(i)));
  }
  return acc;
}

void unrank_combination(u128 rank, unsigned n, unsigned r, std::span<int> out) {
  assert(out.size() == r);
  assert(rank < binomial_u128(n, r));
  // Greedy digit-by-digit: the subsets starting with value v number
  // C(n-1-v, r-1), taken in increasing v.
  unsigned value = 0;
  for (unsigned pos = 0; pos < r; ++pos) {
    for (;; ++value) {
      const u128 block = binomial_u128(n - 1 - value, r - 1 - pos);
      if (rank < block) break;
      rank -= block;
    }
    out[pos] = static_cast<int>(value);
    ++value;
  }
}

u128 rank_combination(std::span<const int> comb, unsigned n) {
  const unsigned r = static_cast<unsigned>(comb.size());
  u128 rank = 0;
  int prev = -1;
  for (unsigned pos = 0; pos < r; ++pos) {
    assert(comb[pos] > prev && static_cast<unsigned>(comb[pos]) < n);
    for (int v = prev + 1; v < comb[pos]; ++v) {
      rank += binomial_u128(n - 1 - static_cast<unsigned>(v), r - 1 - pos);
    }
    prev = comb[pos];
  }
  return rank;
}

bool next_combination(std::span<int> comb, unsigned n) {
  const int r = static_cast<int>(comb.size());
  int i = r - 1;
  while (i >= 0 && comb[i] == static_cast<int>(n) - r + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

}  // namespace kissing
