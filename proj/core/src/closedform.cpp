#include "kissing/closedform.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "kissing/bigint.hpp"
#include "kissing/errors.hpp"

namespace kissing {
namespace {

using std::int64_t;
using i128 = __int128;

// Running minimum of positive fractions num2/den kept in machine words;
// the scanned values are far below the overflow range, and comparisons
// cross-multiply in 128 bits.
struct MinFraction {
  std::optional<std::pair<int64_t, int64_t>> best;

  void offer(int64_t num2, int64_t den) {
    if (!best || static_cast<i128>(num2) * best->second <
                     static_cast<i128>(best->first) * den)
      best = {num2, den};
  }

  BigRational value() const {
    return BigRational(BigInt(best->first), BigInt(best->second));
  }
};

}  // namespace

BigRational epsilon2_squared(int k) {
  if (k < 1) throw std::invalid_argument("epsilon2_squared: k must be >= 1");
  if (k == 1) return BigRational(BigInt(1), BigInt(2));
  const auto kk = static_cast<long long>(k);
  return BigRational(BigInt(1), BigInt((kk - 1) * (kk - 1) + kk * kk));
}

BigRational min_quotient_2d_squared(int k) {
  if (k < 1)
    throw std::invalid_argument("min_quotient_2d_squared: k must be >= 1");
  MinFraction min;
  for (int x1 = -k; x1 <= k; ++x1) {
    for (int x2 = -k; x2 <= k; ++x2) {
      const int64_t den =
          static_cast<int64_t>(x1) * x1 + static_cast<int64_t>(x2) * x2;
      if (den == 0) continue;
      for (int x3 = -k; x3 <= k; ++x3) {
        for (int x4 = -k; x4 <= k; ++x4) {
          const int64_t num =
              static_cast<int64_t>(x2) * x3 - static_cast<int64_t>(x1) * x4;
          if (num == 0) continue;
          min.offer(num * num, den);
        }
      }
    }
  }
  return min.value();  // x = (1, 0, 1, 0) is always a positive witness
}

BigRational min_quotient_3d_squared(int k, bool allow_large) {
  if (k < 1)
    throw std::invalid_argument("min_quotient_3d_squared: k must be >= 1");
  if (k > 3 && !allow_large)
    throw ResourceGuardError(
        "min_quotient_3d_squared: the scan is (2k+1)^9 steps; pass "
        "allow_large for k > 3");
  MinFraction min;
  // Columns (x1,x2,x3) and (x4,x5,x6) form A; expanding det([A | b])
  // along b = (x7,x8,x9) reuses the three 2x2 minors whose squares sum
  // to det(A^t A).
  for (int x1 = -k; x1 <= k; ++x1)
    for (int x2 = -k; x2 <= k; ++x2)
      for (int x3 = -k; x3 <= k; ++x3)
        for (int x4 = -k; x4 <= k; ++x4)
          for (int x5 = -k; x5 <= k; ++x5)
            for (int x6 = -k; x6 <= k; ++x6) {
              const int64_t m1 = static_cast<int64_t>(x2) * x6 -
                                 static_cast<int64_t>(x3) * x5;
              const int64_t m2 = static_cast<int64_t>(x1) * x6 -
                                 static_cast<int64_t>(x3) * x4;
              const int64_t m3 = static_cast<int64_t>(x1) * x5 -
                                 static_cast<int64_t>(x2) * x4;
              const int64_t den = m1 * m1 + m2 * m2 + m3 * m3;
              if (den == 0) continue;
              for (int x7 = -k; x7 <= k; ++x7)
                for (int x8 = -k; x8 <= k; ++x8)
                  for (int x9 = -k; x9 <= k; ++x9) {
                    const int64_t num = x7 * m1 - x8 * m2 + x9 * m3;
                    if (num == 0) continue;
                    min.offer(num * num, den);
                  }
            }
  return min.value();
}

BigRational segment_pair_3k_squared(int k) {
  if (k < 2)
    throw std::invalid_argument("segment_pair_3k_squared: k must be >= 2");
  const auto kk = static_cast<long long>(k);
  const long long a = 2 * kk * kk - 4 * kk + 5;
  const long long b = 2 * kk * kk - 2 * kk + 1;
  return BigRational(BigInt(1), BigInt(2) * BigInt(a) * BigInt(b));
}

}  // namespace kissing
