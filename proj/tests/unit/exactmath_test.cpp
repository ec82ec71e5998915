#include <doctest.h>

#include <random>
#include <vector>

#include "kissing/bigint.hpp"
#include "kissing/errors.hpp"
#include "kissing/matrix.hpp"
#include "kissing/rational.hpp"

using namespace kissing;

namespace {

// Independent determinant oracle: textbook cofactor expansion along the
// first row.  Exponential, but that is the point -- it shares no code
// with the Bareiss implementation under test.
BigInt det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt acc = 0;
  int sgn = 1;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const BigInt term = m(0, j) * det_cofactor(minor);
    acc += sgn > 0 ? term : -term;
    sgn = -sgn;
  }
  return acc;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("BigInt arithmetic and comparisons") {
  const BigInt a = 42, b = -7;
  CHECK_EQ(a + b, BigInt(35));
  CHECK_EQ(a - b, BigInt(49));
  CHECK_EQ(a * b, BigInt(-294));
  CHECK_EQ(-b, BigInt(7));
  CHECK_EQ(b.abs(), BigInt(7));
  CHECK(a > b);
  CHECK(b < 0);
  CHECK_EQ(BigInt().sign(), 0);
  CHECK(BigInt(0).is_zero());
  CHECK_EQ(a.sign(), 1);
  CHECK_EQ(b.sign(), -1);
}

TEST_CASE("BigInt exact division, gcd, pow") {
  CHECK_EQ(BigInt::div_exact(BigInt(-84), BigInt(7)), BigInt(-12));
  CHECK_EQ(BigInt::gcd(BigInt(-12), BigInt(18)), BigInt(6));
  CHECK_EQ(BigInt::gcd(BigInt(0), BigInt(-5)), BigInt(5));
  CHECK_EQ(BigInt::pow(BigInt(3), 0), BigInt(1));
  CHECK_EQ(BigInt::pow(BigInt(-2), 63).str(), "-9223372036854775808");
}

TEST_CASE("BigInt grows past 64 bits and round-trips through strings") {
  const BigInt big = BigInt::pow(BigInt(10), 40);
  CHECK_EQ(big.str(), "1" + std::string(40, '0'));
  CHECK_EQ(BigInt(big.str()), big);
  CHECK_FALSE(big.fits_int64());

  const BigInt max64 = BigInt::pow(BigInt(2), 63) - 1;
  CHECK(max64.fits_int64());
  CHECK_EQ(max64.to_int64(), INT64_MAX);
  CHECK_FALSE((max64 + 1).fits_int64());
  const BigInt min64 = -BigInt::pow(BigInt(2), 63);
  CHECK(min64.fits_int64());
  CHECK_EQ(min64.to_int64(), INT64_MIN);
  CHECK_FALSE((min64 - 1).fits_int64());
}

TEST_CASE("BigRational canonical form") {
  CHECK_EQ(BigRational(BigInt(6), BigInt(-4)).str(), "-3/2");
  CHECK_EQ(BigRational(BigInt(-6), BigInt(-4)).str(), "3/2");
  CHECK_EQ(BigRational(BigInt(0), BigInt(17)).str(), "0");
  CHECK_EQ(BigRational(BigInt(9), BigInt(3)).str(), "3");
  CHECK_EQ(BigRational(BigInt(6), BigInt(-4)).den(), BigInt(2));
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("BigRational arithmetic") {
  const BigRational half(BigInt(1), BigInt(2));
  const BigRational third(BigInt(1), BigInt(3));
  CHECK_EQ((half + third).str(), "5/6");
  CHECK_EQ((half - third).str(), "1/6");
  CHECK_EQ((half * third).str(), "1/6");
  CHECK_EQ((half / third).str(), "3/2");
  CHECK_EQ((-half).str(), "-1/2");
  CHECK_EQ(half.reciprocal().str(), "2");
  CHECK(third < half);
  CHECK(BigRational(-1) < third);
  CHECK_EQ(BigRational(BigInt(2), BigInt(4)), half);
  CHECK_THROWS_AS(half / BigRational(), std::invalid_argument);
  CHECK_THROWS_AS(BigRational().reciprocal(), std::invalid_argument);
}

TEST_CASE("BigRational parse round-trip") {
  for (const char* text : {"0", "-3/2", "3", "12345678901234567890123/7",
                           "-1/9999999999999999999999"}) {
    CHECK_EQ(BigRational::parse(text).str(), text);
  }
  CHECK_EQ(BigRational::parse("6/-4").str(), "-3/2");
  CHECK_THROWS_AS(BigRational::parse("x/2"), ParseError);
  CHECK_THROWS_AS(BigRational::parse(""), ParseError);
}

TEST_CASE("determinants of fixed matrices") {
  IntMatrix empty(0, 0);
  CHECK_EQ(det_bareiss(empty), BigInt(1));

  IntMatrix one(1, 1);
  one(0, 0) = -13;
  CHECK_EQ(det_bareiss(one), BigInt(-13));

  IntMatrix two(2, 2);
  two(0, 0) = 3; two(0, 1) = 7;
  two(1, 0) = 1; two(1, 1) = -4;
  CHECK_EQ(det_bareiss(two), BigInt(-19));

  // First pivot zero: forces the row swap (and its sign flip).
  IntMatrix swap(2, 2);
  swap(0, 0) = 0; swap(0, 1) = 2;
  swap(1, 0) = 5; swap(1, 1) = 9;
  CHECK_EQ(det_bareiss(swap), BigInt(-10));

  IntMatrix rep(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    rep(0, j) = static_cast<long>(j) + 1;
    rep(2, j) = static_cast<long>(j) + 1;  // row 2 repeats row 0
    rep(1, j) = static_cast<long>(5 - j);
  }
  CHECK_EQ(det_bareiss(rep), BigInt(0));

  CHECK_EQ(det_bareiss(IntMatrix::identity(6)), BigInt(1));

  IntMatrix rect(2, 3);
  CHECK_THROWS_AS(det_bareiss(rect), std::invalid_argument);
}

TEST_CASE("Bareiss determinant equals cofactor expansion") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<std::size_t> size_dist(0, 6);
  int nonzero = 0;
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t n = size_dist(rng);
    const IntMatrix m = random_matrix(rng, n, -9, 9);
    const BigInt expected = det_cofactor(m);
    CHECK_EQ(det_bareiss(m), expected);
    if (!expected.is_zero()) ++nonzero;
  }
  CHECK(nonzero > 1000);  // the suite actually exercises nontrivial cases
}

TEST_CASE("solve_cramer on a fixed system") {
  // 3x + y = 5, x - 2y = -3  =>  x = 1, y = 2
  IntMatrix m(2, 2);
  m(0, 0) = 3; m(0, 1) = 1;
  m(1, 0) = 1; m(1, 1) = -2;
  const std::vector<BigInt> rhs = {5, -3};
  const auto x = solve_cramer(m, rhs);
  REQUIRE_EQ(x.size(), 2);
  CHECK_EQ(x[0], BigRational(1));
  CHECK_EQ(x[1], BigRational(2));
}

TEST_CASE("solve_cramer rejects singular and malformed input") {
  IntMatrix sing(2, 2);
  sing(0, 0) = 2; sing(0, 1) = 4;
  sing(1, 0) = 1; sing(1, 1) = 2;
  const std::vector<BigInt> rhs = {1, 1};
  CHECK_THROWS_AS(solve_cramer(sing, rhs), SingularMatrixError);

  IntMatrix rect(2, 3);
  CHECK_THROWS_AS(solve_cramer(rect, rhs), std::invalid_argument);

  const std::vector<BigInt> short_rhs = {1};
  CHECK_THROWS_AS(solve_cramer(IntMatrix::identity(2), short_rhs),
                  std::invalid_argument);
}

TEST_CASE("solve_cramer solutions satisfy their system exactly") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> size_dist(1, 5);
  int solved = 0;
  while (solved < 1000) {
    const std::size_t n = size_dist(rng);
    const IntMatrix m = random_matrix(rng, n, -20, 20);
    std::uniform_int_distribution<int> bdist(-50, 50);
    std::vector<BigInt> rhs(n);
    for (auto& v : rhs) v = bdist(rng);
    std::vector<BigRational> x;
    try {
      x = solve_cramer(m, rhs);
    } catch (const SingularMatrixError&) {
      CHECK_EQ(det_cofactor(m), BigInt(0));
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      BigRational acc;
      for (std::size_t j = 0; j < n; ++j) acc += BigRational(m(i, j)) * x[j];
      CHECK_EQ(acc, BigRational(rhs[i]));
    }
    ++solved;
  }
}
