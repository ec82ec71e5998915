#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace kissing {

// Arbitrary-precision signed integer.  A thin value wrapper around GMP so
// the rest of the library never sees gmpxx expression templates in its
// own signatures.
class BigInt {
public:
  BigInt() : v_(0) {}
  BigInt(long v) : v_(v) {}  // implicit on purpose: integer literals
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal) : v_(decimal, 10) {}

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
  friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
  friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) <=> 0;
  }

  int sign() const { return mpz_sgn(v_.get_mpz_t()); }
  bool is_zero() const { return sign() == 0; }
  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }

  // Quotient of an exact division; the caller guarantees b != 0 and b | a.
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
  }

  // Floor division (rounds toward -inf); the caller guarantees b != 0.
  static BigInt div_floor(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_q(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
  }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
  }

  static BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), exp);
    return r;
  }

  bool fits_int64() const { return mpz_fits_slong_p(v_.get_mpz_t()) != 0; }
  std::int64_t to_int64() const { return v_.get_si(); }  // pre: fits_int64()
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  const mpz_class& raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x) {
    return os << x.v_;
  }

private:
  mpz_class v_;
};

}  // namespace kissing
