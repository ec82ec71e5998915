#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kissing/bigint.hpp"
#include "kissing/errors.hpp"

namespace kissing {

// Exact rational number, always kept canonical: reduced to lowest terms
// with a positive denominator.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long v) : v_(v) {}  // implicit on purpose
  BigRational(const BigInt& v) : v_(v.raw()) {}
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  BigRational(const BigInt& num, const BigInt& den) : v_(num.raw()) {
    if (den.is_zero()) {
      throw std::invalid_argument("BigRational: zero denominator");
    }
    v_ /= mpq_class(den.raw());
  }

  // Accepts "n" or "n/d" with optional leading minus signs.
  static BigRational parse(std::string_view text);

  BigInt num() const { return BigInt(v_.get_num()); }
  BigInt den() const { return BigInt(v_.get_den()); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::invalid_argument("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { a += b; return a; }
  friend BigRational operator-(BigRational a, const BigRational& b) { a -= b; return a; }
  friend BigRational operator*(BigRational a, const BigRational& b) { a *= b; return a; }
  friend BigRational operator/(BigRational a, const BigRational& b) { a /= b; return a; }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }

  BigRational reciprocal() const {
    if (is_zero()) throw std::invalid_argument("BigRational: reciprocal of zero");
    BigRational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <=> 0;
  }

  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }

  double to_double() const { return v_.get_d(); }

  // "n" when the denominator is one, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x) {
    return os << x.str();
  }

private:
  mpq_class v_;
};

inline BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRational(BigInt(std::string(text)));
    }
    const BigInt num{std::string(text.substr(0, slash))};
    const BigInt den{std::string(text.substr(slash + 1))};
    return BigRational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
}

}  // namespace kissing
