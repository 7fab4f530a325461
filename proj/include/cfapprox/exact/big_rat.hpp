// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "cfapprox/exact/integer.hpp"

namespace cfapprox {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  template <class Expr>
  BigRat(const __gmp_expr<mpz_t, Expr>& e) : value_(mpz_class(e)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den == 0.
  BigRat(const BigInt& num, const BigInt& den);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  BigRat abs() const;
  /// Throws DomainError on zero.
  BigRat reciprocal() const;

  /// "num/den", always with an explicit denominator.
  std::string to_string() const;

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  struct Raw {};
  BigRat(Raw, mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& r);

}  // namespace cfapprox
