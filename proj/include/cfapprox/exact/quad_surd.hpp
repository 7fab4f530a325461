// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "cfapprox/exact/big_rat.hpp"
#include "cfapprox/exact/integer.hpp"

namespace cfapprox {

/// (a + b*sqrt(d)) / c in canonical form: c > 0, d squarefree,
/// gcd(a, b, c) = 1, and b == 0 exactly when d == 1.
///
/// Field-wise equality coincides with equality of the real values.
class QuadSurd {
 public:
  /// Zero.
  QuadSurd();
  /// Rational embedding (d = 1).
  QuadSurd(const BigRat& r);  // NOLINT(google-explicit-constructor)

  /// Canonicalizes (a + b*sqrt(d))/c. Throws DomainError when c == 0 or d < 1.
  static QuadSurd normalize(BigInt a, BigInt b, BigInt c, BigInt d);
  /// sqrt(n) for n >= 0.
  static QuadSurd sqrt(const BigInt& n);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Throws DomainError unless is_rational().
  BigRat to_rational() const;

  int sign() const;
  /// Exact floor, integer bracketing of sqrt(d) only.
  BigInt floor() const;
  QuadSurd abs() const { return sign() < 0 ? -*this : *this; }
  /// (a - b*sqrt(d)) / c
  QuadSurd conjugate() const;
  /// Throws DomainError on zero.
  QuadSurd reciprocal() const;

  /// "(a+b*sqrt(d))/c", the number-spec surd syntax.
  std::string to_string() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

 private:
  QuadSurd(BigInt a, BigInt b, BigInt c, BigInt d);
  // Sign and gcd normalization only; d must already be squarefree.
  static QuadSurd reduce(BigInt a, BigInt b, BigInt c, BigInt d);
  static const BigInt& common_field(const QuadSurd& x, const QuadSurd& y);

  BigInt a_;
  BigInt b_;
  BigInt c_;
  BigInt d_;
};

enum class ArithOp { add, sub, mul, div };

/// Exact arithmetic in Q(sqrt(d)). Both operands must share d unless one is
/// rational; mixed fields and division by zero raise DomainError.
QuadSurd surd_arith(const QuadSurd& x, const QuadSurd& y, ArithOp op);

std::ostream& operator<<(std::ostream& os, const QuadSurd& x);

}  // namespace cfapprox
