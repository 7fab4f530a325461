// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>

#include "cfapprox/exact/big_rat.hpp"
#include "cfapprox/exact/integer.hpp"
#include "cfapprox/exact/quad_surd.hpp"

namespace cfapprox {

/// c0 + sum_i coef_i * sqrt(rad_i).
///
/// Canonical form: no zero coefficients, no perfect-square radicand, and no
/// two radicands whose product is a perfect square (square classes are
/// distinct). Square parts are folded into the coefficient; for radicands
/// above 2^48 a square of a prime beyond 2^16 may remain inside the radicand,
/// which changes the representative but never the square class. Because
/// square roots from distinct square classes are linearly independent over
/// Q, the value is zero iff the canonical form is empty.
class RadicalSum {
 public:
  using Terms = std::map<BigInt, BigRat>;

  RadicalSum() = default;
  RadicalSum(long c) : c0_(c) {}              // NOLINT(google-explicit-constructor)
  RadicalSum(const BigInt& c) : c0_(c) {}     // NOLINT(google-explicit-constructor)
  RadicalSum(const BigRat& c) : c0_(c) {}     // NOLINT(google-explicit-constructor)
  RadicalSum(const QuadSurd& x);              // NOLINT(google-explicit-constructor)

  /// sqrt(n), n >= 0.
  static RadicalSum sqrt(const BigInt& n);
  static RadicalSum sqrt(long n) { return sqrt(BigInt(n)); }
  /// sqrt(r), r >= 0, as sqrt(num*den)/den.
  static RadicalSum sqrt(const BigRat& r);
  /// coef * sqrt(radicand), radicand >= 1.
  static RadicalSum term(const BigRat& coef, const BigInt& radicand);

  const BigRat& constant() const { return c0_; }
  const Terms& terms() const { return terms_; }
  std::size_t radical_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty() && c0_.is_zero(); }
  bool is_rational() const { return terms_.empty(); }
  /// Throws DomainError unless is_rational().
  BigRat to_rational() const;

  /// Exact inverse, denominator cleared by successive conjugation.
  /// Throws DomainError on zero.
  RadicalSum reciprocal() const;

  std::string to_string() const;

  RadicalSum operator-() const;
  RadicalSum& operator+=(const RadicalSum& o);
  RadicalSum& operator-=(const RadicalSum& o);
  RadicalSum& operator*=(const RadicalSum& o);
  RadicalSum& operator/=(const RadicalSum& o) { return *this *= o.reciprocal(); }

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator/(RadicalSum a, const RadicalSum& b) { return a /= b; }

  /// Structural equality of canonical forms.
  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

 private:
  friend struct RadicalAccess;

  // `reduced` radicands skip trial division; only a perfect-square test runs.
  void add_term(BigRat coef, BigInt radicand, bool reduced);

  BigRat c0_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const RadicalSum& s);

/// Precision schedule for radical_sign().
struct SignOptions {
  unsigned start_bits = 64;
  unsigned cap_bits = 1u << 14;
};

/// Maximum radical terms accepted by radical_sign().
inline constexpr std::size_t kMaxSignTerms = 4;

/// Exact sign of s. Interval evaluation at doubling precision first; past
/// the cap, the recursive-squaring procedure decides. Throws
/// UnsupportedExpression for more than kMaxSignTerms radicals.
int radical_sign(const RadicalSum& s, const SignOptions& opts = {});

/// radical_sign(a - b).
int compare(const RadicalSum& a, const RadicalSum& b);

/// Enclosure lo < value < hi from square roots truncated to `bits`
/// fractional bits (lo == hi == value when s is rational).
struct Enclosure {
  BigRat lo;
  BigRat hi;
};
Enclosure enclose(const RadicalSum& s, unsigned bits);

/// Exact sign by isolating sqrt(g) for a base g coprime to every other
/// radicand factor, squaring, and recursing on sums without g. No term
/// limit.
int symbolic_sign(const RadicalSum& s);

/// Correctly rounded decimal with `digits` significant digits, in
/// "d.ddd...e+XX" form; "0" for zero.
std::string to_decimal(const RadicalSum& s, unsigned digits = 50);

}  // namespace cfapprox
