// SPDX-License-Identifier: Apache-2.0
//
// Inputs to the verification layer: exact numbers and decimal prefixes.
#pragma once

#include <variant>
#include <vector>

#include "cfapprox/cf/expansion.hpp"
#include "cfapprox/exact/big_rat.hpp"
#include "cfapprox/exact/quad_surd.hpp"

namespace cfapprox::verify {

/// A real known only to lie within 10^-precision of `value`.
struct DecimalPrefix {
  BigRat value;
  unsigned precision = 0;
  friend bool operator==(const DecimalPrefix&, const DecimalPrefix&) = default;
};

using Number = std::variant<BigRat, QuadSurd, cf::CFExpansion, DecimalPrefix>;

/// A number whose expansion is fully known. Rational surds and finite
/// expansions resolve to BigRat.
struct ExactNumber {
  std::variant<BigRat, QuadSurd> value;
  cf::CFExpansion cf;

  bool is_rational() const { return std::holds_alternative<BigRat>(value); }
  /// |x - p/q|, always nonnegative.
  RadicalSum error(const cf::Convergent& c) const;
  /// x - floor(x).
  std::variant<BigRat, QuadSurd> fractional_part() const;
};

/// DomainError for a decimal prefix: finite-precision input carries no
/// exact expansion.
ExactNumber resolve(const Number& x);
bool is_exact(const Number& x);

/// Partial quotients shared by every real in [value - 10^-p, value + 10^-p].
std::vector<BigInt> certain_prefix(const DecimalPrefix& x);

}  // namespace cfapprox::verify
