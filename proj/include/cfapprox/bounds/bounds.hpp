// SPDX-License-Identifier: Apache-2.0
//
// Approximation bounds |x - p/q| < rhs(q), stored as their right-hand sides.
#pragma once

#include <optional>
#include <string_view>

#include "cfapprox/exact/radical_sum.hpp"

namespace cfapprox::bounds {

enum class BoundKind { dirichlet, hurwitz, hancl_g, vahlen, borel, hancl_nair, nathanson, refined_f };

/// `k` is read by nathanson and refined_f only.
struct BoundSpec {
  BoundKind kind = BoundKind::dirichlet;
  unsigned long k = 1;
};

enum class Outcome { holds_strict, holds_equal, fails };
enum class Strictness { strict, non_strict };

std::string_view name(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view text);
/// "Holds_Strict", "Holds_Equal", "Fails".
std::string_view name(Outcome outcome);

/// refined_f is stated with <=, every classical bound with <.
Strictness default_strictness(BoundKind kind);

/// Right-hand side at q >= 1 (DomainError for q < 1, or k == 0 where k is
/// used).
///
///   dirichlet           1/q^2
///   hurwitz, borel      1/(sqrt(5) q^2)
///   vahlen              1/(2 q^2)
///   nathanson           1/(sqrt(k^2+4) q^2)
///   refined_f           1/f(q) = (sqrt(D q^2 + 4) - q sqrt(D))/(2q), D = k^2+4
///   hancl_g             refined_f at k = 1
///   hancl_nair          1/((sqrt(5) + (4 - 5 sqrt(5) + sqrt(61))/(2 q^2)) q^2)
RadicalSum bound_rhs(const BoundSpec& spec, const BigInt& q);

/// f(q) = (q^2 sqrt(D)/2)(1 + sqrt(1 + 4/(D q^2))), built term by term
/// from the unsimplified expression.
RadicalSum refined_f_value(unsigned long k, const BigInt& q);

/// Trichotomy of err against bound_rhs(spec, q): below, equal, above.
/// err must be nonnegative (DomainError otherwise).
Outcome satisfies(const RadicalSum& err, const BoundSpec& spec, const BigInt& q);

/// Whether an outcome counts as satisfying a bound of the given strictness.
constexpr bool holds(Outcome outcome, Strictness strictness) {
  return outcome == Outcome::holds_strict || (outcome == Outcome::holds_equal && strictness == Strictness::non_strict);
}

/// q^2 sqrt(k^2+4) < f(q) < q^2 sqrt(k^2+4) + 1/sqrt(k^2+4).
bool monotone_refinement_check(unsigned long k, const BigInt& q);

/// Checks the closed form of 1/f(q) against f(q) without trusting it:
/// (2q r + q sqrt(D))^2 == D q^2 + 4 for r = bound_rhs(refined_f), and
/// r * f(q) == 1 as canonical radical sums.
bool reciprocal_form_holds(unsigned long k, const BigInt& q);

}  // namespace cfapprox::bounds
