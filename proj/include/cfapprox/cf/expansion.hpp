// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfapprox/exact/big_rat.hpp"
#include "cfapprox/exact/quad_surd.hpp"
#include "cfapprox/exact/radical_sum.hpp"

namespace cfapprox::cf {

/// Simple continued fraction [a0; a1, ..., ah, (p1, ..., pr)].
///
/// Canonical form is enforced by the factories: partial quotients after a0
/// are positive, a finite expansion never ends in 1 (unless it is just a0),
/// and a periodic one carries its minimal period with the shortest head.
class CFExpansion {
 public:
  /// [a0]
  CFExpansion() = default;

  /// Finite [a0; quotients...]; a trailing 1 is folded into its
  /// predecessor. Throws DomainError on a non-positive quotient.
  static CFExpansion finite(BigInt a0, std::vector<BigInt> quotients);
  /// [a0; head..., (period...)]. Throws DomainError on a non-positive
  /// quotient or an empty period.
  static CFExpansion periodic(BigInt a0, std::vector<BigInt> head, std::vector<BigInt> period);

  const BigInt& a0() const { return a0_; }
  const std::vector<BigInt>& head() const { return head_; }
  const std::optional<std::vector<BigInt>>& period() const { return period_; }
  bool is_finite() const { return !period_.has_value(); }

  /// a_i; i = 0 is a0. Throws RangeError past the end of a finite expansion.
  const BigInt& quotient(std::size_t i) const;

  /// "[a0;a1,a2,(p1,p2)]"; "[a0]" for a bare integer.
  std::string to_string() const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;

 private:
  BigInt a0_;
  std::vector<BigInt> head_;
  std::optional<std::vector<BigInt>> period_;
};

/// (n, p_n, q_n). Consecutive convergents satisfy
/// q_{n+1} p_n - p_{n+1} q_n = (-1)^(n+1).
struct Convergent {
  std::size_t n = 0;
  BigInt p;
  BigInt q;

  BigRat value() const { return BigRat(p, q); }
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Euclidean expansion; always finite.
CFExpansion expand_rational(const BigRat& x);

/// Eventually periodic expansion of an irrational surd. Cycle detection runs
/// on the complete-quotient states (P + sqrt(D))/Q. Throws DomainError for a
/// rational input (use expand_rational).
CFExpansion expand_surd(const QuadSurd& x);

/// Convergents 0..count. Throws RangeError when `count` exceeds a finite
/// expansion.
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count);

/// Exact value of a finite expansion. DomainError for periodic input.
BigRat rational_value(const CFExpansion& cf);

/// Exact value of a periodic expansion. DomainError for finite input.
QuadSurd surd_value(const CFExpansion& cf);

/// Value of the purely periodic [(p1; ..., pr)], the positive root of
/// q y^2 + (q' - p) y - p' = 0 built from the block's convergent matrix.
QuadSurd purely_periodic_value(const std::vector<BigInt>& period);

/// [a_{n+1}; a_{n+2}, ...] exactly. Throws DomainError for finite cf.
QuadSurd tail_value(const CFExpansion& cf, std::size_t n);

/// [0; a_n, a_{n-1}, ..., a_1], evaluated directly; 0 when n == 0.
BigRat reversed_tail(const CFExpansion& cf, std::size_t n);

/// |x - p_n/q_n|, computed directly and through
///   1 / (q_n^2 ([a_{n+1}; ...] + [0; a_n, ..., a_1]))
/// with the two required to agree exactly (InvariantViolation otherwise).
/// cf must be the expansion of x (DomainError otherwise).
RadicalSum error_identity(const QuadSurd& x, const CFExpansion& cf, std::size_t n);

}  // namespace cfapprox::cf
