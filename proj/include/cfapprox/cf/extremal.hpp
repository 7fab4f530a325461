// SPDX-License-Identifier: Apache-2.0
//
// The two extremal numbers of the refined approximation bound and the
// closed forms for their convergents.
#pragma once

#include <cstddef>

#include "cfapprox/exact/quad_surd.hpp"

namespace cfapprox::cf {

enum class ExtremalFamily { alpha1, alpha2 };

/// (sqrt(k^2+4) - k)/2 = [0; (k)]. DomainError for k == 0.
QuadSurd alpha1(unsigned long k);

/// (k + 2 - sqrt(k^2+4))/2 = [0; 1, k-1, (k)] for k >= 2. For k == 1 the
/// zero quotient folds away and the canonical expansion is [0; 2, (1)].
QuadSurd alpha2(unsigned long k);

QuadSurd extremal(ExtremalFamily family, unsigned long k);

struct ConvergentPair {
  BigInt p;
  BigInt q;
  friend bool operator==(const ConvergentPair&, const ConvergentPair&) = default;
};

/// p_n, q_n of alpha1 (n >= 0) or alpha2 (n >= 1) from the Binet-type
/// closed forms in powers of 2/(sqrt(k^2+4) - k) and -2/(sqrt(k^2+4) + k),
/// evaluated in Q(sqrt(k^2+4)). alpha2 uses exponent n - 1. The irrational
/// parts must cancel to integers (InvariantViolation otherwise).
///
/// Indices follow the uncanonicalized expansions [0; k, k, ...] and
/// [0; 1, k-1, k, ...], so for alpha2 with k == 1 they run two ahead of the
/// canonical expansion from n = 3 on.
ConvergentPair closed_form_pq(unsigned long k, std::size_t n, ExtremalFamily family);

}  // namespace cfapprox::cf
