// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cfapprox {

/// Argument outside the mathematical domain of an operation (zero
/// denominator, rational input to a surd-only routine, k = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index beyond the end of a finite expansion.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Expression shape the sign procedure does not accept.
class UnsupportedExpression : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check disagreed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cfapprox
