// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace cfapprox {

using BigInt = mpz_class;

namespace exact {

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// Quotient rounded toward negative infinity; d != 0.
BigInt floor_div(const BigInt& n, const BigInt& d);

/// How hard square_split() works to find the square part of n.
enum class Reduction {
  /// Trial division by primes below 2^16 plus a perfect-square test on the
  /// cofactor. Exact whenever n < 2^48; may leave a large p^2 factor behind
  /// otherwise.
  partial,
  /// Full factorization (Pollard-Brent on the cofactor). Always exact.
  complete,
};

/// n = root^2 * kernel with kernel squarefree (see Reduction for the
/// guarantee). n must be positive.
struct SquareSplit {
  BigInt root;
  BigInt kernel;
};

SquareSplit square_split(const BigInt& n, Reduction mode);

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

/// Prime factorization of n >= 1, primes ascending. Probabilistic primality
/// test with 30 Miller-Rabin rounds.
std::vector<PrimePower> factorize(const BigInt& n);

/// Primes below 2^16, ascending.
std::span<const std::uint32_t> small_primes();

}  // namespace exact
}  // namespace cfapprox
