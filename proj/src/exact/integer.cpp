// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/exact/integer.hpp"

#include <algorithm>
#include <cstddef>

#include "cfapprox/errors.hpp"

namespace cfapprox::exact {

namespace {

constexpr std::uint32_t kTrialLimit = 1u << 16;

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. n is odd, composite, and not a perfect power
// of a small prime; returns a nontrivial factor.
BigInt rho_factor(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    constexpr std::size_t m = 128;
    auto step = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt r = isqrt(n);
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  BigInt d = rho_factor(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kTrialLimit);
  return primes;
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::vector<PrimePower> factorize(const BigInt& n) {
  if (sgn(n) <= 0) throw DomainError("factorize expects a positive integer");
  std::vector<BigInt> primes;
  BigInt rest = n;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> result;
  for (const auto& p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

SquareSplit square_split(const BigInt& n, Reduction mode) {
  if (sgn(n) <= 0) throw DomainError("square_split expects a positive integer");
  SquareSplit out{1, 1};
  if (mode == Reduction::complete) {
    for (const auto& [p, e] : factorize(n)) {
      for (unsigned i = 0; i + 1 < e; i += 2) out.root *= p;
      if (e % 2 == 1) out.kernel *= p;
    }
    return out;
  }
  BigInt rest = n;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) out.root *= p;
    if (e % 2 == 1) out.kernel *= p;
  }
  if (is_perfect_square(rest)) {
    out.root *= isqrt(rest);
  } else {
    out.kernel *= rest;
  }
  return out;
}

}  // namespace cfapprox::exact
