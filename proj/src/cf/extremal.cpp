// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/cf/extremal.hpp"

#include <string>

#include "cfapprox/errors.hpp"

namespace cfapprox::cf {

namespace {

BigInt discriminant(unsigned long k) {
  if (k == 0) throw DomainError("k must be at least 1");
  BigInt kk = k;
  return kk * kk + 4;
}

QuadSurd power(const QuadSurd& x, std::size_t e) {
  QuadSurd r(BigRat(1));
  QuadSurd base = x;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

BigInt as_integer(const QuadSurd& x, const char* what, std::size_t n) {
  if (!x.is_rational() || x.c() != 1) {
    throw InvariantViolation(std::string("closed form for ") + what + " did not cancel at n=" + std::to_string(n) +
                             ": " + x.to_string());
  }
  return x.a();
}

}  // namespace

QuadSurd alpha1(unsigned long k) {
  const BigInt d = discriminant(k);
  return QuadSurd::normalize(-BigInt(k), 1, 2, d);
}

QuadSurd alpha2(unsigned long k) {
  const BigInt d = discriminant(k);
  return QuadSurd::normalize(BigInt(k) + 2, -1, 2, d);
}

QuadSurd extremal(ExtremalFamily family, unsigned long k) {
  return family == ExtremalFamily::alpha1 ? alpha1(k) : alpha2(k);
}

ConvergentPair closed_form_pq(unsigned long k, std::size_t n, ExtremalFamily family) {
  const BigInt D = discriminant(k);
  if (family == ExtremalFamily::alpha2 && n == 0) {
    throw DomainError("alpha2 closed forms start at n = 1");
  }
  const QuadSurd s = QuadSurd::sqrt(D);
  const QuadSurd kk{BigRat{BigInt(k)}};
  const QuadSurd two{BigRat{2}};
  const QuadSurd grow = two / (s - kk);
  const QuadSurd decay = -two / (s + kk);
  const QuadSurd twice_d{BigRat{BigInt(2 * D)}};
  const QuadSurd dd{BigRat{D}};

  const std::size_t e = family == ExtremalFamily::alpha1 ? n : n - 1;
  const QuadSurd g = power(grow, e);
  const QuadSurd h = power(decay, e);

  const QuadSurd q = (dd + kk * s) / twice_d * g + (dd - kk * s) / twice_d * h;
  QuadSurd p;
  if (family == ExtremalFamily::alpha1) {
    p = s / dd * g - s / dd * h;
  } else {
    const QuadSurd k_minus_2{BigRat{BigInt(BigInt(k) - 2)}};
    p = (dd + k_minus_2 * s) / twice_d * g + (dd - k_minus_2 * s) / twice_d * h;
  }
  return {as_integer(p, "p", n), as_integer(q, "q", n)};
}

}  // namespace cfapprox::cf
