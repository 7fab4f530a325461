// SPDX-License-Identifier: Apache-2.0
//
// Seeded random inputs for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cfapprox/cf/expansion.hpp"
#include "cfapprox/exact/quad_surd.hpp"
#include "cfapprox/exact/radical_sum.hpp"

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  cfapprox::BigRat rational(long num_range, long den_max) {
    return cfapprox::BigRat(uniform(-num_range, num_range), uniform(1, den_max));
  }

  /// Non-square d in [2, d_max] so the result is irrational.
  cfapprox::QuadSurd irrational_surd(long coef_range = 20, long d_max = 200) {
    long d = 0;
    do {
      d = uniform(2, d_max);
    } while (cfapprox::exact::is_perfect_square(d));
    long b = 0;
    do {
      b = uniform(-coef_range, coef_range);
    } while (b == 0);
    long c = 0;
    do {
      c = uniform(-coef_range, coef_range);
    } while (c == 0);
    return cfapprox::QuadSurd::normalize(uniform(-coef_range * 5, coef_range * 5), b, c, d);
  }

  /// Any surd, rational included.
  cfapprox::QuadSurd surd(long coef_range = 20, long d_max = 200) {
    long c = 0;
    do {
      c = uniform(-coef_range, coef_range);
    } while (c == 0);
    return cfapprox::QuadSurd::normalize(uniform(-coef_range * 5, coef_range * 5),
                                         uniform(-coef_range, coef_range), c, uniform(1, d_max));
  }

  /// Up to `max_terms` radicals with radicands drawn from [2, rad_max].
  cfapprox::RadicalSum radical_sum(std::size_t max_terms, long rad_max, long coef_range,
                                   long den_max) {
    cfapprox::RadicalSum s(rational(coef_range, den_max));
    const auto n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < n; ++i) {
      s += cfapprox::RadicalSum::term(rational(coef_range, den_max), uniform(2, rad_max));
    }
    return s;
  }

  /// Irrational surd built from a random expansion [a0; head, (period)]
  /// whose period contains an element >= k.
  cfapprox::QuadSurd surd_reaching(unsigned long k, long max_head = 3, long max_period = 4) {
    const long top = static_cast<long>(k) + 2;
    std::vector<cfapprox::BigInt> head, period;
    for (long i = uniform(0, max_head); i > 0; --i) head.emplace_back(uniform(1, top + 1));
    for (long i = uniform(1, max_period); i > 0; --i) period.emplace_back(uniform(1, top));
    period[static_cast<std::size_t>(uniform(0, static_cast<long>(period.size()) - 1))] =
        uniform(static_cast<long>(k), top);
    return cfapprox::cf::surd_value(cfapprox::cf::CFExpansion::periodic(uniform(-3, 3), head, period));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
