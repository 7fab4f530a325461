// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/verify/number.hpp"

#include "cfapprox/errors.hpp"

namespace cfapprox::verify {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

ExactNumber from_rational(const BigRat& r) { return {r, cf::expand_rational(r)}; }

ExactNumber from_surd(const QuadSurd& x) {
  if (x.is_rational()) return from_rational(x.to_rational());
  return {x, cf::expand_surd(x)};
}

}  // namespace

RadicalSum ExactNumber::error(const cf::Convergent& c) const {
  if (const auto* r = std::get_if<BigRat>(&value)) return RadicalSum((*r - c.value()).abs());
  return RadicalSum((std::get<QuadSurd>(value) - QuadSurd(c.value())).abs());
}

std::variant<BigRat, QuadSurd> ExactNumber::fractional_part() const {
  if (const auto* r = std::get_if<BigRat>(&value)) return *r - BigRat(r->floor());
  const auto& x = std::get<QuadSurd>(value);
  return x - QuadSurd(BigRat(x.floor()));
}

ExactNumber resolve(const Number& x) {
  return std::visit(overloaded{
                        [](const BigRat& r) { return from_rational(r); },
                        [](const QuadSurd& s) { return from_surd(s); },
                        [](const cf::CFExpansion& e) {
                          if (e.is_finite()) return ExactNumber{cf::rational_value(e), e};
                          return ExactNumber{cf::surd_value(e), e};
                        },
                        [](const DecimalPrefix&) -> ExactNumber {
                          throw DomainError("finite-precision input is excluded from exact claims");
                        },
                    },
                    x);
}

bool is_exact(const Number& x) { return !std::holds_alternative<DecimalPrefix>(x); }

std::vector<BigInt> certain_prefix(const DecimalPrefix& x) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, x.precision);
  const BigRat eps(BigInt(1), scale);
  BigRat lo = x.value - eps, hi = x.value + eps;
  std::vector<BigInt> out;
  for (;;) {
    const BigInt a = lo.floor();
    if (hi.floor() != a) break;
    out.push_back(a);
    // The next quotient exists only if no point of the interval equals a.
    if (lo == BigRat(a)) break;
    const BigRat next_lo = (hi - BigRat(a)).reciprocal();
    hi = (lo - BigRat(a)).reciprocal();
    lo = next_lo;
  }
  return out;
}

}  // namespace cfapprox::verify
