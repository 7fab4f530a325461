// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/bounds/bounds.hpp"

#include <array>
#include <utility>

#include "cfapprox/errors.hpp"

namespace cfapprox::bounds {

namespace {

constexpr std::array<std::pair<BoundKind, std::string_view>, 8> kNames{{
    {BoundKind::dirichlet, "dirichlet"},
    {BoundKind::hurwitz, "hurwitz"},
    {BoundKind::hancl_g, "hancl_g"},
    {BoundKind::vahlen, "vahlen"},
    {BoundKind::borel, "borel"},
    {BoundKind::hancl_nair, "hancl_nair"},
    {BoundKind::nathanson, "nathanson"},
    {BoundKind::refined_f, "refined_f"},
}};

BigInt discriminant(unsigned long k) {
  if (k == 0) throw DomainError("bound parameter k must be positive");
  return BigInt(k) * k + 4;
}

RadicalSum refined_rhs(unsigned long k, const BigInt& q) {
  const BigInt D = discriminant(k);
  const BigInt q2 = q * q;
  const RadicalSum diff = RadicalSum::sqrt(BigInt(D * q2 + 4)) - RadicalSum::term(BigRat(q), D);
  return diff * RadicalSum(BigRat(BigInt(1), BigInt(2 * q)));
}

}  // namespace

std::string_view name(BoundKind kind) {
  for (const auto& [k, n] : kNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view text) {
  for (const auto& [k, n] : kNames) {
    if (n == text) return k;
  }
  return std::nullopt;
}

std::string_view name(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds_strict:
      return "Holds_Strict";
    case Outcome::holds_equal:
      return "Holds_Equal";
    case Outcome::fails:
      return "Fails";
  }
  return "?";
}

Strictness default_strictness(BoundKind kind) {
  return kind == BoundKind::refined_f ? Strictness::non_strict : Strictness::strict;
}

RadicalSum bound_rhs(const BoundSpec& spec, const BigInt& q) {
  if (sgn(q) <= 0) throw DomainError("bound_rhs needs q >= 1");
  const BigInt q2 = q * q;
  switch (spec.kind) {
    case BoundKind::dirichlet:
      return RadicalSum(BigRat(BigInt(1), q2));
    case BoundKind::vahlen:
      return RadicalSum(BigRat(BigInt(1), BigInt(2 * q2)));
    case BoundKind::hurwitz:
    case BoundKind::borel:
      return RadicalSum::term(BigRat(BigInt(1), BigInt(5 * q2)), 5);
    case BoundKind::nathanson: {
      const BigInt D = discriminant(spec.k);
      return RadicalSum::term(BigRat(BigInt(1), BigInt(D * q2)), D);
    }
    case BoundKind::refined_f:
      return refined_rhs(spec.k, q);
    case BoundKind::hancl_g:
      return refined_rhs(1, q);
    case BoundKind::hancl_nair: {
      // 2 / (2 sqrt(5) q^2 + 4 - 5 sqrt(5) + sqrt(61))
      const RadicalSum denom = RadicalSum(4) + RadicalSum::term(BigRat(BigInt(2 * q2 - 5)), 5) + RadicalSum::sqrt(61);
      return RadicalSum(2) * denom.reciprocal();
    }
  }
  throw DomainError("unknown bound kind");
}

RadicalSum refined_f_value(unsigned long k, const BigInt& q) {
  if (sgn(q) <= 0) throw DomainError("f(q) needs q >= 1");
  const BigInt D = discriminant(k);
  const BigInt q2 = q * q;
  const RadicalSum inner = RadicalSum(1) + RadicalSum::sqrt(BigRat(1) + BigRat(BigInt(4), BigInt(D * q2)));
  return RadicalSum::term(BigRat(q2, 2), D) * inner;
}

Outcome satisfies(const RadicalSum& err, const BoundSpec& spec, const BigInt& q) {
  if (radical_sign(err) < 0) throw DomainError("approximation error must be nonnegative");
  const int s = compare(err, bound_rhs(spec, q));
  if (s < 0) return Outcome::holds_strict;
  if (s == 0) return Outcome::holds_equal;
  return Outcome::fails;
}

bool monotone_refinement_check(unsigned long k, const BigInt& q) {
  const BigInt D = discriminant(k);
  const RadicalSum lower = RadicalSum::term(BigRat(q * q), D);
  const RadicalSum upper = lower + RadicalSum::term(BigRat(BigInt(1), D), D);
  const RadicalSum f = refined_f_value(k, q);
  return compare(lower, f) < 0 && compare(f, upper) < 0;
}

bool reciprocal_form_holds(unsigned long k, const BigInt& q) {
  const BigInt D = discriminant(k);
  const RadicalSum r = refined_rhs(k, q);
  const RadicalSum root = RadicalSum(BigRat(2 * q)) * r + RadicalSum::term(BigRat(q), D);
  if (root * root != RadicalSum(BigInt(D * q * q + 4))) return false;
  return r * refined_f_value(k, q) == RadicalSum(1);
}

}  // namespace cfapprox::bounds
