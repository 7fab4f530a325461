// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/verify/verify.hpp"

#include <algorithm>
#include <array>

#include "cfapprox/errors.hpp"

namespace cfapprox::verify {

using bounds::BoundKind;
using bounds::BoundSpec;
using bounds::Outcome;
using cf::CFExpansion;
using cf::ExtremalFamily;

std::string_view name(Truth t) {
  switch (t) {
    case Truth::no:
      return "false";
    case Truth::yes:
      return "true";
    case Truth::unknown:
      return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------- scans

ScanResult verify_bound_scan(const ExactNumber& x, const BoundSpec& spec, std::size_t N) {
  ScanResult out;
  out.records.reserve(N + 1);
  for (auto& c : cf::convergents(x.cf, N)) {
    VerificationRecord r;
    r.n = c.n;
    const RadicalSum err = x.error(c);
    r.margin = bounds::bound_rhs(spec, c.q) - err;
    r.margin_sign = radical_sign(r.margin);
    r.outcome = r.margin_sign > 0 ? Outcome::holds_strict : r.margin_sign == 0 ? Outcome::holds_equal : Outcome::fails;
    switch (r.outcome) {
      case Outcome::holds_strict:
        ++out.holds_strict;
        break;
      case Outcome::holds_equal:
        ++out.holds_equal;
        break;
      case Outcome::fails:
        ++out.fails;
        break;
    }
    r.p = std::move(c.p);
    r.q = std::move(c.q);
    out.records.push_back(std::move(r));
  }
  return out;
}

// ----------------------------------------------------- equality attainers

std::optional<ExtremalFamily> extremal_family(const ExactNumber& x, unsigned long k) {
  if (x.is_rational()) return std::nullopt;
  const QuadSurd frac = std::get<QuadSurd>(x.fractional_part());
  if (frac == cf::alpha1(k)) return ExtremalFamily::alpha1;
  if (frac == cf::alpha2(k)) return ExtremalFamily::alpha2;
  return std::nullopt;
}

bool predicted_equal(ExtremalFamily family, unsigned long k, std::size_t n) {
  if (family == ExtremalFamily::alpha1) return n % 2 == 1;
  return n % 2 == 0 && (n >= 2 || k == 1);
}

// ------------------------------------------------ membership, equivalence

namespace {

bool all_at_most(const std::vector<BigInt>& qs, const BigInt& k) {
  return std::all_of(qs.begin(), qs.end(), [&](const BigInt& a) { return a <= k; });
}

bool same_cycle(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.size() != b.size()) return false;
  std::vector<BigInt> rotated = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rotated == b) return true;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  }
  return false;
}

}  // namespace

Truth is_in_F(const Number& x, unsigned long k) {
  const BigInt kk(k);
  if (const auto* d = std::get_if<DecimalPrefix>(&x)) {
    const auto prefix = certain_prefix(*d);
    if (!prefix.empty() && (prefix[0] < 0 || prefix[0] > 1)) return Truth::no;
    for (std::size_t i = 1; i < prefix.size(); ++i) {
      if (prefix[0] == 1 || prefix[i] > kk) return Truth::no;
    }
    return Truth::unknown;
  }
  const ExactNumber e = resolve(x);
  const BigInt& a0 = e.cf.a0();
  const bool in_unit = a0 == 0 || (a0 == 1 && e.cf.is_finite() && e.cf.head().empty());
  if (!in_unit || a0 > kk) return Truth::no;
  if (!all_at_most(e.cf.head(), kk)) return Truth::no;
  if (e.cf.period() && !all_at_most(*e.cf.period(), kk)) return Truth::no;
  return Truth::yes;
}

Truth equivalent(const Number& x, const Number& y) {
  if (!is_exact(x) || !is_exact(y)) return Truth::unknown;
  const ExactNumber ex = resolve(x), ey = resolve(y);
  if (ex.is_rational() || ey.is_rational()) return ex.is_rational() == ey.is_rational() ? Truth::yes : Truth::no;
  return same_cycle(*ex.cf.period(), *ey.cf.period()) ? Truth::yes : Truth::no;
}

Truth nathanson_applicable(const Number& x, unsigned long k) {
  if (!is_exact(x)) return Truth::unknown;
  const ExactNumber e = resolve(x);
  if (e.is_rational()) return Truth::no;
  if (k <= 1) return Truth::yes;
  const auto& period = *e.cf.period();
  return std::any_of(period.begin(), period.end(), [&](const BigInt& a) { return a >= BigInt(k); }) ? Truth::yes
                                                                                                     : Truth::no;
}

// ----------------------------------------------------------------- lemmas

namespace {

constexpr std::array<std::pair<LemmaId, std::string_view>, 10> kLemmaNames{{
    {LemmaId::L0_limit, "L0_limit"},
    {LemmaId::L1_case1, "L1_case1"},
    {LemmaId::L2_caseH, "L2_caseH"},
    {LemmaId::L3_odd_block, "L3_odd_block"},
    {LemmaId::L4_AB_margin, "L4_AB_margin"},
    {LemmaId::R1_final, "R1_final"},
    {LemmaId::R2_final, "R2_final"},
    {LemmaId::R3_final, "R3_final"},
    {LemmaId::R4_final, "R4_final"},
    {LemmaId::R5_final, "R5_final"},
}};

enum Param : unsigned { kQ = 1, kI = 2, kPrefix = 4, kA = 8, kB = 16, kQstar = 32, kM = 64, kRm = 128 };

unsigned present(const LemmaParams& p) {
  return (p.q ? kQ : 0u) | (p.i ? kI : 0u) | (p.prefix ? kPrefix : 0u) | (p.A ? kA : 0u) | (p.B ? kB : 0u) |
         (p.qstar ? kQstar : 0u) | (p.m ? kM : 0u) | (p.r_m ? kRm : 0u);
}

unsigned allowed(LemmaId id) {
  switch (id) {
    case LemmaId::L0_limit:
      return kQ;
    case LemmaId::L1_case1:
      return 0;
    case LemmaId::L2_caseH:
      return kI | kPrefix;
    case LemmaId::L3_odd_block:
      return kI;
    case LemmaId::L4_AB_margin:
      return kA | kB;
    default:
      return kQstar | kM | kRm;
  }
}

// [0; qs...], 0 for an empty list.
BigRat finite_tail(const std::vector<BigInt>& qs) {
  BigRat v = 0;
  for (auto it = qs.rbegin(); it != qs.rend(); ++it) v = (BigRat(*it) + v).reciprocal();
  return v;
}

RadicalSum rat(const BigRat& r) { return RadicalSum(r); }

LemmaResult strict_margin(RadicalSum margin) {
  const bool ok = radical_sign(margin) > 0;
  return {ok, std::move(margin)};
}

LemmaResult check_l0(const BigInt& D, const RadicalSum& sD, const LemmaParams& p) {
  const BigInt q = p.q.value_or(BigInt(1));
  if (sgn(q) <= 0) throw DomainError("L0 needs q >= 1");
  const BigInt Dq2 = D * q * q;
  const RadicalSum lhs = sD * rat(BigRat(1, 2)) * (RadicalSum(1) + RadicalSum::sqrt(BigRat(1) + BigRat(BigInt(4), Dq2)));
  const RadicalSum rhs = sD + RadicalSum::term(BigRat(BigInt(1), Dq2), D);
  return strict_margin(rhs - lhs);
}

LemmaResult check_l2(unsigned long k, const RadicalSum& sD, const LemmaParams& p) {
  const BigInt k1(k + 1);
  const QuadSurd y = cf::purely_periodic_value({k1, BigInt(1)}).reciprocal();  // [0; (k+1, 1)]
  const BigInt k2 = k1 * (k + 5);                                                // k^2 + 6k + 5
  const RadicalSum closed = (RadicalSum(BigInt(k * k + k)) + RadicalSum::sqrt(k2)) * rat(BigRat(BigInt(1), k1));
  const RadicalSum limit = RadicalSum(k1) + RadicalSum(y) * RadicalSum(2);
  if (limit != closed) throw InvariantViolation("limit of H does not match its closed form");
  if (!p.i && !p.prefix) return strict_margin(limit - sD);

  const long pairs = p.i.value_or(0);
  if (pairs < 0) throw DomainError("L2 needs i >= 0 pairs");
  std::vector<BigInt> reversed;
  for (long j = 0; j < pairs; ++j) {
    reversed.push_back(k1);
    reversed.emplace_back(1);
  }
  for (const auto& a : p.prefix.value_or(std::vector<BigInt>{})) {
    if (sgn(a) <= 0) throw DomainError("L2 prefix quotients must be positive");
    reversed.push_back(a);
  }
  const RadicalSum H = RadicalSum(k1) + RadicalSum(y) + rat(finite_tail(reversed));
  return strict_margin(H - sD);
}

LemmaResult check_l3(unsigned long k, const BigInt& D, const RadicalSum& sD, const LemmaParams& p) {
  const BigInt kk(k), k2 = kk * kk;
  const BigRat head = BigRat(kk) + BigRat(BigInt(kk + 1), k2);  // k + [0; k-1, k+1]
  if (!p.i) {
    const RadicalSum closed =
        (RadicalSum(BigInt(k2 * kk + 2 * kk + 2)) + RadicalSum::term(BigRat(k2), D)) * rat(BigRat(BigInt(1), BigInt(2 * k2)));
    const RadicalSum limit = rat(head) + RadicalSum(cf::alpha1(k));
    if (limit != closed) throw InvariantViolation("odd-block limit does not match its closed form");
    return strict_margin(limit - sD);
  }
  const long i = *p.i;
  if (i < -1 || i % 2 == 0) throw DomainError("L3 needs odd i >= -1");
  const std::vector<BigInt> ks(static_cast<std::size_t>(i + 2), kk);
  return strict_margin(rat(head + finite_tail(ks)) - sD);
}

LemmaResult check_l4(unsigned long k, const RadicalSum& sD, const LemmaParams& p) {
  const BigRat kk(k), inv_k = kk.reciprocal();
  const BigRat t = (kk + inv_k).reciprocal();  // [0; k + 1/k]
  const RadicalSum margin =
      rat(inv_k * inv_k + t * t) * (rat(kk + t + inv_k) + sD).reciprocal();
  if (rat(kk + t + inv_k) - sD != margin) throw InvariantViolation("rationalized L4 margin disagrees");
  if (!p.A && !p.B) return strict_margin(margin);
  if (!p.A || !p.B) throw DomainError("L4 needs both A and B");
  const BigRat &A = *p.A, &B = *p.B;
  if (A < inv_k || B < inv_k) throw DomainError("L4 needs A, B >= 1/k");
  // A >= B: k + [0; k + B] + A; otherwise k + B + [0; k + A].
  const BigRat value = A >= B ? kk + (kk + B).reciprocal() + A : kk + B + (kk + A).reciprocal();
  RadicalSum excess = rat(value) - sD - margin;
  const bool ok = radical_sign(margin) > 0 && radical_sign(excess) >= 0;
  return {ok, std::move(excess)};
}

bool is_starred_pair(unsigned long k, const BigInt& cur, const BigInt& prev) {
  BigInt a = 0, b = 1;  // q*_{-1}, q*_0
  while (b < cur) {
    BigInt c = BigInt(k) * b + a;
    a = std::move(b);
    b = std::move(c);
  }
  // For k = 1, q*_0 = q*_1 = 1; both (1, 0) and (1, 1) are consecutive.
  return b == cur && (a == prev || (k == 1 && cur == 1 && prev == 1));
}

void check_r_hypotheses(LemmaId id, unsigned long k, const LemmaParams& p) {
  const BigRat kk(k);
  if (p.m) {
    const std::size_t m = *p.m;
    const bool ok = id == LemmaId::R3_final ? m == 1 : id == LemmaId::R4_final ? m >= 2 : id == LemmaId::R5_final ? m >= 3 : m >= 1;
    if (!ok) throw DomainError("m outside the case hypotheses");
  }
  if (!p.r_m) return;
  const BigRat& r = *p.r_m;
  const BigRat half(1, 2);
  bool ok = false;
  switch (id) {
    case LemmaId::R1_final:
      ok = r >= kk + BigRat(1);
      break;
    case LemmaId::R2_final:
      ok = r >= BigRat(1) && r <= kk - BigRat(1);
      break;
    case LemmaId::R3_final:
      ok = r == kk - BigRat(1);
      break;
    case LemmaId::R4_final:
      ok = r > kk - BigRat(1) && r <= kk - half;
      break;
    case LemmaId::R5_final:
      ok = r >= kk - half && r < kk;
      break;
    default:
      break;
  }
  if (!ok) throw DomainError("r_m outside the case hypotheses");
}

LemmaResult check_r(LemmaId id, unsigned long k, const BigInt& D, const RadicalSum& sD, const LemmaParams& p) {
  if (!p.qstar) throw DomainError("final cases need the starred pair qstar");
  const auto& [qs, qs_prev] = *p.qstar;
  if (!is_starred_pair(k, qs, qs_prev)) throw DomainError("qstar is not a consecutive pair of [0; (k)] denominators");
  check_r_hypotheses(id, k, p);
  const RadicalSum K{BigInt(k)};
  RadicalSum factor;
  BigInt weight;
  switch (id) {
    case LemmaId::R1_final:
      factor = K + RadicalSum(2) - sD;
      weight = BigInt(k + 1) * qs + qs_prev;
      break;
    case LemmaId::R2_final:
      factor = sD - K + RadicalSum(2);
      weight = qs + qs_prev;
      break;
    case LemmaId::R3_final:
      factor = sD + RadicalSum(2) - K;
      weight = BigInt(k - 1) * qs + qs_prev;
      break;
    case LemmaId::R4_final:
      factor = sD + RadicalSum(1) - K;
      weight = BigInt(2 * k - 1) * qs + 2 * qs_prev;
      break;
    default:
      factor = sD - K;
      weight = BigInt(2 * k - 1) * qs + 2 * qs_prev;
      break;
  }
  const RadicalSum denom = RadicalSum(qs) * (K + sD) + RadicalSum(BigInt(2 * qs_prev));
  const RadicalSum ratio = factor * RadicalSum(weight) * denom.reciprocal();
  return strict_margin(ratio - RadicalSum::term(BigRat(BigInt(1), D), D));
}

}  // namespace

std::string_view name(LemmaId id) {
  for (const auto& [i, n] : kLemmaNames) {
    if (i == id) return n;
  }
  return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
  for (const auto& [i, n] : kLemmaNames) {
    if (n == text) return i;
  }
  return std::nullopt;
}

unsigned long min_k(LemmaId id) {
  switch (id) {
    case LemmaId::R2_final:
      return 3;
    case LemmaId::R3_final:
    case LemmaId::R4_final:
    case LemmaId::R5_final:
      return 2;
    default:
      return 1;
  }
}

LemmaResult check_lemma(const LemmaInstance& inst) {
  if (inst.k < min_k(inst.id)) {
    throw DomainError(std::string(name(inst.id)) + " needs k >= " + std::to_string(min_k(inst.id)));
  }
  if ((present(inst.params) & ~allowed(inst.id)) != 0) {
    throw DomainError(std::string(name(inst.id)) + " received a parameter it does not take");
  }
  const unsigned long k = inst.k;
  const BigInt D = BigInt(k) * k + 4;
  const RadicalSum sD = RadicalSum::sqrt(D);
  switch (inst.id) {
    case LemmaId::L0_limit:
      return check_l0(D, sD, inst.params);
    case LemmaId::L1_case1:
      // k + 2 > sqrt(D) + 1/sqrt(D)
      return strict_margin(RadicalSum(BigInt(k + 2)) - sD - RadicalSum::term(BigRat(BigInt(1), D), D));
    case LemmaId::L2_caseH:
      return check_l2(k, sD, inst.params);
    case LemmaId::L3_odd_block:
      return check_l3(k, D, sD, inst.params);
    case LemmaId::L4_AB_margin:
      return check_l4(k, sD, inst.params);
    default:
      return check_r(inst.id, k, D, sD, inst.params);
  }
}

std::pair<BigInt, BigInt> starred_pair(unsigned long k, std::size_t j) {
  if (j == 0) throw DomainError("starred depth starts at 1");
  BigInt prev = 1, cur = k;  // q*_0, q*_1
  for (std::size_t s = 1; s < j; ++s) {
    BigInt next = BigInt(k) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, prev};
}

std::vector<LemmaInstance> lemma_suite(unsigned long k, std::size_t depth) {
  std::vector<LemmaInstance> out;
  for (auto id : {LemmaId::L0_limit, LemmaId::L1_case1, LemmaId::L2_caseH, LemmaId::L3_odd_block,
                  LemmaId::L4_AB_margin}) {
    out.push_back({id, k, {}});
  }
  for (auto id : {LemmaId::R1_final, LemmaId::R2_final, LemmaId::R3_final, LemmaId::R4_final, LemmaId::R5_final}) {
    if (k < min_k(id)) continue;
    for (std::size_t j = 1; j <= depth; ++j) {
      LemmaInstance inst{id, k, {}};
      inst.params.qstar = starred_pair(k, j);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

bool f_monotone_check(unsigned long k, std::size_t samples) {
  if (k == 0) throw DomainError("f_monotone_check needs k >= 1");
  const BigRat kk(k), lo = kk.reciprocal();
  const auto g = [&](const BigRat& b) { return (kk + b).reciprocal() + b; };
  const BigRat floor_value = g(lo);
  const BigRat step = (kk + BigRat(1) - lo) / BigRat(BigInt(samples == 0 ? 1 : samples));
  std::optional<BigRat> prev;
  for (std::size_t i = 1; i <= samples; ++i) {
    const BigRat v = g(lo + step * BigRat(BigInt(i)));
    if (!(v > floor_value)) return false;
    if (prev && !(*prev < v)) return false;
    prev = v;
  }
  return true;
}

// ------------------------------------------------------ classical windows

std::string_view name(WindowRule rule) {
  switch (rule) {
    case WindowRule::vahlen_pairs:
      return "vahlen_pairs";
    case WindowRule::borel_triples:
      return "borel_triples";
    case WindowRule::hancl_nair_triples:
      return "hancl_nair_triples";
  }
  return "?";
}

std::optional<WindowRule> parse_window_rule(std::string_view text) {
  for (auto r : {WindowRule::vahlen_pairs, WindowRule::borel_triples, WindowRule::hancl_nair_triples}) {
    if (name(r) == text) return r;
  }
  return std::nullopt;
}

WindowResult classical_window_check(const ExactNumber& x, WindowRule rule, std::size_t N) {
  if (x.is_rational()) throw DomainError("classical window checks need an irrational number");
  const BoundKind kind = rule == WindowRule::vahlen_pairs    ? BoundKind::vahlen
                         : rule == WindowRule::borel_triples ? BoundKind::borel
                                                             : BoundKind::hancl_nair;
  const std::size_t width = rule == WindowRule::vahlen_pairs ? 2 : 3;
  const ScanResult scan = verify_bound_scan(x, BoundSpec{kind, 1}, N);
  WindowResult out;
  for (std::size_t first = 0; first + width <= scan.records.size(); ++first) {
    Window w{first, std::nullopt};
    for (std::size_t j = first; j < first + width && !w.witness; ++j) {
      if (scan.records[j].outcome == Outcome::holds_strict) w.witness = j;
    }
    out.passed = out.passed && w.witness.has_value();
    out.windows.push_back(w);
  }
  return out;
}

}  // namespace cfapprox::verify
