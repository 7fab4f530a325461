// SPDX-License-Identifier: Apache-2.0
//
// Exact verification of the refined approximation theorem: convergent
// scans, the equality characterization, F(k) membership and the lemma
// inequalities of its proof.
#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cfapprox/bounds/bounds.hpp"
#include "cfapprox/cf/extremal.hpp"
#include "cfapprox/verify/number.hpp"

namespace cfapprox::verify {

enum class Truth { no, yes, unknown };
std::string_view name(Truth t);

// ---------------------------------------------------------------- scans

/// One convergent measured against a bound. margin = rhs(q) - |x - p/q|, so
/// margin_sign is +1 for Holds_Strict, 0 for Holds_Equal, -1 for Fails.
struct VerificationRecord {
  std::size_t n = 0;
  BigInt p;
  BigInt q;
  bounds::Outcome outcome = bounds::Outcome::fails;
  int margin_sign = 0;
  RadicalSum margin;
};

struct ScanResult {
  std::vector<VerificationRecord> records;
  std::size_t holds_strict = 0;
  std::size_t holds_equal = 0;
  std::size_t fails = 0;
};

/// Convergents 0..N of x against `spec`. For a rational x, N may not pass
/// the end of its expansion (RangeError).
ScanResult verify_bound_scan(const ExactNumber& x, const bounds::BoundSpec& spec, std::size_t N);

// ----------------------------------------------------- equality attainers

/// The family whose integer translate x is, if any.
std::optional<cf::ExtremalFamily> extremal_family(const ExactNumber& x, unsigned long k);

/// Whether |alpha - p_n/q_n| = 1/f(q_n) at canonical index n: odd n for
/// alpha1; even n >= 2 for alpha2, or every even n when k = 1.
bool predicted_equal(cf::ExtremalFamily family, unsigned long k, std::size_t n);

// ------------------------------------------------ membership, equivalence

/// x in [0, 1] with every partial quotient <= k. A decimal prefix gives
/// `no` when its certain quotients already decide, `unknown` otherwise.
Truth is_in_F(const Number& x, unsigned long k);

/// Tails coincide from some index on. Any two rationals are equivalent;
/// a rational and an irrational are not. A decimal prefix on either side
/// gives `unknown`.
Truth equivalent(const Number& x, const Number& y);

/// Infinitely many partial quotients >= k, i.e. the period reaches k. Every
/// irrational qualifies at k = 1; a rational never does.
Truth nathanson_applicable(const Number& x, unsigned long k);

// ----------------------------------------------------------------- lemmas

enum class LemmaId {
  L0_limit,
  L1_case1,
  L2_caseH,
  L3_odd_block,
  L4_AB_margin,
  R1_final,
  R2_final,
  R3_final,
  R4_final,
  R5_final,
};

std::string_view name(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view text);
/// Smallest k the lemma is stated for.
unsigned long min_k(LemmaId id);

/// Case-specific parameters. Each lemma reads a fixed subset; passing any
/// other is an arity error.
///   L0: q (default 1)
///   L2: i pairs of (k+1, 1) followed by `prefix` (a_{m-1}, ..., a_1);
///       without them the n -> infinity limit is checked
///   L3: i (odd, >= -1); without it the limit is checked
///   L4: A and B, both >= 1/k; without them the closing margin is checked
///   R1-R5: qstar = (q*_{j}, q*_{j-1}), consecutive denominators of
///       [0; (k)] (required), with optional m and r_m checked against the
///       case's hypotheses
struct LemmaParams {
  std::optional<BigInt> q;
  std::optional<long> i;
  std::optional<std::vector<BigInt>> prefix;
  std::optional<BigRat> A;
  std::optional<BigRat> B;
  std::optional<std::pair<BigInt, BigInt>> qstar;
  std::optional<std::size_t> m;
  std::optional<BigRat> r_m;
};

struct LemmaInstance {
  LemmaId id = LemmaId::L0_limit;
  unsigned long k = 1;
  LemmaParams params;
};

struct LemmaResult {
  bool holds = false;
  RadicalSum margin;
};

/// Evaluates the instance's inequality exactly; `margin` is the amount by
/// which it holds (negative when it does not). DomainError on a parameter
/// mismatch or k below the lemma's minimum.
LemmaResult check_lemma(const LemmaInstance& inst);

/// (q*_j, q*_{j-1}) for [0; (k)], j >= 1.
std::pair<BigInt, BigInt> starred_pair(unsigned long k, std::size_t j);

/// Parameter-free L0-L4 for k plus R1-R5 (where k is large enough) at each
/// starred depth 1..depth.
std::vector<LemmaInstance> lemma_suite(unsigned long k, std::size_t depth);

/// g(B) = 1/(k+B) + B on the grid B_i = 1/k + i (k + 1 - 1/k)/samples,
/// i = 1..samples: strictly increasing, and above g(1/k) throughout.
bool f_monotone_check(unsigned long k, std::size_t samples);

// ------------------------------------------------------ classical windows

enum class WindowRule { vahlen_pairs, borel_triples, hancl_nair_triples };
std::string_view name(WindowRule rule);
std::optional<WindowRule> parse_window_rule(std::string_view text);

struct Window {
  std::size_t first = 0;  // convergent indices first .. first + width - 1
  std::optional<std::size_t> witness;
};

struct WindowResult {
  bool passed = true;
  std::vector<Window> windows;
};

/// Every window of consecutive convergents among 0..N (pairs for Vahlen,
/// triples otherwise) holds a convergent meeting the rule's strict bound.
/// DomainError for rational x.
WindowResult classical_window_check(const ExactNumber& x, WindowRule rule, std::size_t N);

}  // namespace cfapprox::verify
