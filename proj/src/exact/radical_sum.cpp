// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/exact/radical_sum.hpp"

#include <ostream>
#include <utility>

#include "cfapprox/errors.hpp"

namespace cfapprox {

struct RadicalAccess {
  static void add(RadicalSum& s, BigRat coef, BigInt rad, bool reduced) {
    s.add_term(std::move(coef), std::move(rad), reduced);
  }
  static void add_constant(RadicalSum& s, const BigRat& c) { s.c0_ += c; }
};

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt pow2(unsigned bits) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
  return r;
}

BigInt pow10(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// A base g > 1, not a perfect square, such that every radicand r factors as
// g^e * r' with gcd(r', g) == 1. Starts from the largest radicand.
BigInt split_base(const RadicalSum::Terms& terms) {
  BigInt g = terms.rbegin()->first;
  for (;;) {
    if (exact::is_perfect_square(g)) {
      g = exact::isqrt(g);
      continue;
    }
    bool refined = false;
    for (const auto& [r, coef] : terms) {
      BigInt rest = r;
      while (mpz_divisible_p(rest.get_mpz_t(), g.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
      }
      BigInt h = gcd(rest, g);
      if (h != 1) {
        g = std::move(h);
        refined = true;
        break;
      }
    }
    if (!refined) return g;
  }
}

// s == p + q*sqrt(g), with p and q free of any radicand sharing a factor with g.
struct Split {
  RadicalSum p;
  RadicalSum q;
};

Split split_on(const RadicalSum& s, const BigInt& g) {
  Split out{RadicalSum(s.constant()), RadicalSum()};
  for (const auto& [r, coef] : s.terms()) {
    BigInt rest = r;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), g.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
      ++e;
    }
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), g.get_mpz_t(), e / 2);
    RadicalAccess::add(e % 2 == 1 ? out.q : out.p, coef * BigRat(scale), std::move(rest), true);
  }
  return out;
}

// |v| = m * 10^(e - digits + 1) with 10^(digits-1) <= m < 10^digits, rounded
// half away from zero.
struct Scientific {
  int sign;
  BigInt mantissa;
  long exponent;
  friend bool operator==(const Scientific&, const Scientific&) = default;
};

Scientific round_significant(const BigRat& v, unsigned digits) {
  const BigRat a = v.abs();
  long e = static_cast<long>(mpz_sizeinbase(a.num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.den().get_mpz_t(), 10));
  auto power = [](long k) { return k >= 0 ? BigRat(pow10(k)) : BigRat(1, pow10(-k)); };
  while (power(e) > a) --e;
  while (power(e + 1) <= a) ++e;
  const long shift = static_cast<long>(digits) - 1 - e;
  const BigRat scaled = a * power(shift);
  BigInt m = (scaled + BigRat(1, 2)).floor();
  if (m == pow10(static_cast<long>(digits))) {
    m /= 10;
    ++e;
  }
  return {v.sign(), m, e};
}

std::string format_scientific(const Scientific& s) {
  std::string digits = s.mantissa.get_str();
  std::string out = s.sign < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  const long e = s.exponent;
  std::string exp = std::to_string(e < 0 ? -e : e);
  if (exp.size() < 2) exp = "0" + exp;
  out += (e < 0 ? "e-" : "e+") + exp;
  return out;
}

}  // namespace

RadicalSum::RadicalSum(const QuadSurd& x) : c0_(BigRat(x.a(), x.c())) {
  if (!x.is_rational()) add_term(BigRat(x.b(), x.c()), x.d(), true);
}

RadicalSum RadicalSum::sqrt(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError("square root of a negative integer");
  RadicalSum s;
  if (n != 0) s.add_term(BigRat(1), n, false);
  return s;
}

RadicalSum RadicalSum::sqrt(const BigRat& r) {
  if (r.sign() < 0) throw DomainError("square root of a negative rational");
  // sqrt(n/m) = sqrt(n) sqrt(m) / m, reducing n and m separately.
  if (r.is_zero()) return RadicalSum();
  return sqrt(r.num()) * sqrt(r.den()) * RadicalSum(BigRat(BigInt(1), r.den()));
}

RadicalSum RadicalSum::term(const BigRat& coef, const BigInt& radicand) {
  if (sgn(radicand) <= 0) throw DomainError("radicand must be positive");
  RadicalSum s;
  s.add_term(coef, radicand, false);
  return s;
}

void RadicalSum::add_term(BigRat coef, BigInt radicand, bool reduced) {
  if (coef.is_zero()) return;
  if (reduced) {
    if (exact::is_perfect_square(radicand)) {
      coef *= BigRat(exact::isqrt(radicand));
      radicand = 1;
    }
  } else {
    auto split = exact::square_split(radicand, exact::Reduction::partial);
    coef *= BigRat(split.root);
    radicand = std::move(split.kernel);
  }
  if (radicand == 1) {
    c0_ += coef;
    return;
  }
  auto merge_into = [this](Terms::iterator it, const BigRat& delta) {
    it->second += delta;
    if (it->second.is_zero()) terms_.erase(it);
  };
  if (auto it = terms_.find(radicand); it != terms_.end()) {
    merge_into(it, coef);
    return;
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const BigInt prod = it->first * radicand;
    if (exact::is_perfect_square(prod)) {
      // sqrt(radicand) = isqrt(prod) / r_i * sqrt(r_i)
      merge_into(it, coef * BigRat(exact::isqrt(prod), it->first));
      return;
    }
  }
  terms_.emplace(std::move(radicand), std::move(coef));
}

BigRat RadicalSum::to_rational() const {
  if (!is_rational()) throw DomainError("radical sum is irrational");
  return c0_;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out;
  out.c0_ = -c0_;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, -c);
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  c0_ += o.c0_;
  for (const auto& [r, c] : o.terms_) add_term(c, r, true);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) { return *this += -o; }

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out(a.c0_ * b.c0_);
  if (!a.c0_.is_zero()) {
    for (const auto& [r, c] : b.terms_) out.add_term(a.c0_ * c, r, true);
  }
  if (!b.c0_.is_zero()) {
    for (const auto& [r, c] : a.terms_) out.add_term(b.c0_ * c, r, true);
  }
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      // sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g))
      const BigInt g = gcd(ra, rb);
      BigInt rad = (ra / g) * (rb / g);
      out.add_term(ca * cb * BigRat(g), std::move(rad), true);
    }
  }
  return out;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& o) {
  *this = *this * o;
  return *this;
}

RadicalSum RadicalSum::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  if (is_rational()) return RadicalSum(c0_.reciprocal());
  const BigInt g = split_base(terms_);
  auto [p, q] = split_on(*this, g);
  // 1/(p + q sqrt g) = (p - q sqrt g) / (p^2 - g q^2); the norm has no g.
  RadicalSum norm = p * p - q * q * RadicalSum(g);
  return (p - q * RadicalSum::term(BigRat(1), g)) * norm.reciprocal();
}

std::string RadicalSum::to_string() const {
  std::string out;
  if (!c0_.is_zero() || terms_.empty()) out = c0_.is_integer() ? c0_.num().get_str() : c0_.to_string();
  for (const auto& [r, c] : terms_) {
    const BigRat mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out = "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != BigRat(1)) out += (mag.is_integer() ? mag.num().get_str() : mag.to_string()) + "*";
    out += "sqrt(" + r.get_str() + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RadicalSum& s) { return os << s.to_string(); }

Enclosure enclose(const RadicalSum& s, unsigned bits) {
  Enclosure e{s.constant(), s.constant()};
  if (s.is_rational()) return e;
  const BigInt scale = pow2(bits);
  const BigInt scale_sq = scale * scale;
  for (const auto& [r, c] : s.terms()) {
    // L < 2^bits sqrt(r) < L + 1; r is never a perfect square.
    const BigInt low = exact::isqrt(BigInt(r * scale_sq));
    const BigRat under(low, scale);
    const BigRat over(BigInt(low + 1), scale);
    if (c.sign() > 0) {
      e.lo += c * under;
      e.hi += c * over;
    } else {
      e.lo += c * over;
      e.hi += c * under;
    }
  }
  return e;
}

int symbolic_sign(const RadicalSum& s) {
  if (s.is_rational()) return s.constant().sign();
  const BigInt g = split_base(s.terms());
  auto [p, q] = split_on(s, g);
  const int sp = symbolic_sign(p);
  const int sq = symbolic_sign(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with g q^2.
  const RadicalSum norm = p * p - q * q * RadicalSum(g);
  return sp * symbolic_sign(norm);
}

int radical_sign(const RadicalSum& s, const SignOptions& opts) {
  if (s.radical_count() > kMaxSignTerms) {
    throw UnsupportedExpression("radical_sign accepts at most " + std::to_string(kMaxSignTerms) +
                                " radical terms, got " + std::to_string(s.radical_count()));
  }
  if (s.is_rational()) return s.constant().sign();
  for (unsigned bits = opts.start_bits; bits <= opts.cap_bits; bits *= 2) {
    const Enclosure e = enclose(s, bits);
    if (e.lo.sign() > 0) return 1;
    if (e.hi.sign() < 0) return -1;
    if (bits == 0) break;
  }
  return symbolic_sign(s);
}

int compare(const RadicalSum& a, const RadicalSum& b) { return radical_sign(a - b); }

std::string to_decimal(const RadicalSum& s, unsigned digits) {
  if (digits == 0) throw DomainError("to_decimal needs at least one digit");
  if (s.is_zero()) return "0";
  if (s.is_rational()) return format_scientific(round_significant(s.constant(), digits));
  // Irrational values are never exact ties, so the two roundings eventually agree.
  constexpr unsigned kMaxBits = 1u << 20;
  for (unsigned bits = 64;; bits *= 2) {
    const Enclosure e = enclose(s, bits);
    if (e.lo.sign() * e.hi.sign() > 0) {
      const Scientific lo = round_significant(e.lo, digits);
      const Scientific hi = round_significant(e.hi, digits);
      if (lo == hi || bits >= kMaxBits) return format_scientific(lo);
    }
    if (bits >= kMaxBits) {
      return format_scientific(round_significant((e.lo + e.hi) / BigRat(2), digits));
    }
  }
}

}  // namespace cfapprox
