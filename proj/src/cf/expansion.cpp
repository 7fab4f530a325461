// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/cf/expansion.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cfapprox/errors.hpp"

namespace cfapprox::cf {

namespace {

void require_positive(const std::vector<BigInt>& qs) {
  for (const auto& q : qs) {
    if (sgn(q) <= 0) throw DomainError("partial quotients after a0 must be positive");
  }
}

std::string join(const std::vector<BigInt>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i > 0) out += ",";
    out += qs[i].get_str();
  }
  return out;
}

}  // namespace

CFExpansion CFExpansion::finite(BigInt a0, std::vector<BigInt> quotients) {
  require_positive(quotients);
  // [..., a, 1] == [..., a + 1]
  if (!quotients.empty() && quotients.back() == 1) {
    quotients.pop_back();
    if (quotients.empty()) {
      a0 += 1;
    } else {
      quotients.back() += 1;
    }
  }
  CFExpansion cf;
  cf.a0_ = std::move(a0);
  cf.head_ = std::move(quotients);
  return cf;
}

CFExpansion CFExpansion::periodic(BigInt a0, std::vector<BigInt> head, std::vector<BigInt> period) {
  if (period.empty()) throw DomainError("period must be nonempty");
  require_positive(head);
  require_positive(period);
  const std::size_t r = period.size();
  for (std::size_t len = 1; len < r; ++len) {
    if (r % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < r && repeats; ++i) repeats = period[i] == period[i % len];
    if (repeats) {
      period.resize(len);
      break;
    }
  }
  while (!head.empty() && head.back() == period.back()) {
    head.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  CFExpansion cf;
  cf.a0_ = std::move(a0);
  cf.head_ = std::move(head);
  cf.period_ = std::move(period);
  return cf;
}

const BigInt& CFExpansion::quotient(std::size_t i) const {
  if (i == 0) return a0_;
  if (i <= head_.size()) return head_[i - 1];
  if (!period_) throw RangeError("index " + std::to_string(i) + " beyond finite expansion");
  return (*period_)[(i - head_.size() - 1) % period_->size()];
}

std::string CFExpansion::to_string() const {
  if (head_.empty() && !period_) return "[" + a0_.get_str() + "]";
  std::string out = "[" + a0_.get_str() + ";" + join(head_);
  if (period_) out += (head_.empty() ? "(" : ",(") + join(*period_) + ")";
  return out + "]";
}

CFExpansion expand_rational(const BigRat& x) {
  BigInt num = x.num(), den = x.den();
  BigInt a0 = exact::floor_div(num, den);
  std::vector<BigInt> qs;
  BigInt rem = num - a0 * den;
  num = den;
  den = rem;
  while (den != 0) {
    BigInt q = exact::floor_div(num, den);
    rem = num - q * den;
    qs.push_back(std::move(q));
    num = den;
    den = rem;
  }
  return CFExpansion::finite(std::move(a0), std::move(qs));
}

CFExpansion expand_surd(const QuadSurd& x) {
  if (x.is_rational()) throw DomainError("expand_surd needs an irrational surd; use expand_rational");
  // x = (P + sqrt(D)) / Q with Q | D - P^2.
  BigInt D = x.b() * x.b() * x.d();
  BigInt P = sgn(x.b()) > 0 ? x.a() : BigInt(-x.a());
  BigInt Q = sgn(x.b()) > 0 ? x.c() : BigInt(-x.c());
  if (BigInt((D - P * P) % Q) != 0) {
    const BigInt absq = abs(Q);
    P *= absq;
    D *= Q * Q;
    Q *= absq;
  }
  const BigInt root = exact::isqrt(D);
  auto next_quotient = [&](const BigInt& p, const BigInt& q) {
    if (sgn(q) > 0) return exact::floor_div(BigInt(p + root), q);
    return BigInt(-(exact::floor_div(BigInt(p + root), BigInt(-q)) + 1));
  };

  std::vector<BigInt> quotients;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  for (std::size_t i = 0;; ++i) {
    if (i > 0) {
      auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
      if (!fresh) {
        const std::size_t start = it->second;
        std::vector<BigInt> head(quotients.begin() + 1, quotients.begin() + static_cast<long>(start));
        std::vector<BigInt> period(quotients.begin() + static_cast<long>(start), quotients.end());
        return CFExpansion::periodic(quotients.front(), std::move(head), std::move(period));
      }
    }
    BigInt a = next_quotient(P, Q);
    BigInt p_next = a * Q - P;
    BigInt q_next = (D - p_next * p_next) / Q;
    quotients.push_back(std::move(a));
    P = std::move(p_next);
    Q = std::move(q_next);
  }
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count) {
  if (cf.is_finite() && count > cf.head().size()) {
    throw RangeError("requested convergent " + std::to_string(count) + " of a finite expansion of length " +
                     std::to_string(cf.head().size()));
  }
  std::vector<Convergent> out;
  out.reserve(count + 1);
  BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (std::size_t n = 0; n <= count; ++n) {
    const BigInt& a = cf.quotient(n);
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);
    out.push_back({n, std::move(p), std::move(q)});
  }
  return out;
}

BigRat rational_value(const CFExpansion& cf) {
  if (!cf.is_finite()) throw DomainError("rational_value of a periodic expansion");
  BigRat v = 0;
  const auto& qs = cf.head();
  for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
    const BigRat t = BigRat(*it) + (v.is_zero() ? BigRat(0) : v.reciprocal());
    v = t;
  }
  return BigRat(cf.a0()) + (v.is_zero() ? BigRat(0) : v.reciprocal());
}

QuadSurd purely_periodic_value(const std::vector<BigInt>& period) {
  if (period.empty()) throw DomainError("period must be nonempty");
  // [[p, p'], [q, q']] = prod [[a, 1], [1, 0]]
  BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (const auto& a : period) {
    BigInt n00 = m00 * a + m01;
    BigInt n10 = m10 * a + m11;
    m01 = std::exchange(m00, n00);
    m11 = std::exchange(m10, n10);
  }
  // y is the positive root of m10 y^2 + (m11 - m00) y - m01. Dividing out the
  // content leaves the discriminant of the minimal polynomial, which stays small
  // enough to factor even when the matrix entries are huge.
  BigInt g;
  mpz_gcd(g.get_mpz_t(), m10.get_mpz_t(), m01.get_mpz_t());
  BigInt lin = m00 - m11;
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), lin.get_mpz_t());
  lin /= g;
  const BigInt lead = m10 / g, tail = m01 / g;
  const BigInt disc = lin * lin + 4 * lead * tail;
  return QuadSurd::normalize(lin, 1, 2 * lead, disc);
}

QuadSurd tail_value(const CFExpansion& cf, std::size_t n) {
  if (cf.is_finite()) throw DomainError("tail_value needs an eventually periodic expansion");
  const auto& period = *cf.period();
  const std::size_t h = cf.head().size();
  const std::size_t start = n + 1;
  if (start > h) {
    const std::size_t offset = (start - h - 1) % period.size();
    std::vector<BigInt> rotated(period.begin() + static_cast<long>(offset), period.end());
    rotated.insert(rotated.end(), period.begin(), period.begin() + static_cast<long>(offset));
    return purely_periodic_value(rotated);
  }
  QuadSurd y = purely_periodic_value(period);
  for (std::size_t i = h; i >= start; --i) y = QuadSurd(BigRat(cf.quotient(i))) + y.reciprocal();
  return y;
}

QuadSurd surd_value(const CFExpansion& cf) {
  if (cf.is_finite()) throw DomainError("surd_value of a finite expansion");
  return QuadSurd(BigRat(cf.a0())) + tail_value(cf, 0).reciprocal();
}

BigRat reversed_tail(const CFExpansion& cf, std::size_t n) {
  BigRat v = 0;
  for (std::size_t i = 1; i <= n; ++i) v = (BigRat(cf.quotient(i)) + v).reciprocal();
  return v;
}

RadicalSum error_identity(const QuadSurd& x, const CFExpansion& cf, std::size_t n) {
  if (x.is_rational()) throw DomainError("error_identity needs an irrational number");
  if (cf.is_finite() || surd_value(cf) != x) throw DomainError("expansion does not belong to x");
  const Convergent c = convergents(cf, n).back();
  const QuadSurd direct = (x - QuadSurd(c.value())).abs();
  const QuadSurd denom = (tail_value(cf, n) + QuadSurd(reversed_tail(cf, n))) * QuadSurd(BigRat(c.q * c.q));
  const QuadSurd identity = denom.reciprocal();
  if (direct != identity || radical_sign(RadicalSum(direct) - RadicalSum(identity)) != 0) {
    throw InvariantViolation("error identity failed at n=" + std::to_string(n) + " for " + x.to_string());
  }
  return RadicalSum(direct);
}

}  // namespace cfapprox::cf
