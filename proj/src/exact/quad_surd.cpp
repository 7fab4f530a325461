// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/exact/quad_surd.hpp"

#include <ostream>
#include <utility>

#include "cfapprox/errors.hpp"

namespace cfapprox {

QuadSurd::QuadSurd() : a_(0), b_(0), c_(1), d_(1) {}

QuadSurd::QuadSurd(const BigRat& r) : a_(r.num()), b_(0), c_(r.den()), d_(1) {}

QuadSurd::QuadSurd(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

QuadSurd QuadSurd::reduce(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) throw DomainError("surd with zero denominator");
  if (d == 1) {
    a += b;
    b = 0;
  }
  if (b == 0) d = 1;
  if (sgn(c) < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return QuadSurd(std::move(a), std::move(b), std::move(c), std::move(d));
}

QuadSurd QuadSurd::normalize(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) throw DomainError("surd with zero denominator");
  if (sgn(d) <= 0) throw DomainError("surd radicand must be positive");
  if (b != 0 && d != 1) {
    auto split = exact::square_split(d, exact::Reduction::complete);
    b *= split.root;
    d = std::move(split.kernel);
  }
  return reduce(std::move(a), std::move(b), std::move(c), std::move(d));
}

QuadSurd QuadSurd::sqrt(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError("square root of a negative integer");
  if (n == 0) return QuadSurd();
  return normalize(0, 1, 1, n);
}

BigRat QuadSurd::to_rational() const {
  if (!is_rational()) throw DomainError("surd is irrational");
  return BigRat(a_, c_);
}

int QuadSurd::sign() const {
  // sign(a + b*sqrt(d)), c > 0
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int cmp_sq = cmp(BigInt(a_ * a_), BigInt(b_ * b_ * d_));
  return cmp_sq > 0 ? sa : (cmp_sq < 0 ? sb : 0);
}

BigInt QuadSurd::floor() const {
  if (b_ == 0) return exact::floor_div(a_, c_);
  // floor((a + t)/c) == floor((a + floor(t))/c) for c > 0.
  const BigInt r = exact::isqrt(BigInt(b_ * b_ * d_));
  const BigInt t = sgn(b_) > 0 ? r : BigInt(-r - 1);  // b*sqrt(d) is irrational here
  return exact::floor_div(BigInt(a_ + t), c_);
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(a_, -b_, c_, d_); }

QuadSurd QuadSurd::reciprocal() const {
  if (is_zero()) throw DomainError("division by zero");
  // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
  const BigInt norm = a_ * a_ - b_ * b_ * d_;
  return reduce(c_ * a_, -c_ * b_, norm, d_);
}

std::string QuadSurd::to_string() const {
  return "(" + a_.get_str() + "+" + b_.get_str() + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-a_, -b_, c_, d_); }

const BigInt& QuadSurd::common_field(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational() || x.d_ == y.d_) return x.d_;
  throw DomainError("operands lie in different quadratic fields");
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const BigInt& d = QuadSurd::common_field(x, y);
  return QuadSurd::reduce(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const BigInt& d = QuadSurd::common_field(x, y);
  return QuadSurd::reduce(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  QuadSurd::common_field(x, y);
  return x * y.reciprocal();
}

QuadSurd surd_arith(const QuadSurd& x, const QuadSurd& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw DomainError("unknown arithmetic operation");
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << x.to_string(); }

}  // namespace cfapprox
