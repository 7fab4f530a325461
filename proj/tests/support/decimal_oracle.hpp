// SPDX-License-Identifier: Apache-2.0
//
// Test-only high-precision evaluator built directly on MPFR. It reads the
// structure of a RadicalSum/QuadSurd and evaluates it with correctly rounded
// MPFR square roots, independently of the library's interval engine.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "cfapprox/exact/radical_sum.hpp"

namespace oracle {

inline constexpr mpfr_prec_t kBits = 800;  // > 200 decimal digits with margin

class Real {
 public:
  Real() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
  Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }  // NOLINT
  Real(const mpz_class& x) : Real() { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }  // NOLINT
  Real(const cfapprox::BigRat& x) : Real() { mpfr_set_q(v_, x.raw().get_mpq_t(), MPFR_RNDN); }  // NOLINT
  Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  friend Real operator+(const Real& a, const Real& b) { return op(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return op(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return op(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return op(mpfr_div, a, b); }
  Real operator-() const {
    Real r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r;
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real abs(const Real& a) {
    Real r;
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log10|x| (approximate), -inf for zero.
  double log10_abs() const {
    if (mpfr_zero_p(v_)) return -1e300;
    Real r;
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    mpfr_log10(r.v_, r.v_, MPFR_RNDN);
    return r.to_double();
  }
  /// floor(x) as an integer.
  mpz_class floor() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }
  /// "%.{digits-1}Re" rendering.
  std::string scientific(int digits) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  template <class F>
  static Real op(F f, const Real& a, const Real& b) {
    Real r;
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

inline Real eval(const cfapprox::RadicalSum& s) {
  Real acc(s.constant());
  for (const auto& [r, c] : s.terms()) acc = acc + Real(c) * sqrt(Real(r));
  return acc;
}

inline Real eval(const cfapprox::QuadSurd& x) {
  return (Real(x.a()) + Real(x.b()) * sqrt(Real(x.d()))) / Real(x.c());
}

}  // namespace oracle
