// SPDX-License-Identifier: Apache-2.0
#include "cfapprox/exact/big_rat.hpp"

#include <ostream>

#include "cfapprox/errors.hpp"

namespace cfapprox {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigInt BigRat::floor() const { return exact::floor_div(value_.get_num(), value_.get_den()); }

BigRat BigRat::abs() const { return sign() < 0 ? -*this : *this; }

BigRat BigRat::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return BigRat(value_.get_den(), value_.get_num());
}

std::string BigRat::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRat BigRat::operator-() const { return BigRat(Raw{}, mpq_class(-value_)); }

BigRat& BigRat::operator+=(const BigRat& o) {
  value_ += o.value_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
  value_ -= o.value_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
  value_ *= o.value_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

}  // namespace cfapprox
