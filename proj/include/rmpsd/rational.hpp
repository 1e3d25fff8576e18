// Copyright 2026 The rmpsd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RMPSD_RATIONAL_HPP
#define RMPSD_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "rmpsd/errors.hpp"

namespace rmpsd {

/// Exact rational number backed by GMP. Always stored in lowest terms with
/// a positive denominator; every operation and comparison is exact. There is
/// deliberately no conversion to or from floating point.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT: implicit by design
  Rational(long n) : v_(mpz_class(n)) {}    // NOLINT
  Rational(long long n) : v_(mpz_class(std::to_string(n))) {}  // NOLINT
  explicit Rational(const mpz_class& n) : v_(n) {}

  Rational(long num, long den);

  static Rational from_mpq(mpq_class v);

  /// Parses "5", "-3/4" or "0.25" (decimals convert exactly).
  static Rational parse(std::string_view text);

  /// Renders as "a" for integers, "a/b" otherwise.
  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_mpq(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_mpq(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_mpq(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
  }
  friend Rational operator-(const Rational& a) {
    return from_mpq(mpq_class(-a.v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);

/// Smallest integer >= r, as a Rational.
Rational ceil(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rmpsd

#endif  // RMPSD_RATIONAL_HPP
