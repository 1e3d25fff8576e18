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

#include "rmpsd/rational.hpp"

#include <cctype>
#include <ostream>

namespace rmpsd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::kDivisionByZero, "rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class v) {
  Rational r;
  r.v_ = std::move(v);
  // gmp keeps results canonical for canonical operands; nothing to do.
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  auto bad = [&] { fail(ErrorCode::kParseError, "malformed rational: '" + std::string(text) + "'"); };

  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad();
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorCode::kDivisionByZero, "rational with zero denominator");
    value = mpq_class(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class n = mpz_class(std::string(ip), 10) * scale + mpz_class(std::string(fp), 10);
    value = mpq_class(n, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) bad();
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  if (negative) value = -value;
  return from_mpq(std::move(value));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveValue: return "NonPositiveValue";
    case ErrorCode::kDemandZero: return "DemandZero";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kUnrelatedValuations: return "UnrelatedValuations";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kNotAPrefix: return "NotAPrefix";
    case ErrorCode::kPrefixDoesNotFit: return "PrefixDoesNotFit";
    case ErrorCode::kSoldItemPricedInfinite: return "SoldItemPricedInfinite";
    case ErrorCode::kNoBuyerFits: return "NoBuyerFits";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kLambdaTooSmall: return "LambdaTooSmall";
    case ErrorCode::kInvalidCPInstance: return "InvalidCPInstance";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace rmpsd
