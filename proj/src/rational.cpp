/* Copyright 2026 The Equilat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "equilat/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "equilat/error.hpp"

namespace equilat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kPreconditionViolated: return "precondition_violated";
    case ErrorCode::kNotLinked: return "not_linked";
    case ErrorCode::kNotEquilateral: return "not_equilateral";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kSchema: return "schema_violation";
    case ErrorCode::kIo: return "io_error";
  }
  return "unknown";
}

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  require(den != 0, ErrorCode::kInvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  require(fits(num) && fits(den), ErrorCode::kOverflow, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const {
  require(num_ != std::numeric_limits<std::int64_t>::min(), ErrorCode::kOverflow,
          "rational overflow");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(Wide{num_} + rhs.num_, den_);
  } else {
    *this = from_wide(Wide{num_} * rhs.den_ + Wide{rhs.num_} * den_, Wide{den_} * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(Wide{num_} - rhs.num_, den_);
  } else {
    *this = from_wide(Wide{num_} * rhs.den_ - Wide{rhs.num_} * den_, Wide{den_} * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(Wide{num_} * rhs.num_, Wide{den_} * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  require(rhs.num_ != 0, ErrorCode::kInvalidArgument, "division by zero");
  *this = from_wide(Wide{num_} * rhs.den_, Wide{den_} * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  Wide l = Wide{lhs.num_} * rhs.den_;
  Wide r = Wide{rhs.num_} * lhs.den_;
  return l <=> r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace equilat
