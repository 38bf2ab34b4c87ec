// Copyright 2026 The umix Authors
//
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

#include "umix/rational.h"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace umix {
namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t ParseInt(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed rational component: '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  *this = FromWide(numerator, denominator);
}

Rational Rational::FromWide(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw std::domain_error("division by zero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  __int128 g = Gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!FitsInt64(numerator) || !FitsInt64(denominator)) {
    throw std::overflow_error("rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational Rational::operator-() const {
  return FromWide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& other) {
  __int128 n = static_cast<__int128>(num_) * other.den_ +
               static_cast<__int128>(other.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * other.den_;
  return *this = FromWide(n, d);
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  __int128 g1 = Gcd(num_, other.den_);
  __int128 g2 = Gcd(other.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = (num_ / g1) * (other.num_ / g2);
  __int128 d = (den_ / g2) * (other.den_ / g1);
  return *this = FromWide(n, d);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("division by zero");
  return *this *= FromWide(other.den_, other.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text));
  std::int64_t n = ParseInt(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("denominator must be positive");
  }
  return Rational(n, ParseInt(den_text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace umix
