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

#ifndef UMIX_RATIONAL_H_
#define UMIX_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace umix {

// Exact rational number with 64-bit numerator and denominator. Always kept in
// lowest terms with a positive denominator. Intermediate products use 128-bit
// arithmetic; a result that does not fit in 64 bits throws
// std::overflow_error rather than rounding.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p/q", or "p" when q == 1.
  std::string ToString() const;
  // Accepts "p/q", "p", and an optional leading '-'. Throws
  // std::invalid_argument on malformed input or a zero denominator.
  static Rational Parse(std::string_view text);

  // Only for rendering; never used in decisions.
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  static Rational FromWide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace umix

template <>
struct std::hash<umix::Rational> {
  std::size_t operator()(const umix::Rational& r) const noexcept {
    return std::hash<std::int64_t>()(r.numerator()) * 1000003u ^
           std::hash<std::int64_t>()(r.denominator());
  }
};

#endif  // UMIX_RATIONAL_H_
