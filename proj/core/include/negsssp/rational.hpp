// Copyright 2026 The negsssp Authors
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

#ifndef NEGSSSP_RATIONAL_HPP_
#define NEGSSSP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace negsssp {

// Exact rational with a +infinity sentinel.
//
// inf + finite = inf, inf compares greater than every finite value and equal
// to itself. inf - inf and any arithmetic producing -inf throw
// std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational infinity() {
    Rational r;
    r.inf_ = true;
    return r;
  }

  // Accepts "12", "-3.25", "1e-3", "7/4" and "inf". Throws
  // std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  bool is_inf() const { return inf_; }
  const mpq_class& value() const { return v_; }
  double to_double() const;
  // Integer or "p/q"; "inf" for the sentinel.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.inf_ || b.inf_) {
      if (a.inf_ && b.inf_) return std::strong_ordering::equal;
      return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
  bool inf_ = false;
};

}  // namespace negsssp

#endif  // NEGSSSP_RATIONAL_HPP_
