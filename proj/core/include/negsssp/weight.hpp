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

#ifndef NEGSSSP_WEIGHT_HPP_
#define NEGSSSP_WEIGHT_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "negsssp/rational.hpp"

namespace negsssp {

template <class W>
struct WeightTraits;

template <>
struct WeightTraits<double> {
  static constexpr bool kExact = false;
  static constexpr const char* kName = "float";

  static double inf() { return std::numeric_limits<double>::infinity(); }
  static bool is_inf(double w) { return w == inf(); }
  static double from_int(std::int64_t v) { return static_cast<double>(v); }
  static double parse(std::string_view text);
  // Shortest representation that parses back to the same value.
  static std::string to_string(double w);
  static double to_double(double w) { return w; }
  static double abs(double w) { return std::fabs(w); }
  // Absolute tolerance used by the "keep only if non-negative" filters.
  static double slack(double max_abs) { return std::ldexp(max_abs, -32); }
};

template <>
struct WeightTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr const char* kName = "rational";

  static Rational inf() { return Rational::infinity(); }
  static bool is_inf(const Rational& w) { return w.is_inf(); }
  static Rational from_int(std::int64_t v) {
    return Rational(static_cast<long>(v));
  }
  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static std::string to_string(const Rational& w) { return w.to_string(); }
  static double to_double(const Rational& w) { return w.to_double(); }
  static Rational abs(const Rational& w) { return w < 0 ? -w : w; }
  static Rational slack(const Rational&) { return Rational(0); }
};

// Largest finite |w| over a sequence; zero for an empty one.
template <class W, class Range>
W max_abs_finite(const Range& values) {
  W best = WeightTraits<W>::from_int(0);
  for (const W& v : values) {
    if (WeightTraits<W>::is_inf(v)) continue;
    W a = WeightTraits<W>::abs(v);
    if (best < a) best = a;
  }
  return best;
}

}  // namespace negsssp

#endif  // NEGSSSP_WEIGHT_HPP_
