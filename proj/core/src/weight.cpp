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

#include "negsssp/weight.hpp"

#include <charconv>
#include <stdexcept>

namespace negsssp {

double WeightTraits<double>::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return inf();
  std::string_view body = text;
  if (!body.empty() && body[0] == '+') body.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::string WeightTraits<double>::to_string(double w) {
  if (is_inf(w)) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, ptr);
}

}  // namespace negsssp
