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

#ifndef NEGSSSP_RNG_HPP_
#define NEGSSSP_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace negsssp {

std::uint64_t splitmix64(std::uint64_t x);

// Folds several values into one seed.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

// mt19937_64 with a platform-independent mapping to integer ranges (the
// standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // k distinct indices from [0, n), in draw order.
  std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace negsssp

#endif  // NEGSSSP_RNG_HPP_
