// Copyright 2026 The dmlab Authors
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

#pragma once

#include <cstdint>

namespace dmlab {

// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D).
// The state is the seed itself; a zero seed is mapped to a fixed non-zero
// constant since zero is a fixed point of the xorshift step.
class XorShift64Star {
 public:
  static constexpr std::uint64_t kZeroSeedState = 0x9E3779B97F4A7C15ULL;

  explicit XorShift64Star(std::uint64_t seed)
      : state_(seed == 0 ? kZeroSeedState : seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform in [0, bound) by rejection. Precondition: bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace dmlab
