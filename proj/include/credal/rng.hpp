// Copyright 2026 The credal-decide Authors.
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

namespace credal {

// SplitMix64 used in counter mode: the i-th draw of stream `key` is
// Mix(key + (i + 1) * kGamma). Streams for Monte Carlo run r use the key
// Mix(seed + (r + 1) * kGamma).
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static CounterRng ForRun(std::uint64_t seed, std::uint64_t run) {
    return CounterRng(Mix(seed + (run + 1) * kGamma));
  }

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t Next() {
    ++counter_;
    return Mix(key_ + counter_ * kGamma);
  }

  // Uniform on [0, 1) with 53 random bits.
  double NextUniform() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace credal
