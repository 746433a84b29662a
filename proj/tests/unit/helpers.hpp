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

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "credal/error.hpp"
#include "doctest.h"

namespace credal_test {

// Fails the test unless expr throws credal::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                          \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const credal::Error& e_) {                           \
      thrown_ = true;                                             \
      CHECK_MESSAGE(e_.code() == (expected), "message: " << e_.what()); \
    }                                                             \
    CHECK_MESSAGE(thrown_, "no credal::Error from " #expr);       \
  } while (0)

inline std::vector<double> RandomSimplexPoint(std::size_t size,
                                              std::mt19937_64& rng,
                                              double floor = 0.0) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> v(size);
  double total = 0.0;
  for (auto& x : v) {
    x = e(rng) + floor;
    total += x;
  }
  for (auto& x : v) x /= total;
  // Push the rounding residue into the largest entry.
  double sum = 0.0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < size; ++i) {
    sum += v[i];
    if (v[i] > v[big]) big = i;
  }
  v[big] += 1.0 - sum;
  return v;
}

inline std::size_t RandomIndex(std::size_t lo, std::size_t hi,
                               std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double RandomReal(double lo, double hi, std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace credal_test
