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

#include <cstddef>
#include <vector>

#include "credal/distribution.hpp"

namespace credal {

// Loss table L(y, a) or, when observation dependent, L(y, a, x). Entries are
// real or +infinity.
class LossSpec {
 public:
  // table is (y, a) row-major.
  static LossSpec Independent(std::size_t y_size, std::size_t action_count,
                              std::vector<double> table);
  // table is indexed [(y * action_count + a) * x_size + x].
  static LossSpec ObservationDependent(std::size_t y_size,
                                       std::size_t action_count,
                                       std::size_t x_size,
                                       std::vector<double> table);

  // |Y| = |A| = n, loss 0 on the diagonal and 1 elsewhere.
  static LossSpec ZeroOne(std::size_t n = 2);
  // Binary prediction with L(1, 0) = 1 and L(0, 1) = cost.
  static LossSpec Asymmetric(double cost);
  // Binary prediction, loss (x + 1) |a - y|.
  static LossSpec ObservationScaled();
  // Binary prediction, loss (|x - y| + 1) |a - y|.
  static LossSpec ObservationMismatch();

  std::size_t y_size() const noexcept { return y_size_; }
  std::size_t action_count() const noexcept { return action_count_; }
  bool x_dependent() const noexcept { return x_size_ != 0; }
  // 0 when the loss ignores the observation.
  std::size_t x_size() const noexcept { return x_size_; }

  double operator()(std::size_t y, std::size_t a, std::size_t x = 0) const {
    return x_size_ == 0 ? table_[y * action_count_ + a]
                        : table_[(y * action_count_ + a) * x_size_ + x];
  }

  // Observation-independent loss L(., ., x). Returns a copy for an
  // independent loss.
  LossSpec Slice(std::size_t x) const;

  bool AllFinite() const;

  // Throws kDimension unless the loss fits |X| = x_size, |Y| = y_size.
  void CheckCompatible(std::size_t x_size, std::size_t y_size) const;

 private:
  LossSpec(std::size_t y_size, std::size_t action_count, std::size_t x_size,
           std::vector<double> table);

  std::size_t y_size_;
  std::size_t action_count_;
  std::size_t x_size_;
  std::vector<double> table_;
};

// Randomized decision rule: one action distribution per observation.
class DecisionRule {
 public:
  explicit DecisionRule(std::vector<FiniteDistribution> rows);

  static DecisionRule Constant(std::size_t x_size, FiniteDistribution actions);
  static DecisionRule ConstantAction(std::size_t x_size,
                                     std::size_t action_count,
                                     std::size_t action);
  // actions[x] is the action taken on observing x.
  static DecisionRule Deterministic(const std::vector<std::size_t>& actions,
                                    std::size_t action_count);

  std::size_t x_size() const noexcept { return rows_.size(); }
  std::size_t action_count() const noexcept { return rows_.front().size(); }
  const FiniteDistribution& row(std::size_t x) const { return rows_[x]; }
  double operator()(std::size_t x, std::size_t a) const { return rows_[x][a]; }

  // Largest total-variation distance between any row and row 0 is <= tol.
  bool IsConstant(double tol = kComparisonTolerance) const;

 private:
  std::vector<FiniteDistribution> rows_;
};

}  // namespace credal
