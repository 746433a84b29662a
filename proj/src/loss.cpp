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

#include "credal/loss.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "credal/error.hpp"

namespace credal {

LossSpec::LossSpec(std::size_t y_size, std::size_t action_count,
                   std::size_t x_size, std::vector<double> table)
    : y_size_(y_size),
      action_count_(action_count),
      x_size_(x_size),
      table_(std::move(table)) {
  const std::size_t xs = x_size_ == 0 ? 1 : x_size_;
  if (y_size_ == 0 || action_count_ == 0 ||
      table_.size() != y_size_ * action_count_ * xs) {
    Fail(ErrorCode::kDimension, "loss table size does not match dimensions");
  }
  for (double v : table_) {
    if (std::isnan(v) || v == -INFINITY) {
      Fail(ErrorCode::kInvalidArgument,
           "loss entries must be real or +infinity");
    }
  }
}

LossSpec LossSpec::Independent(std::size_t y_size, std::size_t action_count,
                               std::vector<double> table) {
  return LossSpec(y_size, action_count, 0, std::move(table));
}

LossSpec LossSpec::ObservationDependent(std::size_t y_size,
                                        std::size_t action_count,
                                        std::size_t x_size,
                                        std::vector<double> table) {
  if (x_size == 0) {
    Fail(ErrorCode::kDimension, "observation-dependent loss needs |X| > 0");
  }
  return LossSpec(y_size, action_count, x_size, std::move(table));
}

LossSpec LossSpec::ZeroOne(std::size_t n) {
  std::vector<double> t(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i] = 0.0;
  return Independent(n, n, std::move(t));
}

LossSpec LossSpec::Asymmetric(double cost) {
  if (!std::isfinite(cost) || cost < 0.0) {
    Fail(ErrorCode::kInvalidArgument, "asymmetric loss cost must be >= 0");
  }
  // rows y, columns a
  return Independent(2, 2, {0.0, cost, 1.0, 0.0});
}

LossSpec LossSpec::ObservationScaled() {
  std::vector<double> t(8);
  for (std::size_t y = 0; y < 2; ++y) {
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t x = 0; x < 2; ++x) {
        t[(y * 2 + a) * 2 + x] = (a == y) ? 0.0 : static_cast<double>(x + 1);
      }
    }
  }
  return ObservationDependent(2, 2, 2, std::move(t));
}

LossSpec LossSpec::ObservationMismatch() {
  std::vector<double> t(8);
  for (std::size_t y = 0; y < 2; ++y) {
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t x = 0; x < 2; ++x) {
        t[(y * 2 + a) * 2 + x] = (a == y) ? 0.0 : (x == y ? 1.0 : 2.0);
      }
    }
  }
  return ObservationDependent(2, 2, 2, std::move(t));
}

LossSpec LossSpec::Slice(std::size_t x) const {
  if (x_size_ == 0) return *this;
  if (x >= x_size_) Fail(ErrorCode::kDimension, "loss slice outside X");
  std::vector<double> t(y_size_ * action_count_);
  for (std::size_t y = 0; y < y_size_; ++y) {
    for (std::size_t a = 0; a < action_count_; ++a) {
      t[y * action_count_ + a] = (*this)(y, a, x);
    }
  }
  return Independent(y_size_, action_count_, std::move(t));
}

bool LossSpec::AllFinite() const {
  for (double v : table_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void LossSpec::CheckCompatible(std::size_t x_size, std::size_t y_size) const {
  if (y_size != y_size_) {
    Fail(ErrorCode::kDimension, "loss expects |Y| = " +
                                    std::to_string(y_size_) + ", got " +
                                    std::to_string(y_size));
  }
  if (x_size_ != 0 && x_size != x_size_) {
    Fail(ErrorCode::kDimension, "loss expects |X| = " +
                                    std::to_string(x_size_) + ", got " +
                                    std::to_string(x_size));
  }
}

DecisionRule::DecisionRule(std::vector<FiniteDistribution> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) Fail(ErrorCode::kDimension, "rule: no observations");
  for (const auto& r : rows_) {
    if (r.size() != rows_.front().size()) {
      Fail(ErrorCode::kDimension, "rule rows differ in action count");
    }
  }
}

DecisionRule DecisionRule::Constant(std::size_t x_size,
                                    FiniteDistribution actions) {
  if (x_size == 0) Fail(ErrorCode::kDimension, "rule: no observations");
  return DecisionRule(std::vector<FiniteDistribution>(x_size, actions));
}

DecisionRule DecisionRule::ConstantAction(std::size_t x_size,
                                          std::size_t action_count,
                                          std::size_t action) {
  return Constant(x_size, FiniteDistribution::PointMass(action_count, action));
}

DecisionRule DecisionRule::Deterministic(
    const std::vector<std::size_t>& actions, std::size_t action_count) {
  std::vector<FiniteDistribution> rows;
  rows.reserve(actions.size());
  for (std::size_t a : actions) {
    rows.push_back(FiniteDistribution::PointMass(action_count, a));
  }
  return DecisionRule(std::move(rows));
}

bool DecisionRule::IsConstant(double tol) const {
  for (const auto& r : rows_) {
    if (TotalVariation(r, rows_.front()) > tol) return false;
  }
  return true;
}

}  // namespace credal
