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

namespace credal {

// Dense row-major matrix of payoffs paid by the row player (a loss the row
// player minimizes).
class PayoffMatrix {
 public:
  PayoffMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  PayoffMatrix NegatedTranspose() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

struct MatrixGameSolution {
  // Minimizing row mixture.
  std::vector<double> row_strategy;
  // Maximizing column mixture, read off the dual.
  std::vector<double> column_strategy;
  // min over row mixtures of max over columns of the expected payoff.
  double value = 0.0;
};

// Solves the zero-sum game with the simplex method under Bland's rule.
// Throws kInvalidArgument for an empty matrix or NaN entries,
// kUnsupported for infinite entries and kNumeric if the pivot limit is hit.
MatrixGameSolution SolveMatrixGame(const PayoffMatrix& payoff);

}  // namespace credal
