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

#include "credal/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "credal/error.hpp"

namespace credal {
namespace {

constexpr double kPivotEps = 1e-12;
constexpr double kZeroWeight = 1e-14;
constexpr std::size_t kStallLimit = 50;

// Dense tableau for  max sum(u)  s.t.  B^T u <= 1, u >= 0,  with B > 0.
// Column layout: structural u_0..u_{n-1}, slacks s_0..s_{m-1}, rhs.
class Tableau {
 public:
  Tableau(const PayoffMatrix& scaled)
      : n_(scaled.rows()),
        m_(scaled.cols()),
        width_(n_ + m_ + 1),
        cells_(m_ * width_, 0.0),
        objective_(width_, 0.0),
        basis_(m_) {
    for (std::size_t c = 0; c < m_; ++c) {
      double* row = &cells_[c * width_];
      for (std::size_t r = 0; r < n_; ++r) row[r] = scaled(r, c);
      row[n_ + c] = 1.0;
      row[width_ - 1] = 1.0;
      basis_[c] = n_ + c;
    }
    for (std::size_t r = 0; r < n_; ++r) objective_[r] = 1.0;
  }

  void Solve() {
    // Dantzig pricing, dropping to Bland while pivots stall on a degenerate
    // vertex; Bland cannot cycle, so the stall always ends.
    const std::size_t limit = 200 * (n_ + m_) + 10000;
    std::size_t stalled = 0;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      const bool bland = stalled > kStallLimit;
      std::size_t enter = width_;
      double steepest = kPivotEps;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (objective_[j] <= kPivotEps) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (objective_[j] > steepest) {
          steepest = objective_[j];
          enter = j;
        }
      }
      if (enter == width_) return;

      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = at(i, width_ - 1) / a;
        if (leave == m_ || ratio < best - kPivotEps) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + kPivotEps && basis_[i] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) {
        Fail(ErrorCode::kNumeric, "matrix game LP reported unbounded");
      }
      stalled = best <= kPivotEps ? stalled + 1 : 0;
      Pivot(leave, enter);
    }
    Fail(ErrorCode::kNumeric, "matrix game LP exceeded its pivot limit");
  }

  // Optimal u (primal) and y (dual) vectors.
  std::vector<double> Primal() const {
    std::vector<double> u(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) u[basis_[i]] = at(i, width_ - 1);
    }
    return u;
  }

  std::vector<double> Dual() const {
    std::vector<double> y(m_);
    for (std::size_t c = 0; c < m_; ++c) y[c] = -objective_[n_ + c];
    return y;
  }

 private:
  double& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const {
    return cells_[i * width_ + j];
  }

  void Pivot(std::size_t leave, std::size_t enter) {
    double* prow = &cells_[leave * width_];
    const double inv = 1.0 / prow[enter];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[enter] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == leave) continue;
      double* row = &cells_[i * width_];
      const double f = row[enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * prow[j];
      row[enter] = 0.0;
    }
    const double f = objective_[enter];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) objective_[j] -= f * prow[j];
      objective_[enter] = 0.0;
    }
    basis_[leave] = enter;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<double> objective_;
  std::vector<std::size_t> basis_;
};

std::vector<double> Normalized(std::vector<double> v) {
  double total = 0.0;
  for (double& x : v) {
    if (x < kZeroWeight) x = 0.0;
    total += x;
  }
  if (!(total > 0.0)) Fail(ErrorCode::kNumeric, "degenerate LP solution");
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols,
                           std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    Fail(ErrorCode::kDimension, "payoff data does not match rows x cols");
  }
}

PayoffMatrix PayoffMatrix::NegatedTranspose() const {
  PayoffMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = -(*this)(r, c);
  }
  return t;
}

MatrixGameSolution SolveMatrixGame(const PayoffMatrix& payoff) {
  if (payoff.rows() == 0 || payoff.cols() == 0) {
    Fail(ErrorCode::kInvalidArgument, "matrix game needs rows and columns");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < payoff.rows(); ++r) {
    for (std::size_t c = 0; c < payoff.cols(); ++c) {
      const double v = payoff(r, c);
      if (std::isnan(v)) {
        Fail(ErrorCode::kInvalidArgument, "matrix game payoff is NaN");
      }
      if (std::isinf(v)) {
        Fail(ErrorCode::kUnsupported, "matrix game payoff is infinite");
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }

  MatrixGameSolution solution;
  const double range = hi - lo;
  if (range == 0.0) {
    solution.row_strategy.assign(payoff.rows(), 0.0);
    solution.row_strategy[0] = 1.0;
    solution.column_strategy.assign(payoff.cols(), 0.0);
    solution.column_strategy[0] = 1.0;
    solution.value = lo;
    return solution;
  }

  // Affine map onto [1, 2] keeps the LP bounded with a feasible origin.
  PayoffMatrix scaled(payoff.rows(), payoff.cols());
  for (std::size_t r = 0; r < payoff.rows(); ++r) {
    for (std::size_t c = 0; c < payoff.cols(); ++c) {
      scaled(r, c) = (payoff(r, c) - lo) / range + 1.0;
    }
  }

  Tableau tableau(scaled);
  tableau.Solve();
  std::vector<double> u = tableau.Primal();
  double z = 0.0;
  for (double x : u) z += x;
  if (!(z > 0.0)) Fail(ErrorCode::kNumeric, "matrix game LP has zero value");

  solution.row_strategy = Normalized(std::move(u));
  solution.column_strategy = Normalized(tableau.Dual());
  // Report the guarantee the returned mixture actually achieves.
  double value = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < payoff.cols(); ++c) {
    double v = 0.0;
    for (std::size_t r = 0; r < payoff.rows(); ++r) {
      if (solution.row_strategy[r] != 0.0) {
        v += solution.row_strategy[r] * payoff(r, c);
      }
    }
    value = std::max(value, v);
  }
  solution.value = value;
  return solution;
}

}  // namespace credal
