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
#include <span>
#include <vector>

namespace credal {

// Mass vectors must sum to one within this tolerance at construction.
inline constexpr double kConstructionTolerance = 1e-12;
// Tolerance for comparing derived probabilities (bounds, tie checks).
inline constexpr double kComparisonTolerance = 1e-9;

// A probability vector over {0, ..., size()-1}.
class FiniteDistribution {
 public:
  // Throws kInvalidArgument on empty input, negative or non-finite entries,
  // or a total that misses 1 by more than kConstructionTolerance.
  explicit FiniteDistribution(std::vector<double> mass);

  static FiniteDistribution Uniform(std::size_t size);
  static FiniteDistribution PointMass(std::size_t size, std::size_t index);
  // Binary distribution (1 - p, p).
  static FiniteDistribution Bernoulli(double p);

  std::size_t size() const noexcept { return mass_.size(); }
  double operator[](std::size_t i) const { return mass_[i]; }
  std::span<const double> mass() const noexcept { return mass_; }

  double EntropyBits() const;

  friend bool operator==(const FiniteDistribution&,
                         const FiniteDistribution&) = default;

 private:
  std::vector<double> mass_;
};

double TotalVariation(const FiniteDistribution& a, const FiniteDistribution& b);

// Joint distribution over X x Y, stored x-major: mass[x * y_size + y].
class JointDistribution {
 public:
  JointDistribution(std::size_t x_size, std::size_t y_size,
                    std::vector<double> mass);

  static JointDistribution Uniform(std::size_t x_size, std::size_t y_size);

  std::size_t x_size() const noexcept { return x_size_; }
  std::size_t y_size() const noexcept { return y_size_; }
  double at(std::size_t x, std::size_t y) const {
    return mass_[x * y_size_ + y];
  }
  std::span<const double> mass() const noexcept { return mass_; }

  FiniteDistribution YMarginal() const;
  FiniteDistribution XMarginal() const;
  double XProbability(std::size_t x) const;

  double EntropyBits() const;

 private:
  std::size_t x_size_;
  std::size_t y_size_;
  std::vector<double> mass_;
};

// Binary-Y joint parameterized by p = Pr(Y=1), alpha_j = Pr(X=j | Y=1) and
// beta_j = Pr(X=j | Y=0).
class ParamJoint {
 public:
  ParamJoint(double p, FiniteDistribution alpha, FiniteDistribution beta);

  double p() const noexcept { return p_; }
  const FiniteDistribution& alpha() const noexcept { return alpha_; }
  const FiniteDistribution& beta() const noexcept { return beta_; }
  std::size_t x_size() const noexcept { return alpha_.size(); }

  JointDistribution Joint() const;

 private:
  double p_;
  FiniteDistribution alpha_;
  FiniteDistribution beta_;
};

struct ProbabilityInterval {
  ProbabilityInterval(double lower, double upper);

  double lower;
  double upper;

  bool IsPoint(double tol = kComparisonTolerance) const {
    return upper - lower <= tol;
  }
};

}  // namespace credal
