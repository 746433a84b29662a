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

#include "credal/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "credal/error.hpp"

namespace credal {
namespace {

void ValidateMass(std::span<const double> mass, const char* what) {
  if (mass.empty()) {
    Fail(ErrorCode::kInvalidArgument, std::string(what) + ": empty support");
  }
  double total = 0.0;
  for (double m : mass) {
    if (!std::isfinite(m) || m < 0.0) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(what) + ": entries must be finite and nonnegative");
    }
    total += m;
  }
  if (std::abs(total - 1.0) > kConstructionTolerance) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": mass sums to " + std::to_string(total));
  }
}

double EntropyOf(std::span<const double> mass) {
  double h = 0.0;
  for (double m : mass) {
    if (m > 0.0) h -= m * std::log2(m);
  }
  return h;
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<double> mass)
    : mass_(std::move(mass)) {
  ValidateMass(mass_, "distribution");
}

FiniteDistribution FiniteDistribution::Uniform(std::size_t size) {
  if (size == 0) Fail(ErrorCode::kDimension, "uniform: empty support");
  return FiniteDistribution(
      std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

FiniteDistribution FiniteDistribution::PointMass(std::size_t size,
                                                 std::size_t index) {
  if (index >= size) Fail(ErrorCode::kDimension, "point mass out of range");
  std::vector<double> mass(size, 0.0);
  mass[index] = 1.0;
  return FiniteDistribution(std::move(mass));
}

FiniteDistribution FiniteDistribution::Bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "Bernoulli parameter outside [0, 1]");
  }
  return FiniteDistribution({1.0 - p, p});
}

double FiniteDistribution::EntropyBits() const { return EntropyOf(mass_); }

double TotalVariation(const FiniteDistribution& a,
                      const FiniteDistribution& b) {
  if (a.size() != b.size()) {
    Fail(ErrorCode::kDimension, "total variation: size mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return 0.5 * d;
}

JointDistribution::JointDistribution(std::size_t x_size, std::size_t y_size,
                                     std::vector<double> mass)
    : x_size_(x_size), y_size_(y_size), mass_(std::move(mass)) {
  if (x_size_ == 0 || y_size_ == 0 || mass_.size() != x_size_ * y_size_) {
    Fail(ErrorCode::kDimension, "joint: mass does not match |X| x |Y|");
  }
  ValidateMass(mass_, "joint");
}

JointDistribution JointDistribution::Uniform(std::size_t x_size,
                                             std::size_t y_size) {
  const double cell = 1.0 / static_cast<double>(x_size * y_size);
  return JointDistribution(x_size, y_size,
                           std::vector<double>(x_size * y_size, cell));
}

FiniteDistribution JointDistribution::YMarginal() const {
  std::vector<double> m(y_size_, 0.0);
  for (std::size_t x = 0; x < x_size_; ++x) {
    for (std::size_t y = 0; y < y_size_; ++y) m[y] += at(x, y);
  }
  return FiniteDistribution(std::move(m));
}

FiniteDistribution JointDistribution::XMarginal() const {
  std::vector<double> m(x_size_, 0.0);
  for (std::size_t x = 0; x < x_size_; ++x) m[x] = XProbability(x);
  return FiniteDistribution(std::move(m));
}

double JointDistribution::XProbability(std::size_t x) const {
  double s = 0.0;
  for (std::size_t y = 0; y < y_size_; ++y) s += at(x, y);
  return s;
}

double JointDistribution::EntropyBits() const { return EntropyOf(mass_); }

ParamJoint::ParamJoint(double p, FiniteDistribution alpha,
                       FiniteDistribution beta)
    : p_(p), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!(p_ > 0.0 && p_ < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "Pr(Y=1) must lie in (0, 1)");
  }
  if (alpha_.size() != beta_.size()) {
    Fail(ErrorCode::kDimension, "alpha and beta differ in length");
  }
}

JointDistribution ParamJoint::Joint() const {
  const std::size_t m = x_size();
  std::vector<double> mass(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    mass[2 * j + 0] = (1.0 - p_) * beta_[j];
    mass[2 * j + 1] = p_ * alpha_[j];
  }
  return JointDistribution(m, 2, std::move(mass));
}

ProbabilityInterval::ProbabilityInterval(double lo, double hi)
    : lower(lo), upper(hi) {
  if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
    Fail(ErrorCode::kNumeric, "malformed probability interval [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
  }
}

}  // namespace credal
