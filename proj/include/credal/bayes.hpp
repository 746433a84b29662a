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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "credal/loss.hpp"

namespace credal {

// Independent Dirichlet priors on alpha = Pr(X | Y=1) (parameters a) and
// beta = Pr(X | Y=0) (parameters b), with the Y-marginal p known.
class DirichletProductPrior {
 public:
  DirichletProductPrior(std::vector<double> a, std::vector<double> b,
                        double p);

  static DirichletProductPrior Uniform(std::size_t m, double p);
  static DirichletProductPrior Jeffreys(std::size_t m, double p);
  // a_k = b_k = s / M.
  static DirichletProductPrior EquivalentSampleSize(std::size_t m, double s,
                                                    double p);

  std::size_t m() const noexcept { return a_.size(); }
  std::span<const double> a() const noexcept { return a_; }
  std::span<const double> b() const noexcept { return b_; }
  double p() const noexcept { return p_; }
  double a_sum() const noexcept { return a_sum_; }
  double b_sum() const noexcept { return b_sum_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  double p_;
  double a_sum_;
  double b_sum_;
};

// Sufficient statistics n_(j,k) of a binary-Y sample, j in [0, M).
class SampleCounts {
 public:
  // cells is M x 2 row-major: cells[2 * j + k] = n_(j,k).
  SampleCounts(std::size_t m, std::vector<std::uint64_t> cells);

  static SampleCounts Zero(std::size_t m) {
    return SampleCounts(m, std::vector<std::uint64_t>(2 * m, 0));
  }

  std::size_t m() const noexcept { return m_; }
  std::uint64_t at(std::size_t j, std::size_t k) const {
    return cells_[2 * j + k];
  }
  std::uint64_t n_y(std::size_t k) const { return n_y_[k]; }
  std::uint64_t n() const noexcept { return n_y_[0] + n_y_[1]; }
  std::uint64_t x_count(std::size_t j) const { return at(j, 0) + at(j, 1); }

  // Same counts with n_(j,k) incremented.
  SampleCounts With(std::size_t j, std::size_t k) const;

 private:
  std::size_t m_;
  std::vector<std::uint64_t> cells_;
  std::uint64_t n_y_[2];
};

// Tallies (x, y) pairs, x in [0, M) and y in {0, 1}; throws
// kInvalidArgument on an out-of-range symbol.
SampleCounts CountsFromSample(
    std::span<const std::pair<std::size_t, std::size_t>> sample,
    std::size_t m);

// Posterior odds Pr(Y=1 | X=k, D) / Pr(Y=0 | X=k, D):
//   p/(1-p) * (n_(k,1) + a_k)/(n_(k,0) + b_k) * (n_0 + sum b)/(n_1 + sum a).
double PosteriorOdds(const DirichletProductPrior& prior,
                     const SampleCounts& counts, std::size_t k);

// The same odds under the uniform prior, written with M in place of the
// parameter sums. Bit-identical to PosteriorOdds(Uniform(M, p), ...).
double PosteriorOddsUniform(const SampleCounts& counts, std::size_t k,
                            double p);

struct PredictiveDistribution {
  // q[k] = Pr(Y=1 | X=k, D).
  std::vector<double> q;
  // odds[k] = q[k] / (1 - q[k]), kept exactly as computed.
  std::vector<double> odds;
};

PredictiveDistribution Predictive(const DirichletProductPrior& prior,
                                  const SampleCounts& counts);

// Pr(X_{n+1} = k | D) under the prior.
std::vector<double> PredictiveX(const DirichletProductPrior& prior,
                                const SampleCounts& counts);

// Costs closer than this (relative, floor 1) count as tied, so rounding in
// the odds cannot break an exact tie.
inline constexpr double kBayesTieTolerance = 1e-12;

// True when a is below b by more than the tie tolerance.
bool ClearlyBelow(double a, double b);

// Bayes action for observation k. Minimizes L(0,a) + odds_k L(1,a), which is
// proportional to the posterior expected loss; lowest action on ties. For
// the asymmetric loss this is "predict 1 iff cost < odds_k".
std::size_t BayesDecision(const PredictiveDistribution& predictive,
                          const LossSpec& loss, std::size_t k);

// log Pr(D) for a specific sequence with these counts.
double LogMarginalLikelihood(const DirichletProductPrior& prior,
                             const SampleCounts& counts);

struct HierarchicalPredictive {
  PredictiveDistribution predictive;
  // Posterior weight of the dependent model given D and X_{n+1} = k.
  std::vector<double> dependent_weight;
  // Pr(X_{n+1} = k | D) under the mixture.
  std::vector<double> x_predictive;
};

// Equal-weight average of an independence model (X independent of Y, uniform
// Dirichlet on the X-marginal) and the uniform Dirichlet-product model.
HierarchicalPredictive HierarchicalPredictiveFor(const SampleCounts& counts,
                                                 double p);

}  // namespace credal
