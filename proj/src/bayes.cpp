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

#include "credal/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "credal/error.hpp"

namespace credal {
namespace {

void CheckP(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "Pr(Y=1) must lie in (0, 1)");
  }
}

void CheckCompatible(const DirichletProductPrior& prior,
                     const SampleCounts& counts) {
  if (prior.m() != counts.m()) {
    Fail(ErrorCode::kDimension, "prior and counts disagree on M");
  }
}

double Sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

// log Z(params + counts) - log Z(params), Z the Dirichlet normalizer.
double LogDirichletRatio(std::span<const double> params, double params_sum,
                         const SampleCounts& counts, std::size_t k) {
  double total = 0.0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    const double c = static_cast<double>(counts.at(j, k));
    if (c == 0.0) continue;
    total += std::lgamma(params[j] + c) - std::lgamma(params[j]);
  }
  const double n = static_cast<double>(counts.n_y(k));
  return total + std::lgamma(params_sum) - std::lgamma(params_sum + n);
}

// Same ratio for the X-marginal counts pooled over Y under Dirichlet(1).
double LogUniformDirichletPooled(const SampleCounts& counts) {
  const double m = static_cast<double>(counts.m());
  double total = 0.0;
  for (std::size_t j = 0; j < counts.m(); ++j) {
    total += std::lgamma(1.0 + static_cast<double>(counts.x_count(j)));
  }
  return total + std::lgamma(m) -
         std::lgamma(m + static_cast<double>(counts.n()));
}

}  // namespace

DirichletProductPrior::DirichletProductPrior(std::vector<double> a,
                                             std::vector<double> b, double p)
    : a_(std::move(a)), b_(std::move(b)), p_(p) {
  CheckP(p_);
  if (a_.empty() || a_.size() != b_.size()) {
    Fail(ErrorCode::kDimension, "prior vectors must be non-empty and equal");
  }
  for (const auto* v : {&a_, &b_}) {
    for (double x : *v) {
      if (!(x > 0.0) || !std::isfinite(x)) {
        Fail(ErrorCode::kInvalidArgument,
             "Dirichlet parameters must be positive and finite");
      }
    }
  }
  a_sum_ = Sum(a_);
  b_sum_ = Sum(b_);
}

DirichletProductPrior DirichletProductPrior::Uniform(std::size_t m, double p) {
  return {std::vector<double>(m, 1.0), std::vector<double>(m, 1.0), p};
}

DirichletProductPrior DirichletProductPrior::Jeffreys(std::size_t m, double p) {
  return {std::vector<double>(m, 0.5), std::vector<double>(m, 0.5), p};
}

DirichletProductPrior DirichletProductPrior::EquivalentSampleSize(
    std::size_t m, double s, double p) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    Fail(ErrorCode::kInvalidArgument, "equivalent sample size must be > 0");
  }
  if (m == 0) Fail(ErrorCode::kDimension, "prior needs M >= 1");
  const double c = s / static_cast<double>(m);
  return {std::vector<double>(m, c), std::vector<double>(m, c), p};
}

SampleCounts::SampleCounts(std::size_t m, std::vector<std::uint64_t> cells)
    : m_(m), cells_(std::move(cells)), n_y_{0, 0} {
  if (m_ == 0 || cells_.size() != 2 * m_) {
    Fail(ErrorCode::kDimension, "count table must be M x 2 with M >= 1");
  }
  for (std::size_t j = 0; j < m_; ++j) {
    n_y_[0] += at(j, 0);
    n_y_[1] += at(j, 1);
  }
}

SampleCounts SampleCounts::With(std::size_t j, std::size_t k) const {
  if (j >= m_ || k > 1) Fail(ErrorCode::kDimension, "count cell out of range");
  auto cells = cells_;
  ++cells[2 * j + k];
  return SampleCounts(m_, std::move(cells));
}

SampleCounts CountsFromSample(
    std::span<const std::pair<std::size_t, std::size_t>> sample,
    std::size_t m) {
  if (m == 0) Fail(ErrorCode::kDimension, "counts need M >= 1");
  std::vector<std::uint64_t> cells(2 * m, 0);
  for (const auto& [x, y] : sample) {
    if (x >= m || y > 1) {
      Fail(ErrorCode::kInvalidArgument,
           "sample symbol (" + std::to_string(x) + ", " + std::to_string(y) +
               ") out of range");
    }
    ++cells[2 * x + y];
  }
  return SampleCounts(m, std::move(cells));
}

namespace {

double FiniteOdds(double odds) {
  if (!std::isfinite(odds) || !(odds > 0.0)) {
    Fail(ErrorCode::kNumeric, "posterior odds are not a positive finite number");
  }
  return odds;
}

}  // namespace

double PosteriorOdds(const DirichletProductPrior& prior,
                     const SampleCounts& counts, std::size_t k) {
  CheckCompatible(prior, counts);
  if (k >= counts.m()) Fail(ErrorCode::kDimension, "observation outside X");
  const double p = prior.p();
  const double nk1 = static_cast<double>(counts.at(k, 1));
  const double nk0 = static_cast<double>(counts.at(k, 0));
  const double n1 = static_cast<double>(counts.n_y(1));
  const double n0 = static_cast<double>(counts.n_y(0));
  // Ratio of posterior means, each in (0, 1], so extreme parameters cannot
  // overflow an intermediate product.
  const double alpha_mean = (nk1 + prior.a()[k]) / (n1 + prior.a_sum());
  const double beta_mean = (nk0 + prior.b()[k]) / (n0 + prior.b_sum());
  return FiniteOdds(p / (1.0 - p) * (alpha_mean / beta_mean));
}

double PosteriorOddsUniform(const SampleCounts& counts, std::size_t k,
                            double p) {
  CheckP(p);
  if (k >= counts.m()) Fail(ErrorCode::kDimension, "observation outside X");
  const double m = static_cast<double>(counts.m());
  const double nk1 = static_cast<double>(counts.at(k, 1));
  const double nk0 = static_cast<double>(counts.at(k, 0));
  const double n1 = static_cast<double>(counts.n_y(1));
  const double n0 = static_cast<double>(counts.n_y(0));
  const double alpha_mean = (nk1 + 1.0) / (n1 + m);
  const double beta_mean = (nk0 + 1.0) / (n0 + m);
  return FiniteOdds(p / (1.0 - p) * (alpha_mean / beta_mean));
}

PredictiveDistribution Predictive(const DirichletProductPrior& prior,
                                  const SampleCounts& counts) {
  PredictiveDistribution out;
  out.q.resize(counts.m());
  out.odds.resize(counts.m());
  for (std::size_t k = 0; k < counts.m(); ++k) {
    const double odds = PosteriorOdds(prior, counts, k);
    out.odds[k] = odds;
    out.q[k] = odds / (1.0 + odds);
  }
  return out;
}

std::vector<double> PredictiveX(const DirichletProductPrior& prior,
                                const SampleCounts& counts) {
  CheckCompatible(prior, counts);
  const double p = prior.p();
  const double n1 = static_cast<double>(counts.n_y(1));
  const double n0 = static_cast<double>(counts.n_y(0));
  std::vector<double> out(counts.m());
  for (std::size_t k = 0; k < counts.m(); ++k) {
    const double alpha_mean =
        (static_cast<double>(counts.at(k, 1)) + prior.a()[k]) /
        (n1 + prior.a_sum());
    const double beta_mean =
        (static_cast<double>(counts.at(k, 0)) + prior.b()[k]) /
        (n0 + prior.b_sum());
    out[k] = p * alpha_mean + (1.0 - p) * beta_mean;
  }
  return out;
}

bool ClearlyBelow(double a, double b) {
  if (!(a < b)) return false;
  if (!std::isfinite(a) || !std::isfinite(b)) return true;
  return b - a > kBayesTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

std::size_t BayesDecision(const PredictiveDistribution& predictive,
                          const LossSpec& loss, std::size_t k) {
  if (k >= predictive.odds.size()) {
    Fail(ErrorCode::kDimension, "observation outside X");
  }
  if (loss.y_size() != 2) {
    Fail(ErrorCode::kDimension, "Bayes decision needs binary Y");
  }
  const LossSpec slice = loss.Slice(k);
  const double odds = predictive.odds[k];
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < slice.action_count(); ++a) {
    const double v = slice(0, a) + odds * slice(1, a);
    if (a == 0 || ClearlyBelow(v, best_value)) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

double LogMarginalLikelihood(const DirichletProductPrior& prior,
                             const SampleCounts& counts) {
  CheckCompatible(prior, counts);
  const double p = prior.p();
  return static_cast<double>(counts.n_y(1)) * std::log(p) +
         static_cast<double>(counts.n_y(0)) * std::log1p(-p) +
         LogDirichletRatio(prior.a(), prior.a_sum(), counts, 1) +
         LogDirichletRatio(prior.b(), prior.b_sum(), counts, 0);
}

HierarchicalPredictive HierarchicalPredictiveFor(const SampleCounts& counts,
                                                 double p) {
  const auto uniform = DirichletProductPrior::Uniform(counts.m(), p);
  const auto dependent = Predictive(uniform, counts);
  const auto dependent_x = PredictiveX(uniform, counts);

  const double log_y = static_cast<double>(counts.n_y(1)) * std::log(p) +
                       static_cast<double>(counts.n_y(0)) * std::log1p(-p);
  const double log_dep = LogMarginalLikelihood(uniform, counts);
  const double log_ind = log_y + LogUniformDirichletPooled(counts);
  const double m = static_cast<double>(counts.m());
  const double n = static_cast<double>(counts.n());

  // Posterior weight of the dependent model given D alone.
  const double w_dep_d = 1.0 / (1.0 + std::exp(log_ind - log_dep));

  HierarchicalPredictive out;
  const std::size_t mm = counts.m();
  out.predictive.q.resize(mm);
  out.predictive.odds.resize(mm);
  out.dependent_weight.resize(mm);
  out.x_predictive.resize(mm);
  for (std::size_t k = 0; k < mm; ++k) {
    // Both models' joint likelihood of D and X_{n+1} = k.
    const double indep_x =
        (static_cast<double>(counts.x_count(k)) + 1.0) / (n + m);
    const double ld = log_dep + std::log(dependent_x[k]);
    const double li = log_ind + std::log(indep_x);
    const double w = 1.0 / (1.0 + std::exp(li - ld));
    const double q = w * dependent.q[k] + (1.0 - w) * p;
    out.dependent_weight[k] = w;
    out.predictive.q[k] = q;
    out.predictive.odds[k] = q / (1.0 - q);
    out.x_predictive[k] =
        w_dep_d * dependent_x[k] + (1.0 - w_dep_d) * indep_x;
  }
  return out;
}

}  // namespace credal
