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
#include <functional>
#include <string>
#include <vector>

#include "credal/bayes.hpp"
#include "credal/distribution.hpp"
#include "credal/loss.hpp"

namespace credal {

// The assumed true distribution of each (X, Y) pair and the number of
// training pairs observed before the prediction.
struct TrueModel {
  JointDistribution joint;
  std::size_t n;
};

struct CountTable {
  std::vector<std::uint32_t> counts;  // x-major (x, y) cells, summing to n
  double weight;                      // multinomial probability
};

// Cap on the number of count tables a single enumeration may visit.
inline constexpr std::uint64_t kMaxCountTables = 10'000'000;

// C(n + cells - 1, cells - 1), saturating at UINT64_MAX.
std::uint64_t CountTableCount(std::size_t n, std::size_t cells);

// Visits every count table of the model with its weight, in lexicographic
// order. Throws kSizeCap beyond kMaxCountTables.
void ForEachCountTable(const TrueModel& model,
                       const std::function<void(const CountTable&)>& visit);

// Sum of f(table) * weight over all tables. Work is split into fixed chunks
// keyed by the first cell and reduced in chunk order, so the result does not
// depend on the number of worker threads.
double ExpectOverCountTables(
    const TrueModel& model,
    const std::function<double(const CountTable&)>& f);

enum class PriorKind { kUniform, kJeffreys, kEss, kCustom, kHierarchical };

struct PriorSpec {
  PriorKind kind = PriorKind::kUniform;
  double ess = 0.0;       // kEss
  std::vector<double> a;  // kCustom
  std::vector<double> b;  // kCustom

  // Not valid for kHierarchical.
  DirichletProductPrior Build(std::size_t m, double p) const;
  std::string Name() const;
};

enum class StrategyKind { kIgnore, kBayes, kLocalMinimax, kGlobalMinimax };

struct StrategyId {
  StrategyKind kind;
  PriorSpec prior;  // kBayes only

  static StrategyId Ignore() { return {StrategyKind::kIgnore, {}}; }
  static StrategyId Bayes(PriorSpec prior) {
    return {StrategyKind::kBayes, std::move(prior)};
  }
  static StrategyId LocalMinimax() { return {StrategyKind::kLocalMinimax, {}}; }
  static StrategyId GlobalMinimax() {
    return {StrategyKind::kGlobalMinimax, {}};
  }

  std::string Name() const;
};

struct TriggerResult {
  // Pr over (D, X_{n+1}) that cost < posterior odds, i.e. the Bayesian
  // predicts 1.
  double beta;
  // Same probability conditional on X_{n+1} = k.
  std::vector<double> per_observation;
};

// Requires binary Y, prior.m() == |X| and cost > 1.
TriggerResult TriggerProbability(const TrueModel& model,
                                 const DirichletProductPrior& prior,
                                 double cost);

// Exact expected loss on (X_{n+1}, Y_{n+1}) after n training pairs drawn
// from the model. The agent knows only the model's Y-marginal.
double StrategyRisk(const TrueModel& model, const StrategyId& strategy,
                    const LossSpec& loss);

struct RegretTable {
  std::vector<std::vector<double>> risk;    // [model][strategy]
  std::vector<double> best;                 // [model]
  std::vector<std::vector<double>> regret;  // [model][strategy]
  std::vector<double> worst_regret;         // [strategy]
};

RegretTable ComputeRegretTable(const std::vector<TrueModel>& models,
                               const std::vector<StrategyId>& strategies,
                               const LossSpec& loss);

struct SimulationResult {
  double mean;
  double standard_error;  // 0 when runs == 1
};

// Monte Carlo estimate of StrategyRisk. Run r draws from its own substream
// of the counter-based generator, so results are bit-identical for a given
// seed regardless of thread count.
SimulationResult Simulate(const TrueModel& model, const StrategyId& strategy,
                          const LossSpec& loss, std::uint64_t runs,
                          std::uint64_t seed);

// Worker cap from CREDAL_DECIDE_THREADS, else hardware concurrency.
// Throws kInvalidArgument when the variable is set but not a positive
// integer.
unsigned WorkerLimit();

}  // namespace credal
