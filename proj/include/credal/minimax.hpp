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
#include <optional>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/distribution.hpp"
#include "credal/loss.hpp"

namespace credal {

// Sum over (x, y) of joint(x, y) * sum over a of rule(x)(a) * L(y, a[, x]).
// Terms with zero probability or zero action weight are skipped, so +inf
// only propagates from reachable cells.
double ExpectedLoss(const JointDistribution& joint, const DecisionRule& rule,
                    const LossSpec& loss);

struct OptimalAction {
  std::size_t action;
  double value;
};

// argmin over a of E_{p_y}[L(., a)], lowest index on ties. Throws
// kUnsupported for an observation-dependent loss.
OptimalAction FindOptimalAction(const FiniteDistribution& p_y,
                                const LossSpec& loss);

struct WorstCase {
  double value;
  std::size_t witness;
};

// Max of ExpectedLoss over the vertices. The witness is the lowest vertex
// index within 1e-12 of the maximum.
WorstCase WorstCaseLoss(const CredalSet& set, const DecisionRule& rule,
                        const LossSpec& loss);

// A deterministic rule together with its weight in a mixed strategy.
struct MixtureTerm {
  std::vector<std::size_t> actions;  // actions[x]
  double weight;
};

struct MinimaxSolution {
  DecisionRule rule;  // behavioral form
  double value;
  std::size_t witness;
  std::vector<MixtureTerm> mixture;  // support of the LP row strategy
};

// Upper bound on the number of deterministic rules |A|^|X|.
inline constexpr std::size_t kMaxDeterministicRules = 1'000'000;

// Index <-> action-vector encoding of deterministic rules. Observation 0 is
// the most significant digit, so for binary X and A the order is d00, d01,
// d10, d11.
std::vector<std::size_t> DecodeDeterministicRule(std::size_t index,
                                                 std::size_t x_size,
                                                 std::size_t action_count);

// Minimax rule chosen before observing X. Solves the matrix game whose rows
// are deterministic rules and whose columns are the vertices, then converts
// the optimal mixture to a behavioral rule.
MinimaxSolution GlobalMinimax(const CredalSet& set, const LossSpec& loss);

struct LocalMinimax {
  std::size_t x;
  FiniteDistribution actions;
  double value;
};

// Minimax action after observing X = x against the conditioned vertices.
LocalMinimax LocalMinimaxAt(const CredalSet& set, std::size_t x,
                            const LossSpec& loss);

struct ConsistencyReport {
  MinimaxSolution global;
  // One entry per x; empty when no vertex gives X = x positive mass.
  std::vector<std::optional<LocalMinimax>> local;
  bool inconsistent;
  // Largest local minimax value over admissible x.
  double worst_local_value;
  // Worst case over the set of the plan that plays the local minimax action
  // at every x.
  double local_plan_value;
  // local_plan_value minus the global minimax value; never negative.
  double pay_not_to_know;
};

ConsistencyReport ReportTimeInconsistency(const CredalSet& set,
                                          const LossSpec& loss);

}  // namespace credal
