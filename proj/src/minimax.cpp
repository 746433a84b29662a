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

#include "credal/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "credal/error.hpp"
#include "credal/matrix_game.hpp"

namespace credal {
namespace {

constexpr double kWitnessTolerance = 1e-12;

void CheckRule(const DecisionRule& rule, std::size_t x_size,
               const LossSpec& loss) {
  if (rule.x_size() != x_size) {
    Fail(ErrorCode::kDimension, "rule covers " +
                                    std::to_string(rule.x_size()) +
                                    " observations, expected " +
                                    std::to_string(x_size));
  }
  if (rule.action_count() != loss.action_count()) {
    Fail(ErrorCode::kDimension, "rule and loss disagree on the action count");
  }
}

}  // namespace

double ExpectedLoss(const JointDistribution& joint, const DecisionRule& rule,
                    const LossSpec& loss) {
  loss.CheckCompatible(joint.x_size(), joint.y_size());
  CheckRule(rule, joint.x_size(), loss);
  double total = 0.0;
  for (std::size_t x = 0; x < joint.x_size(); ++x) {
    for (std::size_t y = 0; y < joint.y_size(); ++y) {
      const double pxy = joint.at(x, y);
      if (pxy == 0.0) continue;
      double cell = 0.0;
      for (std::size_t a = 0; a < loss.action_count(); ++a) {
        const double w = rule(x, a);
        if (w != 0.0) cell += w * loss(y, a, x);
      }
      total += pxy * cell;
    }
  }
  return total;
}

OptimalAction FindOptimalAction(const FiniteDistribution& p_y,
                                const LossSpec& loss) {
  if (loss.x_dependent()) {
    Fail(ErrorCode::kUnsupported,
         "optimal action needs an observation-independent loss");
  }
  if (p_y.size() != loss.y_size()) {
    Fail(ErrorCode::kDimension, "marginal and loss disagree on |Y|");
  }
  OptimalAction best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t a = 0; a < loss.action_count(); ++a) {
    double v = 0.0;
    for (std::size_t y = 0; y < p_y.size(); ++y) {
      if (p_y[y] != 0.0) v += p_y[y] * loss(y, a);
    }
    if (a == 0 || v < best.value) best = {a, v};
  }
  return best;
}

WorstCase WorstCaseLoss(const CredalSet& set, const DecisionRule& rule,
                        const LossSpec& loss) {
  std::vector<double> values;
  values.reserve(set.vertex_count());
  for (const auto& v : set.vertices()) {
    values.push_back(ExpectedLoss(v, rule, loss));
  }
  const double top = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= top - kWitnessTolerance) return {top, i};
  }
  return {top, 0};
}

std::vector<std::size_t> DecodeDeterministicRule(std::size_t index,
                                                 std::size_t x_size,
                                                 std::size_t action_count) {
  std::vector<std::size_t> actions(x_size);
  for (std::size_t x = x_size; x-- > 0;) {
    actions[x] = index % action_count;
    index /= action_count;
  }
  return actions;
}

MinimaxSolution GlobalMinimax(const CredalSet& set, const LossSpec& loss) {
  loss.CheckCompatible(set.x_size(), set.y_size());
  if (!loss.AllFinite()) {
    Fail(ErrorCode::kUnsupported,
         "minimax over rules needs a finite loss table");
  }
  const std::size_t xs = set.x_size();
  const std::size_t as = loss.action_count();
  std::size_t rule_count = 1;
  for (std::size_t x = 0; x < xs; ++x) {
    if (rule_count > kMaxDeterministicRules / as) {
      Fail(ErrorCode::kSizeCap, "more than 10^6 deterministic rules");
    }
    rule_count *= as;
  }

  // partial[v][x][a]: loss contributed by observation x under action a.
  const std::size_t vs = set.vertex_count();
  std::vector<double> partial(vs * xs * as, 0.0);
  for (std::size_t v = 0; v < vs; ++v) {
    const auto& joint = set.vertex(v);
    for (std::size_t x = 0; x < xs; ++x) {
      for (std::size_t a = 0; a < as; ++a) {
        double s = 0.0;
        for (std::size_t y = 0; y < set.y_size(); ++y) {
          s += joint.at(x, y) * loss(y, a, x);
        }
        partial[(v * xs + x) * as + a] = s;
      }
    }
  }

  PayoffMatrix payoff(rule_count, vs);
  for (std::size_t r = 0; r < rule_count; ++r) {
    const auto actions = DecodeDeterministicRule(r, xs, as);
    for (std::size_t v = 0; v < vs; ++v) {
      double s = 0.0;
      for (std::size_t x = 0; x < xs; ++x) {
        s += partial[(v * xs + x) * as + actions[x]];
      }
      payoff(r, v) = s;
    }
  }

  const MatrixGameSolution game = SolveMatrixGame(payoff);

  std::vector<std::vector<double>> rows(xs, std::vector<double>(as, 0.0));
  std::vector<MixtureTerm> mixture;
  for (std::size_t r = 0; r < rule_count; ++r) {
    const double w = game.row_strategy[r];
    if (w == 0.0) continue;
    auto actions = DecodeDeterministicRule(r, xs, as);
    for (std::size_t x = 0; x < xs; ++x) rows[x][actions[x]] += w;
    mixture.push_back({std::move(actions), w});
  }
  std::vector<FiniteDistribution> dists;
  dists.reserve(xs);
  for (auto& row : rows) dists.emplace_back(std::move(row));
  DecisionRule rule(std::move(dists));

  const WorstCase worst = WorstCaseLoss(set, rule, loss);
  return {std::move(rule), game.value, worst.witness, std::move(mixture)};
}

LocalMinimax LocalMinimaxAt(const CredalSet& set, std::size_t x,
                            const LossSpec& loss) {
  loss.CheckCompatible(set.x_size(), set.y_size());
  const auto admissible = AdmissibleVertices(set, x);
  if (admissible.empty()) {
    Fail(ErrorCode::kConditioningUndefined,
         "every vertex gives X = " + std::to_string(x) + " zero probability");
  }
  const LossSpec slice = loss.Slice(x);
  if (!slice.AllFinite()) {
    Fail(ErrorCode::kUnsupported, "local minimax needs a finite loss slice");
  }
  const std::size_t as = slice.action_count();
  PayoffMatrix payoff(as, admissible.size());
  for (std::size_t c = 0; c < admissible.size(); ++c) {
    const auto& joint = set.vertex(admissible[c]);
    const double px = joint.XProbability(x);
    for (std::size_t a = 0; a < as; ++a) {
      double s = 0.0;
      for (std::size_t y = 0; y < set.y_size(); ++y) {
        s += joint.at(x, y) / px * slice(y, a);
      }
      payoff(a, c) = s;
    }
  }
  MatrixGameSolution game = SolveMatrixGame(payoff);
  return {x, FiniteDistribution(std::move(game.row_strategy)), game.value};
}

ConsistencyReport ReportTimeInconsistency(const CredalSet& set,
                                          const LossSpec& loss) {
  MinimaxSolution global = GlobalMinimax(set, loss);
  std::vector<std::optional<LocalMinimax>> local(set.x_size());
  std::vector<FiniteDistribution> plan;
  bool inconsistent = false;
  double worst_local = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < set.x_size(); ++x) {
    if (AdmissibleVertices(set, x).empty()) {
      // Never observed; the row cannot affect any expected loss.
      plan.push_back(global.rule.row(x));
      continue;
    }
    local[x] = LocalMinimaxAt(set, x, loss);
    if (TotalVariation(local[x]->actions, global.rule.row(x)) > 1e-6) {
      inconsistent = true;
    }
    worst_local = std::max(worst_local, local[x]->value);
    plan.push_back(local[x]->actions);
  }
  const double plan_value =
      WorstCaseLoss(set, DecisionRule(std::move(plan)), loss).value;
  double premium = plan_value - global.value;
  // LP round-off around a zero premium.
  if (std::abs(premium) <= 1e-12) premium = 0.0;
  return {std::move(global), std::move(local), inconsistent, worst_local,
          plan_value, premium};
}

}  // namespace credal
