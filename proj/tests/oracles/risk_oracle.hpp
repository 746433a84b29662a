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

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "credal/bayes.hpp"
#include "credal/credal_set.hpp"
#include "credal/distribution.hpp"
#include "credal/loss.hpp"
#include "credal/minimax.hpp"
#include "credal/oracle.hpp"
#include "oracles.hpp"

namespace credal_test {

using credal::FiniteDistribution;
using credal::JointDistribution;
using credal::LossSpec;
using credal::ParamJoint;
using credal::PriorKind;
using credal::StrategyId;
using credal::TrueModel;

inline JointDistribution Independent(double p, double px0) {
  return ParamJoint(p, FiniteDistribution({px0, 1 - px0}),
                    FiniteDistribution({px0, 1 - px0}))
      .Joint();
}

inline JointDistribution Correlated(double p) {
  return ParamJoint(p, FiniteDistribution({0.0, 1.0}),
                    FiniteDistribution({1.0, 0.0}))
      .Joint();
}

inline std::vector<double> Mass(const JointDistribution& j) {
  return std::vector<double>(j.mass().begin(), j.mass().end());
}

// Strategy risk by full sequence enumeration. The Bayesian's odds come from
// the urn chain, not from the library.
inline double SequenceRisk(const TrueModel& model, const StrategyId& strategy,
                    const LossSpec& loss) {
  const auto& j = model.joint;
  const std::size_t m = j.x_size();
  const double p = j.YMarginal()[1];
  const auto joint = Mass(j);
  if (strategy.kind != credal::StrategyKind::kBayes) {
    // Data-independent rules: the risk is the rule's expected loss.
    credal::DecisionRule rule = credal::DecisionRule::ConstantAction(m, 2, 0);
    const auto family = credal::MarginalFamily(j.YMarginal(), m);
    if (strategy.kind == credal::StrategyKind::kIgnore) {
      rule = credal::DecisionRule::ConstantAction(
          m, 2, credal::FindOptimalAction(j.YMarginal(), loss).action);
    } else if (strategy.kind == credal::StrategyKind::kGlobalMinimax) {
      rule = credal::GlobalMinimax(family, loss).rule;
    } else {
      std::vector<FiniteDistribution> rows;
      for (std::size_t x = 0; x < m; ++x) {
        rows.push_back(credal::LocalMinimaxAt(family, x, loss).actions);
      }
      rule = credal::DecisionRule(rows);
    }
    double risk = 0.0;
    credal_test::ForEachSequence(
        joint, 2, model.n,
        [&](const std::vector<std::pair<std::size_t, std::size_t>>&,
            double prob) {
          for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = 0; y < 2; ++y) {
              for (std::size_t a = 0; a < 2; ++a) {
                risk += prob * j.at(x, y) * rule(x, a) * loss(y, a, x);
              }
            }
          }
        });
    return risk;
  }
  std::vector<double> a, b;
  const bool hierarchical = strategy.prior.kind == PriorKind::kHierarchical;
  if (!hierarchical) {
    const auto prior = strategy.prior.Build(m, p);
    a.assign(prior.a().begin(), prior.a().end());
    b.assign(prior.b().begin(), prior.b().end());
  }
  double risk = 0.0;
  credal_test::ForEachSequence(
      joint, 2, model.n,
      [&](const std::vector<std::pair<std::size_t, std::size_t>>& seq,
          double prob) {
        const auto cells = credal_test::CountCells(seq, m);
        for (std::size_t k = 0; k < m; ++k) {
          double odds;
          if (hierarchical) {
            odds = credal::HierarchicalPredictiveFor(
                       credal::SampleCounts(m, cells), p)
                       .predictive.odds[k];
          } else {
            odds = credal_test::UrnPosteriorOdds(cells, k, a, b, p);
          }
          // Posterior cost up to the factor Pr(Y=0); near-ties go to 0.
          const double c0 = loss(0, 0, k) + odds * loss(1, 0, k);
          const double c1 = loss(0, 1, k) + odds * loss(1, 1, k);
          const std::size_t act =
              c0 - c1 > 1e-11 * std::max({1.0, c0, c1}) ? 1 : 0;
          for (std::size_t y = 0; y < 2; ++y) {
            risk += prob * j.at(k, y) * loss(y, act, k);
          }
        }
      });
  return risk;
}

}  // namespace credal_test
