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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "credal/bayes.hpp"
#include "credal/credal_set.hpp"
#include "credal/error.hpp"
#include "credal/loss.hpp"
#include "credal/minimax.hpp"
#include "credal/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "risk_oracle.hpp"

namespace {

using credal::DirichletProductPrior;
using credal::ErrorCode;
using credal::FiniteDistribution;
using credal::JointDistribution;
using credal::LossSpec;
using credal::ParamJoint;
using credal::PriorKind;
using credal::PriorSpec;
using credal::StrategyId;
using credal::TrueModel;

using credal_test::Correlated;
using credal_test::Independent;
using credal_test::Mass;
using credal_test::SequenceRisk;

PriorSpec Ess(double s) {
  PriorSpec spec;
  spec.kind = PriorKind::kEss;
  spec.ess = s;
  return spec;
}

PriorSpec Kind(PriorKind kind) {
  PriorSpec spec;
  spec.kind = kind;
  return spec;
}

}  // namespace

TEST_SUITE("count tables") {
  TEST_CASE("stars and bars") {
    CHECK(credal::CountTableCount(4, 4) == 35);
    CHECK(credal::CountTableCount(1, 4) == 4);
    CHECK(credal::CountTableCount(0, 4) == 1);
    CHECK(credal::CountTableCount(10, 6) == 3003);
  }

  TEST_CASE("single draw from a uniform joint") {
    int tables = 0;
    credal::ForEachCountTable(TrueModel{JointDistribution::Uniform(2, 2), 1},
                              [&](const credal::CountTable& t) {
                                ++tables;
                                CHECK(t.weight == doctest::Approx(0.25));
                              });
    CHECK(tables == 4);
  }

  TEST_CASE("weights sum to one and match the multinomial") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t xs = credal_test::RandomIndex(1, 3, rng);
      const std::size_t n = credal_test::RandomIndex(0, 25, rng);
      const JointDistribution j(xs, 2,
                                credal_test::RandomSimplexPoint(2 * xs, rng));
      double total = 0.0;
      std::uint64_t count = 0;
      credal::ForEachCountTable(TrueModel{j, n}, [&](const credal::CountTable& t) {
        ++count;
        total += t.weight;
        std::uint64_t sum = 0;
        for (auto c : t.counts) sum += c;
        CHECK(sum == n);
      });
      CHECK(count == credal::CountTableCount(n, 2 * xs));
      CHECK(std::abs(total - 1.0) <= 1e-9);
    }
  }

  TEST_CASE("weights agree with sequence enumeration") {
    const JointDistribution j(2, 2, {0.1, 0.2, 0.3, 0.4});
    const std::size_t n = 4;
    std::map<std::vector<std::uint64_t>, double> seq_weight;
    credal_test::ForEachSequence(
        Mass(j), 2, n,
        [&](const std::vector<std::pair<std::size_t, std::size_t>>& s,
            double prob) { seq_weight[credal_test::CountCells(s, 2)] += prob; });
    credal::ForEachCountTable(TrueModel{j, n}, [&](const credal::CountTable& t) {
      const std::vector<std::uint64_t> key(t.counts.begin(), t.counts.end());
      CHECK(t.weight == doctest::Approx(seq_weight[key]).epsilon(1e-12));
    });
  }

  TEST_CASE("large horizons keep their mass") {
    const double total = credal::ExpectOverCountTables(
        TrueModel{Independent(0.3, 0.6), 200},
        [](const credal::CountTable&) { return 1.0; });
    CHECK(std::abs(total - 1.0) <= 1e-9);
  }

  TEST_CASE("size cap") {
    CHECK_ERROR_CODE(credal::ForEachCountTable(
                         TrueModel{JointDistribution::Uniform(2, 2), 1000},
                         [](const credal::CountTable&) {}),
                     ErrorCode::kSizeCap);
  }
}

TEST_SUITE("trigger probability") {
  TEST_CASE("no data never triggers") {
    const auto r = credal::TriggerProbability(
        TrueModel{Independent(0.5, 0.5), 0},
        DirichletProductPrior::Uniform(2, 0.5), 1.4);
    CHECK(r.beta == 0.0);
  }

  TEST_CASE("exact value at n = 4 equals sequence enumeration") {
    const TrueModel model{Independent(0.5, 0.5), 4};
    const auto prior = DirichletProductPrior::Uniform(2, 0.5);
    double oracle = 0.0;
    credal_test::ForEachSequence(
        Mass(model.joint), 2, 4,
        [&](const std::vector<std::pair<std::size_t, std::size_t>>& s,
            double prob) {
          const auto cells = credal_test::CountCells(s, 2);
          for (std::size_t k = 0; k < 2; ++k) {
            const double odds =
                credal_test::UrnPosteriorOdds(cells, k, {1, 1}, {1, 1}, 0.5);
            if (1.4 < odds) oracle += prob * 0.5;
          }
        });
    const auto r = credal::TriggerProbability(model, prior, 1.4);
    CHECK(r.beta == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(r.beta == doctest::Approx(18.0 / 64.0).epsilon(1e-12));
    CHECK(0.5 * r.per_observation[0] + 0.5 * r.per_observation[1] ==
          doctest::Approx(r.beta).epsilon(1e-12));
  }

  TEST_CASE("higher cost triggers less") {
    const TrueModel model{Independent(0.5, 0.5), 4};
    const auto prior = DirichletProductPrior::Uniform(2, 0.5);
    CHECK(credal::TriggerProbability(model, prior, 10.0).beta <
          credal::TriggerProbability(model, prior, 1.4).beta);
  }

  TEST_CASE("eventually falls as data accumulate") {
    const auto prior = DirichletProductPrior::Uniform(2, 0.5);
    const double at4 =
        credal::TriggerProbability(TrueModel{Independent(0.5, 0.5), 4}, prior, 1.4)
            .beta;
    double previous = at4;
    double last = 0.0;
    for (std::size_t n : {8, 16, 32, 64, 128}) {
      last = credal::TriggerProbability(TrueModel{Independent(0.5, 0.5), n},
                                        prior, 1.4)
                 .beta;
      previous = last;
    }
    CHECK(previous < at4);
    CHECK(last < 0.05);
  }

  TEST_CASE("preconditions") {
    const TrueModel model{Independent(0.5, 0.5), 4};
    CHECK_ERROR_CODE(credal::TriggerProbability(
                         model, DirichletProductPrior::Uniform(2, 0.5), 1.0),
                     ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(credal::TriggerProbability(
                         model, DirichletProductPrior::Uniform(3, 0.5), 1.4),
                     ErrorCode::kDimension);
    CHECK_ERROR_CODE(
        credal::TriggerProbability(TrueModel{JointDistribution::Uniform(2, 3), 2},
                                   DirichletProductPrior::Uniform(2, 0.5), 1.4),
        ErrorCode::kDimension);
  }
}

TEST_SUITE("strategy risk") {
  TEST_CASE("ignoring X costs one half at even odds") {
    const auto loss = LossSpec::Asymmetric(1.4);
    for (const auto& j : {Independent(0.5, 0.5), Independent(0.5, 0.2),
                          Correlated(0.5)}) {
      CHECK(credal::StrategyRisk(TrueModel{j, 4}, StrategyId::Ignore(), loss) ==
            doctest::Approx(0.5).epsilon(1e-15));
    }
  }

  TEST_CASE("gap identity") {
    for (double alpha : {1.1, 1.4, 2.0, 3.5}) {
      for (std::size_t n : {2, 4, 7, 12}) {
        const TrueModel model{Independent(0.5, 0.5), n};
        const auto loss = LossSpec::Asymmetric(alpha);
        const double beta =
            credal::TriggerProbability(
                model, DirichletProductPrior::Uniform(2, 0.5), alpha)
                .beta;
        const double gap =
            credal::StrategyRisk(model, StrategyId::Bayes({}), loss) -
            credal::StrategyRisk(model, StrategyId::Ignore(), loss);
        CHECK(std::abs(gap - beta * (alpha - 1) / 2) <= 1e-9);
      }
    }
  }

  TEST_CASE("perfectly correlated data teach the Bayesian") {
    const auto loss = LossSpec::Asymmetric(1.4);
    const double risk = credal::StrategyRisk(TrueModel{Correlated(0.5), 32},
                                             StrategyId::Bayes({}), loss);
    CHECK(risk < 1e-6);
  }

  TEST_CASE("count tables agree with sequence enumeration") {
    const std::vector<StrategyId> strategies = {
        StrategyId::Ignore(),
        StrategyId::Bayes({}),
        StrategyId::Bayes(Kind(PriorKind::kJeffreys)),
        StrategyId::Bayes(Ess(3.0)),
        StrategyId::Bayes(Kind(PriorKind::kHierarchical)),
        StrategyId::GlobalMinimax(),
        StrategyId::LocalMinimax(),
    };
    const std::vector<JointDistribution> joints = {
        Independent(0.5, 0.5), Correlated(0.5),
        ParamJoint(0.35, FiniteDistribution({0.3, 0.7}),
                   FiniteDistribution({0.6, 0.4}))
            .Joint()};
    for (const auto& loss : {LossSpec::Asymmetric(1.4), LossSpec::ZeroOne()}) {
      for (const auto& j : joints) {
        for (std::size_t n : {0, 1, 3, 6}) {
          for (const auto& s : strategies) {
            const TrueModel model{j, n};
            CHECK_MESSAGE(std::abs(credal::StrategyRisk(model, s, loss) -
                                   SequenceRisk(model, s, loss)) <= 1e-9,
                          s.Name() << " n=" << n);
          }
        }
      }
    }
  }

  TEST_CASE("observation-dependent loss") {
    const auto loss = LossSpec::ObservationScaled();
    const TrueModel model{Independent(0.4, 0.5), 3};
    for (const auto& s : {StrategyId::Bayes({}), StrategyId::GlobalMinimax(),
                          StrategyId::LocalMinimax()}) {
      CHECK_MESSAGE(std::abs(credal::StrategyRisk(model, s, loss) -
                             SequenceRisk(model, s, loss)) <= 1e-9,
                    s.Name());
    }
    CHECK_ERROR_CODE(credal::StrategyRisk(model, StrategyId::Ignore(), loss),
                     ErrorCode::kUnsupported);
  }
}

TEST_SUITE("regret") {
  TEST_CASE("two-model comparison") {
    const auto loss = LossSpec::Asymmetric(1.4);
    const std::vector<TrueModel> models = {{Independent(0.5, 0.5), 4},
                                           {Correlated(0.5), 4}};
    const std::vector<StrategyId> strategies = {StrategyId::Ignore(),
                                                StrategyId::Bayes({})};
    const auto t = credal::ComputeRegretTable(models, strategies, loss);
    CHECK(t.best[0] == doctest::Approx(0.5));
    CHECK(t.regret[0][0] == 0.0);
    CHECK(t.regret[0][1] == doctest::Approx(t.risk[0][1] - 0.5).epsilon(1e-15));
    CHECK(t.risk[1][0] - t.risk[1][1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(t.worst_regret[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(t.worst_regret[1] == doctest::Approx(t.regret[0][1]).epsilon(1e-15));
  }

  TEST_CASE("a strategy against itself has zero regret") {
    const auto loss = LossSpec::Asymmetric(1.4);
    const std::vector<TrueModel> models = {{Independent(0.5, 0.3), 5}};
    const auto t = credal::ComputeRegretTable(
        models, {StrategyId::Bayes({}), StrategyId::Bayes({})}, loss);
    CHECK(t.regret[0][0] == 0.0);
    CHECK(t.regret[0][1] == 0.0);
  }
}

TEST_SUITE("simulation") {
  TEST_CASE("same seed, same bits") {
    const TrueModel model{Independent(0.5, 0.5), 4};
    const auto loss = LossSpec::Asymmetric(1.4);
    const auto a = credal::Simulate(model, StrategyId::Bayes({}), loss, 20000, 7);
    const auto b = credal::Simulate(model, StrategyId::Bayes({}), loss, 20000, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);
  }

  TEST_CASE("result does not depend on the worker count") {
    const TrueModel model{Independent(0.5, 0.3), 6};
    const auto loss = LossSpec::Asymmetric(1.4);
    const auto many = credal::Simulate(model, StrategyId::Bayes({}), loss, 50000, 3);
    const double exact_many = credal::StrategyRisk(model, StrategyId::Bayes({}), loss);
    setenv("CREDAL_DECIDE_THREADS", "1", 1);
    const auto one = credal::Simulate(model, StrategyId::Bayes({}), loss, 50000, 3);
    const double exact_one = credal::StrategyRisk(model, StrategyId::Bayes({}), loss);
    setenv("CREDAL_DECIDE_THREADS", "3", 1);
    const auto three = credal::Simulate(model, StrategyId::Bayes({}), loss, 50000, 3);
    unsetenv("CREDAL_DECIDE_THREADS");
    CHECK(one.mean == many.mean);
    CHECK(three.mean == many.mean);
    CHECK(one.standard_error == many.standard_error);
    CHECK(exact_one == exact_many);
  }

  TEST_CASE("invalid worker count") {
    setenv("CREDAL_DECIDE_THREADS", "zero", 1);
    CHECK_ERROR_CODE(credal::WorkerLimit(), ErrorCode::kInvalidArgument);
    setenv("CREDAL_DECIDE_THREADS", "0", 1);
    CHECK_ERROR_CODE(credal::WorkerLimit(), ErrorCode::kInvalidArgument);
    setenv("CREDAL_DECIDE_THREADS", "2", 1);
    CHECK(credal::WorkerLimit() == 2);
    unsetenv("CREDAL_DECIDE_THREADS");
    CHECK(credal::WorkerLimit() >= 1);
  }

  TEST_CASE("estimates sit near the exact risk") {
    const auto loss = LossSpec::Asymmetric(1.4);
    for (const auto& j : {Independent(0.5, 0.5), Correlated(0.5)}) {
      const TrueModel model{j, 4};
      for (const auto& s : {StrategyId::Ignore(), StrategyId::Bayes({}),
                            StrategyId::LocalMinimax()}) {
        const double exact = credal::StrategyRisk(model, s, loss);
        for (std::uint64_t seed : {1u, 2u}) {
          const auto r = credal::Simulate(model, s, loss, 40000, seed);
          CHECK(std::abs(r.mean - exact) <= 3 * r.standard_error + 1e-12);
        }
      }
    }
  }

  TEST_CASE("one run is one realized loss") {
    const auto loss = LossSpec::Asymmetric(1.4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = credal::Simulate(TrueModel{Independent(0.5, 0.5), 4},
                                      StrategyId::Bayes({}), loss, 1, seed);
      CHECK((r.mean == 0.0 || r.mean == 1.0 || r.mean == 1.4));
      CHECK(r.standard_error == 0.0);
    }
  }

  TEST_CASE("zero runs rejected") {
    CHECK_ERROR_CODE(credal::Simulate(TrueModel{Independent(0.5, 0.5), 4},
                                      StrategyId::Ignore(),
                                      LossSpec::Asymmetric(1.4), 0, 1),
                     ErrorCode::kInvalidArgument);
  }
}
