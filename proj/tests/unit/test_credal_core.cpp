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
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/distribution.hpp"
#include "credal/error.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

namespace {

using credal::CredalSet;
using credal::ErrorCode;
using credal::FiniteDistribution;
using credal::JointDistribution;
using credal::MarginalFamily;
using credal::ParamJoint;

std::set<std::vector<double>> RoundedVertexSet(const CredalSet& set) {
  std::set<std::vector<double>> out;
  for (const auto& v : set.vertices()) {
    std::vector<double> r(v.mass().begin(), v.mass().end());
    for (auto& x : r) x = std::round(x * 1e12) / 1e12;
    out.insert(r);
  }
  return out;
}

FiniteDistribution Binary(double p) { return FiniteDistribution::Bernoulli(p); }

}  // namespace

TEST_SUITE("distribution") {
  TEST_CASE("finite distribution validates its entries") {
    CHECK_NOTHROW(FiniteDistribution({0.25, 0.75}));
    CHECK_NOTHROW(FiniteDistribution({0.5, 0.5 + 5e-13}));
    CHECK_ERROR_CODE(FiniteDistribution({0.5, 0.6}), ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(FiniteDistribution({-0.1, 1.1}),
                     ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(FiniteDistribution({std::nan(""), 1.0}),
                     ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(FiniteDistribution(std::vector<double>{}),
                     ErrorCode::kInvalidArgument);
  }

  TEST_CASE("joint marginals") {
    SUBCASE("y marginal of a parameterized joint") {
      const ParamJoint pj(0.3, FiniteDistribution({1.0, 0.0}),
                          FiniteDistribution({0.0, 1.0}));
      const auto y = pj.Joint().YMarginal();
      CHECK(y[0] == doctest::Approx(0.7).epsilon(1e-15));
      CHECK(y[1] == doctest::Approx(0.3).epsilon(1e-15));
    }
    SUBCASE("x marginal is p alpha + (1 - p) beta") {
      std::mt19937_64 rng(11);
      for (int trial = 0; trial < 20; ++trial) {
        const double a1 = credal_test::RandomReal(0, 1, rng);
        const double b1 = credal_test::RandomReal(0, 1, rng);
        const ParamJoint pj(0.3, FiniteDistribution({a1, 1 - a1}),
                            FiniteDistribution({b1, 1 - b1}));
        CHECK(pj.Joint().XMarginal()[0] ==
              doctest::Approx(0.3 * a1 + 0.7 * b1).epsilon(1e-14));
      }
    }
    SUBCASE("uniform joint") {
      const auto j = JointDistribution::Uniform(2, 2);
      CHECK(j.XMarginal() == FiniteDistribution({0.5, 0.5}));
      CHECK(j.YMarginal() == FiniteDistribution({0.5, 0.5}));
    }
    SUBCASE("cell layout") {
      const ParamJoint pj(0.25, FiniteDistribution({0.2, 0.8}),
                          FiniteDistribution({0.6, 0.4}));
      const auto j = pj.Joint();
      CHECK(j.at(0, 1) == doctest::Approx(0.25 * 0.2));
      CHECK(j.at(1, 1) == doctest::Approx(0.25 * 0.8));
      CHECK(j.at(0, 0) == doctest::Approx(0.75 * 0.6));
      CHECK(j.at(1, 0) == doctest::Approx(0.75 * 0.4));
    }
  }

  TEST_CASE("parameterized joint rejects degenerate p") {
    CHECK_ERROR_CODE(ParamJoint(0.0, FiniteDistribution::Uniform(2),
                                FiniteDistribution::Uniform(2)),
                     ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(ParamJoint(1.0, FiniteDistribution::Uniform(2),
                                FiniteDistribution::Uniform(2)),
                     ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(ParamJoint(0.5, FiniteDistribution::Uniform(2),
                                FiniteDistribution::Uniform(3)),
                     ErrorCode::kDimension);
  }

  TEST_CASE("probability interval ordering") {
    CHECK_NOTHROW(credal::ProbabilityInterval(0.2, 0.2));
    CHECK_ERROR_CODE(credal::ProbabilityInterval(0.6, 0.5),
                     ErrorCode::kNumeric);
    CHECK_ERROR_CODE(credal::ProbabilityInterval(-0.1, 0.5),
                     ErrorCode::kNumeric);
  }
}

TEST_SUITE("marginal family") {
  TEST_CASE("vertices match brute-force polytope enumeration") {
    SUBCASE("p_y = (2/3, 1/3), two observations") {
      const std::vector<double> p_y = {2.0 / 3.0, 1.0 / 3.0};
      const auto set = MarginalFamily(FiniteDistribution(p_y), 2);
      CHECK(set.vertex_count() == 4);
      for (const auto& v : set.vertices()) {
        CHECK(credal::TotalVariation(v.YMarginal(), FiniteDistribution(p_y)) <
              1e-12);
      }
      const auto oracle = credal_test::EnumerateMarginalPolytope(p_y, 2);
      CHECK(RoundedVertexSet(set) ==
            std::set<std::vector<double>>(oracle.begin(), oracle.end()));
    }
    SUBCASE("p_y = (1/2, 1/2), three observations") {
      const std::vector<double> p_y = {0.5, 0.5};
      const auto set = MarginalFamily(FiniteDistribution(p_y), 3);
      CHECK(set.vertex_count() == 9);
      const auto oracle = credal_test::EnumerateMarginalPolytope(p_y, 3);
      CHECK(oracle.size() == 9);
      CHECK(RoundedVertexSet(set) ==
            std::set<std::vector<double>>(oracle.begin(), oracle.end()));
    }
    SUBCASE("degenerate marginal keeps distinct joints only") {
      const auto set = MarginalFamily(FiniteDistribution({1.0, 0.0}), 2);
      CHECK(set.vertex_count() == 2);
      for (const auto& v : set.vertices()) {
        CHECK(v.at(0, 1) == 0.0);
        CHECK(v.at(1, 1) == 0.0);
      }
      const auto oracle = credal_test::EnumerateMarginalPolytope({1.0, 0.0}, 2);
      CHECK(RoundedVertexSet(set) ==
            std::set<std::vector<double>>(oracle.begin(), oracle.end()));
    }
  }

  TEST_CASE("random families agree with polytope enumeration") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t ys = credal_test::RandomIndex(1, 4, rng);
      const std::size_t xs = credal_test::RandomIndex(1, 4, rng);
      const auto p_y = credal_test::RandomSimplexPoint(ys, rng, 0.05);
      const auto set = MarginalFamily(FiniteDistribution(p_y), xs);
      CHECK(set.vertex_count() ==
            static_cast<std::size_t>(std::pow(xs, ys) + 0.5));
      for (const auto& v : set.vertices()) {
        const auto nonzero = std::count_if(v.mass().begin(), v.mass().end(),
                                           [](double m) { return m > 0.0; });
        CHECK(static_cast<std::size_t>(nonzero) == ys);
        CHECK(credal::TotalVariation(v.YMarginal(), FiniteDistribution(p_y)) <=
              1e-12);
      }
      const auto oracle = credal_test::EnumerateMarginalPolytope(p_y, xs);
      CHECK(RoundedVertexSet(set) ==
            std::set<std::vector<double>>(oracle.begin(), oracle.end()));
    }
  }

  TEST_CASE("vertex order puts f(0) first") {
    const auto set = MarginalFamily(Binary(0.25), 2);
    // Index 1 is f = (0, 1): X copies Y.
    CHECK(set.vertex(1).at(0, 0) == 0.75);
    CHECK(set.vertex(1).at(1, 1) == 0.25);
    // Index 2 is f = (1, 0).
    CHECK(set.vertex(2).at(1, 0) == 0.75);
    CHECK(set.vertex(2).at(0, 1) == 0.25);
  }

  TEST_CASE("zero observations is a dimension error") {
    CHECK_ERROR_CODE(MarginalFamily(Binary(0.3), 0), ErrorCode::kDimension);
  }

  TEST_CASE("vertex cap") {
    CHECK_ERROR_CODE(MarginalFamily(FiniteDistribution::Uniform(7), 8),
                     ErrorCode::kDimension);
  }

  TEST_CASE("explicit credal sets need matching dimensions") {
    CHECK_ERROR_CODE(CredalSet({}, "empty"), ErrorCode::kDimension);
    CHECK_ERROR_CODE(CredalSet({JointDistribution::Uniform(2, 2),
                                JointDistribution::Uniform(3, 2)},
                               "mixed"),
                     ErrorCode::kDimension);
  }
}

TEST_SUITE("conditioning") {
  TEST_CASE("observing x leaves the event fully uncertain") {
    const auto set = MarginalFamily(Binary(0.3), 2);
    for (std::size_t x = 0; x < 2; ++x) {
      const auto b = credal::ConditionalBounds(set, {1}, x);
      CHECK(b.lower == 0.0);
      CHECK(b.upper == 1.0);
    }
    const auto prior = credal::PriorBounds(set, {1});
    CHECK(prior.lower == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(prior.upper == doctest::Approx(0.3).epsilon(1e-15));
  }

  TEST_CASE("full-support families give [0, 1] for every single outcome") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t ys = credal_test::RandomIndex(2, 4, rng);
      const std::size_t xs = credal_test::RandomIndex(1, 4, rng);
      const auto set = MarginalFamily(
          FiniteDistribution(credal_test::RandomSimplexPoint(ys, rng, 0.01)),
          xs);
      for (std::size_t y = 0; y < ys; ++y) {
        for (std::size_t x = 0; x < xs; ++x) {
          const auto b = credal::ConditionalBounds(set, {y}, x);
          if (xs == 1) {
            // X is constant; nothing is learned.
            CHECK(b.IsPoint());
          } else {
            CHECK(b.lower == 0.0);
            CHECK(b.upper == 1.0);
          }
        }
      }
    }
  }

  TEST_CASE("singleton sets give point intervals") {
    const ParamJoint pj(0.4, FiniteDistribution({0.7, 0.3}),
                        FiniteDistribution({0.2, 0.8}));
    const auto j = pj.Joint();
    const auto set = CredalSet::Singleton(j);
    for (std::size_t x = 0; x < 2; ++x) {
      const double direct = j.at(x, 1) / (j.at(x, 0) + j.at(x, 1));
      const auto b = credal::ConditionalBounds(set, {1}, x);
      CHECK(b.lower == doctest::Approx(direct).epsilon(1e-14));
      CHECK(b.upper == doctest::Approx(direct).epsilon(1e-14));
    }
  }

  TEST_CASE("bounds are ordered and shrink when vertices are removed") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t xs = credal_test::RandomIndex(1, 3, rng);
      const std::size_t ys = credal_test::RandomIndex(2, 3, rng);
      const std::size_t count = credal_test::RandomIndex(2, 6, rng);
      std::vector<JointDistribution> vertices;
      for (std::size_t i = 0; i < count; ++i) {
        vertices.emplace_back(
            xs, ys, credal_test::RandomSimplexPoint(xs * ys, rng, 0.01));
      }
      const CredalSet full(vertices, "random");
      std::vector<JointDistribution> part(vertices.begin(),
                                          vertices.begin() + count / 2 + 1);
      const CredalSet sub(part, "subset");
      const credal::Event event = {0};
      for (std::size_t x = 0; x < xs; ++x) {
        const auto b_full = credal::ConditionalBounds(full, event, x);
        const auto b_sub = credal::ConditionalBounds(sub, event, x);
        CHECK(b_full.lower <= b_full.upper);
        CHECK(b_sub.lower >= b_full.lower);
        CHECK(b_sub.upper <= b_full.upper);
      }
    }
  }

  TEST_CASE("conditioning on a null observation is an error") {
    const JointDistribution j(2, 2, {0.5, 0.5, 0.0, 0.0});
    const auto set = CredalSet::Singleton(j);
    CHECK_ERROR_CODE(credal::ConditionalBounds(set, {1}, 1),
                     ErrorCode::kConditioningUndefined);
    CHECK(credal::AdmissibleVertices(set, 1).empty());
  }

  TEST_CASE("events are validated") {
    const auto set = MarginalFamily(Binary(0.3), 2);
    CHECK_ERROR_CODE(credal::ConditionalBounds(set, {2}, 0),
                     ErrorCode::kDimension);
    CHECK_ERROR_CODE(credal::ConditionalBounds(set, {1}, 2),
                     ErrorCode::kDimension);
  }
}

TEST_SUITE("dilation") {
  TEST_CASE("marginal family dilates the event") {
    for (double p : {0.1, 0.3, 0.5, 0.9}) {
      const auto report =
          credal::ReportDilation(MarginalFamily(Binary(p), 2), {1});
      CHECK(report.dilation);
      REQUIRE(report.observations.size() == 2);
      for (const auto& obs : report.observations) {
        CHECK(obs.admissible);
        CHECK(obs.dilates);
        CHECK(obs.interval.lower == 0.0);
        CHECK(obs.interval.upper == 1.0);
      }
    }
  }

  TEST_CASE("singleton sets never dilate") {
    const auto set = CredalSet::Singleton(JointDistribution::Uniform(2, 2));
    CHECK_FALSE(credal::ReportDilation(set, {1}).dilation);
  }

  TEST_CASE("degenerate prior interval does not dilate") {
    const auto report =
        credal::ReportDilation(MarginalFamily(Binary(1.0), 2), {1});
    CHECK(report.prior.lower == 1.0);
    CHECK(report.prior.upper == 1.0);
    CHECK_FALSE(report.dilation);
  }

  TEST_CASE("null observations are skipped") {
    // X = 1 never occurs in either vertex.
    const CredalSet set(
        {JointDistribution(2, 2, {0.5, 0.5, 0.0, 0.0}),
         JointDistribution(2, 2, {0.9, 0.1, 0.0, 0.0})},
        "x0-only");
    const auto report = credal::ReportDilation(set, {1});
    CHECK(report.observations[0].admissible);
    CHECK_FALSE(report.observations[1].admissible);
    // X is constant so conditioning equals the prior; no strict widening.
    CHECK_FALSE(report.dilation);
  }
}

TEST_SUITE("maximum entropy") {
  TEST_CASE("binary Y, two observations, p = 1/3") {
    const auto j = credal::MaxEntSelect(MarginalFamily(Binary(1.0 / 3.0), 2));
    CHECK(j.at(0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(j.at(0, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(j.at(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(j.at(1, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    const auto grid =
        credal_test::MaxEntGridSearch({2.0 / 3.0, 1.0 / 3.0}, 2, 60);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(j.mass()[i] == doctest::Approx(grid[i]).epsilon(1e-12));
    }
  }

  TEST_CASE("symmetric case is uniform with two bits") {
    const auto j = credal::MaxEntSelect(MarginalFamily(Binary(0.5), 2));
    for (double m : j.mass()) CHECK(m == 0.25);
    CHECK(j.EntropyBits() == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("four observations, p = 1/3") {
    const std::vector<double> p_y = {2.0 / 3.0, 1.0 / 3.0};
    const auto j = credal::MaxEntSelect(MarginalFamily(FiniteDistribution(p_y), 4));
    for (std::size_t x = 0; x < 4; ++x) {
      CHECK(j.at(x, 0) == doctest::Approx(p_y[0] / 4).epsilon(1e-15));
      CHECK(j.at(x, 1) == doctest::Approx(p_y[1] / 4).epsilon(1e-15));
    }
    const auto grid = credal_test::MaxEntGridSearch(p_y, 4, 8);
    CHECK(credal_test::EntropyBits(grid) ==
          doctest::Approx(j.EntropyBits()).epsilon(1e-12));
  }

  TEST_CASE("beats random mixtures of vertices") {
    std::mt19937_64 rng(99);
    const auto p_y = credal_test::RandomSimplexPoint(3, rng, 0.1);
    const auto set = MarginalFamily(FiniteDistribution(p_y), 3);
    const double best = credal::MaxEntSelect(set).EntropyBits();
    for (int trial = 0; trial < 1000; ++trial) {
      const auto w = credal_test::RandomSimplexPoint(set.vertex_count(), rng);
      std::vector<double> mix(set.vertex(0).mass().size(), 0.0);
      for (std::size_t v = 0; v < set.vertex_count(); ++v) {
        for (std::size_t i = 0; i < mix.size(); ++i) {
          mix[i] += w[v] * set.vertex(v).mass()[i];
        }
      }
      CHECK(credal_test::EntropyBits(mix) <= best + 1e-12);
    }
  }

  TEST_CASE("ignores the observation") {
    const auto set = MarginalFamily(Binary(0.3), 3);
    const auto j = credal::MaxEntSelect(set);
    const auto single = CredalSet::Singleton(j);
    for (std::size_t x = 0; x < 3; ++x) {
      const auto b = credal::ConditionalBounds(single, {1}, x);
      CHECK(b.lower == doctest::Approx(0.3).epsilon(1e-14));
    }
  }

  TEST_CASE("other sets are unsupported") {
    const auto set = CredalSet::Singleton(JointDistribution::Uniform(2, 2));
    CHECK_ERROR_CODE(credal::MaxEntSelect(set), ErrorCode::kUnsupported);
  }
}
