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
#include <span>
#include <string>
#include <vector>

#include "credal/distribution.hpp"

namespace credal {

// A polytope of joint distributions over X x Y, represented by its extreme
// points.
class CredalSet {
 public:
  CredalSet(std::vector<JointDistribution> vertices, std::string label);

  static CredalSet Singleton(JointDistribution joint,
                             std::string label = "singleton");

  std::size_t x_size() const noexcept { return x_size_; }
  std::size_t y_size() const noexcept { return y_size_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const JointDistribution& vertex(std::size_t i) const { return vertices_[i]; }
  std::span<const JointDistribution> vertices() const noexcept {
    return vertices_;
  }
  const std::string& label() const noexcept { return label_; }

  // Set only for sets built by MarginalFamily.
  const std::optional<FiniteDistribution>& fixed_y_marginal() const noexcept {
    return fixed_y_marginal_;
  }

 private:
  friend CredalSet MarginalFamily(const FiniteDistribution&, std::size_t);

  std::size_t x_size_;
  std::size_t y_size_;
  std::vector<JointDistribution> vertices_;
  std::string label_;
  std::optional<FiniteDistribution> fixed_y_marginal_;
};

// All joints on X x Y whose Y-marginal is p_y. Vertices are the joints
// Pr(x, y) = p_y(y) [x = f(y)], one per function f: Y -> X, enumerated with
// f(0) as the most significant digit. Functions that differ only where
// p_y is zero give the same joint; only the one with f(y) = 0 there is kept,
// so a full-support p_y yields x_size^|Y| vertices. Throws kDimension when x_size is 0 or
// x_size^|Y| overflows the vertex cap (10^6).
CredalSet MarginalFamily(const FiniteDistribution& p_y, std::size_t x_size);

// Subset of Y given as a list of outcome indices.
using Event = std::vector<std::size_t>;

// Pr(event) range over the set.
ProbabilityInterval PriorBounds(const CredalSet& set, const Event& event);

// Range of Pr(event | X = x) over vertices with Pr(X = x) > 1e-12. Throws
// kConditioningUndefined when every vertex nulls X = x.
ProbabilityInterval ConditionalBounds(const CredalSet& set, const Event& event,
                                      std::size_t x);

// Vertex indices that survive conditioning on X = x.
std::vector<std::size_t> AdmissibleVertices(const CredalSet& set,
                                            std::size_t x);

struct ObservationDilation {
  std::size_t x;
  bool admissible;
  // Meaningful only when admissible.
  ProbabilityInterval interval{0.0, 1.0};
  bool dilates = false;
};

struct DilationReport {
  ProbabilityInterval prior{0.0, 1.0};
  std::vector<ObservationDilation> observations;
  // True iff every admissible x strictly widens the prior interval on both
  // sides.
  bool dilation = false;
};

DilationReport ReportDilation(const CredalSet& set, const Event& event);

// Entropy maximizer of a marginal family: X uniform and independent of Y.
// Throws kUnsupported for sets not built by MarginalFamily.
JointDistribution MaxEntSelect(const CredalSet& set);

}  // namespace credal
