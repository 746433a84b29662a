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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace credal_cli {

// Malformed or inconsistent scenario input. Maps to exit code 2.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LossKind {
  kZeroOne,
  kAsymmetric,
  kObservationScaled,
  kObservationMismatch,
  kTable,
};

struct LossLiteral {
  LossKind kind = LossKind::kZeroOne;
  double alpha = 0.0;  // kAsymmetric
  // kTable: action count, observation dependence and the flattened table in
  // the C API's layout.
  std::size_t ys = 0;
  std::size_t actions = 0;
  std::size_t xs = 0;  // 0 unless x_dependent
  bool x_dependent = false;
  std::vector<double> values;
  std::string Name() const;
};

enum class PriorName { kUniform, kJeffreys, kEss, kCustom, kHierarchical };

struct PriorLiteral {
  PriorName kind = PriorName::kUniform;
  double s = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  std::string Name() const;
};

struct ModelLiteral {
  std::string name;
  double p = 0.0;
  std::vector<double> alpha;  // Pr(X = j | Y = 1)
  std::vector<double> beta;   // Pr(X = j | Y = 0)
};

struct StrategyLiteral {
  enum Kind { kIgnore, kBayes, kLocalMinimax, kGlobalMinimax } kind = kIgnore;
  // Bayes only; falls back to the scenario prior when unset.
  std::optional<PriorLiteral> prior;
};

struct Scenario {
  std::string source;  // "builtin:<name>" or the file path
  std::string name;
  std::optional<std::size_t> x_size;
  std::optional<std::size_t> y_size;
  std::optional<std::vector<double>> p_y;
  std::optional<LossLiteral> loss;
  std::optional<PriorLiteral> prior;
  std::vector<ModelLiteral> true_model;
  std::vector<std::size_t> n;
  std::vector<double> alpha;
  std::optional<std::vector<std::size_t>> event;
  // Training data for predict: either a list of (x, y) pairs or a count
  // table with one [n_(x,0), n_(x,1)] row per x.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> sample;
  std::optional<std::vector<std::uint64_t>> counts;
  std::vector<StrategyLiteral> strategies;
};

// Parses a scenario document. Unknown fields are rejected.
Scenario ParseScenario(const std::string& text, const std::string& source);
Scenario LoadScenarioFile(const std::string& path);
Scenario BuiltinScenario(const std::string& name);
const std::vector<std::string>& BuiltinNames();

// Parses "0.25", "1/3" and similar.
double ParseProbabilityText(const std::string& text);

StrategyLiteral ParseStrategy(const std::string& text);
std::string StrategyName(const StrategyLiteral& strategy,
                         const std::optional<PriorLiteral>& fallback);

struct Overrides {
  std::optional<double> p;
  std::vector<std::size_t> n;
  std::vector<double> alpha;
};

// Applies command-line overrides. --p replaces a binary Y marginal and the
// p of every true model. When the command evaluates the loss, a single
// --alpha also sets the cost of an asymmetric loss; a list is then an error.
void ApplyOverrides(Scenario& scenario, const Overrides& overrides,
                    bool uses_loss);

}  // namespace credal_cli
