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

#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace credal_cli {
namespace {

using Json = nlohmann::json;

[[noreturn]] void Bad(const std::string& message) {
  throw ScenarioError(message);
}

// Reads members of one JSON object and rejects anything it was not asked
// about.
class Fields {
 public:
  Fields(const Json& object, std::string where)
      : object_(object), where_(std::move(where)) {
    if (!object_.is_object()) Bad(where_ + ": expected an object");
  }

  const Json* Get(const std::string& key) {
    seen_.insert(key);
    auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
  }

  const Json& Require(const std::string& key) {
    const Json* v = Get(key);
    if (v == nullptr) Bad(where_ + ": missing field '" + key + "'");
    return *v;
  }

  void Finish() const {
    for (auto it = object_.begin(); it != object_.end(); ++it) {
      if (!seen_.count(it.key())) {
        Bad(where_ + ": unknown field '" + it.key() + "'");
      }
    }
  }

  const std::string& where() const { return where_; }

 private:
  const Json& object_;
  std::string where_;
  std::set<std::string> seen_;
};

std::size_t ToSize(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    Bad(what + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double ToReal(const Json& v, const std::string& what) {
  if (!v.is_number()) Bad(what + ": expected a number");
  return v.get<double>();
}

// Number or fraction string.
double ToProbability(const Json& v, const std::string& what) {
  if (v.is_string()) {
    try {
      return ParseProbabilityText(v.get<std::string>());
    } catch (const ScenarioError& e) {
      Bad(what + ": " + e.what());
    }
  }
  return ToReal(v, what);
}

// Loss table entry: a number or the string "inf".
double ToLossValue(const Json& v, const std::string& what) {
  if (v.is_string() && v.get<std::string>() == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  return ToReal(v, what);
}

std::vector<double> ToProbabilityVector(const Json& v,
                                        const std::string& what) {
  if (!v.is_array() || v.empty()) Bad(what + ": expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ToProbability(v[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<double> ToRealVector(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) Bad(what + ": expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ToReal(v[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

LossLiteral ParseLoss(const Json& v) {
  Fields f(v, "loss");
  const Json& kind = f.Require("kind");
  if (!kind.is_string()) Bad("loss.kind: expected a string");
  const std::string k = kind.get<std::string>();
  LossLiteral loss;
  if (k == "zero_one") {
    loss.kind = LossKind::kZeroOne;
  } else if (k == "asymmetric") {
    loss.kind = LossKind::kAsymmetric;
    loss.alpha = ToReal(f.Require("alpha"), "loss.alpha");
  } else if (k == "observation_scaled") {
    loss.kind = LossKind::kObservationScaled;
  } else if (k == "observation_mismatch") {
    loss.kind = LossKind::kObservationMismatch;
  } else if (k == "table") {
    loss.kind = LossKind::kTable;
    // values[y][a] or values[y][a][x].
    const Json& values = f.Require("values");
    if (!values.is_array() || values.empty() || !values[0].is_array() ||
        values[0].empty()) {
      Bad("loss.values: expected a nested array indexed [y][a] or [y][a][x]");
    }
    const std::size_t ys = values.size();
    const std::size_t as = values[0].size();
    loss.ys = ys;
    loss.actions = as;
    loss.x_dependent = values[0][0].is_array();
    const std::size_t xs = loss.x_dependent ? values[0][0].size() : 1;
    loss.xs = loss.x_dependent ? xs : 0;
    if (xs == 0) Bad("loss.values: empty observation axis");
    for (std::size_t y = 0; y < ys; ++y) {
      if (!values[y].is_array() || values[y].size() != as) {
        Bad("loss.values: ragged action axis");
      }
      for (std::size_t a = 0; a < as; ++a) {
        const Json& cell = values[y][a];
        if (loss.x_dependent) {
          if (!cell.is_array() || cell.size() != xs) {
            Bad("loss.values: ragged observation axis");
          }
          for (std::size_t x = 0; x < xs; ++x) {
            loss.values.push_back(ToLossValue(cell[x], "loss.values"));
          }
        } else {
          loss.values.push_back(ToLossValue(cell, "loss.values"));
        }
      }
    }
  } else {
    Bad("loss.kind: unknown loss '" + k + "'");
  }
  f.Finish();
  return loss;
}

PriorLiteral ParsePrior(const Json& v) {
  Fields f(v, "prior");
  const Json& kind = f.Require("kind");
  if (!kind.is_string()) Bad("prior.kind: expected a string");
  const std::string k = kind.get<std::string>();
  PriorLiteral prior;
  if (k == "uniform") {
    prior.kind = PriorName::kUniform;
  } else if (k == "jeffreys") {
    prior.kind = PriorName::kJeffreys;
  } else if (k == "ess") {
    prior.kind = PriorName::kEss;
    prior.s = ToReal(f.Require("s"), "prior.s");
    if (!(prior.s > 0.0)) Bad("prior.s: must be > 0");
  } else if (k == "custom") {
    prior.kind = PriorName::kCustom;
    prior.a = ToRealVector(f.Require("a"), "prior.a");
    prior.b = ToRealVector(f.Require("b"), "prior.b");
    if (prior.a.size() != prior.b.size()) {
      Bad("prior: a and b differ in length");
    }
  } else if (k == "hierarchical") {
    prior.kind = PriorName::kHierarchical;
  } else {
    Bad("prior.kind: unknown prior '" + k + "'");
  }
  f.Finish();
  return prior;
}

ModelLiteral ParseModel(const Json& v, std::size_t index) {
  const std::string where = "true_model[" + std::to_string(index) + "]";
  Fields f(v, where);
  ModelLiteral model;
  if (const Json* name = f.Get("name")) {
    if (!name->is_string()) Bad(where + ".name: expected a string");
    model.name = name->get<std::string>();
  } else {
    model.name = "model" + std::to_string(index);
  }
  model.p = ToProbability(f.Require("p"), where + ".p");
  model.alpha = ToProbabilityVector(f.Require("alpha"), where + ".alpha");
  model.beta = ToProbabilityVector(f.Require("beta"), where + ".beta");
  if (model.alpha.size() != model.beta.size()) {
    Bad(where + ": alpha and beta differ in length");
  }
  f.Finish();
  return model;
}

PriorLiteral ParsePriorName(const std::string& text) {
  PriorLiteral prior;
  if (text == "uniform") {
    prior.kind = PriorName::kUniform;
  } else if (text == "jeffreys") {
    prior.kind = PriorName::kJeffreys;
  } else if (text == "hierarchical") {
    prior.kind = PriorName::kHierarchical;
  } else if (text.rfind("ess=", 0) == 0) {
    prior.kind = PriorName::kEss;
    std::size_t used = 0;
    try {
      prior.s = std::stod(text.substr(4), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 4 || !(prior.s > 0.0) ||
        !std::isfinite(prior.s)) {
      Bad("strategy prior '" + text + "': bad equivalent sample size");
    }
  } else {
    Bad("unknown prior name '" + text + "'");
  }
  return prior;
}

std::string FormatReal(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace

double ParseProbabilityText(const std::string& text) {
  auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
      Bad("cannot parse '" + text + "' as a probability");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse(text);
  const double num = parse(text.substr(0, slash));
  const double den = parse(text.substr(slash + 1));
  if (den == 0.0) Bad("zero denominator in '" + text + "'");
  return num / den;
}

std::string LossLiteral::Name() const {
  switch (kind) {
    case LossKind::kZeroOne:
      return "zero_one";
    case LossKind::kAsymmetric:
      return "asymmetric(alpha=" + FormatReal(alpha) + ")";
    case LossKind::kObservationScaled:
      return "observation_scaled";
    case LossKind::kObservationMismatch:
      return "observation_mismatch";
    case LossKind::kTable:
      return "table";
  }
  return "unknown";
}

std::string PriorLiteral::Name() const {
  switch (kind) {
    case PriorName::kUniform:
      return "uniform";
    case PriorName::kJeffreys:
      return "jeffreys";
    case PriorName::kEss:
      return "ess=" + FormatReal(s);
    case PriorName::kCustom:
      return "custom";
    case PriorName::kHierarchical:
      return "hierarchical";
  }
  return "unknown";
}

StrategyLiteral ParseStrategy(const std::string& text) {
  StrategyLiteral s;
  if (text == "ignore") {
    s.kind = StrategyLiteral::kIgnore;
  } else if (text == "global_minimax") {
    s.kind = StrategyLiteral::kGlobalMinimax;
  } else if (text == "local_minimax") {
    s.kind = StrategyLiteral::kLocalMinimax;
  } else if (text == "bayes") {
    s.kind = StrategyLiteral::kBayes;
  } else if (text.rfind("bayes:", 0) == 0) {
    s.kind = StrategyLiteral::kBayes;
    s.prior = ParsePriorName(text.substr(6));
  } else {
    Bad("unknown strategy '" + text + "'");
  }
  return s;
}

std::string StrategyName(const StrategyLiteral& strategy,
                         const std::optional<PriorLiteral>& fallback) {
  switch (strategy.kind) {
    case StrategyLiteral::kIgnore:
      return "ignore";
    case StrategyLiteral::kLocalMinimax:
      return "local_minimax";
    case StrategyLiteral::kGlobalMinimax:
      return "global_minimax";
    case StrategyLiteral::kBayes: {
      const auto& prior = strategy.prior ? strategy.prior : fallback;
      return "bayes:" + (prior ? prior->Name() : std::string("uniform"));
    }
  }
  return "unknown";
}

Scenario ParseScenario(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Bad(source + ": " + e.what());
  }
  Scenario sc;
  sc.source = source;
  Fields f(doc, "scenario");

  if (const Json* v = f.Get("name")) {
    if (!v->is_string()) Bad("name: expected a string");
    sc.name = v->get<std::string>();
  }
  if (const Json* v = f.Get("x_size")) sc.x_size = ToSize(*v, "x_size");
  if (const Json* v = f.Get("y_size")) sc.y_size = ToSize(*v, "y_size");

  const Json* p = f.Get("p");
  const Json* p_y = f.Get("p_y");
  if (p != nullptr && p_y != nullptr) Bad("give either p or p_y, not both");
  if (p != nullptr) {
    const double v = ToProbability(*p, "p");
    sc.p_y = std::vector<double>{1.0 - v, v};
  } else if (p_y != nullptr) {
    sc.p_y = ToProbabilityVector(*p_y, "p_y");
  }
  if (sc.p_y && sc.y_size && *sc.y_size != sc.p_y->size()) {
    Bad("y_size does not match the Y marginal");
  }
  if (sc.p_y && !sc.y_size) sc.y_size = sc.p_y->size();

  if (const Json* v = f.Get("loss")) sc.loss = ParseLoss(*v);
  if (const Json* v = f.Get("prior")) sc.prior = ParsePrior(*v);

  if (const Json* v = f.Get("true_model")) {
    if (v->is_array()) {
      if (v->empty()) Bad("true_model: empty list");
      for (std::size_t i = 0; i < v->size(); ++i) {
        sc.true_model.push_back(ParseModel((*v)[i], i));
      }
    } else {
      sc.true_model.push_back(ParseModel(*v, 0));
    }
  }

  if (const Json* v = f.Get("n")) {
    if (v->is_array()) {
      if (v->empty()) Bad("n: empty list");
      for (const auto& e : *v) sc.n.push_back(ToSize(e, "n"));
    } else {
      sc.n.push_back(ToSize(*v, "n"));
    }
  }
  if (const Json* v = f.Get("alpha")) {
    if (v->is_array()) {
      sc.alpha = ToRealVector(*v, "alpha");
    } else {
      sc.alpha.push_back(ToReal(*v, "alpha"));
    }
  }

  if (const Json* v = f.Get("event")) {
    if (!v->is_array() || v->empty()) Bad("event: expected a non-empty array");
    std::vector<std::size_t> event;
    for (const auto& e : *v) event.push_back(ToSize(e, "event"));
    sc.event = std::move(event);
  }

  const Json* sample = f.Get("sample");
  const Json* counts = f.Get("counts");
  if (sample != nullptr && counts != nullptr) {
    Bad("give either sample or counts, not both");
  }
  if (sample != nullptr) {
    if (!sample->is_array()) Bad("sample: expected an array of [x, y] pairs");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : *sample) {
      if (!e.is_array() || e.size() != 2) {
        Bad("sample: expected an array of [x, y] pairs");
      }
      pairs.emplace_back(ToSize(e[0], "sample"), ToSize(e[1], "sample"));
    }
    sc.sample = std::move(pairs);
  }
  if (counts != nullptr) {
    if (!counts->is_array() || counts->empty()) {
      Bad("counts: expected one [n_x0, n_x1] row per x");
    }
    std::vector<std::uint64_t> cells;
    for (const auto& row : *counts) {
      if (!row.is_array() || row.size() != 2) {
        Bad("counts: expected one [n_x0, n_x1] row per x");
      }
      cells.push_back(ToSize(row[0], "counts"));
      cells.push_back(ToSize(row[1], "counts"));
    }
    sc.counts = std::move(cells);
  }

  if (const Json* v = f.Get("strategies")) {
    if (!v->is_array() || v->empty()) {
      Bad("strategies: expected a non-empty array of names");
    }
    for (const auto& e : *v) {
      if (!e.is_string()) Bad("strategies: expected strategy names");
      sc.strategies.push_back(ParseStrategy(e.get<std::string>()));
    }
  }
  f.Finish();
  return sc;
}

Scenario LoadScenarioFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Bad("cannot read scenario file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseScenario(text.str(), path);
}

namespace {

const std::map<std::string, std::string>& Builtins() {
  static const auto* builtins = new std::map<std::string, std::string>{
      {"dilation-demo", R"({
        "name": "dilation-demo",
        "x_size": 2, "p": "1/3",
        "loss": {"kind": "zero_one"},
        "event": [1]
      })"},
      {"two-obs", R"({
        "name": "two-obs",
        "x_size": 2, "p": "1/2",
        "prior": {"kind": "uniform"},
        "sample": [[1, 1]],
        "loss": {"kind": "zero_one"}
      })"},
      {"beta-35", R"({
        "name": "beta-35",
        "x_size": 2,
        "true_model": {"name": "independent", "p": "1/2",
                       "alpha": ["1/2", "1/2"], "beta": ["1/2", "1/2"]},
        "prior": {"kind": "uniform"},
        "n": [4], "alpha": [1.4],
        "loss": {"kind": "asymmetric", "alpha": 1.4},
        "strategies": ["ignore", "bayes:uniform"]
      })"},
      {"obsloss", R"({
        "name": "obsloss",
        "x_size": 2, "p": "1/2",
        "loss": {"kind": "observation_mismatch"}
      })"},
      {"regret", R"({
        "name": "regret",
        "x_size": 2,
        "true_model": [
          {"name": "independent", "p": "1/2",
           "alpha": ["1/2", "1/2"], "beta": ["1/2", "1/2"]},
          {"name": "correlated", "p": "1/2",
           "alpha": [0, 1], "beta": [1, 0]}
        ],
        "prior": {"kind": "uniform"},
        "n": [4], "alpha": [1.4],
        "loss": {"kind": "asymmetric", "alpha": 1.4},
        "strategies": ["ignore", "bayes:uniform", "global_minimax",
                       "local_minimax"]
      })"},
  };
  return *builtins;
}

}  // namespace

const std::vector<std::string>& BuiltinNames() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [name, text] : Builtins()) v->push_back(name);
    return v;
  }();
  return *names;
}

Scenario BuiltinScenario(const std::string& name) {
  const auto it = Builtins().find(name);
  if (it == Builtins().end()) Bad("unknown builtin scenario '" + name + "'");
  return ParseScenario(it->second, "builtin:" + name);
}

void ApplyOverrides(Scenario& scenario, const Overrides& overrides,
                    bool uses_loss) {
  if (overrides.p) {
    const double p = *overrides.p;
    if (scenario.p_y && scenario.p_y->size() != 2) {
      Bad("--p applies only to a binary Y marginal");
    }
    if (scenario.p_y || scenario.true_model.empty()) {
      scenario.p_y = std::vector<double>{1.0 - p, p};
      scenario.y_size = 2;
    }
    for (auto& model : scenario.true_model) model.p = p;
  }
  if (!overrides.n.empty()) scenario.n = overrides.n;
  if (!overrides.alpha.empty()) {
    scenario.alpha = overrides.alpha;
    if (uses_loss && scenario.loss &&
        scenario.loss->kind == LossKind::kAsymmetric) {
      if (overrides.alpha.size() != 1) {
        Bad("--alpha must be a single value for an asymmetric loss");
      }
      scenario.loss->alpha = overrides.alpha.front();
    }
  }
}

}  // namespace credal_cli
