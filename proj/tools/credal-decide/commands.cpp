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

#include "commands.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "credal/credal_decide.h"
#include "handles.hpp"

namespace credal_cli {
namespace {

[[noreturn]] void Bad(const std::string& message) {
  throw ScenarioError(message);
}

OrderedJson NumArray(const std::vector<double>& v) {
  OrderedJson out = OrderedJson::array();
  for (double x : v) out.push_back(Num(x));
  return out;
}

std::string Str(std::size_t v) { return std::to_string(v); }

// ---- scenario accessors

std::size_t RequireXSize(const Scenario& sc) {
  if (!sc.x_size) Bad("scenario needs x_size");
  return *sc.x_size;
}

const std::vector<double>& RequireMarginal(const Scenario& sc) {
  if (!sc.p_y) Bad("scenario needs p (binary Y) or p_y");
  return *sc.p_y;
}

double RequireBinaryP(const Scenario& sc) {
  const auto& p_y = RequireMarginal(sc);
  if (p_y.size() != 2) Bad("this command needs a binary Y marginal (p)");
  return p_y[1];
}

const LossLiteral& RequireLoss(const Scenario& sc) {
  if (!sc.loss) Bad("scenario needs a loss");
  return *sc.loss;
}

const PriorLiteral& RequirePrior(const Scenario& sc) {
  if (!sc.prior) Bad("scenario needs a prior");
  return *sc.prior;
}

const std::vector<std::size_t>& RequireN(const Scenario& sc) {
  if (sc.n.empty()) Bad("scenario needs n (or pass --n)");
  return sc.n;
}

const std::vector<double>& RequireAlpha(const Scenario& sc) {
  if (sc.alpha.empty()) Bad("scenario needs alpha (or pass --alpha)");
  return sc.alpha;
}

const std::vector<ModelLiteral>& RequireModels(const Scenario& sc) {
  if (sc.true_model.empty()) Bad("scenario needs true_model");
  return sc.true_model;
}

const std::vector<StrategyLiteral>& RequireStrategies(const Scenario& sc) {
  if (sc.strategies.empty()) Bad("scenario needs strategies");
  return sc.strategies;
}

// ---- C object construction

LossPtr BuildLoss(const LossLiteral& loss, std::size_t y_size) {
  switch (loss.kind) {
    case LossKind::kZeroOne:
      return Make<LossPtr>(cd_loss_zero_one, y_size);
    case LossKind::kAsymmetric:
      return Make<LossPtr>(cd_loss_asymmetric, loss.alpha);
    case LossKind::kObservationScaled:
      return Make<LossPtr>(cd_loss_observation_scaled);
    case LossKind::kObservationMismatch:
      return Make<LossPtr>(cd_loss_observation_mismatch);
    case LossKind::kTable:
      return Make<LossPtr>(cd_loss_create, loss.ys, loss.actions, loss.xs,
                           loss.values.data());
  }
  Bad("unknown loss");
}

cd_prior_kind PriorKindOf(const PriorLiteral& prior) {
  switch (prior.kind) {
    case PriorName::kUniform:
      return CD_PRIOR_UNIFORM;
    case PriorName::kJeffreys:
      return CD_PRIOR_JEFFREYS;
    case PriorName::kEss:
      return CD_PRIOR_ESS;
    case PriorName::kCustom:
      return CD_PRIOR_CUSTOM;
    case PriorName::kHierarchical:
      return CD_PRIOR_HIERARCHICAL;
  }
  return CD_PRIOR_UNIFORM;
}

// Dirichlet-product prior; the hierarchical mixture has no such form.
PriorPtr BuildPrior(const PriorLiteral& prior, std::size_t m, double p) {
  switch (prior.kind) {
    case PriorName::kUniform:
      return Make<PriorPtr>(cd_prior_uniform, m, p);
    case PriorName::kJeffreys:
      return Make<PriorPtr>(cd_prior_jeffreys, m, p);
    case PriorName::kEss:
      return Make<PriorPtr>(cd_prior_ess, m, prior.s, p);
    case PriorName::kCustom:
      if (prior.a.size() != m) Bad("custom prior length differs from x_size");
      return Make<PriorPtr>(cd_prior_custom, m, prior.a.data(),
                            prior.b.data(), p);
    case PriorName::kHierarchical:
      break;
  }
  throw ApiError(CD_ERR_UNSUPPORTED,
                 "the hierarchical prior has no Dirichlet-product form");
}

StrategyPtr BuildStrategy(const StrategyLiteral& s,
                          const std::optional<PriorLiteral>& fallback,
                          std::size_t m) {
  switch (s.kind) {
    case StrategyLiteral::kIgnore:
      return Make<StrategyPtr>(cd_strategy_ignore);
    case StrategyLiteral::kLocalMinimax:
      return Make<StrategyPtr>(cd_strategy_local_minimax);
    case StrategyLiteral::kGlobalMinimax:
      return Make<StrategyPtr>(cd_strategy_global_minimax);
    case StrategyLiteral::kBayes:
      break;
  }
  const PriorLiteral prior =
      s.prior ? *s.prior : (fallback ? *fallback : PriorLiteral{});
  if (prior.kind == PriorName::kCustom && prior.a.size() != m) {
    Bad("custom prior length differs from the model's x_size");
  }
  return Make<StrategyPtr>(cd_strategy_bayes, PriorKindOf(prior), prior.s,
                           prior.a.empty() ? nullptr : prior.a.data(),
                           prior.b.empty() ? nullptr : prior.b.data(),
                           prior.a.size());
}

ModelPtr BuildModel(const ModelLiteral& model, std::size_t n) {
  return Make<ModelPtr>(cd_model_from_param, model.p, model.alpha.data(),
                        model.beta.data(), model.alpha.size(), n);
}

CredalSetPtr BuildFamily(const Scenario& sc) {
  const auto& p_y = RequireMarginal(sc);
  return Make<CredalSetPtr>(cd_credal_set_marginal_family, p_y.data(),
                            p_y.size(), RequireXSize(sc));
}

OrderedJson ModelJson(const ModelLiteral& model) {
  OrderedJson j;
  j["name"] = model.name;
  j["p"] = Num(model.p);
  j["alpha"] = NumArray(model.alpha);
  j["beta"] = NumArray(model.beta);
  return j;
}

std::size_t ModelXSize(const Scenario& sc, const ModelLiteral& model) {
  if (sc.x_size && *sc.x_size != model.alpha.size()) {
    Bad("true model '" + model.name + "' does not match x_size");
  }
  return model.alpha.size();
}

// ---- commands

Report Minimax(const Scenario& sc) {
  auto set = BuildFamily(sc);
  const std::size_t xs = cd_credal_set_x_size(set.get());
  auto loss = BuildLoss(RequireLoss(sc), cd_credal_set_y_size(set.get()));
  auto report =
      Make<ConsistencyPtr>(cd_time_inconsistency, set.get(), loss.get());
  const cd_minimax* global = cd_consistency_global(report.get());
  const cd_rule* rule = cd_minimax_rule(global);
  const std::size_t as = cd_rule_action_count(rule);

  Report out;
  out.csv_header = {"record", "x", "action", "rule", "probability", "value"};

  std::vector<double> rows(xs * as);
  cd_rule_rows(rule, rows.data());
  OrderedJson rule_json = OrderedJson::array();
  for (std::size_t x = 0; x < xs; ++x) {
    std::vector<double> row(rows.begin() + x * as,
                            rows.begin() + (x + 1) * as);
    rule_json.push_back(NumArray(row));
    for (std::size_t a = 0; a < as; ++a) {
      out.csv_rows.push_back(
          {"global_rule", Str(x), Str(a), "", CsvNum(row[a]), ""});
    }
  }

  OrderedJson mixture = OrderedJson::array();
  std::vector<std::size_t> actions(xs);
  for (std::size_t i = 0; i < cd_minimax_mixture_size(global); ++i) {
    double weight = 0.0;
    Check(cd_minimax_mixture_term(global, i, actions.data(), &weight));
    std::string label;
    for (std::size_t x = 0; x < xs; ++x) {
      if (x) label += '-';
      label += Str(actions[x]);
    }
    mixture.push_back({{"actions", actions}, {"weight", Num(weight)}});
    out.csv_rows.push_back({"mixture", "", "", label, CsvNum(weight), ""});
  }

  const double value = cd_minimax_value(global);
  const std::size_t witness = cd_minimax_witness(global);
  out.csv_rows.push_back({"global_value", "", "", "", "", CsvNum(value)});
  out.csv_rows.push_back({"witness", "", "", "", "", Str(witness)});

  OrderedJson local = OrderedJson::array();
  std::vector<double> local_actions(as);
  for (std::size_t x = 0; x < xs; ++x) {
    double local_value = 0.0;
    if (!cd_consistency_local(report.get(), x, local_actions.data(),
                              &local_value)) {
      local.push_back({{"x", x}, {"admissible", false}});
      continue;
    }
    local.push_back({{"x", x},
                     {"admissible", true},
                     {"actions", NumArray(local_actions)},
                     {"value", Num(local_value)}});
    for (std::size_t a = 0; a < as; ++a) {
      out.csv_rows.push_back(
          {"local_rule", Str(x), Str(a), "", CsvNum(local_actions[a]), ""});
    }
    out.csv_rows.push_back(
        {"local_value", Str(x), "", "", "", CsvNum(local_value)});
  }

  const bool inconsistent = cd_consistency_inconsistent(report.get()) != 0;
  const double premium = cd_consistency_pay_not_to_know(report.get());
  const double plan = cd_consistency_local_plan_value(report.get());
  const double worst_local = cd_consistency_worst_local_value(report.get());
  out.csv_rows.push_back(
      {"inconsistent", "", "", "", "", inconsistent ? "1" : "0"});
  out.csv_rows.push_back({"local_plan_value", "", "", "", "", CsvNum(plan)});
  out.csv_rows.push_back(
      {"worst_local_value", "", "", "", "", CsvNum(worst_local)});
  out.csv_rows.push_back({"pay_not_to_know", "", "", "", "", CsvNum(premium)});

  out.json["p_y"] = NumArray(*sc.p_y);
  out.json["x_size"] = xs;
  out.json["loss"] = sc.loss->Name();
  out.json["global"] = {{"value", Num(value)},
                        {"witness", witness},
                        {"rule", rule_json},
                        {"mixture", mixture}};
  out.json["local"] = local;
  out.json["inconsistent"] = inconsistent;
  out.json["local_plan_value"] = Num(plan);
  out.json["worst_local_value"] = Num(worst_local);
  out.json["pay_not_to_know"] = Num(premium);
  return out;
}

Report Dilation(const Scenario& sc) {
  auto set = BuildFamily(sc);
  const std::size_t xs = cd_credal_set_x_size(set.get());
  if (!sc.event) Bad("scenario needs event (a list of Y values)");
  const auto& event = *sc.event;
  double prior_lower = 0.0, prior_upper = 0.0;
  std::vector<int> admissible(xs), dilates(xs);
  std::vector<double> lower(xs), upper(xs);
  int dilation = 0;
  Check(cd_dilation_report(set.get(), event.data(), event.size(),
                           &prior_lower, &prior_upper, admissible.data(),
                           lower.data(), upper.data(), dilates.data(),
                           &dilation));
  Report out;
  out.csv_header = {"x",     "admissible",  "lower",  "upper",
                    "prior_lower", "prior_upper", "dilates"};
  OrderedJson observations = OrderedJson::array();
  for (std::size_t x = 0; x < xs; ++x) {
    if (admissible[x]) {
      observations.push_back({{"x", x},
                              {"admissible", true},
                              {"lower", Num(lower[x])},
                              {"upper", Num(upper[x])},
                              {"dilates", dilates[x] != 0}});
      out.csv_rows.push_back({Str(x), "1", CsvNum(lower[x]),
                              CsvNum(upper[x]), CsvNum(prior_lower),
                              CsvNum(prior_upper), dilates[x] ? "1" : "0"});
    } else {
      observations.push_back({{"x", x},
                              {"admissible", false},
                              {"lower", nullptr},
                              {"upper", nullptr},
                              {"dilates", false}});
      out.csv_rows.push_back({Str(x), "0", "", "", CsvNum(prior_lower),
                              CsvNum(prior_upper), "0"});
    }
  }
  out.csv_rows.push_back({"all", "", "", "", CsvNum(prior_lower),
                          CsvNum(prior_upper), dilation ? "1" : "0"});
  out.json["p_y"] = NumArray(*sc.p_y);
  out.json["x_size"] = xs;
  out.json["event"] = event;
  out.json["prior"] = {{"lower", Num(prior_lower)},
                       {"upper", Num(prior_upper)}};
  out.json["observations"] = observations;
  out.json["dilation"] = dilation != 0;
  return out;
}

Report Predict(const Scenario& sc) {
  const double p = RequireBinaryP(sc);
  const std::size_t m = RequireXSize(sc);
  const PriorLiteral& prior_lit = RequirePrior(sc);

  CountsPtr counts;
  if (sc.sample) {
    std::vector<std::size_t> xv, yv;
    for (const auto& [x, y] : *sc.sample) {
      xv.push_back(x);
      yv.push_back(y);
    }
    counts = Make<CountsPtr>(cd_counts_from_sample, xv.data(), yv.data(),
                             xv.size(), m);
  } else if (sc.counts) {
    if (sc.counts->size() != 2 * m) Bad("counts need one row per x");
    counts = Make<CountsPtr>(cd_counts_from_table, m, sc.counts->data());
  } else {
    Bad("scenario needs sample or counts");
  }

  std::vector<double> q(m), odds(m), dependent(m);
  std::optional<double> log_likelihood;
  const bool hierarchical = prior_lit.kind == PriorName::kHierarchical;
  if (hierarchical) {
    Check(cd_hierarchical_predictive(counts.get(), p, q.data(),
                                     dependent.data()));
    for (std::size_t k = 0; k < m; ++k) odds[k] = q[k] / (1.0 - q[k]);
  } else {
    auto prior = BuildPrior(prior_lit, m, p);
    Check(cd_predictive(prior.get(), counts.get(), q.data(), odds.data()));
    double ll = 0.0;
    Check(cd_log_marginal_likelihood(prior.get(), counts.get(), &ll));
    log_likelihood = ll;
  }

  LossPtr loss;
  if (sc.loss) loss = BuildLoss(*sc.loss, 2);

  Report out;
  out.csv_header = {"k", "odds", "q", "action"};
  OrderedJson rows = OrderedJson::array();
  for (std::size_t k = 0; k < m; ++k) {
    OrderedJson row = {{"k", k}, {"odds", Num(odds[k])}, {"q", Num(q[k])}};
    std::string action_cell;
    if (loss) {
      std::size_t action = 0;
      Check(cd_bayes_decision(q.data(), m, loss.get(), k, &action));
      row["action"] = action;
      action_cell = Str(action);
    } else {
      row["action"] = nullptr;
    }
    if (hierarchical) row["dependent_weight"] = Num(dependent[k]);
    rows.push_back(row);
    out.csv_rows.push_back({Str(k), CsvNum(odds[k]), CsvNum(q[k]),
                            action_cell});
  }

  OrderedJson table = OrderedJson::array();
  for (std::size_t j = 0; j < m; ++j) {
    table.push_back({cd_counts_cell(counts.get(), j, 0),
                     cd_counts_cell(counts.get(), j, 1)});
  }
  out.json["p"] = Num(p);
  out.json["x_size"] = m;
  out.json["prior"] = prior_lit.Name();
  out.json["loss"] = sc.loss ? OrderedJson(sc.loss->Name()) : nullptr;
  out.json["counts"] = table;
  out.json["log_marginal_likelihood"] =
      log_likelihood ? Num(*log_likelihood) : nullptr;
  out.json["predictive"] = rows;
  return out;
}

Report Beta(const Scenario& sc) {
  const auto& models = RequireModels(sc);
  if (models.size() != 1) Bad("beta takes exactly one true_model");
  const ModelLiteral& model = models.front();
  const std::size_t m = ModelXSize(sc, model);
  const PriorLiteral& prior_lit = RequirePrior(sc);
  auto prior = BuildPrior(prior_lit, m, model.p);
  auto ignore = Make<StrategyPtr>(cd_strategy_ignore);
  auto bayes = BuildStrategy({StrategyLiteral::kBayes, prior_lit}, {}, m);

  Report out;
  out.csv_header = {"n",   "alpha",      "beta", "risk_ignore",
                    "risk_bayes", "gap", "relative"};
  OrderedJson rows = OrderedJson::array();
  for (std::size_t n : RequireN(sc)) {
    auto tm = BuildModel(model, n);
    for (double alpha : RequireAlpha(sc)) {
      auto loss = Make<LossPtr>(cd_loss_asymmetric, alpha);
      double beta = 0.0;
      std::vector<double> per_k(m);
      Check(cd_trigger_probability(tm.get(), prior.get(), alpha, &beta,
                                   per_k.data()));
      double risk_ignore = 0.0, risk_bayes = 0.0;
      Check(cd_strategy_risk(tm.get(), ignore.get(), loss.get(),
                             &risk_ignore));
      Check(cd_strategy_risk(tm.get(), bayes.get(), loss.get(), &risk_bayes));
      const double gap = risk_bayes - risk_ignore;
      const double relative =
          risk_ignore > 0.0 ? gap / risk_ignore : std::nan("");
      rows.push_back({{"n", n},
                      {"alpha", Num(alpha)},
                      {"beta", Num(beta)},
                      {"per_observation", NumArray(per_k)},
                      {"risk_ignore", Num(risk_ignore)},
                      {"risk_bayes", Num(risk_bayes)},
                      {"gap", Num(gap)},
                      {"relative", Num(relative)}});
      out.csv_rows.push_back({Str(n), CsvNum(alpha), CsvNum(beta),
                              CsvNum(risk_ignore), CsvNum(risk_bayes),
                              CsvNum(gap),
                              std::isfinite(relative) ? CsvNum(relative)
                                                      : ""});
    }
  }
  out.json["model"] = ModelJson(model);
  out.json["prior"] = prior_lit.Name();
  out.json["rows"] = rows;
  return out;
}

struct Grid {
  std::vector<std::pair<const ModelLiteral*, std::size_t>> cells;
  std::vector<ModelPtr> models;
};

Grid BuildGrid(const Scenario& sc) {
  Grid grid;
  for (const auto& model : RequireModels(sc)) {
    ModelXSize(sc, model);
    for (std::size_t n : RequireN(sc)) {
      grid.cells.emplace_back(&model, n);
      grid.models.push_back(BuildModel(model, n));
    }
  }
  return grid;
}

std::vector<StrategyPtr> BuildStrategies(const Scenario& sc, std::size_t m) {
  std::vector<StrategyPtr> out;
  for (const auto& s : RequireStrategies(sc)) {
    out.push_back(BuildStrategy(s, sc.prior, m));
  }
  return out;
}

Report Risk(const Scenario& sc) {
  Grid grid = BuildGrid(sc);
  auto loss = BuildLoss(RequireLoss(sc), 2);
  const std::size_t m = grid.cells.front().first->alpha.size();
  auto strategies = BuildStrategies(sc, m);
  const std::size_t mc = grid.models.size(), scount = strategies.size();
  std::vector<const cd_model*> model_ptrs;
  for (const auto& p : grid.models) model_ptrs.push_back(p.get());
  std::vector<const cd_strategy*> strategy_ptrs;
  for (const auto& p : strategies) strategy_ptrs.push_back(p.get());
  std::vector<double> risk(mc * scount), best(mc), regret(mc * scount),
      worst(scount);
  Check(cd_regret_table(model_ptrs.data(), mc, strategy_ptrs.data(), scount,
                        loss.get(), risk.data(), best.data(), regret.data(),
                        worst.data()));

  Report out;
  out.csv_header = {"model", "n", "strategy", "risk", "best", "regret"};
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < mc; ++i) {
    const auto& [model, n] = grid.cells[i];
    for (std::size_t s = 0; s < scount; ++s) {
      const std::string name = cd_strategy_name(strategies[s].get());
      rows.push_back({{"model", model->name},
                      {"n", n},
                      {"strategy", name},
                      {"risk", Num(risk[i * scount + s])},
                      {"best", Num(best[i])},
                      {"regret", Num(regret[i * scount + s])}});
      out.csv_rows.push_back({model->name, Str(n), name,
                              CsvNum(risk[i * scount + s]), CsvNum(best[i]),
                              CsvNum(regret[i * scount + s])});
    }
  }
  OrderedJson worst_json = OrderedJson::array();
  for (std::size_t s = 0; s < scount; ++s) {
    const std::string name = cd_strategy_name(strategies[s].get());
    worst_json.push_back({{"strategy", name}, {"regret", Num(worst[s])}});
    out.csv_rows.push_back(
        {"worst_case", "", name, "", "", CsvNum(worst[s])});
  }
  OrderedJson models = OrderedJson::array();
  for (const auto& model : sc.true_model) models.push_back(ModelJson(model));
  out.json["loss"] = sc.loss->Name();
  out.json["models"] = models;
  out.json["rows"] = rows;
  out.json["worst_case_regret"] = worst_json;
  return out;
}

Report Simulate(const Scenario& sc, std::uint64_t runs, std::uint64_t seed) {
  Grid grid = BuildGrid(sc);
  auto loss = BuildLoss(RequireLoss(sc), 2);
  const std::size_t m = grid.cells.front().first->alpha.size();
  auto strategies = BuildStrategies(sc, m);

  Report out;
  out.csv_header = {"model", "n",   "strategy", "runs", "seed",
                    "mean",  "stderr", "exact", "z"};
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < grid.models.size(); ++i) {
    const auto& [model, n] = grid.cells[i];
    for (const auto& strategy : strategies) {
      const std::string name = cd_strategy_name(strategy.get());
      double exact = 0.0, mean = 0.0, se = 0.0;
      Check(cd_strategy_risk(grid.models[i].get(), strategy.get(), loss.get(),
                             &exact));
      Check(cd_simulate(grid.models[i].get(), strategy.get(), loss.get(),
                        runs, seed, &mean, &se));
      double z = 0.0;
      if (se > 0.0) {
        z = (mean - exact) / se;
      } else if (mean != exact) {
        z = std::nan("");
      }
      rows.push_back({{"model", model->name},
                      {"n", n},
                      {"strategy", name},
                      {"runs", runs},
                      {"seed", seed},
                      {"mean", Num(mean)},
                      {"stderr", Num(se)},
                      {"exact", Num(exact)},
                      {"z", Num(z)}});
      out.csv_rows.push_back({model->name, Str(n), name, std::to_string(runs),
                              std::to_string(seed), CsvNum(mean), CsvNum(se),
                              CsvNum(exact),
                              std::isfinite(z) ? CsvNum(z) : ""});
    }
  }
  out.json["loss"] = sc.loss->Name();
  out.json["rng"] = "splitmix64-counter";
  out.json["rows"] = rows;
  return out;
}

OrderedJson Decisions() {
  return {
      {"beta_averaging",
       "trigger probability averages over X_{n+1} under the true model; "
       "per-observation values are also reported"},
      {"ess_convention", "a_k = b_k = s / M"},
      {"pay_not_to_know",
       "worst-case loss of playing the local minimax action at every x, "
       "minus the global minimax value"},
      {"conditioning",
       "regular extension: vertices with Pr(X = x) <= 1e-12 are dropped"},
      {"agent_p", "Bayes and minimax strategies use the true model's Pr(Y=1)"},
      {"tie_break", "lowest index"},
      {"rng", "splitmix64 in counter mode, one substream per run"},
  };
}

}  // namespace

Report RunCommand(const CommandOptions& options) {
  const Scenario& sc = options.scenario;
  Report report;
  if (options.command == "minimax") {
    report = Minimax(sc);
  } else if (options.command == "dilation") {
    report = Dilation(sc);
  } else if (options.command == "predict") {
    report = Predict(sc);
  } else if (options.command == "beta") {
    report = Beta(sc);
  } else if (options.command == "risk") {
    report = Risk(sc);
  } else if (options.command == "simulate") {
    report = Simulate(sc, options.runs, options.seed);
  } else {
    Bad("unknown command '" + options.command + "'");
  }
  OrderedJson full;
  full["tool"] = "credal-decide";
  full["version"] = cd_version();
  full["command"] = options.command;
  full["scenario"] = {{"source", sc.source}, {"name", sc.name}};
  full["decisions"] = Decisions();
  full["result"] = std::move(report.json);
  report.json = std::move(full);
  return report;
}

}  // namespace credal_cli
