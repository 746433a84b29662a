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

#include "credal/credal_decide.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credal/bayes.hpp"
#include "credal/credal_set.hpp"
#include "credal/error.hpp"
#include "credal/loss.hpp"
#include "credal/minimax.hpp"
#include "credal/oracle.hpp"

struct cd_credal_set {
  credal::CredalSet value;
};
struct cd_loss {
  credal::LossSpec value;
};
struct cd_rule {
  credal::DecisionRule value;
};
struct cd_minimax {
  credal::MinimaxSolution value;
  cd_rule rule;
};
struct cd_consistency {
  credal::ConsistencyReport value;
  cd_minimax global;
};
struct cd_prior {
  credal::DirichletProductPrior value;
};
struct cd_counts {
  credal::SampleCounts value;
};
struct cd_model {
  credal::TrueModel value;
};
struct cd_strategy {
  credal::StrategyId value;
  std::string name;
};

namespace {

thread_local std::string last_error;

cd_status ToStatus(credal::ErrorCode code) {
  switch (code) {
    case credal::ErrorCode::kInvalidArgument:
      return CD_ERR_INVALID_ARGUMENT;
    case credal::ErrorCode::kDimension:
      return CD_ERR_DIMENSION;
    case credal::ErrorCode::kConditioningUndefined:
      return CD_ERR_CONDITIONING_UNDEFINED;
    case credal::ErrorCode::kUnsupported:
      return CD_ERR_UNSUPPORTED;
    case credal::ErrorCode::kSizeCap:
      return CD_ERR_SIZE_CAP;
    case credal::ErrorCode::kNumeric:
      return CD_ERR_NUMERIC;
  }
  return CD_ERR_INTERNAL;
}

template <typename Body>
cd_status Guard(Body&& body) noexcept {
  try {
    body();
    return CD_OK;
  } catch (const credal::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return CD_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) credal::Fail(credal::ErrorCode::kInvalidArgument, what);
}

credal::Event MakeEvent(const size_t* event, size_t size) {
  Require(event != nullptr || size == 0, "event is NULL");
  return credal::Event(event, event + size);
}

std::vector<double> Copy(const double* data, size_t size, const char* what) {
  Require(data != nullptr || size == 0, what);
  return std::vector<double>(data, data + size);
}

credal::JointDistribution MakeJoint(const double* mass, size_t x_size,
                                    size_t y_size) {
  return credal::JointDistribution(
      x_size, y_size, Copy(mass, x_size * y_size, "joint is NULL"));
}

void CopyOut(const std::vector<double>& v, double* out) {
  if (out != nullptr) std::copy(v.begin(), v.end(), out);
}

void CopyOut(std::span<const double> v, double* out) {
  if (out != nullptr) std::copy(v.begin(), v.end(), out);
}

template <typename Handle, typename Value>
void Emit(Handle** out, Value&& value) {
  Require(out != nullptr, "output handle pointer is NULL");
  *out = new Handle{std::forward<Value>(value)};
}

}  // namespace

extern "C" {

const char* cd_version(void) { return CREDAL_DECIDE_VERSION; }

const char* cd_status_name(cd_status status) {
  switch (status) {
    case CD_OK:
      return "ok";
    case CD_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case CD_ERR_DIMENSION:
      return "dimension";
    case CD_ERR_CONDITIONING_UNDEFINED:
      return "conditioning_undefined";
    case CD_ERR_UNSUPPORTED:
      return "unsupported";
    case CD_ERR_SIZE_CAP:
      return "size_cap";
    case CD_ERR_NUMERIC:
      return "numeric";
    case CD_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* cd_last_error(void) { return last_error.c_str(); }

// ---- credal sets

cd_status cd_credal_set_marginal_family(const double* p_y, size_t y_size,
                                        size_t x_size, cd_credal_set** out) {
  return Guard([&] {
    credal::FiniteDistribution marginal(Copy(p_y, y_size, "p_y is NULL"));
    Emit(out, credal::MarginalFamily(marginal, x_size));
  });
}

cd_status cd_credal_set_from_vertices(const double* masses,
                                      size_t vertex_count, size_t x_size,
                                      size_t y_size, cd_credal_set** out) {
  return Guard([&] {
    Require(masses != nullptr, "vertex masses are NULL");
    std::vector<credal::JointDistribution> vertices;
    const size_t cells = x_size * y_size;
    for (size_t v = 0; v < vertex_count; ++v) {
      vertices.push_back(MakeJoint(masses + v * cells, x_size, y_size));
    }
    Emit(out, credal::CredalSet(std::move(vertices), "explicit"));
  });
}

void cd_credal_set_free(cd_credal_set* set) { delete set; }

size_t cd_credal_set_x_size(const cd_credal_set* set) {
  return set->value.x_size();
}

size_t cd_credal_set_y_size(const cd_credal_set* set) {
  return set->value.y_size();
}

size_t cd_credal_set_vertex_count(const cd_credal_set* set) {
  return set->value.vertex_count();
}

cd_status cd_credal_set_vertex(const cd_credal_set* set, size_t index,
                               double* out_mass) {
  return Guard([&] {
    Require(set != nullptr && out_mass != nullptr, "NULL argument");
    if (index >= set->value.vertex_count()) {
      credal::Fail(credal::ErrorCode::kDimension, "vertex index out of range");
    }
    CopyOut(set->value.vertex(index).mass(), out_mass);
  });
}

cd_status cd_prior_bounds(const cd_credal_set* set, const size_t* event,
                          size_t event_size, double* lower, double* upper) {
  return Guard([&] {
    Require(set != nullptr && lower != nullptr && upper != nullptr,
            "NULL argument");
    const auto b = credal::PriorBounds(set->value, MakeEvent(event, event_size));
    *lower = b.lower;
    *upper = b.upper;
  });
}

cd_status cd_conditional_bounds(const cd_credal_set* set, const size_t* event,
                                size_t event_size, size_t x, double* lower,
                                double* upper) {
  return Guard([&] {
    Require(set != nullptr && lower != nullptr && upper != nullptr,
            "NULL argument");
    const auto b = credal::ConditionalBounds(
        set->value, MakeEvent(event, event_size), x);
    *lower = b.lower;
    *upper = b.upper;
  });
}

cd_status cd_dilation_report(const cd_credal_set* set, const size_t* event,
                             size_t event_size, double* prior_lower,
                             double* prior_upper, int* admissible,
                             double* lower, double* upper, int* dilates,
                             int* dilation) {
  return Guard([&] {
    Require(set != nullptr && prior_lower != nullptr &&
                prior_upper != nullptr && admissible != nullptr &&
                lower != nullptr && upper != nullptr && dilates != nullptr &&
                dilation != nullptr,
            "NULL argument");
    const auto report =
        credal::ReportDilation(set->value, MakeEvent(event, event_size));
    *prior_lower = report.prior.lower;
    *prior_upper = report.prior.upper;
    for (const auto& obs : report.observations) {
      admissible[obs.x] = obs.admissible ? 1 : 0;
      lower[obs.x] = obs.admissible ? obs.interval.lower : 0.0;
      upper[obs.x] = obs.admissible ? obs.interval.upper : 0.0;
      dilates[obs.x] = obs.dilates ? 1 : 0;
    }
    *dilation = report.dilation ? 1 : 0;
  });
}

cd_status cd_maxent_select(const cd_credal_set* set, double* out_mass) {
  return Guard([&] {
    Require(set != nullptr && out_mass != nullptr, "NULL argument");
    CopyOut(credal::MaxEntSelect(set->value).mass(), out_mass);
  });
}

// ---- losses and rules

cd_status cd_loss_create(size_t y_size, size_t action_count, size_t x_size,
                         const double* table, cd_loss** out) {
  return Guard([&] {
    const size_t xs = x_size == 0 ? 1 : x_size;
    auto t = Copy(table, y_size * action_count * xs, "loss table is NULL");
    if (x_size == 0) {
      Emit(out, credal::LossSpec::Independent(y_size, action_count,
                                              std::move(t)));
    } else {
      Emit(out, credal::LossSpec::ObservationDependent(y_size, action_count,
                                                       x_size, std::move(t)));
    }
  });
}

cd_status cd_loss_zero_one(size_t n, cd_loss** out) {
  return Guard([&] { Emit(out, credal::LossSpec::ZeroOne(n)); });
}

cd_status cd_loss_asymmetric(double cost, cd_loss** out) {
  return Guard([&] { Emit(out, credal::LossSpec::Asymmetric(cost)); });
}

cd_status cd_loss_observation_scaled(cd_loss** out) {
  return Guard([&] { Emit(out, credal::LossSpec::ObservationScaled()); });
}

cd_status cd_loss_observation_mismatch(cd_loss** out) {
  return Guard([&] { Emit(out, credal::LossSpec::ObservationMismatch()); });
}

void cd_loss_free(cd_loss* loss) { delete loss; }

size_t cd_loss_action_count(const cd_loss* loss) {
  return loss->value.action_count();
}

size_t cd_loss_y_size(const cd_loss* loss) { return loss->value.y_size(); }

size_t cd_loss_x_size(const cd_loss* loss) { return loss->value.x_size(); }

cd_status cd_rule_create(size_t x_size, size_t action_count,
                         const double* rows, cd_rule** out) {
  return Guard([&] {
    Require(rows != nullptr, "rule rows are NULL");
    std::vector<credal::FiniteDistribution> dists;
    for (size_t x = 0; x < x_size; ++x) {
      dists.emplace_back(std::vector<double>(rows + x * action_count,
                                             rows + (x + 1) * action_count));
    }
    Emit(out, credal::DecisionRule(std::move(dists)));
  });
}

void cd_rule_free(cd_rule* rule) { delete rule; }

size_t cd_rule_x_size(const cd_rule* rule) { return rule->value.x_size(); }

size_t cd_rule_action_count(const cd_rule* rule) {
  return rule->value.action_count();
}

void cd_rule_rows(const cd_rule* rule, double* out_rows) {
  const auto& r = rule->value;
  for (size_t x = 0; x < r.x_size(); ++x) {
    for (size_t a = 0; a < r.action_count(); ++a) {
      out_rows[x * r.action_count() + a] = r(x, a);
    }
  }
}

cd_status cd_expected_loss(const double* joint, size_t x_size, size_t y_size,
                           const cd_rule* rule, const cd_loss* loss,
                           double* out) {
  return Guard([&] {
    Require(rule != nullptr && loss != nullptr && out != nullptr,
            "NULL argument");
    *out = credal::ExpectedLoss(MakeJoint(joint, x_size, y_size), rule->value,
                                loss->value);
  });
}

cd_status cd_optimal_action(const double* p_y, size_t y_size,
                            const cd_loss* loss, size_t* action,
                            double* value) {
  return Guard([&] {
    Require(loss != nullptr && action != nullptr && value != nullptr,
            "NULL argument");
    const auto best = credal::FindOptimalAction(
        credal::FiniteDistribution(Copy(p_y, y_size, "p_y is NULL")),
        loss->value);
    *action = best.action;
    *value = best.value;
  });
}

cd_status cd_worst_case_loss(const cd_credal_set* set, const cd_rule* rule,
                             const cd_loss* loss, double* value,
                             size_t* witness) {
  return Guard([&] {
    Require(set != nullptr && rule != nullptr && loss != nullptr &&
                value != nullptr && witness != nullptr,
            "NULL argument");
    const auto worst =
        credal::WorstCaseLoss(set->value, rule->value, loss->value);
    *value = worst.value;
    *witness = worst.witness;
  });
}

// ---- minimax

cd_status cd_global_minimax(const cd_credal_set* set, const cd_loss* loss,
                            cd_minimax** out) {
  return Guard([&] {
    Require(set != nullptr && loss != nullptr && out != nullptr,
            "NULL argument");
    auto solution = credal::GlobalMinimax(set->value, loss->value);
    cd_rule rule{solution.rule};
    *out = new cd_minimax{std::move(solution), std::move(rule)};
  });
}

void cd_minimax_free(cd_minimax* solution) { delete solution; }

double cd_minimax_value(const cd_minimax* solution) {
  return solution->value.value;
}

size_t cd_minimax_witness(const cd_minimax* solution) {
  return solution->value.witness;
}

const cd_rule* cd_minimax_rule(const cd_minimax* solution) {
  return &solution->rule;
}

size_t cd_minimax_mixture_size(const cd_minimax* solution) {
  return solution->value.mixture.size();
}

cd_status cd_minimax_mixture_term(const cd_minimax* solution, size_t index,
                                  size_t* actions, double* weight) {
  return Guard([&] {
    Require(solution != nullptr && actions != nullptr && weight != nullptr,
            "NULL argument");
    if (index >= solution->value.mixture.size()) {
      credal::Fail(credal::ErrorCode::kDimension, "mixture index out of range");
    }
    const auto& term = solution->value.mixture[index];
    std::copy(term.actions.begin(), term.actions.end(), actions);
    *weight = term.weight;
  });
}

cd_status cd_local_minimax(const cd_credal_set* set, size_t x,
                           const cd_loss* loss, double* actions,
                           double* value) {
  return Guard([&] {
    Require(set != nullptr && loss != nullptr && actions != nullptr &&
                value != nullptr,
            "NULL argument");
    const auto local = credal::LocalMinimaxAt(set->value, x, loss->value);
    CopyOut(local.actions.mass(), actions);
    *value = local.value;
  });
}

cd_status cd_time_inconsistency(const cd_credal_set* set, const cd_loss* loss,
                                cd_consistency** out) {
  return Guard([&] {
    Require(set != nullptr && loss != nullptr && out != nullptr,
            "NULL argument");
    auto report = credal::ReportTimeInconsistency(set->value, loss->value);
    cd_minimax global{report.global, cd_rule{report.global.rule}};
    *out = new cd_consistency{std::move(report), std::move(global)};
  });
}

void cd_consistency_free(cd_consistency* report) { delete report; }

const cd_minimax* cd_consistency_global(const cd_consistency* report) {
  return &report->global;
}

int cd_consistency_inconsistent(const cd_consistency* report) {
  return report->value.inconsistent ? 1 : 0;
}

double cd_consistency_pay_not_to_know(const cd_consistency* report) {
  return report->value.pay_not_to_know;
}

double cd_consistency_local_plan_value(const cd_consistency* report) {
  return report->value.local_plan_value;
}

double cd_consistency_worst_local_value(const cd_consistency* report) {
  return report->value.worst_local_value;
}

int cd_consistency_local(const cd_consistency* report, size_t x,
                         double* actions, double* value) {
  if (x >= report->value.local.size() || !report->value.local[x]) return 0;
  const auto& local = *report->value.local[x];
  if (actions != nullptr) CopyOut(local.actions.mass(), actions);
  if (value != nullptr) *value = local.value;
  return 1;
}

// ---- Bayesian prediction

cd_status cd_prior_uniform(size_t m, double p, cd_prior** out) {
  return Guard(
      [&] { Emit(out, credal::DirichletProductPrior::Uniform(m, p)); });
}

cd_status cd_prior_jeffreys(size_t m, double p, cd_prior** out) {
  return Guard(
      [&] { Emit(out, credal::DirichletProductPrior::Jeffreys(m, p)); });
}

cd_status cd_prior_ess(size_t m, double s, double p, cd_prior** out) {
  return Guard([&] {
    Emit(out, credal::DirichletProductPrior::EquivalentSampleSize(m, s, p));
  });
}

cd_status cd_prior_custom(size_t m, const double* a, const double* b,
                          double p, cd_prior** out) {
  return Guard([&] {
    Emit(out, credal::DirichletProductPrior(Copy(a, m, "a is NULL"),
                                            Copy(b, m, "b is NULL"), p));
  });
}

void cd_prior_free(cd_prior* prior) { delete prior; }

cd_status cd_counts_from_sample(const size_t* xs, const size_t* ys,
                                size_t length, size_t m, cd_counts** out) {
  return Guard([&] {
    Require((xs != nullptr && ys != nullptr) || length == 0,
            "sample is NULL");
    std::vector<std::pair<std::size_t, std::size_t>> sample;
    sample.reserve(length);
    for (size_t i = 0; i < length; ++i) sample.emplace_back(xs[i], ys[i]);
    Emit(out, credal::CountsFromSample(sample, m));
  });
}

cd_status cd_counts_from_table(size_t m, const uint64_t* cells,
                               cd_counts** out) {
  return Guard([&] {
    Require(cells != nullptr, "count cells are NULL");
    Emit(out, credal::SampleCounts(
                  m, std::vector<std::uint64_t>(cells, cells + 2 * m)));
  });
}

void cd_counts_free(cd_counts* counts) { delete counts; }

uint64_t cd_counts_cell(const cd_counts* counts, size_t j, size_t k) {
  return counts->value.at(j, k);
}

size_t cd_counts_m(const cd_counts* counts) { return counts->value.m(); }

cd_status cd_posterior_odds(const cd_prior* prior, const cd_counts* counts,
                            size_t k, double* out) {
  return Guard([&] {
    Require(prior != nullptr && counts != nullptr && out != nullptr,
            "NULL argument");
    *out = credal::PosteriorOdds(prior->value, counts->value, k);
  });
}

cd_status cd_posterior_odds_uniform(const cd_counts* counts, size_t k,
                                    double p, double* out) {
  return Guard([&] {
    Require(counts != nullptr && out != nullptr, "NULL argument");
    *out = credal::PosteriorOddsUniform(counts->value, k, p);
  });
}

cd_status cd_predictive(const cd_prior* prior, const cd_counts* counts,
                        double* q, double* odds) {
  return Guard([&] {
    Require(prior != nullptr && counts != nullptr && q != nullptr,
            "NULL argument");
    const auto pred = credal::Predictive(prior->value, counts->value);
    CopyOut(pred.q, q);
    CopyOut(pred.odds, odds);
  });
}

cd_status cd_hierarchical_predictive(const cd_counts* counts, double p,
                                     double* q, double* dependent_weight) {
  return Guard([&] {
    Require(counts != nullptr && q != nullptr, "NULL argument");
    const auto h = credal::HierarchicalPredictiveFor(counts->value, p);
    CopyOut(h.predictive.q, q);
    CopyOut(h.dependent_weight, dependent_weight);
  });
}

cd_status cd_bayes_decision(const double* q, size_t m, const cd_loss* loss,
                            size_t k, size_t* action) {
  return Guard([&] {
    Require(loss != nullptr && action != nullptr, "NULL argument");
    credal::PredictiveDistribution pred;
    pred.q = Copy(q, m, "q is NULL");
    for (double v : pred.q) {
      if (!(v >= 0.0 && v <= 1.0)) {
        credal::Fail(credal::ErrorCode::kInvalidArgument,
                     "predictive probabilities must lie in [0, 1]");
      }
      pred.odds.push_back(v / (1.0 - v));
    }
    *action = credal::BayesDecision(pred, loss->value, k);
  });
}

cd_status cd_log_marginal_likelihood(const cd_prior* prior,
                                     const cd_counts* counts, double* out) {
  return Guard([&] {
    Require(prior != nullptr && counts != nullptr && out != nullptr,
            "NULL argument");
    *out = credal::LogMarginalLikelihood(prior->value, counts->value);
  });
}

// ---- oracle

cd_status cd_model_from_param(double p, const double* alpha,
                              const double* beta, size_t m, size_t n,
                              cd_model** out) {
  return Guard([&] {
    credal::ParamJoint param(
        p, credal::FiniteDistribution(Copy(alpha, m, "alpha is NULL")),
        credal::FiniteDistribution(Copy(beta, m, "beta is NULL")));
    Emit(out, credal::TrueModel{param.Joint(), n});
  });
}

cd_status cd_model_from_joint(const double* joint, size_t x_size,
                              size_t y_size, size_t n, cd_model** out) {
  return Guard([&] {
    Emit(out, credal::TrueModel{MakeJoint(joint, x_size, y_size), n});
  });
}

void cd_model_free(cd_model* model) { delete model; }

uint64_t cd_model_count_tables(const cd_model* model) {
  return credal::CountTableCount(model->value.n,
                                 model->value.joint.mass().size());
}

namespace {
cd_status MakeStrategy(credal::StrategyId id, cd_strategy** out) {
  return Guard([&] {
    std::string name = id.Name();
    Emit(out, cd_strategy{std::move(id), std::move(name)});
  });
}
}  // namespace

cd_status cd_strategy_ignore(cd_strategy** out) {
  return MakeStrategy(credal::StrategyId::Ignore(), out);
}

cd_status cd_strategy_global_minimax(cd_strategy** out) {
  return MakeStrategy(credal::StrategyId::GlobalMinimax(), out);
}

cd_status cd_strategy_local_minimax(cd_strategy** out) {
  return MakeStrategy(credal::StrategyId::LocalMinimax(), out);
}

cd_status cd_strategy_bayes(cd_prior_kind kind, double ess, const double* a,
                            const double* b, size_t m, cd_strategy** out) {
  credal::PriorSpec spec;
  const cd_status status = Guard([&] {
    switch (kind) {
      case CD_PRIOR_UNIFORM:
        spec.kind = credal::PriorKind::kUniform;
        break;
      case CD_PRIOR_JEFFREYS:
        spec.kind = credal::PriorKind::kJeffreys;
        break;
      case CD_PRIOR_ESS:
        Require(ess > 0.0, "equivalent sample size must be > 0");
        spec.kind = credal::PriorKind::kEss;
        spec.ess = ess;
        break;
      case CD_PRIOR_CUSTOM:
        spec.kind = credal::PriorKind::kCustom;
        spec.a = Copy(a, m, "a is NULL");
        spec.b = Copy(b, m, "b is NULL");
        break;
      case CD_PRIOR_HIERARCHICAL:
        spec.kind = credal::PriorKind::kHierarchical;
        break;
      default:
        Require(false, "unknown prior kind");
    }
  });
  if (status != CD_OK) return status;
  return MakeStrategy(credal::StrategyId::Bayes(std::move(spec)), out);
}

void cd_strategy_free(cd_strategy* strategy) { delete strategy; }

const char* cd_strategy_name(const cd_strategy* strategy) {
  return strategy->name.c_str();
}

cd_status cd_trigger_probability(const cd_model* model, const cd_prior* prior,
                                 double cost, double* beta,
                                 double* per_observation) {
  return Guard([&] {
    Require(model != nullptr && prior != nullptr && beta != nullptr,
            "NULL argument");
    const auto result =
        credal::TriggerProbability(model->value, prior->value, cost);
    *beta = result.beta;
    CopyOut(result.per_observation, per_observation);
  });
}

cd_status cd_strategy_risk(const cd_model* model, const cd_strategy* strategy,
                           const cd_loss* loss, double* out) {
  return Guard([&] {
    Require(model != nullptr && strategy != nullptr && loss != nullptr &&
                out != nullptr,
            "NULL argument");
    *out = credal::StrategyRisk(model->value, strategy->value, loss->value);
  });
}

cd_status cd_regret_table(const cd_model* const* models, size_t model_count,
                          const cd_strategy* const* strategies,
                          size_t strategy_count, const cd_loss* loss,
                          double* risk, double* best, double* regret,
                          double* worst_regret) {
  return Guard([&] {
    Require(models != nullptr && strategies != nullptr && loss != nullptr &&
                risk != nullptr && best != nullptr && regret != nullptr &&
                worst_regret != nullptr,
            "NULL argument");
    std::vector<credal::TrueModel> ms;
    for (size_t i = 0; i < model_count; ++i) ms.push_back(models[i]->value);
    std::vector<credal::StrategyId> ss;
    for (size_t i = 0; i < strategy_count; ++i) {
      ss.push_back(strategies[i]->value);
    }
    const auto table = credal::ComputeRegretTable(ms, ss, loss->value);
    for (size_t m = 0; m < model_count; ++m) {
      best[m] = table.best[m];
      for (size_t s = 0; s < strategy_count; ++s) {
        risk[m * strategy_count + s] = table.risk[m][s];
        regret[m * strategy_count + s] = table.regret[m][s];
      }
    }
    CopyOut(table.worst_regret, worst_regret);
  });
}

cd_status cd_simulate(const cd_model* model, const cd_strategy* strategy,
                      const cd_loss* loss, uint64_t runs, uint64_t seed,
                      double* mean, double* standard_error) {
  return Guard([&] {
    Require(model != nullptr && strategy != nullptr && loss != nullptr &&
                mean != nullptr && standard_error != nullptr,
            "NULL argument");
    const auto r = credal::Simulate(model->value, strategy->value,
                                    loss->value, runs, seed);
    *mean = r.mean;
    *standard_error = r.standard_error;
  });
}

}  // extern "C"
