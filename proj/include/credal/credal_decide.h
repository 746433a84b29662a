/*
 * Copyright 2026 The credal-decide Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libcredal_decide.
 *
 * Conventions:
 *  - Every fallible call returns cd_status. On failure the out-parameters
 *    are left untouched and cd_last_error() describes the problem (the
 *    message is thread-local and valid until the next failing call on the
 *    same thread).
 *  - Objects are opaque handles created by cd_*_create-style calls and
 *    released with the matching cd_*_free. Free functions accept NULL.
 *  - Joint distributions are passed x-major: mass[x * y_size + y].
 *  - Observation, outcome and action indices are zero based.
 *  - All handles are immutable after creation and may be shared across
 *    threads.
 */
#ifndef CREDAL_DECIDE_H_
#define CREDAL_DECIDE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CREDAL_DECIDE_BUILDING)
#define CD_API __attribute__((visibility("default")))
#else
#define CD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cd_status {
  CD_OK = 0,
  CD_ERR_INVALID_ARGUMENT = 1,
  CD_ERR_DIMENSION = 2,
  CD_ERR_CONDITIONING_UNDEFINED = 3,
  CD_ERR_UNSUPPORTED = 4,
  CD_ERR_SIZE_CAP = 5,
  CD_ERR_NUMERIC = 6,
  CD_ERR_INTERNAL = 7
} cd_status;

CD_API const char* cd_version(void);
CD_API const char* cd_status_name(cd_status status);
CD_API const char* cd_last_error(void);

/* ---- credal sets ------------------------------------------------------- */

typedef struct cd_credal_set cd_credal_set;

/* All joints over X x Y with Y-marginal p_y; x_size^y_size vertices. */
CD_API cd_status cd_credal_set_marginal_family(const double* p_y,
                                               size_t y_size, size_t x_size,
                                               cd_credal_set** out);
/* Explicit vertex list; masses holds vertex_count joints back to back. */
CD_API cd_status cd_credal_set_from_vertices(const double* masses,
                                             size_t vertex_count,
                                             size_t x_size, size_t y_size,
                                             cd_credal_set** out);
CD_API void cd_credal_set_free(cd_credal_set* set);
CD_API size_t cd_credal_set_x_size(const cd_credal_set* set);
CD_API size_t cd_credal_set_y_size(const cd_credal_set* set);
CD_API size_t cd_credal_set_vertex_count(const cd_credal_set* set);
/* Copies vertex `index` into out_mass (x_size * y_size doubles). */
CD_API cd_status cd_credal_set_vertex(const cd_credal_set* set, size_t index,
                                      double* out_mass);

/* Event = list of Y outcomes. */
CD_API cd_status cd_prior_bounds(const cd_credal_set* set, const size_t* event,
                                 size_t event_size, double* lower,
                                 double* upper);
CD_API cd_status cd_conditional_bounds(const cd_credal_set* set,
                                       const size_t* event, size_t event_size,
                                       size_t x, double* lower, double* upper);

/*
 * Dilation report. Per-observation arrays hold x_size entries; x values
 * that no vertex can produce have admissible[x] = 0 and zero bounds.
 */
CD_API cd_status cd_dilation_report(const cd_credal_set* set,
                                    const size_t* event, size_t event_size,
                                    double* prior_lower, double* prior_upper,
                                    int* admissible, double* lower,
                                    double* upper, int* dilates,
                                    int* dilation);

/* Entropy maximizer of a marginal family (x_size * y_size doubles). */
CD_API cd_status cd_maxent_select(const cd_credal_set* set, double* out_mass);

/* ---- losses and rules -------------------------------------------------- */

typedef struct cd_loss cd_loss;

/*
 * table is (y, a) row-major when x_size == 0, otherwise indexed
 * [(y * action_count + a) * x_size + x]. Entries may be +INFINITY.
 */
CD_API cd_status cd_loss_create(size_t y_size, size_t action_count,
                                size_t x_size, const double* table,
                                cd_loss** out);
CD_API cd_status cd_loss_zero_one(size_t n, cd_loss** out);
/* Binary prediction: L(y=1, a=0) = 1, L(y=0, a=1) = cost. */
CD_API cd_status cd_loss_asymmetric(double cost, cd_loss** out);
/* Binary prediction: (x + 1) |a - y|. */
CD_API cd_status cd_loss_observation_scaled(cd_loss** out);
/* Binary prediction: (|x - y| + 1) |a - y|. */
CD_API cd_status cd_loss_observation_mismatch(cd_loss** out);
CD_API void cd_loss_free(cd_loss* loss);
CD_API size_t cd_loss_action_count(const cd_loss* loss);
CD_API size_t cd_loss_y_size(const cd_loss* loss);
/* 0 for an observation-independent loss. */
CD_API size_t cd_loss_x_size(const cd_loss* loss);

typedef struct cd_rule cd_rule;

/* rows holds x_size action distributions of action_count entries each. */
CD_API cd_status cd_rule_create(size_t x_size, size_t action_count,
                                const double* rows, cd_rule** out);
CD_API void cd_rule_free(cd_rule* rule);
CD_API size_t cd_rule_x_size(const cd_rule* rule);
CD_API size_t cd_rule_action_count(const cd_rule* rule);
CD_API void cd_rule_rows(const cd_rule* rule, double* out_rows);

CD_API cd_status cd_expected_loss(const double* joint, size_t x_size,
                                  size_t y_size, const cd_rule* rule,
                                  const cd_loss* loss, double* out);
CD_API cd_status cd_optimal_action(const double* p_y, size_t y_size,
                                   const cd_loss* loss, size_t* action,
                                   double* value);
CD_API cd_status cd_worst_case_loss(const cd_credal_set* set,
                                    const cd_rule* rule, const cd_loss* loss,
                                    double* value, size_t* witness);

/* ---- minimax ----------------------------------------------------------- */

typedef struct cd_minimax cd_minimax;

CD_API cd_status cd_global_minimax(const cd_credal_set* set,
                                   const cd_loss* loss, cd_minimax** out);
CD_API void cd_minimax_free(cd_minimax* solution);
CD_API double cd_minimax_value(const cd_minimax* solution);
CD_API size_t cd_minimax_witness(const cd_minimax* solution);
/* Behavioral rule, owned by the solution. */
CD_API const cd_rule* cd_minimax_rule(const cd_minimax* solution);
/* Support of the optimal mixture over deterministic rules. */
CD_API size_t cd_minimax_mixture_size(const cd_minimax* solution);
/* actions receives x_size entries: the action taken at each observation. */
CD_API cd_status cd_minimax_mixture_term(const cd_minimax* solution,
                                         size_t index, size_t* actions,
                                         double* weight);

/* actions receives action_count probabilities. */
CD_API cd_status cd_local_minimax(const cd_credal_set* set, size_t x,
                                  const cd_loss* loss, double* actions,
                                  double* value);

typedef struct cd_consistency cd_consistency;

CD_API cd_status cd_time_inconsistency(const cd_credal_set* set,
                                       const cd_loss* loss,
                                       cd_consistency** out);
CD_API void cd_consistency_free(cd_consistency* report);
CD_API const cd_minimax* cd_consistency_global(const cd_consistency* report);
CD_API int cd_consistency_inconsistent(const cd_consistency* report);
/* Worst-case loss of the plan that plays the local minimax action at every
 * x, minus the global minimax value. */
CD_API double cd_consistency_pay_not_to_know(const cd_consistency* report);
CD_API double cd_consistency_local_plan_value(const cd_consistency* report);
CD_API double cd_consistency_worst_local_value(const cd_consistency* report);
/* Returns 0 (and leaves outputs untouched) when x is not admissible. */
CD_API int cd_consistency_local(const cd_consistency* report, size_t x,
                                double* actions, double* value);

/* ---- Bayesian prediction ----------------------------------------------- */

typedef struct cd_prior cd_prior;

CD_API cd_status cd_prior_uniform(size_t m, double p, cd_prior** out);
CD_API cd_status cd_prior_jeffreys(size_t m, double p, cd_prior** out);
/* a_k = b_k = s / m. */
CD_API cd_status cd_prior_ess(size_t m, double s, double p, cd_prior** out);
CD_API cd_status cd_prior_custom(size_t m, const double* a, const double* b,
                                 double p, cd_prior** out);
CD_API void cd_prior_free(cd_prior* prior);

typedef struct cd_counts cd_counts;

CD_API cd_status cd_counts_from_sample(const size_t* xs, const size_t* ys,
                                       size_t length, size_t m,
                                       cd_counts** out);
/* cells is m x 2 row-major: cells[2 * j + k] = n_(j,k). */
CD_API cd_status cd_counts_from_table(size_t m, const uint64_t* cells,
                                      cd_counts** out);
CD_API void cd_counts_free(cd_counts* counts);
CD_API uint64_t cd_counts_cell(const cd_counts* counts, size_t j, size_t k);
CD_API size_t cd_counts_m(const cd_counts* counts);

CD_API cd_status cd_posterior_odds(const cd_prior* prior,
                                   const cd_counts* counts, size_t k,
                                   double* out);
CD_API cd_status cd_posterior_odds_uniform(const cd_counts* counts, size_t k,
                                           double p, double* out);
/* q and odds receive m entries each; odds may be NULL. */
CD_API cd_status cd_predictive(const cd_prior* prior, const cd_counts* counts,
                               double* q, double* odds);
/* dependent_weight may be NULL. */
CD_API cd_status cd_hierarchical_predictive(const cd_counts* counts, double p,
                                            double* q,
                                            double* dependent_weight);
/* q holds m predictive probabilities Pr(Y=1 | X=k, D). */
CD_API cd_status cd_bayes_decision(const double* q, size_t m,
                                   const cd_loss* loss, size_t k,
                                   size_t* action);
CD_API cd_status cd_log_marginal_likelihood(const cd_prior* prior,
                                            const cd_counts* counts,
                                            double* out);

/* ---- exact risk oracle and simulation ---------------------------------- */

typedef struct cd_model cd_model;

/* Binary-Y model from Pr(Y=1), Pr(X=j | Y=1) and Pr(X=j | Y=0). */
CD_API cd_status cd_model_from_param(double p, const double* alpha,
                                     const double* beta, size_t m, size_t n,
                                     cd_model** out);
CD_API cd_status cd_model_from_joint(const double* joint, size_t x_size,
                                     size_t y_size, size_t n, cd_model** out);
CD_API void cd_model_free(cd_model* model);
CD_API uint64_t cd_model_count_tables(const cd_model* model);

typedef enum cd_prior_kind {
  CD_PRIOR_UNIFORM = 0,
  CD_PRIOR_JEFFREYS = 1,
  CD_PRIOR_ESS = 2,
  CD_PRIOR_CUSTOM = 3,
  CD_PRIOR_HIERARCHICAL = 4
} cd_prior_kind;

typedef struct cd_strategy cd_strategy;

CD_API cd_status cd_strategy_ignore(cd_strategy** out);
CD_API cd_status cd_strategy_global_minimax(cd_strategy** out);
CD_API cd_status cd_strategy_local_minimax(cd_strategy** out);
/* ess is read for CD_PRIOR_ESS; a, b (length m) for CD_PRIOR_CUSTOM. */
CD_API cd_status cd_strategy_bayes(cd_prior_kind kind, double ess,
                                   const double* a, const double* b, size_t m,
                                   cd_strategy** out);
CD_API void cd_strategy_free(cd_strategy* strategy);
/* e.g. "ignore", "bayes:uniform"; owned by the strategy. */
CD_API const char* cd_strategy_name(const cd_strategy* strategy);

/* per_observation (m entries) may be NULL. */
CD_API cd_status cd_trigger_probability(const cd_model* model,
                                        const cd_prior* prior, double cost,
                                        double* beta,
                                        double* per_observation);
CD_API cd_status cd_strategy_risk(const cd_model* model,
                                  const cd_strategy* strategy,
                                  const cd_loss* loss, double* out);
/*
 * risk and regret receive model_count * strategy_count entries
 * (model-major), best model_count entries, worst_regret strategy_count.
 */
CD_API cd_status cd_regret_table(const cd_model* const* models,
                                 size_t model_count,
                                 const cd_strategy* const* strategies,
                                 size_t strategy_count, const cd_loss* loss,
                                 double* risk, double* best, double* regret,
                                 double* worst_regret);
CD_API cd_status cd_simulate(const cd_model* model,
                             const cd_strategy* strategy, const cd_loss* loss,
                             uint64_t runs, uint64_t seed, double* mean,
                             double* standard_error);

#ifdef __cplusplus
}
#endif

#endif  /* CREDAL_DECIDE_H_ */
