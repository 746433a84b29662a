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

#include "credal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include "credal/credal_set.hpp"
#include "credal/error.hpp"
#include "credal/minimax.hpp"
#include "credal/rng.hpp"

namespace credal {
namespace {

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      compensation_ += (sum_ - t) + v;
    } else {
      compensation_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double Total() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Runs task(i) for i in [0, count) on up to WorkerLimit() threads. Each task
// writes only its own output slot.
template <typename Task>
void ParallelFor(std::size_t count, Task&& task) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(WorkerLimit(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

class TableEnumerator {
 public:
  explicit TableEnumerator(const TrueModel& model)
      : n_(model.n),
        cells_(model.joint.mass().size()),
        log_prob_(cells_),
        log_factorial_(model.n + 1, 0.0) {
    if (CountTableCount(n_, cells_) > kMaxCountTables) {
      Fail(ErrorCode::kSizeCap,
           "more than 10^7 count tables for n = " + std::to_string(n_));
    }
    for (std::size_t c = 0; c < cells_; ++c) {
      const double pr = model.joint.mass()[c];
      log_prob_[c] = pr > 0.0 ? std::log(pr)
                              : -std::numeric_limits<double>::infinity();
    }
    for (std::size_t k = 1; k <= n_; ++k) {
      log_factorial_[k] = std::lgamma(static_cast<double>(k) + 1.0);
    }
  }

  std::size_t chunk_count() const { return n_ + 1; }

  // Tables whose first cell holds `first`. Zero-weight tables are passed to
  // the visitor only when include_null is set.
  template <typename Visit>
  void VisitChunk(std::size_t first, bool include_null, Visit&& visit) const {
    CountTable table{std::vector<std::uint32_t>(cells_, 0), 0.0};
    const double lw = Term(0, first);
    table.counts[0] = static_cast<std::uint32_t>(first);
    if (cells_ == 1) {
      if (first == n_) Emit(table, log_factorial_[n_] + lw, include_null, visit);
      return;
    }
    Recurse(1, n_ - first, log_factorial_[n_] + lw, table, include_null,
            visit);
  }

 private:
  double Term(std::size_t cell, std::size_t c) const {
    if (c == 0) return 0.0;
    return static_cast<double>(c) * log_prob_[cell] - log_factorial_[c];
  }

  template <typename Visit>
  void Emit(CountTable& table, double log_weight, bool include_null,
            Visit& visit) const {
    table.weight = std::isfinite(log_weight) ? std::exp(log_weight) : 0.0;
    if (table.weight > 0.0 || include_null) visit(table);
  }

  template <typename Visit>
  void Recurse(std::size_t cell, std::size_t remaining, double log_weight,
               CountTable& table, bool include_null, Visit& visit) const {
    if (!include_null && !std::isfinite(log_weight)) return;
    if (cell + 1 == cells_) {
      table.counts[cell] = static_cast<std::uint32_t>(remaining);
      Emit(table, log_weight + Term(cell, remaining), include_null, visit);
      return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
      table.counts[cell] = static_cast<std::uint32_t>(c);
      Recurse(cell + 1, remaining - c, log_weight + Term(cell, c), table,
              include_null, visit);
    }
    table.counts[cell] = 0;
  }

  std::size_t n_;
  std::size_t cells_;
  std::vector<double> log_prob_;
  std::vector<double> log_factorial_;
};

// Weighted sums of a vector-valued function over all count tables; chunks
// are reduced in a fixed order.
std::vector<double> ExpectVector(
    const TrueModel& model, std::size_t dim,
    const std::function<void(const CountTable&, std::span<double>)>& f) {
  const TableEnumerator tables(model);
  const std::size_t chunks = tables.chunk_count();
  std::vector<std::vector<double>> partial(chunks);
  ParallelFor(chunks, [&](std::size_t chunk) {
    std::vector<CompensatedSum> sums(dim);
    std::vector<double> scratch(dim);
    tables.VisitChunk(chunk, false, [&](const CountTable& t) {
      std::fill(scratch.begin(), scratch.end(), 0.0);
      f(t, scratch);
      for (std::size_t i = 0; i < dim; ++i) sums[i].Add(t.weight * scratch[i]);
    });
    partial[chunk].resize(dim);
    for (std::size_t i = 0; i < dim; ++i) partial[chunk][i] = sums[i].Total();
  });
  std::vector<CompensatedSum> total(dim);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < dim; ++i) total[i].Add(p[i]);
  }
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = total[i].Total();
  return out;
}

SampleCounts CountsOf(const CountTable& table, std::size_t m) {
  return SampleCounts(
      m, std::vector<std::uint64_t>(table.counts.begin(), table.counts.end()));
}

void RequireBinary(const TrueModel& model, const char* what) {
  if (model.joint.y_size() != 2) {
    Fail(ErrorCode::kDimension, std::string(what) + " needs binary Y");
  }
}

double KnownP(const TrueModel& model) {
  return model.joint.YMarginal()[1];
}

// Per-observation action distributions for the data-independent strategies.
DecisionRule FixedRule(const TrueModel& model, const StrategyId& strategy,
                       const LossSpec& loss) {
  const FiniteDistribution p_y = model.joint.YMarginal();
  const std::size_t xs = model.joint.x_size();
  switch (strategy.kind) {
    case StrategyKind::kIgnore: {
      const auto best = FindOptimalAction(p_y, loss);
      return DecisionRule::ConstantAction(xs, loss.action_count(),
                                          best.action);
    }
    case StrategyKind::kGlobalMinimax:
      return GlobalMinimax(MarginalFamily(p_y, xs), loss).rule;
    case StrategyKind::kLocalMinimax: {
      const CredalSet family = MarginalFamily(p_y, xs);
      std::vector<FiniteDistribution> rows;
      for (std::size_t x = 0; x < xs; ++x) {
        rows.push_back(LocalMinimaxAt(family, x, loss).actions);
      }
      return DecisionRule(std::move(rows));
    }
    case StrategyKind::kBayes:
      break;
  }
  Fail(ErrorCode::kInvalidArgument, "strategy depends on the training data");
}

// Maps training counts to the Bayesian's action for each observation.
class BayesPolicy {
 public:
  BayesPolicy(const TrueModel& model, const PriorSpec& prior)
      : m_(model.joint.x_size()), p_(KnownP(model)), prior_(prior) {
    RequireBinary(model, "Bayes strategy");
    if (prior_.kind != PriorKind::kHierarchical) {
      dirichlet_.emplace(prior_.Build(m_, p_));
    } else if (!(p_ > 0.0 && p_ < 1.0)) {
      Fail(ErrorCode::kInvalidArgument, "Pr(Y=1) must lie in (0, 1)");
    }
  }

  PredictiveDistribution PredictiveFor(const SampleCounts& counts) const {
    if (dirichlet_) return Predictive(*dirichlet_, counts);
    return HierarchicalPredictiveFor(counts, p_).predictive;
  }

  std::size_t m() const { return m_; }

 private:
  std::size_t m_;
  double p_;
  PriorSpec prior_;
  std::optional<DirichletProductPrior> dirichlet_;
};

}  // namespace

std::uint64_t CountTableCount(std::size_t n, std::size_t cells) {
  if (cells == 0) return 0;
  // C(n + cells - 1, cells - 1) built incrementally; each step is exact.
  const std::uint64_t k = cells - 1;
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

void ForEachCountTable(const TrueModel& model,
                       const std::function<void(const CountTable&)>& visit) {
  const TableEnumerator tables(model);
  for (std::size_t chunk = 0; chunk < tables.chunk_count(); ++chunk) {
    tables.VisitChunk(chunk, true, visit);
  }
}

double ExpectOverCountTables(
    const TrueModel& model,
    const std::function<double(const CountTable&)>& f) {
  return ExpectVector(model, 1,
                      [&](const CountTable& t, std::span<double> out) {
                        out[0] = f(t);
                      })[0];
}

DirichletProductPrior PriorSpec::Build(std::size_t m, double p) const {
  switch (kind) {
    case PriorKind::kUniform:
      return DirichletProductPrior::Uniform(m, p);
    case PriorKind::kJeffreys:
      return DirichletProductPrior::Jeffreys(m, p);
    case PriorKind::kEss:
      return DirichletProductPrior::EquivalentSampleSize(m, ess, p);
    case PriorKind::kCustom:
      if (a.size() != m || b.size() != m) {
        Fail(ErrorCode::kDimension, "custom prior vectors must have length M");
      }
      return DirichletProductPrior(a, b, p);
    case PriorKind::kHierarchical:
      break;
  }
  Fail(ErrorCode::kUnsupported,
       "the hierarchical prior is not a Dirichlet product");
}

std::string PriorSpec::Name() const {
  switch (kind) {
    case PriorKind::kUniform:
      return "uniform";
    case PriorKind::kJeffreys:
      return "jeffreys";
    case PriorKind::kEss: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "ess=%.12g", ess);
      return buf;
    }
    case PriorKind::kCustom:
      return "custom";
    case PriorKind::kHierarchical:
      return "hierarchical";
  }
  return "unknown";
}

std::string StrategyId::Name() const {
  switch (kind) {
    case StrategyKind::kIgnore:
      return "ignore";
    case StrategyKind::kBayes:
      return "bayes:" + prior.Name();
    case StrategyKind::kLocalMinimax:
      return "local_minimax";
    case StrategyKind::kGlobalMinimax:
      return "global_minimax";
  }
  return "unknown";
}

TriggerResult TriggerProbability(const TrueModel& model,
                                 const DirichletProductPrior& prior,
                                 double cost) {
  RequireBinary(model, "trigger probability");
  const std::size_t m = model.joint.x_size();
  if (prior.m() != m) {
    Fail(ErrorCode::kDimension, "prior and model disagree on M");
  }
  if (!(cost > 1.0) || !std::isfinite(cost)) {
    Fail(ErrorCode::kInvalidArgument, "loss ratio must exceed 1");
  }
  const auto per_k =
      ExpectVector(model, m, [&](const CountTable& t, std::span<double> out) {
        const SampleCounts counts = CountsOf(t, m);
        for (std::size_t k = 0; k < m; ++k) {
          out[k] = ClearlyBelow(cost, PosteriorOdds(prior, counts, k)) ? 1.0 : 0.0;
        }
      });
  double beta = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    beta += model.joint.XProbability(k) * per_k[k];
  }
  return {beta, per_k};
}

double StrategyRisk(const TrueModel& model, const StrategyId& strategy,
                    const LossSpec& loss) {
  const auto& joint = model.joint;
  loss.CheckCompatible(joint.x_size(), joint.y_size());
  if (strategy.kind != StrategyKind::kBayes) {
    return ExpectedLoss(joint, FixedRule(model, strategy, loss), loss);
  }
  const BayesPolicy policy(model, strategy.prior);
  const std::size_t m = policy.m();
  return ExpectOverCountTables(model, [&](const CountTable& t) {
    const auto predictive = policy.PredictiveFor(CountsOf(t, m));
    double risk = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t a = BayesDecision(predictive, loss, k);
      for (std::size_t y = 0; y < 2; ++y) {
        const double pr = joint.at(k, y);
        if (pr != 0.0) risk += pr * loss(y, a, k);
      }
    }
    return risk;
  });
}

RegretTable ComputeRegretTable(const std::vector<TrueModel>& models,
                               const std::vector<StrategyId>& strategies,
                               const LossSpec& loss) {
  if (models.empty() || strategies.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "regret table needs at least one model and one strategy");
  }
  RegretTable table;
  const std::size_t ss = strategies.size();
  table.worst_regret.assign(ss, -std::numeric_limits<double>::infinity());
  for (const auto& model : models) {
    std::vector<double> risks(ss);
    for (std::size_t s = 0; s < ss; ++s) {
      risks[s] = StrategyRisk(model, strategies[s], loss);
    }
    const double best = *std::min_element(risks.begin(), risks.end());
    std::vector<double> regrets(ss);
    for (std::size_t s = 0; s < ss; ++s) {
      regrets[s] = risks[s] - best;
      table.worst_regret[s] = std::max(table.worst_regret[s], regrets[s]);
    }
    table.risk.push_back(std::move(risks));
    table.best.push_back(best);
    table.regret.push_back(std::move(regrets));
  }
  return table;
}

SimulationResult Simulate(const TrueModel& model, const StrategyId& strategy,
                          const LossSpec& loss, std::uint64_t runs,
                          std::uint64_t seed) {
  if (runs == 0) Fail(ErrorCode::kInvalidArgument, "runs must be >= 1");
  const auto& joint = model.joint;
  loss.CheckCompatible(joint.x_size(), joint.y_size());
  const std::size_t ys = joint.y_size();
  const std::size_t cells = joint.mass().size();

  std::vector<double> cumulative(cells);
  double acc = 0.0;
  for (std::size_t c = 0; c < cells; ++c) {
    acc += joint.mass()[c];
    cumulative[c] = acc;
  }
  auto draw_cell = [&](CounterRng& rng) {
    const double u = rng.NextUniform() * acc;
    std::size_t c = 0;
    while (c + 1 < cells && (u >= cumulative[c] || joint.mass()[c] == 0.0)) {
      ++c;
    }
    return c;
  };

  std::optional<DecisionRule> fixed;
  std::optional<BayesPolicy> bayes;
  if (strategy.kind == StrategyKind::kBayes) {
    bayes.emplace(model, strategy.prior);
  } else {
    fixed.emplace(FixedRule(model, strategy, loss));
  }

  auto one_run = [&](std::uint64_t r) {
    CounterRng rng = CounterRng::ForRun(seed, r);
    std::vector<std::uint64_t> counts(cells, 0);
    for (std::size_t i = 0; i < model.n; ++i) ++counts[draw_cell(rng)];
    const std::size_t cell = draw_cell(rng);
    const std::size_t x = cell / ys;
    const std::size_t y = cell % ys;
    const double u = rng.NextUniform();
    std::size_t action = 0;
    if (fixed) {
      const auto& row = fixed->row(x);
      double c = 0.0;
      action = row.size() - 1;
      for (std::size_t a = 0; a < row.size(); ++a) {
        c += row[a];
        if (u < c) {
          action = a;
          break;
        }
      }
    } else {
      const SampleCounts sc(bayes->m(), std::move(counts));
      action = BayesDecision(bayes->PredictiveFor(sc), loss, x);
    }
    return loss(y, action, x);
  };

  // Fixed-size blocks combined in order (Chan et al. pairwise update).
  constexpr std::uint64_t kBlock = 4096;
  const std::size_t blocks = static_cast<std::size_t>((runs + kBlock - 1) / kBlock);
  struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
  };
  std::vector<Moments> partial(blocks);
  ParallelFor(blocks, [&](std::size_t b) {
    Moments mo;
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min<std::uint64_t>(runs, begin + kBlock);
    for (std::uint64_t r = begin; r < end; ++r) {
      const double v = one_run(r);
      mo.count += 1.0;
      const double delta = v - mo.mean;
      mo.mean += delta / mo.count;
      mo.m2 += delta * (v - mo.mean);
    }
    partial[b] = mo;
  });
  Moments total;
  for (const auto& mo : partial) {
    const double count = total.count + mo.count;
    const double delta = mo.mean - total.mean;
    total.mean += delta * mo.count / count;
    total.m2 += mo.m2 + delta * delta * total.count * mo.count / count;
    total.count = count;
  }
  const double n = static_cast<double>(runs);
  const double se = runs > 1 ? std::sqrt(total.m2 / (n - 1.0) / n) : 0.0;
  return {total.mean, se};
}

unsigned WorkerLimit() {
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("CREDAL_DECIDE_THREADS");
  if (env == nullptr || *env == '\0') return hardware;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    Fail(ErrorCode::kInvalidArgument,
         "CREDAL_DECIDE_THREADS must be a positive integer");
  }
  return value;
}

}  // namespace credal
