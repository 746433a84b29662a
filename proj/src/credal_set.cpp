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

#include "credal/credal_set.hpp"

#include <algorithm>
#include <utility>

#include "credal/error.hpp"

namespace credal {
namespace {

constexpr double kNullMass = 1e-12;
constexpr std::size_t kMaxVertices = 1'000'000;

void CheckEvent(const CredalSet& set, const Event& event) {
  for (std::size_t y : event) {
    if (y >= set.y_size()) {
      Fail(ErrorCode::kDimension, "event outcome outside Y");
    }
  }
}

double EventMass(const JointDistribution& j, const Event& event,
                 std::size_t x) {
  double s = 0.0;
  for (std::size_t y : event) s += j.at(x, y);
  return s;
}

// Event lists may repeat outcomes; normalize to a sorted unique set.
Event Normalize(Event event) {
  std::sort(event.begin(), event.end());
  event.erase(std::unique(event.begin(), event.end()), event.end());
  return event;
}

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

CredalSet::CredalSet(std::vector<JointDistribution> vertices,
                     std::string label)
    : x_size_(0),
      y_size_(0),
      vertices_(std::move(vertices)),
      label_(std::move(label)) {
  if (vertices_.empty()) Fail(ErrorCode::kDimension, "credal set: no vertices");
  x_size_ = vertices_.front().x_size();
  y_size_ = vertices_.front().y_size();
  for (const auto& v : vertices_) {
    if (v.x_size() != x_size_ || v.y_size() != y_size_) {
      Fail(ErrorCode::kDimension, "credal set: vertex dimensions differ");
    }
  }
}

CredalSet CredalSet::Singleton(JointDistribution joint, std::string label) {
  std::vector<JointDistribution> v;
  v.push_back(std::move(joint));
  return CredalSet(std::move(v), std::move(label));
}

CredalSet MarginalFamily(const FiniteDistribution& p_y, std::size_t x_size) {
  if (x_size == 0) Fail(ErrorCode::kDimension, "marginal family: |X| = 0");
  const std::size_t y_size = p_y.size();
  std::size_t count = 1;
  for (std::size_t y = 0; y < y_size; ++y) {
    if (count > kMaxVertices / x_size) {
      Fail(ErrorCode::kDimension, "marginal family: too many vertices");
    }
    count *= x_size;
  }

  std::vector<JointDistribution> vertices;
  vertices.reserve(count);
  std::vector<std::size_t> f(y_size, 0);  // f[y] = x receiving Y = y
  for (std::size_t index = 0; index < count; ++index) {
    std::size_t rest = index;
    for (std::size_t y = y_size; y-- > 0;) {
      f[y] = rest % x_size;
      rest /= x_size;
    }
    // Null columns would only repeat a joint already listed.
    bool repeat = false;
    for (std::size_t y = 0; y < y_size; ++y) {
      if (p_y[y] == 0.0 && f[y] != 0) repeat = true;
    }
    if (repeat) continue;
    std::vector<double> mass(x_size * y_size, 0.0);
    for (std::size_t y = 0; y < y_size; ++y) mass[f[y] * y_size + y] = p_y[y];
    vertices.emplace_back(x_size, y_size, std::move(mass));
  }
  CredalSet set(std::move(vertices), "marginal-family");
  set.fixed_y_marginal_ = p_y;
  return set;
}

ProbabilityInterval PriorBounds(const CredalSet& set, const Event& event) {
  CheckEvent(set, event);
  const Event e = Normalize(event);
  double lo = 1.0;
  double hi = 0.0;
  for (const auto& v : set.vertices()) {
    double m = 0.0;
    for (std::size_t x = 0; x < set.x_size(); ++x) m += EventMass(v, e, x);
    m = Clamp01(m);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  return {lo, hi};
}

std::vector<std::size_t> AdmissibleVertices(const CredalSet& set,
                                            std::size_t x) {
  if (x >= set.x_size()) Fail(ErrorCode::kDimension, "observation outside X");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.vertex_count(); ++i) {
    if (set.vertex(i).XProbability(x) > kNullMass) out.push_back(i);
  }
  return out;
}

ProbabilityInterval ConditionalBounds(const CredalSet& set, const Event& event,
                                      std::size_t x) {
  CheckEvent(set, event);
  const Event e = Normalize(event);
  const auto admissible = AdmissibleVertices(set, x);
  if (admissible.empty()) {
    Fail(ErrorCode::kConditioningUndefined,
         "every vertex gives X = " + std::to_string(x) + " zero probability");
  }
  double lo = 1.0;
  double hi = 0.0;
  for (std::size_t i : admissible) {
    const auto& v = set.vertex(i);
    const double c = Clamp01(EventMass(v, e, x) / v.XProbability(x));
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {lo, hi};
}

DilationReport ReportDilation(const CredalSet& set, const Event& event) {
  DilationReport report;
  report.prior = PriorBounds(set, event);
  bool all = true;
  bool any_admissible = false;
  for (std::size_t x = 0; x < set.x_size(); ++x) {
    ObservationDilation obs{x, false};
    if (!AdmissibleVertices(set, x).empty()) {
      obs.admissible = true;
      any_admissible = true;
      obs.interval = ConditionalBounds(set, event, x);
      obs.dilates =
          obs.interval.lower < report.prior.lower - kComparisonTolerance &&
          obs.interval.upper > report.prior.upper + kComparisonTolerance;
      all = all && obs.dilates;
    }
    report.observations.push_back(obs);
  }
  report.dilation = any_admissible && all;
  return report;
}

JointDistribution MaxEntSelect(const CredalSet& set) {
  const auto& p_y = set.fixed_y_marginal();
  if (!p_y) {
    Fail(ErrorCode::kUnsupported,
         "maximum entropy selection needs a marginal family");
  }
  const std::size_t m = set.x_size();
  std::vector<double> mass(m * set.y_size());
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < set.y_size(); ++y) {
      mass[x * set.y_size() + y] = (*p_y)[y] / static_cast<double>(m);
    }
  }
  return JointDistribution(m, set.y_size(), std::move(mass));
}

}  // namespace credal
