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

// RAII wrappers over the C handles. Each C call goes through Check, which
// turns a non-OK status into an ApiError carrying the status and the
// library's message.

#include <memory>
#include <stdexcept>
#include <string>

#include "credal/credal_decide.h"

namespace credal_cli {

class ApiError : public std::runtime_error {
 public:
  ApiError(cd_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  cd_status status() const noexcept { return status_; }

 private:
  cd_status status_;
};

inline void Check(cd_status status) {
  if (status != CD_OK) throw ApiError(status, cd_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Free(p); }
};

using CredalSetPtr =
    std::unique_ptr<cd_credal_set, Deleter<cd_credal_set, cd_credal_set_free>>;
using LossPtr = std::unique_ptr<cd_loss, Deleter<cd_loss, cd_loss_free>>;
using MinimaxPtr =
    std::unique_ptr<cd_minimax, Deleter<cd_minimax, cd_minimax_free>>;
using ConsistencyPtr =
    std::unique_ptr<cd_consistency,
                    Deleter<cd_consistency, cd_consistency_free>>;
using PriorPtr = std::unique_ptr<cd_prior, Deleter<cd_prior, cd_prior_free>>;
using CountsPtr =
    std::unique_ptr<cd_counts, Deleter<cd_counts, cd_counts_free>>;
using ModelPtr = std::unique_ptr<cd_model, Deleter<cd_model, cd_model_free>>;
using StrategyPtr =
    std::unique_ptr<cd_strategy, Deleter<cd_strategy, cd_strategy_free>>;

// Runs a C constructor of the form f(args..., T** out) and wraps the result.
template <typename Ptr, typename F, typename... Args>
Ptr Make(F f, Args... args) {
  typename Ptr::pointer raw = nullptr;
  Check(f(args..., &raw));
  return Ptr(raw);
}

}  // namespace credal_cli
