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

#include <cstdint>
#include <string>

#include "report.hpp"
#include "scenario.hpp"

namespace credal_cli {

struct CommandOptions {
  std::string command;
  Scenario scenario;
  std::uint64_t runs = 100000;
  std::uint64_t seed = 1;
};

Report RunCommand(const CommandOptions& options);

}  // namespace credal_cli
