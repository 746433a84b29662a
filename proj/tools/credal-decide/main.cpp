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

// credal-decide: command-line front end over libcredal_decide.
//
// Exit codes: 0 success, 2 invalid scenario or arguments, 3 size cap,
// 4 numeric failure or undefined conditioning, 1 internal error. Failures
// print one JSON object on a single stderr line.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "credal/credal_decide.h"
#include "handles.hpp"
#include "json.hpp"
#include "report.hpp"
#include "scenario.hpp"

namespace {

using credal_cli::ApiError;
using credal_cli::ScenarioError;

constexpr int kExitInvalid = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitInternal = 1;

int ExitCodeFor(cd_status status) {
  switch (status) {
    case CD_OK:
      return 0;
    case CD_ERR_INVALID_ARGUMENT:
    case CD_ERR_DIMENSION:
    case CD_ERR_UNSUPPORTED:
      return kExitInvalid;
    case CD_ERR_SIZE_CAP:
      return kExitSizeCap;
    case CD_ERR_NUMERIC:
    case CD_ERR_CONDITIONING_UNDEFINED:
      return kExitNumeric;
    case CD_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

int Fail(int code, const std::string& kind, const std::string& message) {
  nlohmann::ordered_json line;
  line["error"] = kind;
  line["exit"] = code;
  line["message"] = message;
  std::cerr << line.dump() << '\n';
  return code;
}

struct Flags {
  std::string builtin;
  std::string scenario;
  std::string format = "json";
  std::string out;
  std::optional<double> p;
  std::vector<std::size_t> n;
  std::vector<double> alpha;
  std::uint64_t seed = 1;
  std::uint64_t runs = 100000;
};

void AddFlags(CLI::App* cmd, Flags& flags) {
  auto* source = cmd->add_option_group("source");
  source
      ->add_option("--builtin", flags.builtin, "Built-in scenario name")
      ->check(CLI::IsMember(credal_cli::BuiltinNames()));
  source->add_option("--scenario", flags.scenario, "Scenario JSON file");
  source->require_option(1);
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", flags.out, "Write the report here, not stdout");
  cmd->add_option("--p", flags.p, "Override Pr(Y=1)");
  cmd->add_option("--n", flags.n, "Override the horizon list")
      ->delimiter(',');
  cmd->add_option("--alpha", flags.alpha, "Override the cost list")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prediction decisions under credal uncertainty"};
  app.set_version_flag("--version", std::string(cd_version()));
  app.require_subcommand(1);

  Flags flags;
  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"minimax", "Global and local minimax rules, time inconsistency"},
      {"dilation", "Conditional probability intervals and dilation"},
      {"predict", "Bayesian predictive for given training data"},
      {"beta", "Trigger probability sweep over n and alpha"},
      {"risk", "Exact strategy risks and regret"},
      {"simulate", "Monte Carlo risk estimates next to the exact values"},
  };
  for (const auto& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    AddFlags(cmd, flags);
    if (std::string(c.name) == "simulate") {
      cmd->add_option("--seed", flags.seed, "64-bit seed");
      cmd->add_option("--runs", flags.runs, "Number of runs")
          ->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail(kExitInvalid, "invalid_arguments", e.what());
  }

  try {
    credal_cli::CommandOptions options;
    options.command = app.get_subcommands().front()->get_name();
    options.scenario = flags.builtin.empty()
                           ? credal_cli::LoadScenarioFile(flags.scenario)
                           : credal_cli::BuiltinScenario(flags.builtin);
    credal_cli::ApplyOverrides(options.scenario,
                               {flags.p, flags.n, flags.alpha},
                               options.command != "beta");
    options.runs = flags.runs;
    options.seed = flags.seed;

    const credal_cli::Report report = credal_cli::RunCommand(options);
    const std::string text =
        flags.format == "csv" ? report.Csv() : report.Json();
    if (flags.out.empty()) {
      std::cout << text;
      std::cout.flush();
    } else {
      std::ofstream file(flags.out, std::ios::binary);
      file << text;
      if (!file) {
        return Fail(kExitInvalid, "io", "cannot write '" + flags.out + "'");
      }
    }
    return 0;
  } catch (const ScenarioError& e) {
    return Fail(kExitInvalid, "invalid_scenario", e.what());
  } catch (const ApiError& e) {
    return Fail(ExitCodeFor(e.status()), cd_status_name(e.status()),
                e.what());
  } catch (const std::exception& e) {
    return Fail(kExitInternal, "internal", e.what());
  }
}
