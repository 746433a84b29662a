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

#include <string>
#include <vector>

#include "json.hpp"

namespace credal_cli {

using OrderedJson = nlohmann::ordered_json;

// Rounds to 12 significant digits. Both output formats print the rounded
// value, so they agree digit for digit.
double Round12(double v);

// Rounded number, or null when not finite.
OrderedJson Num(double v);

// CSV cell for a number: %.12g of the rounded value; inf and nan spelled
// out.
std::string CsvNum(double v);

struct Report {
  OrderedJson json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  std::string Json() const;
  std::string Csv() const;
};

}  // namespace credal_cli
