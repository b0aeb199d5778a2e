// Copyright 2026 The dbcayley Authors.
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

#ifndef DBCAYLEY_CLI_HPP
#define DBCAYLEY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbcayley/bounds.hpp"
#include "dbcayley/cayley.hpp"

namespace dbcayley::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 1,
  kUsageError = 2,
  kResourceRefusal = 3,
};

/// Integers above 2^53 become decimal strings so JSON readers keep them exact.
nlohmann::json big_to_json(const BigInt& value);

/// Keys: spec, order, degree, directed, diameter, claimed_diameter,
/// histogram, moore_ratio, validation.
nlohmann::json report_to_json(const GraphReport& report);
nlohmann::json row_to_json(const BoundRow& row);
nlohmann::json certificate_to_json(const CorollaryCertificate& cert);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbcayley::cli

#endif  // DBCAYLEY_CLI_HPP
