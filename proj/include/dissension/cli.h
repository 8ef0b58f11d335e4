// Copyright 2026 The Dissension Authors
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

#ifndef DISSENSION_CLI_H
#define DISSENSION_CLI_H

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dissension/optim.h"

namespace dissension {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitTableFailure = 1,  // reproduce: a cell outside tolerance
  kExitParse = 2,
  kExitValidation = 3,
  kExitNonConvergence = 4,
};

/// Everything needed to rerun a command. Serialized into every output.
struct RunManifest {
  std::string command;              // catalog | compute | sweep | reproduce | validate
  std::vector<std::string> states;  // catalog recipes
  std::string state_file;           // path as given; the contents are kept in state_json
  std::string state_json;
  std::vector<std::string> measures;
  std::optional<int> m;
  std::optional<int> track;
  OptimizerConfig optimizer;
  bool grid_check = false;
  std::string table;
  std::string sweep_param;
  double sweep_from = 0;
  double sweep_to = 1;
  int sweep_points = 11;
  int jobs = 1;
  std::string out;
  std::string format = "csv";
  std::string version = kToolVersion;

  std::string to_json() const;

  /// Accepts a manifest object, a JSON result document holding one, or a CSV
  /// result whose "# manifest: " comment line holds one. Throws
  /// std::invalid_argument otherwise.
  static RunManifest from_text(const std::string& text);
};

/// Executes a manifest, writing the document to m.out (or `out` when empty).
/// --replay writes to stdout or its own --out, leaving the manifest unchanged.
int execute(const RunManifest& m, std::ostream& out, std::ostream& err);

/// The command-line entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dissension

#endif  // DISSENSION_CLI_H
