// Copyright 2026 The symres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace symres::tools {

/// Resolved configuration of one experiment run. Every field has a default;
/// the CLI fills it from a key = value file and flag overrides.
struct ExperimentConfig {
  std::string experiment = "shots-convergence";
  int n_qubits = 8;
  std::string symmetry = "number";
  std::string target = "4";  // sector label: "even"/"odd", pair count, S
  std::vector<std::int64_t> shots = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192};
  std::uint64_t seed = 2024;

  double oracle_phi = 0.0;
  double oracle_mu = 1.5707963267948966;
  int phi_points = 64;
  int mu_points = 64;

  std::string realization = "exact";  // exact | trotter (spin only)
  int trotter_steps = 8;

  double delta_e = 1.0;
  std::vector<double> g = {0.0, 0.25, 0.5, 0.75, 1.0};
  int pairs = 4;
  std::string route = "oracle";  // oracle | lcu-terms | lcu-circuit | mask
  std::int64_t qvap_shots = 0;   // 0 = exact expectations
  int restarts = 2;
  int max_iterations = 4000;

  std::string out;  // empty = stdout
  std::string format = "csv";

  /// Throws Error(kConfig) on an unknown experiment, format, route or
  /// realization, or an out-of-range number.
  void validate() const;
  /// Every field as (key, value) text, in a fixed order.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"shots-convergence", "phase-scan",
                                                 "sector-decomposition", "qvap"};
  return names;
}

}  // namespace symres::tools
