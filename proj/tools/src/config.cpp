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


#include "symres/tools/config.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "symres/error.hpp"
#include "symres/tools/table.hpp"

namespace symres::tools {

namespace {

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kConfig, what);
}

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
  return std::any_of(options.begin(), options.end(),
                     [&](const char* o) { return v == o; });
}

}  // namespace

void ExperimentConfig::validate() const {
  const auto& names = experiment_names();
  require(std::find(names.begin(), names.end(), experiment) != names.end(),
          "unknown experiment '" + experiment + "'");
  require(n_qubits >= 1 && n_qubits <= 16,
          "n_qubits out of range: " + std::to_string(n_qubits));
  require(one_of(symmetry, {"parity", "number", "spin"}),
          "unknown symmetry '" + symmetry + "'");
  require(!shots.empty(), "empty shot schedule");
  for (auto s : shots) require(s >= 1, "shot counts must be >= 1");
  require(phi_points >= 1 && mu_points >= 1, "phase grid needs >= 1 point per axis");
  require(one_of(realization, {"exact", "trotter"}),
          "unknown realization '" + realization + "'");
  require(realization == "exact" || symmetry == "spin",
          "trotter realization is only defined for spin");
  require(trotter_steps >= 1, "trotter_steps must be >= 1");
  require(delta_e > 0.0, "delta_e must be positive");
  require(!g.empty(), "empty g grid");
  for (double v : g) require(v >= 0.0, "g must be non-negative");
  require(pairs >= 0 && pairs <= n_qubits, "pairs must lie in [0, n_qubits]");
  require(one_of(route, {"oracle", "lcu-terms", "lcu-circuit", "mask"}),
          "unknown route '" + route + "'");
  require(qvap_shots >= 0, "qvap_shots must be >= 0");
  require(qvap_shots == 0 || route == "oracle", "qvap_shots needs the oracle route");
  require(restarts >= 0 && max_iterations >= 1, "invalid optimizer settings");
  require(one_of(format, {"csv", "json"}), "unknown format '" + format + "'");
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved() const {
  return {
      {"experiment", experiment},
      {"n_qubits", std::to_string(n_qubits)},
      {"symmetry", symmetry},
      {"target", target},
      {"shots", join(shots)},
      {"seed", std::to_string(seed)},
      {"oracle_phi", format_double(oracle_phi)},
      {"oracle_mu", format_double(oracle_mu)},
      {"phi_points", std::to_string(phi_points)},
      {"mu_points", std::to_string(mu_points)},
      {"realization", realization},
      {"trotter_steps", std::to_string(trotter_steps)},
      {"delta_e", format_double(delta_e)},
      {"g", join(g)},
      {"pairs", std::to_string(pairs)},
      {"route", route},
      {"qvap_shots", std::to_string(qvap_shots)},
      {"restarts", std::to_string(restarts)},
      {"max_iterations", std::to_string(max_iterations)},
      {"format", format},
  };
}

}  // namespace symres::tools
