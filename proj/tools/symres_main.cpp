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


// symres: runs one experiment and writes its table as CSV or JSON.
//
//   symres --experiment qvap --config run.toml --seed 7 --out qvap.csv
//
// Every config key is also accepted as a flag (--g 0,0.5,1). Flags win over
// the file.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "symres/error.hpp"
#include "symres/tools/experiments.hpp"

namespace {

using symres::tools::ExperimentConfig;
using symres::tools::Table;

void write(std::ostream& os, const Table& table, const ExperimentConfig& c) {
  const auto header = c.resolved();
  if (c.format == "json") {
    symres::tools::write_json(os, table, header);
  } else {
    symres::tools::write_csv(os, table, header);
  }
}

std::string sidecar_path(const std::string& out) {
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out + ".special";
  }
  return out.substr(0, dot) + ".special" + out.substr(dot);
}

void write_file(const std::string& path, const Table& table, const ExperimentConfig& c) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw symres::Error(symres::ErrorCode::kIo, "cannot open '" + path + "'");
  write(f, table, c);
  if (!f) throw symres::Error(symres::ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig c;
  CLI::App app{"Symmetry restoration experiments"};
  app.set_config("--config", "", "key = value configuration file (TOML/INI)");
  app.add_option("--experiment", c.experiment, "shots-convergence | phase-scan | "
                                               "sector-decomposition | qvap")
      ->check(CLI::IsMember(symres::tools::experiment_names()));
  app.add_option("--seed", c.seed, "Base RNG seed");
  app.add_option("--out", c.out, "Output file (stdout when omitted)");
  app.add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  app.add_option("--n_qubits", c.n_qubits);
  app.add_option("--symmetry", c.symmetry);
  app.add_option("--target", c.target, "Sector label: even/odd, pair count or S");
  app.add_option("--shots", c.shots)->delimiter(',');
  app.add_option("--oracle_phi", c.oracle_phi);
  app.add_option("--oracle_mu", c.oracle_mu);
  app.add_option("--phi_points", c.phi_points);
  app.add_option("--mu_points", c.mu_points);
  app.add_option("--realization", c.realization, "exact | trotter");
  app.add_option("--trotter_steps", c.trotter_steps);
  app.add_option("--delta_e", c.delta_e);
  app.add_option("--g", c.g)->delimiter(',');
  app.add_option("--pairs", c.pairs);
  app.add_option("--route", c.route, "oracle | lcu-terms | lcu-circuit | mask");
  app.add_option("--qvap_shots", c.qvap_shots, "Shots per Hadamard test, 0 = exact");
  app.add_option("--restarts", c.restarts);
  app.add_option("--max_iterations", c.max_iterations);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << symres::error_name(symres::ErrorCode::kConfig) << '\n';
    return code;
  }

  try {
    c.validate();
    const Table table = symres::tools::run_experiment(c);
    if (c.out.empty()) {
      write(std::cout, table, c);
    } else {
      write_file(c.out, table, c);
      if (c.experiment == "phase-scan") {
        write_file(sidecar_path(c.out), symres::tools::phase_scan_special_points(c), c);
      }
    }
  } catch (const symres::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "INTERNAL_ERROR: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
