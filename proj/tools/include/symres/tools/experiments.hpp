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


/**
 * @file
 * The four numerical studies, each returning a plot-ready table.
 */

#pragma once

#include "symres/projection.hpp"
#include "symres/tools/config.hpp"
#include "symres/tools/table.hpp"

namespace symres::tools {

/// Ladder index whose sector_label() equals `label`. Throws kConfig.
std::size_t find_sector(const SymmetryLadder& ladder, const std::string& label);

/// (H_0 ... H_7)(X_0 ... X_3)|0...0>, generalized to n qubits with the first
/// n/2 qubits flipped.
StateVector half_filled_hadamard_state(int n_qubits);

/// N_e, estimate, exact, errbar. Equiprobable state, sampled p0 - p1 of the
/// real Hadamard test on the oracle.
Table run_shots_convergence(const ExperimentConfig& config);

/// phi, mu, re_oracle, degenerate over [0, 2 pi) x [0, 2 pi).
Table run_phase_scan(const ExperimentConfig& config);
/// point, phi, mu, re_oracle, expected for (0, pi/2), (pi/2, 0), (pi, 0).
Table phase_scan_special_points(const ExperimentConfig& config);

/// sector, weight_lcu, weight_exact. Equiprobable state for parity and
/// number, half_filled_hadamard_state for spin.
Table run_sector_decomposition(const ExperimentConfig& config);

/// g, E_qvap_oracle, E_exact_sector, gap. Grid points run concurrently.
Table run_qvap(const ExperimentConfig& config);

Table run_experiment(const ExperimentConfig& config);

}  // namespace symres::tools
