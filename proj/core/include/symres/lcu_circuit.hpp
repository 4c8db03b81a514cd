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
 * Post-selection circuit for G = sum_k g_k G_k.
 *
 * Register layout: system in the low n qubits, n_lcu ancillas above it.
 *   1. B on the ancillas: |0> -> (1/N) sum_k g_k |k>
 *   2. G_k on the system, controlled on the ancilla register holding k
 *   3. un-prepare: H on every ancilla, or E^dagger where E prepares the
 *      uniform superposition over the first k_max ancilla states
 *   4. keep the runs where every ancilla reads 0
 *
 * Only the first row of the un-prepare matrix matters for the accepted branch,
 * so any unitary whose row 0 is uniform over k < k_max works.
 */

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "symres/operator.hpp"
#include "symres/projection.hpp"

namespace symres {

enum class Unprepare { kHadamardAll, kEDagger };

struct LcuCircuitPlan {
  int n_lcu = 0;
  int k_max = 0;
  /// g_k zero-padded to 2^n_lcu entries.
  std::vector<Complex> coefficients;
  /// G_k for k < k_max; each flagged unitary.
  std::vector<Operator> unitaries;
  Unprepare unprepare = Unprepare::kEDagger;

  /// sqrt(sum |g_k|^2)
  double normalization() const;
};

/// Validates sizes and unitarity; `n_lcu` = 0 picks the smallest register with
/// 2^n_lcu >= k_max.
LcuCircuitPlan make_lcu_plan(std::vector<Complex> coefficients,
                             std::vector<Operator> unitaries, Unprepare unprepare,
                             int n_lcu = 0);

/// G_k = exp(i phi_k S) with the projector's alpha_k.
LcuCircuitPlan make_lcu_plan(const LcuDecomposition& projector,
                             const PhaseEvolution& evolver, Unprepare unprepare);
/// G_k = exp(i phi_k S) with the oracle's beta_k.
LcuCircuitPlan make_lcu_plan(const OracleDecomposition& oracle,
                             const PhaseEvolution& evolver, Unprepare unprepare);

/// Deterministic unitary completion: the given unit column first, then
/// Gram-Schmidt over e_0, e_1, ... in order.
Eigen::MatrixXcd orthonormal_completion(const Eigen::VectorXcd& first_column);

/// B with B|0> = (1/N) sum_k g_k |k>.
Eigen::MatrixXcd prepare_b(const LcuCircuitPlan& plan);
/// E with E|0> = (1/sqrt(k_max)) sum_{k<k_max} |k>.
Eigen::MatrixXcd prepare_e(int n_lcu, int k_max);

/// Applies `u` (2^n_anc square) to the ancilla register of a composite state.
void apply_ancilla_unitary(StateVector& composite, int n_system,
                           const Eigen::MatrixXcd& u);

struct LcuResult {
  StateVector post_selected;
  double success_probability;
};

/// Exact conditional state and acceptance probability. Throws kEmptySector
/// when the acceptance probability is below 1e-14.
LcuResult run_lcu(const StateVector& state, const LcuCircuitPlan& plan);

struct LcuShotResult {
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
  double success_probability = 0.0;
};

/// Shot-mode wrapper: draws accept/reject outcomes of the all-zero ancilla
/// measurement.
LcuShotResult run_lcu_shots(const StateVector& state, const LcuCircuitPlan& plan,
                            std::int64_t n_shots, std::uint64_t seed);

}  // namespace symres
