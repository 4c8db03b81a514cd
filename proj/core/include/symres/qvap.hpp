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
 * Variation after projection on a product (BCS-like) ansatz
 *
 *   |Psi(theta)> = (x)_i (cos theta_i |0> + sin theta_i |1>),
 *
 * minimizing E(theta) = <Psi H P Psi> / <Psi P Psi> for the A-pair sector.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symres/lcu_circuit.hpp"
#include "symres/pairing_model.hpp"
#include "symres/projection.hpp"

namespace symres {

StateVector ansatz_state(std::span<const double> thetas);
/// sum_i sin^2 theta_i.
double mean_pair_number(std::span<const double> thetas);
/// theta_i = arcsin(sqrt(A / n)) for every level.
std::vector<double> default_initial_thetas(int n_levels, int pairs);

enum class ObjectiveRoute {
  kOracleRatio,   // (<H O> - e^{i mu}<H>) / (<O> - e^{i mu})
  kLcuTerms,      // sum_k alpha_k <H exp(i phi_k N)> / sum_k alpha_k <exp(i phi_k N)>
  kLcuCircuit,    // post-selected LCU register
  kClassicalMask  // explicit masking, reference only
};

struct ObjectiveSettings {
  ObjectiveRoute route = ObjectiveRoute::kOracleRatio;
  OraclePhases phases{};
  /// Shot-sampled Hadamard tests (oracle route only). H enters as its Pauli
  /// decomposition; every term is one controlled Pauli string.
  std::optional<Sampling> sampling{};
  double floor = kDefaultEmptySectorFloor;
};

class QvapObjective {
 public:
  QvapObjective(const PairingModel& model, int pairs, ObjectiveSettings settings = {});

  /// Projected energy. Throws kEmptySector when the sector weight is below the
  /// floor and kDimensionMismatch for a wrong number of angles.
  double operator()(std::span<const double> thetas) const;
  /// <Psi|P|Psi>.
  double sector_weight(std::span<const double> thetas) const;

  const PairingModel& model() const noexcept { return model_; }
  int pairs() const noexcept { return pairs_; }
  const ObjectiveSettings& settings() const noexcept { return settings_; }
  std::int64_t evaluations() const noexcept { return evaluations_; }
  std::int64_t shots_used() const noexcept { return shots_used_; }

 private:
  double sampled_ratio(const StateVector& psi) const;

  PairingModel model_;
  int pairs_;
  ObjectiveSettings settings_;
  LcuDecomposition projector_;
  OracleDecomposition oracle_;
  PhaseEvolution evolver_;
  Operator hamiltonian_;
  std::optional<LcuCircuitPlan> plan_;
  mutable std::int64_t evaluations_ = 0;
  mutable std::int64_t shots_used_ = 0;
  mutable std::uint64_t stream_ = 0;
};

double qvap_objective(std::span<const double> thetas, const PairingModel& model,
                      int pairs, const ObjectiveSettings& settings = {});

/// Nelder-Mead (GSL nmsimplex2) with seeded restarts around the incumbent.
struct OptimizerConfig {
  int max_iterations = 4000;   // per run
  double initial_step = 0.3;   // simplex edge, radians
  double size_tolerance = 1e-9;
  int restarts = 2;
  double restart_spread = 0.2;
  std::uint64_t seed = 12345;
};

struct QvapResult {
  std::vector<double> thetas;
  double energy = 0.0;
  /// Best energy after each iteration (non-increasing).
  std::vector<double> trajectory;
  /// Sector weight of the incumbent after each iteration.
  std::vector<double> sector_weights;
  std::int64_t evaluations = 0;
  int iterations = 0;
  bool converged = false;
  std::int64_t shots_used = 0;
};

/// Throws kEmptySector when the starting point has no sector weight.
QvapResult minimize(const QvapObjective& objective, std::vector<double> initial,
                    const OptimizerConfig& config = {});

QvapResult minimize(const PairingModel& model, int pairs,
                    const ObjectiveSettings& settings = {},
                    const OptimizerConfig& config = {});

}  // namespace symres
