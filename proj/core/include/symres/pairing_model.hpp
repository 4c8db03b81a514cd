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
 * Picket-fence pairing Hamiltonian in the seniority-zero qubit encoding.
 *
 * Qubit p is the pair occupation of level p, whose single-particle energy is
 * eps_p = (p + 1) * delta_e (levels are numbered 1..n). With
 * n_p = (I - Z_p)/2 and S+_p = |1><0|_p:
 *
 *   H = sum_p 2 eps_p n_p - g sum_{p,q} S+_p S-_q      (p = q included)
 *     = sum_p (2 eps_p - g) n_p - (g/2) sum_{p<q} (X_p X_q + Y_p Y_q)
 *
 * H conserves the pair number, so it preserves every number sector.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "symres/operator.hpp"

namespace symres {

struct PairingModel {
  int n_levels = 8;
  double delta_e = 1.0;
  double g = 0.0;

  /// n_levels >= 2, delta_e > 0, g >= 0. Throws kInvalidArgument.
  void validate() const;
  double level_energy(int p) const { return (p + 1) * delta_e; }
};

/// Number-conserving Pauli form of H:
///   constant * I + sum z.coeff * Z_p + sum hop.coeff * (X_p X_q + Y_p Y_q)/2.
/// Every Z_p and every (XX+YY)/2 has spectrum inside {-1, 0, 1}.
struct PairingTerms {
  struct ZTerm {
    int p;
    double coeff;
  };
  struct HopTerm {
    int p, q;
    double coeff;
  };
  double constant = 0.0;
  std::vector<ZTerm> z_terms;
  std::vector<HopTerm> hop_terms;
};

PairingTerms pairing_terms(const PairingModel& model);

/// H|psi>, matrix-free.
StateVector apply_hamiltonian(const PairingModel& model, const StateVector& state);
/// Hermitian, non-unitary handle.
Operator hamiltonian_operator(const PairingModel& model);

inline constexpr int kMaxDenseLevels = 12;

/// Dense H (n_levels <= 12).
Eigen::MatrixXd dense_hamiltonian(const PairingModel& model);

/// Eigendecomposition of H within each fixed pair-number block.
class PairingSpectrum {
 public:
  explicit PairingSpectrum(const PairingModel& model);

  const PairingModel& model() const noexcept { return model_; }
  /// Lowest eigenvalue in the A-pair block. Throws kEmptySector if A is not
  /// in [0, n_levels].
  double ground_energy(int pairs) const;
  const Eigen::VectorXd& sector_eigenvalues(int pairs) const;
  /// exp(-i t (H - shift)) |psi>, exact.
  void evolve(StateVector& state, double t, double shift = 0.0) const;

 private:
  struct Block {
    std::vector<std::uint64_t> indices;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
  };

  PairingModel model_;
  std::vector<Block> blocks_;
};

double exact_sector_ground(const PairingModel& model, int pairs);

enum class EvolutionMode { kDense, kTrotter };

struct EvolutionOptions {
  EvolutionMode mode = EvolutionMode::kDense;
  int trotter_steps = 16;
};

/// exp(-i t H)|psi>. Dense mode diagonalizes per pair-number block; Trotter
/// mode alternates the diagonal part with (p<q)-ordered XX+YY rotations.
void time_evolve(StateVector& state, const PairingModel& model, double t,
                 const EvolutionOptions& options = {});

/// Largest Gershgorin radius bound max_i sum_j |H_ij|.
double gershgorin_bound(const PairingModel& model);

}  // namespace symres
