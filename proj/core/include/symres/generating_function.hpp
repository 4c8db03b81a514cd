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
 * Generating function of a projected state,
 *
 *   F_G(t) = <Psi_G| exp(-i t (H - c)) |Psi_G>,   |Psi_G> = P|Psi>,
 *
 * evaluated without building |Psi_G>. H conserves the symmetry, so
 * <Psi_G|U|Psi_G> = <U P> and the oracle identity gives
 *
 *   F_G(t) = (<U O> - e^{i mu} <U>) / (e^{i phi} - e^{i mu}),
 *
 * each term from a pair of real/imaginary Hadamard tests. F_G(0) is the
 * sector weight and i F_G'(0) + c F_G(0) is <Psi_G|H|Psi_G>.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symres/pairing_model.hpp"
#include "symres/projection.hpp"

namespace symres {

struct GeneratingFunctionSeries {
  std::vector<double> times;
  std::vector<Complex> values;
  Complex norm;  // F_G(0)
};

struct GeneratingFunctionOptions {
  OraclePhases phases{};
  /// c in exp(-i t (H - c)). spectral_center(model) shrinks the
  /// finite-difference truncation error.
  double shift = 0.0;
  std::optional<Sampling> sampling{};
  double floor = kDefaultEmptySectorFloor;
};

class GeneratingFunction {
 public:
  /// `state` must act on model.n_levels qubits and `projector` must be
  /// defined on the same register; H must commute with the symmetry.
  GeneratingFunction(StateVector state, const PairingModel& model,
                     const LcuDecomposition& projector,
                     const PhaseEvolution& evolver,
                     GeneratingFunctionOptions options = {});

  /// F_G(t) through the oracle route.
  Complex operator()(double t) const;
  /// <Psi_G| V |Psi_G> for any symmetry-preserving unitary V, same route.
  Complex projected(const Operator& v) const;

  GeneratingFunctionSeries series(std::span<const double> times) const;

  const PairingModel& model() const noexcept { return spectrum_.model(); }
  double shift() const noexcept { return shift_; }
  std::int64_t shots_used() const noexcept { return shots_used_; }

 private:
  Complex oracle_pair(const Operator& v) const;

  StateVector state_;
  PairingSpectrum spectrum_;
  Operator oracle_;
  OraclePhases phases_;
  double shift_;
  std::optional<Sampling> sampling_;
  mutable std::uint64_t stream_ = 0;
  mutable std::int64_t shots_used_ = 0;
};

/// Identity coefficient of the Pauli form of H (trace / dimension).
double spectral_center(const PairingModel& model);

enum class DerivativeMethod { kFiniteDifference, kParameterShift };

/// Projected energy i F_G'(0) / F_G(0) (plus the spectral shift).
///
/// kFiniteDifference: central difference of F_G at +-dt.
///
/// kParameterShift: H is split into number-conserving generators h_j K_j
/// (every Z_p and every (X_p X_q + Y_p Y_q)/2) whose spectra lie in
/// {-1, 0, 1}. For each,
///
///   h_j <K_j>_G = h_j * i (F_j(s_j) - F_j(-s_j)) / 2,   s_j = pi / 2,
///
/// with F_j(s) = <Psi_G| exp(-i s K_j) |Psi_G>; in time units of the term
/// h_j K_j this is t = +-pi / (2 |h_j|). The rule is exact, so `dt` is only
/// validated. Throws kInvalidArgument for dt <= 0 and kEmptySector when
/// |F_G(0)| is below the floor.
double projected_energy_via_generating_function(
    const StateVector& state, const PairingModel& model,
    const LcuDecomposition& projector, double dt,
    DerivativeMethod method = DerivativeMethod::kFiniteDifference,
    const GeneratingFunctionOptions& options = {});

inline constexpr double kDefaultGeneratingFunctionStep = 1e-3;

}  // namespace symres
