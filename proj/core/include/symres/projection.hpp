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
 * Projectors and oracles as linear combinations of symmetry phase
 * evolutions, and the three ways of evaluating a projected expectation value:
 * term-by-term recombination, the oracle ratio identity, and the
 * single-ancilla Hadamard test.
 *
 * Projector onto ladder sector alpha:
 *
 *   P_alpha = sum_{k=0}^{M} alpha_k exp(i phi_k S),
 *   alpha_k = exp(-i phi_k (xi_alpha + lambda1)) / (M+1),
 *   phi_k   = 2 pi k / (a (M+1)).
 *
 * Oracle with good-sector phase phi and bad-sector phase mu:
 *
 *   O = e^{i mu} I + (e^{i phi} - e^{i mu}) P_alpha = sum_k beta_k exp(i phi_k S).
 */

#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "symres/operator.hpp"
#include "symres/symmetry.hpp"

namespace symres {

struct LcuTerm {
  Complex coefficient;
  double phase;  // phi_k
};

struct LcuDecomposition {
  SymmetryLadder ladder;
  std::size_t target;  // ladder index alpha
  std::vector<LcuTerm> terms;
};

/// Throws kIndexOutOfRange when `alpha` is not a ladder index.
LcuDecomposition build_projector(const SymmetryLadder& ladder, std::size_t alpha);

struct OraclePhases {
  double phi = 0.0;
  double mu = std::numbers::pi / 2;

  /// Throws kDegenerateOracle when phi == mu (mod 2 pi).
  void validate() const;
  Complex good() const { return std::polar(1.0, phi); }
  Complex bad() const { return std::polar(1.0, mu); }
};

struct OracleDecomposition {
  LcuDecomposition base;
  OraclePhases phases;
  std::vector<LcuTerm> terms;  // beta_k, phi_k
};

OracleDecomposition build_oracle(const LcuDecomposition& projector,
                                 const OraclePhases& phases);

/// sum_k c_k exp(i phi_k S) |psi>, with the exponentials executed by
/// `evolver`. Not unitary in general.
StateVector apply_lcu(const StateVector& state, std::span<const LcuTerm> terms,
                      const PhaseEvolution& evolver);

/// Handle for the projector (non-unitary).
Operator projector_operator(const LcuDecomposition& projector,
                            const PhaseEvolution& evolver);
/// Handle for the oracle, applied by linearity over its LCU terms.
Operator oracle_operator(const OracleDecomposition& oracle,
                         const PhaseEvolution& evolver);

inline constexpr double kDefaultEmptySectorFloor = 1e-10;

struct ProjectedExpectation {
  Complex numerator;  // <A P>
  Complex norm;       // <P>

  Complex value() const { return numerator / norm; }
};

/// numerator = sum_k alpha_k <A exp(i phi_k S)>, norm = sum_k alpha_k
/// <exp(i phi_k S)>. Throws kEmptySector when |norm| < floor.
ProjectedExpectation projected_expectation_lcu(
    const StateVector& state, const Operator& observable,
    const LcuDecomposition& projector, const PhaseEvolution& evolver,
    double floor = kDefaultEmptySectorFloor);

/// (<A O> - e^{i mu} <A>) / (<O> - e^{i mu}). Throws kEmptySector when the
/// denominator is below `floor`.
Complex projected_expectation_oracle_ratio(
    const StateVector& state, const Operator& observable,
    const OracleDecomposition& oracle, const PhaseEvolution& evolver,
    double floor = kDefaultEmptySectorFloor);

enum class Part { kReal, kImag };

struct Sampling {
  std::int64_t n_shots;
  std::uint64_t seed;
};

struct HadamardEstimate {
  double value = 0.0;              // p0 - p1 (exact or sampled)
  double p0 = 0.0;                 // exact ancilla probabilities
  double p1 = 0.0;
  std::int64_t shots_used = 0;     // 0 in exact mode
  std::int64_t shots_discarded = 0;
};

/// Single-ancilla Hadamard test for <psi| U_last ... U_first |psi>.
///
/// Circuit: H on the ancilla (qubit n), Phase(-pi/2) when `part` is kImag,
/// the controlled operators in order, H, measure. Every operator must be
/// flagged unitary (kNonUnitary otherwise).
HadamardEstimate hadamard_test(const StateVector& state,
                               std::span<const Operator> controlled_ops,
                               Part part,
                               std::optional<Sampling> sampling = std::nullopt);

/// Real and imaginary Hadamard tests combined into one complex estimate.
Complex hadamard_expectation(const StateVector& state,
                             std::span<const Operator> controlled_ops,
                             std::optional<Sampling> sampling = std::nullopt);

struct PhaseScan {
  std::vector<double> phis;
  std::vector<double> mus;
  /// values[i * mus.size() + j] = Re <O(phis[i], mus[j])>.
  std::vector<double> values;
  /// <exp(i phi_k S)>, measured once and reused for every grid point.
  std::vector<Complex> term_expectations;

  double at(std::size_t i, std::size_t j) const {
    return values[i * mus.size() + j];
  }
};

/// Re <psi|O(phi, mu)|psi> over a grid. The term expectations do not depend on
/// (phi, mu), so they are evaluated once and recombined with beta_k(phi, mu).
/// Degenerate points phi == mu are reported as e^{i phi} <psi|psi>.
PhaseScan oracle_phase_scan(const StateVector& state,
                            const LcuDecomposition& projector,
                            const PhaseEvolution& evolver,
                            std::span<const double> phis,
                            std::span<const double> mus);

}  // namespace symres
