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
 * Symmetry operators (qubit parity, particle number, total spin S^2) described
 * by their eigenvalue ladder, plus executable phase evolutions exp(i phi S).
 *
 * A ladder writes the spectrum as lambda_alpha = lambda1 + a * m_alpha with
 * integer m_alpha in [0, M], m_0 = 0. This is exactly the data needed to build
 * the discrete-Fourier projector in projection.hpp.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "symres/state_vector.hpp"

namespace symres {

enum class Symmetry { kParity, kNumber, kSpin };

std::string_view to_string(Symmetry s) noexcept;
/// Accepts "parity", "number", "spin". Throws kUnknownSymmetry.
Symmetry parse_symmetry(std::string_view text);

class SymmetryLadder {
 public:
  /// Validates m_values: first is 0, strictly increasing.
  SymmetryLadder(Symmetry label, int n_qubits, double lambda1, double spacing,
                 std::vector<int> m_values);

  Symmetry label() const noexcept { return label_; }
  int n_qubits() const noexcept { return n_qubits_; }
  double lambda1() const noexcept { return lambda1_; }
  /// The spacing unit `a`.
  double spacing() const noexcept { return spacing_; }
  const std::vector<int>& m_values() const noexcept { return m_values_; }
  int max_m() const noexcept { return m_values_.back(); }
  std::size_t size() const noexcept { return m_values_.size(); }

  /// lambda1 + a * m_alpha.
  double eigenvalue(std::size_t alpha) const;
  /// Index of the ladder entry whose eigenvalue is within 1e-9 of `lambda`.
  std::size_t index_of(double lambda) const;
  /// Human label of a sector: "even"/"odd", pair count, or S ("3/2").
  std::string sector_label(std::size_t alpha) const;

 private:
  Symmetry label_;
  int n_qubits_;
  double lambda1_;
  double spacing_;
  std::vector<int> m_values_;
};

/// lambda in {-1, +1}: lambda1 = -1, a = 2, m = {0, 1}.
SymmetryLadder parity_ladder(int n_qubits);
/// lambda = 0..n: lambda1 = 0, a = 1, M = n.
SymmetryLadder number_ladder(int n_qubits);
/// S(S+1) ladder: a = 2, lambda1 = 0 for even n; a = 1, lambda1 = 3/4 for
/// odd n. Generated from S = n/2, n/2 - 1, ... rather than tabulated.
SymmetryLadder spin_ladder(int n_qubits);
SymmetryLadder make_ladder(Symmetry symmetry, int n_qubits);

// ---- phase evolutions ------------------------------------------------------

/// exp(i phi P) with P = prod_m Z_m: e^{i phi} on even popcount, e^{-i phi}
/// on odd.
void parity_phase(StateVector& state, double phi);

/// exp(i phi N): c_k -> e^{i phi popcount(k)} c_k. Equivalent to a phase gate
/// diag(1, e^{i phi}) on every qubit.
void number_phase(StateVector& state, double phi);

/// S^2 |psi> through n(4-n)/4 + sum_{i<j} P_ij with P_ij the bit swap.
StateVector spin_squared_apply(const StateVector& state);

/// R_ZZ(theta) = exp(-i theta/2 Z_i Z_j) as CNOT(i,j) Rz_j(theta) CNOT(i,j).
void apply_rzz(StateVector& state, int i, int j, double theta);

/// exp(-i theta/4 (X_i X_j + Y_i Y_j)) as CNOT(j->i), controlled Rx_j(theta)
/// on i, CNOT(j->i).
void apply_xx_yy_rotation(StateVector& state, int i, int j, double theta);

/// Trotterized exp(i phi S^2): global phase e^{i phi 3n/4}, the exact
/// commuting R_ZZ factors, then `n_t` repetitions of the lexicographically
/// ordered (i<j) product of exp(i phi/(2 n_t) (XX+YY)).
void spin_phase_trotter(StateVector& state, double phi, int n_t);

/// Exact exp(i phi S^2) from a cached eigendecomposition (n <= 12).
void spin_phase_exact(StateVector& state, double phi);

inline constexpr int kMaxExactSpinQubits = 12;

/// Eigendecomposition of S^2 in the fixed-popcount blocks it preserves.
class SpinEigenbasis {
 public:
  explicit SpinEigenbasis(int n_qubits);

  /// Shared, lazily built instance. Thread-safe.
  static std::shared_ptr<const SpinEigenbasis> get(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  void apply_phase(StateVector& state, double phi) const;
  /// Component of `state` in the S(S+1) = `lambda` eigenspace.
  StateVector project(const StateVector& state, double lambda) const;

 private:
  struct Block {
    std::vector<std::uint64_t> indices;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
  };

  int n_qubits_;
  std::vector<Block> blocks_;
};

enum class Realization { kExact, kTrotter };

/// How exp(i phi S) is executed for one symmetry.
class PhaseEvolution {
 public:
  static PhaseEvolution exact(Symmetry symmetry);
  /// Spin only.
  static PhaseEvolution trotter(int n_t);

  Symmetry symmetry() const noexcept { return symmetry_; }
  Realization realization() const noexcept { return realization_; }
  int trotter_steps() const noexcept { return trotter_steps_; }

  void apply(StateVector& state, double phi) const;

 private:
  PhaseEvolution(Symmetry s, Realization r, int n_t)
      : symmetry_(s), realization_(r), trotter_steps_(n_t) {}

  Symmetry symmetry_;
  Realization realization_;
  int trotter_steps_;
};

inline constexpr int kDefaultSpinTrotterSteps = 8;

/// Classical reference projection onto ladder sector `alpha`: amplitude
/// masking for the diagonal symmetries, eigenprojection for spin.
StateVector project_exact(const StateVector& state, const SymmetryLadder& ladder,
                          std::size_t alpha);

}  // namespace symres
