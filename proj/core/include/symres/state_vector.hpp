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
 * Dense statevector simulator.
 *
 * Basis state |k> carries qubit j in bit j of k, so qubit 0 is the least
 * significant bit. Gates are applied in place with bitmask strides; no full
 * 2^n x 2^n matrix is ever formed.
 */

#pragma once

#include <array>
#include <bit>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symres/error.hpp"

namespace symres {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxQubits = 24;

class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(int n_qubits, int max_qubits = kDefaultMaxQubits);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// (1/sqrt(2^n)) sum_k |k>.
  static StateVector equiprobable(int n_qubits);
  /// Takes ownership of `amplitudes`; the length must be a power of two.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes,
                                     int max_qubits = kDefaultMaxQubits);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  Complex& operator[](std::size_t k) { return amplitudes_[k]; }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm_squared() const noexcept;
  /// Rescales to unit norm; throws kEmptySector for a zero vector.
  void normalize();

 private:
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Row-major 2x2 matrix {u00, u01, u10, u11}.
using Matrix2 = std::array<Complex, 4>;

enum class GateKind { kH, kX, kY, kZ, kRx, kRz, kPhase, kMatrix };

struct Control {
  int qubit;
  /// true: fires on |1> (filled circle); false: fires on |0> (open circle).
  bool on_one = true;
};

/// A single-target gate with any number of (possibly open) controls.
/// CNOT is kX with one control.
struct Gate {
  GateKind kind;
  int target;
  double angle = 0.0;
  std::vector<Control> controls{};
  Matrix2 custom{};  // used only by kMatrix

  Matrix2 matrix() const;
};

namespace gates {
Gate h(int q);
Gate x(int q);
Gate y(int q);
Gate z(int q);
/// exp(-i theta X / 2)
Gate rx(int q, double theta);
/// exp(-i theta Z / 2)
Gate rz(int q, double theta);
/// diag(1, e^{i phi})
Gate phase(int q, double phi);
Gate cnot(int control, int target);
Gate unitary(int q, const Matrix2& u);
/// Adds controls to `base`. `polarity` may be empty (all filled) or one entry
/// per control.
Gate controlled(Gate base, std::span<const int> controls,
                std::span<const bool> polarity = {});
}  // namespace gates

/// Throws kIndexOutOfRange / kDuplicateIndex on bad addressing.
void apply_gate(StateVector& state, const Gate& gate);

/// c_k -> e^{i phase(k)} c_k for every basis index k.
template <class PhaseFn>
  requires std::invocable<PhaseFn, std::uint64_t>
void apply_diagonal(StateVector& state, PhaseFn&& phase) {
  auto amps = state.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) {
    amps[k] *= std::polar(1.0, static_cast<double>(phase(std::uint64_t{k})));
  }
}

/// sum_k conj(a_k) b_k.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Exact marginal probability that `qubit` reads 1.
double probability_one(const StateVector& state, int qubit);

struct ShotCounts {
  std::int64_t count0 = 0;
  std::int64_t count1 = 0;

  std::int64_t total() const noexcept { return count0 + count1; }
  /// (count0 - count1) / total
  double bias() const noexcept;
};

/// Draws `n_shots` outcomes of `qubit` from its exact marginal (binomial draw,
/// no collapse). Deterministic for a fixed seed.
ShotCounts sample_qubit(const StateVector& state, int qubit,
                        std::int64_t n_shots, std::uint64_t seed);

/// Independent seed for sub-stream `stream` of a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

inline int popcount(std::uint64_t k) noexcept {
  return std::popcount(k);
}

}  // namespace symres
