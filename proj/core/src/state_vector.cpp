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

#include "symres/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace symres {

namespace {

void check_qubit_count(int n_qubits, int max_qubits) {
  if (n_qubits < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "n_qubits must be positive, got " + std::to_string(n_qubits));
  }
  if (n_qubits > max_qubits) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n_qubits) + " qubits exceeds the limit of " +
                    std::to_string(max_qubits));
  }
}

void check_qubit(const StateVector& state, int q) {
  if (q < 0 || q >= state.n_qubits()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "qubit " + std::to_string(q) + " not in [0, " +
                    std::to_string(state.n_qubits()) + ")");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, int max_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits, max_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis index " + std::to_string(index) + " out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::equiprobable(int n_qubits) {
  StateVector s(n_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
  for (auto& c : s.amplitudes_) c = a;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes,
                                         int max_qubits) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "amplitude count " + std::to_string(n) +
                    " is not a power of two >= 2");
  }
  const int n_qubits = std::countr_zero(n);
  check_qubit_count(n_qubits, max_qubits);
  return StateVector(n_qubits, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
  double acc = 0.0;
  for (const auto& c : amplitudes_) acc += std::norm(c);
  return acc;
}

void StateVector::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) {
    throw Error(ErrorCode::kEmptySector, "cannot normalize a zero vector");
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : amplitudes_) c *= inv;
}

Matrix2 Gate::matrix() const {
  using namespace std::complex_literals;
  const double r = std::numbers::sqrt2 / 2.0;
  switch (kind) {
    case GateKind::kH: return {r, r, r, -r};
    case GateKind::kX: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kY: return {0.0, -1i, 1i, 0.0};
    case GateKind::kZ: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::kRx: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      return {c, -1i * s, -1i * s, c};
    }
    case GateKind::kRz:
      return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
    case GateKind::kPhase: return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
    case GateKind::kMatrix: return custom;
  }
  return {1.0, 0.0, 0.0, 1.0};
}

namespace gates {
Gate h(int q) { return {GateKind::kH, q}; }
Gate x(int q) { return {GateKind::kX, q}; }
Gate y(int q) { return {GateKind::kY, q}; }
Gate z(int q) { return {GateKind::kZ, q}; }
Gate rx(int q, double theta) { return {GateKind::kRx, q, theta}; }
Gate rz(int q, double theta) { return {GateKind::kRz, q, theta}; }
Gate phase(int q, double phi) { return {GateKind::kPhase, q, phi}; }
Gate cnot(int control, int target) {
  Gate g = x(target);
  g.controls.push_back({control, true});
  return g;
}
Gate unitary(int q, const Matrix2& u) {
  Gate g{GateKind::kMatrix, q};
  g.custom = u;
  return g;
}
Gate controlled(Gate base, std::span<const int> controls,
                std::span<const bool> polarity) {
  if (!polarity.empty() && polarity.size() != controls.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "control polarity list length must match control count");
  }
  for (std::size_t i = 0; i < controls.size(); ++i) {
    base.controls.push_back({controls[i], polarity.empty() || polarity[i]});
  }
  return base;
}
}  // namespace gates

void apply_gate(StateVector& state, const Gate& gate) {
  check_qubit(state, gate.target);
  std::uint64_t used = std::uint64_t{1} << gate.target;
  std::uint64_t ctrl_mask = 0, ctrl_value = 0;
  for (const auto& c : gate.controls) {
    check_qubit(state, c.qubit);
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    if (used & bit) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "qubit " + std::to_string(c.qubit) + " addressed twice");
    }
    used |= bit;
    ctrl_mask |= bit;
    if (c.on_one) ctrl_value |= bit;
  }

  const Matrix2 u = gate.matrix();
  auto amps = state.amplitudes();
  const std::size_t t = static_cast<std::size_t>(gate.target);
  const std::uint64_t stride = std::uint64_t{1} << t;
  const std::uint64_t low = stride - 1;
  const std::size_t half = amps.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = ((k >> t) << (t + 1)) | (k & low);
    if ((i0 & ctrl_mask) != ctrl_value) continue;
    const std::uint64_t i1 = i0 | stride;
    const Complex a0 = amps[i0], a1 = amps[i1];
    amps[i0] = u[0] * a0 + u[1] * a1;
    amps[i1] = u[2] * a0 + u[3] * a1;
  }
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "inner product of " + std::to_string(a.n_qubits()) + " and " +
                    std::to_string(b.n_qubits()) + " qubit states");
  }
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double probability_one(const StateVector& state, int qubit) {
  check_qubit(state, qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double p1 = 0.0;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    if (k & bit) p1 += std::norm(state[k]);
  }
  return p1 / state.norm_squared();
}

double ShotCounts::bias() const noexcept {
  const auto n = total();
  return n == 0 ? 0.0 : static_cast<double>(count0 - count1) / static_cast<double>(n);
}

ShotCounts sample_qubit(const StateVector& state, int qubit,
                        std::int64_t n_shots, std::uint64_t seed) {
  if (n_shots < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_shots must be >= 1");
  }
  const double p1 = std::clamp(probability_one(state, qubit), 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::int64_t> draw(n_shots, p1);
  const std::int64_t ones = draw(rng);
  return {n_shots - ones, ones};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace symres
