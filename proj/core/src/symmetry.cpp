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

#include "symres/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symres {

std::string_view to_string(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::kParity: return "parity";
    case Symmetry::kNumber: return "number";
    case Symmetry::kSpin: return "spin";
  }
  return "unknown";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "parity") return Symmetry::kParity;
  if (text == "number") return Symmetry::kNumber;
  if (text == "spin") return Symmetry::kSpin;
  throw Error(ErrorCode::kUnknownSymmetry,
              "unknown symmetry '" + std::string(text) + "'");
}

SymmetryLadder::SymmetryLadder(Symmetry label, int n_qubits, double lambda1,
                               double spacing, std::vector<int> m_values)
    : label_(label),
      n_qubits_(n_qubits),
      lambda1_(lambda1),
      spacing_(spacing),
      m_values_(std::move(m_values)) {
  if (n_qubits_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ladder needs n_qubits >= 1");
  }
  if (!(spacing_ > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "ladder spacing must be positive");
  }
  if (m_values_.empty() || m_values_.front() != 0) {
    throw Error(ErrorCode::kDegenerateLadder, "ladder must start at m = 0");
  }
  for (std::size_t i = 1; i < m_values_.size(); ++i) {
    if (m_values_[i] <= m_values_[i - 1]) {
      throw Error(ErrorCode::kDegenerateLadder,
                  "ladder m-values must be strictly increasing");
    }
  }
}

double SymmetryLadder::eigenvalue(std::size_t alpha) const {
  if (alpha >= m_values_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sector index " + std::to_string(alpha) + " out of range");
  }
  return lambda1_ + spacing_ * m_values_[alpha];
}

std::size_t SymmetryLadder::index_of(double lambda) const {
  for (std::size_t a = 0; a < m_values_.size(); ++a) {
    if (std::abs(eigenvalue(a) - lambda) < 1e-9) return a;
  }
  throw Error(ErrorCode::kIndexOutOfRange,
              "eigenvalue " + std::to_string(lambda) + " not on the ladder");
}

std::string SymmetryLadder::sector_label(std::size_t alpha) const {
  const double lambda = eigenvalue(alpha);
  switch (label_) {
    case Symmetry::kParity: return lambda > 0 ? "even" : "odd";
    case Symmetry::kNumber: return std::to_string(std::lround(lambda));
    case Symmetry::kSpin: {
      const long two_s = std::lround(std::sqrt(1.0 + 4.0 * lambda) - 1.0);
      return two_s % 2 == 0 ? std::to_string(two_s / 2)
                            : std::to_string(two_s) + "/2";
    }
  }
  return {};
}

SymmetryLadder parity_ladder(int n_qubits) {
  return SymmetryLadder(Symmetry::kParity, n_qubits, -1.0, 2.0, {0, 1});
}

SymmetryLadder number_ladder(int n_qubits) {
  std::vector<int> m(static_cast<std::size_t>(n_qubits) + 1);
  for (int i = 0; i <= n_qubits; ++i) m[static_cast<std::size_t>(i)] = i;
  return SymmetryLadder(Symmetry::kNumber, n_qubits, 0.0, 1.0, std::move(m));
}

SymmetryLadder spin_ladder(int n_qubits) {
  if (n_qubits < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ladder needs n_qubits >= 1");
  }
  const bool even = n_qubits % 2 == 0;
  const double lambda1 = even ? 0.0 : 0.75;
  const double a = even ? 2.0 : 1.0;
  std::vector<int> m;
  // 2S runs over n, n-2, ..., down to 0 or 1.
  for (int two_s = n_qubits % 2; two_s <= n_qubits; two_s += 2) {
    const double s = two_s / 2.0;
    const double xi = s * (s + 1.0) - lambda1;
    const long mi = std::lround(xi / a);
    if (std::abs(xi / a - static_cast<double>(mi)) > 1e-12) {
      throw Error(ErrorCode::kDegenerateLadder, "non-integer spin ladder step");
    }
    m.push_back(static_cast<int>(mi));
  }
  return SymmetryLadder(Symmetry::kSpin, n_qubits, lambda1, a, std::move(m));
}

SymmetryLadder make_ladder(Symmetry symmetry, int n_qubits) {
  switch (symmetry) {
    case Symmetry::kParity: return parity_ladder(n_qubits);
    case Symmetry::kNumber: return number_ladder(n_qubits);
    case Symmetry::kSpin: return spin_ladder(n_qubits);
  }
  throw Error(ErrorCode::kUnknownSymmetry, "unknown symmetry");
}

void parity_phase(StateVector& state, double phi) {
  apply_diagonal(state, [phi](std::uint64_t k) {
    return (popcount(k) % 2 == 0) ? phi : -phi;
  });
}

void number_phase(StateVector& state, double phi) {
  apply_diagonal(state, [phi](std::uint64_t k) { return phi * popcount(k); });
}

StateVector spin_squared_apply(const StateVector& state) {
  const int n = state.n_qubits();
  StateVector out = state;
  const double constant = n * (4.0 - n) / 4.0;
  auto dst = out.amplitudes();
  auto src = state.amplitudes();
  for (auto& c : dst) c *= constant;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t bi = std::uint64_t{1} << i, bj = std::uint64_t{1} << j;
      for (std::uint64_t k = 0; k < src.size(); ++k) {
        const bool di = k & bi, dj = k & bj;
        const std::uint64_t swapped = (di == dj) ? k : (k ^ bi ^ bj);
        dst[k] += src[swapped];
      }
    }
  }
  return out;
}

void apply_rzz(StateVector& state, int i, int j, double theta) {
  apply_gate(state, gates::cnot(i, j));
  apply_gate(state, gates::rz(j, theta));
  apply_gate(state, gates::cnot(i, j));
}

void apply_xx_yy_rotation(StateVector& state, int i, int j, double theta) {
  const int ctrl[] = {i};
  apply_gate(state, gates::cnot(j, i));
  apply_gate(state, gates::controlled(gates::rx(j, theta), ctrl));
  apply_gate(state, gates::cnot(j, i));
}

void spin_phase_trotter(StateVector& state, double phi, int n_t) {
  if (n_t < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Trotter steps must be >= 1");
  }
  const int n = state.n_qubits();
  const Complex global = std::polar(1.0, phi * 3.0 * n / 4.0);
  for (auto& c : state.amplitudes()) c *= global;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) apply_rzz(state, i, j, -phi);
  }
  const double theta = -2.0 * phi / n_t;
  for (int step = 0; step < n_t; ++step) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) apply_xx_yy_rotation(state, i, j, theta);
    }
  }
}

void spin_phase_exact(StateVector& state, double phi) {
  SpinEigenbasis::get(state.n_qubits())->apply_phase(state, phi);
}

PhaseEvolution PhaseEvolution::exact(Symmetry symmetry) {
  return PhaseEvolution(symmetry, Realization::kExact, 0);
}

PhaseEvolution PhaseEvolution::trotter(int n_t) {
  if (n_t < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Trotter steps must be >= 1");
  }
  return PhaseEvolution(Symmetry::kSpin, Realization::kTrotter, n_t);
}

void PhaseEvolution::apply(StateVector& state, double phi) const {
  switch (symmetry_) {
    case Symmetry::kParity: parity_phase(state, phi); return;
    case Symmetry::kNumber: number_phase(state, phi); return;
    case Symmetry::kSpin:
      if (realization_ == Realization::kTrotter) {
        spin_phase_trotter(state, phi, trotter_steps_);
      } else {
        spin_phase_exact(state, phi);
      }
      return;
  }
}

StateVector project_exact(const StateVector& state, const SymmetryLadder& ladder,
                          std::size_t alpha) {
  if (state.n_qubits() != ladder.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "ladder and state disagree on qubit count");
  }
  const double lambda = ladder.eigenvalue(alpha);
  if (ladder.label() == Symmetry::kSpin) {
    return SpinEigenbasis::get(state.n_qubits())->project(state, lambda);
  }
  StateVector out = state;
  auto amps = out.amplitudes();
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    const int pc = popcount(k);
    const double value = ladder.label() == Symmetry::kNumber
                             ? static_cast<double>(pc)
                             : (pc % 2 == 0 ? 1.0 : -1.0);
    if (std::abs(value - lambda) > 1e-9) amps[k] = 0.0;
  }
  return out;
}

}  // namespace symres
