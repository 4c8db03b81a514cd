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

#include "symres/lcu_circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

namespace symres {

namespace {

constexpr double kMinSuccess = 1e-14;

std::vector<Operator> phase_unitaries(std::span<const LcuTerm> terms,
                                      const PhaseEvolution& evolver) {
  std::vector<Operator> ops;
  ops.reserve(terms.size());
  for (const auto& t : terms) {
    ops.push_back({"exp(i " + std::to_string(t.phase) + " S)",
                   [evolver, phase = t.phase](StateVector& s) {
                     evolver.apply(s, phase);
                   },
                   true});
  }
  return ops;
}

std::vector<Complex> coefficients_of(std::span<const LcuTerm> terms) {
  std::vector<Complex> g;
  g.reserve(terms.size());
  for (const auto& t : terms) g.push_back(t.coefficient);
  return g;
}

// Everything up to (not including) measurement.
StateVector evolve_register(const StateVector& state, const LcuCircuitPlan& plan) {
  const int n = state.n_qubits();
  StateVector reg = append_ancillas(state, plan.n_lcu);
  apply_ancilla_unitary(reg, n, prepare_b(plan));
  for (int k = 0; k < plan.k_max; ++k) {
    apply_controlled_on_value(reg, n, static_cast<std::uint64_t>(k),
                              plan.unitaries[static_cast<std::size_t>(k)]);
  }
  if (plan.unprepare == Unprepare::kEDagger) {
    apply_ancilla_unitary(reg, n, prepare_e(plan.n_lcu, plan.k_max).adjoint());
  } else {
    for (int a = 0; a < plan.n_lcu; ++a) apply_gate(reg, gates::h(n + a));
  }
  return reg;
}

}  // namespace

double LcuCircuitPlan::normalization() const {
  double acc = 0.0;
  for (const auto& g : coefficients) acc += std::norm(g);
  return std::sqrt(acc);
}

LcuCircuitPlan make_lcu_plan(std::vector<Complex> coefficients,
                             std::vector<Operator> unitaries, Unprepare unprepare,
                             int n_lcu) {
  const auto k_max = static_cast<int>(coefficients.size());
  if (k_max < 1) {
    throw Error(ErrorCode::kInvalidArgument, "LCU needs at least one term");
  }
  if (unitaries.size() != coefficients.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LCU coefficient and unitary counts differ");
  }
  for (const auto& u : unitaries) {
    if (!u.unitary) {
      throw Error(ErrorCode::kNonUnitary, "LCU term '" + u.name + "' is not unitary");
    }
  }
  const int minimal =
      static_cast<int>(std::bit_width(static_cast<unsigned>(k_max - 1)));
  if (n_lcu == 0) n_lcu = std::max(minimal, 1);
  if ((1 << n_lcu) < k_max) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(n_lcu) + " ancillas cannot index " +
                    std::to_string(k_max) + " terms");
  }
  coefficients.resize(std::size_t{1} << n_lcu, Complex{0.0, 0.0});
  LcuCircuitPlan plan{n_lcu, k_max, std::move(coefficients), std::move(unitaries),
                      unprepare};
  if (!(plan.normalization() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "all LCU coefficients are zero");
  }
  return plan;
}

LcuCircuitPlan make_lcu_plan(const LcuDecomposition& projector,
                             const PhaseEvolution& evolver, Unprepare unprepare) {
  return make_lcu_plan(coefficients_of(projector.terms),
                       phase_unitaries(projector.terms, evolver), unprepare);
}

LcuCircuitPlan make_lcu_plan(const OracleDecomposition& oracle,
                             const PhaseEvolution& evolver, Unprepare unprepare) {
  return make_lcu_plan(coefficients_of(oracle.terms),
                       phase_unitaries(oracle.terms, evolver), unprepare);
}

Eigen::MatrixXcd orthonormal_completion(const Eigen::VectorXcd& first_column) {
  const Eigen::Index d = first_column.size();
  Eigen::MatrixXcd q(d, d);
  q.col(0) = first_column.normalized();
  Eigen::Index filled = 1;
  for (Eigen::Index e = 0; e < d && filled < d; ++e) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Unit(d, e);
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < filled; ++j) {
        v -= q.col(j) * q.col(j).dot(v);
      }
    }
    const double len = v.norm();
    if (len < 1e-8) continue;
    q.col(filled++) = v / len;
  }
  return q;
}

Eigen::MatrixXcd prepare_b(const LcuCircuitPlan& plan) {
  const auto d = static_cast<Eigen::Index>(plan.coefficients.size());
  Eigen::VectorXcd column(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    column(k) = plan.coefficients[static_cast<std::size_t>(k)];
  }
  return orthonormal_completion(column / plan.normalization());
}

Eigen::MatrixXcd prepare_e(int n_lcu, int k_max) {
  const Eigen::Index d = Eigen::Index{1} << n_lcu;
  if (k_max < 1 || k_max > d) {
    throw Error(ErrorCode::kInvalidArgument,
                "k_max must lie in [1, 2^n_lcu], got " + std::to_string(k_max));
  }
  Eigen::VectorXcd column = Eigen::VectorXcd::Zero(d);
  column.head(k_max).setConstant(1.0 / std::sqrt(static_cast<double>(k_max)));
  return orthonormal_completion(column);
}

void apply_ancilla_unitary(StateVector& composite, int n_system,
                           const Eigen::MatrixXcd& u) {
  const std::size_t slice = std::size_t{1} << n_system;
  const auto d = static_cast<Eigen::Index>(composite.dim() / slice);
  if (u.rows() != d || u.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch, "ancilla unitary has wrong size");
  }
  Eigen::VectorXcd column(d);
  for (std::size_t s = 0; s < slice; ++s) {
    for (Eigen::Index a = 0; a < d; ++a) {
      column(a) = composite[static_cast<std::size_t>(a) * slice + s];
    }
    column = u * column;
    for (Eigen::Index a = 0; a < d; ++a) {
      composite[static_cast<std::size_t>(a) * slice + s] = column(a);
    }
  }
}

LcuResult run_lcu(const StateVector& state, const LcuCircuitPlan& plan) {
  const StateVector reg = evolve_register(state, plan);
  const std::size_t slice = state.dim();
  std::vector<Complex> kept(reg.amplitudes().begin(),
                            reg.amplitudes().begin() + static_cast<std::ptrdiff_t>(slice));
  StateVector post = StateVector::from_amplitudes(std::move(kept));
  const double p = post.norm_squared() / reg.norm_squared();
  if (p < kMinSuccess) {
    throw Error(ErrorCode::kEmptySector,
                "post-selection probability " + std::to_string(p) + " is zero");
  }
  post.normalize();
  return {std::move(post), p};
}

LcuShotResult run_lcu_shots(const StateVector& state, const LcuCircuitPlan& plan,
                            std::int64_t n_shots, std::uint64_t seed) {
  if (n_shots < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_shots must be >= 1");
  }
  const StateVector reg = evolve_register(state, plan);
  double p0 = 0.0;
  for (std::size_t k = 0; k < state.dim(); ++k) p0 += std::norm(reg[k]);
  p0 = std::clamp(p0 / reg.norm_squared(), 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::int64_t> draw(n_shots, p0);
  const std::int64_t accepted = draw(rng);
  return {accepted, n_shots - accepted, p0};
}

}  // namespace symres
