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

#include "symres/pairing_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symres/symmetry.hpp"

namespace symres {

namespace {

double diagonal_energy(const PairingModel& m, std::uint64_t k) {
  double e = 0.0;
  for (int p = 0; p < m.n_levels; ++p) {
    if ((k >> p) & 1U) e += 2.0 * m.level_energy(p) - m.g;
  }
  return e;
}

void check_dense(const PairingModel& m) {
  if (m.n_levels > kMaxDenseLevels) {
    throw Error(ErrorCode::kTooLarge,
                "dense pairing Hamiltonian limited to " +
                    std::to_string(kMaxDenseLevels) + " levels");
  }
}

}  // namespace

void PairingModel::validate() const {
  if (n_levels < 2) {
    throw Error(ErrorCode::kInvalidArgument, "pairing model needs >= 2 levels");
  }
  if (!(delta_e > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta_e must be positive");
  }
  if (!(g >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "g must be non-negative");
  }
}

PairingTerms pairing_terms(const PairingModel& model) {
  model.validate();
  PairingTerms t;
  for (int p = 0; p < model.n_levels; ++p) {
    const double onsite = model.level_energy(p) - model.g / 2.0;
    t.constant += onsite;
    t.z_terms.push_back({p, -onsite});
  }
  if (model.g != 0.0) {
    for (int p = 0; p < model.n_levels; ++p) {
      for (int q = p + 1; q < model.n_levels; ++q) {
        t.hop_terms.push_back({p, q, -model.g});
      }
    }
  }
  return t;
}

StateVector apply_hamiltonian(const PairingModel& model, const StateVector& state) {
  model.validate();
  if (state.n_qubits() != model.n_levels) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state size does not match the number of levels");
  }
  StateVector out = state;
  auto dst = out.amplitudes();
  auto src = state.amplitudes();
  for (std::uint64_t k = 0; k < src.size(); ++k) {
    dst[k] = diagonal_energy(model, k) * src[k];
  }
  if (model.g == 0.0) return out;
  // -g S+_p S-_q for p != q moves a pair from q to p.
  for (std::uint64_t k = 0; k < src.size(); ++k) {
    if (src[k] == Complex{0.0, 0.0}) continue;
    for (int q = 0; q < model.n_levels; ++q) {
      if (!((k >> q) & 1U)) continue;
      for (int p = 0; p < model.n_levels; ++p) {
        if ((k >> p) & 1U) continue;
        dst[k ^ (std::uint64_t{1} << p) ^ (std::uint64_t{1} << q)] -= model.g * src[k];
      }
    }
  }
  return out;
}

Operator hamiltonian_operator(const PairingModel& model) {
  model.validate();
  return {"H_pairing",
          [model](StateVector& s) { s = apply_hamiltonian(model, s); }, false};
}

Eigen::MatrixXd dense_hamiltonian(const PairingModel& model) {
  model.validate();
  check_dense(model);
  const Eigen::Index dim = Eigen::Index{1} << model.n_levels;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector e = StateVector::basis(model.n_levels, static_cast<std::uint64_t>(col));
    const StateVector he = apply_hamiltonian(model, e);
    for (Eigen::Index row = 0; row < dim; ++row) {
      h(row, col) = he[static_cast<std::size_t>(row)].real();
    }
  }
  return h;
}

PairingSpectrum::PairingSpectrum(const PairingModel& model) : model_(model) {
  model_.validate();
  check_dense(model_);
  const int n = model_.n_levels;
  const std::uint64_t dim = std::uint64_t{1} << n;
  blocks_.resize(static_cast<std::size_t>(n) + 1);
  std::vector<std::size_t> position(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    auto& idx = blocks_[static_cast<std::size_t>(popcount(k))].indices;
    position[k] = idx.size();
    idx.push_back(k);
  }
  for (auto& block : blocks_) {
    const auto size = static_cast<Eigen::Index>(block.indices.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
      const std::uint64_t k = block.indices[static_cast<std::size_t>(col)];
      h(col, col) = diagonal_energy(model_, k);
      for (int q = 0; q < n; ++q) {
        if (!((k >> q) & 1U)) continue;
        for (int p = 0; p < n; ++p) {
          if ((k >> p) & 1U) continue;
          const std::uint64_t j = k ^ (std::uint64_t{1} << p) ^ (std::uint64_t{1} << q);
          h(static_cast<Eigen::Index>(position[j]), col) -= model_.g;
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    block.eigenvalues = solver.eigenvalues();
    block.eigenvectors = solver.eigenvectors();
  }
}

const Eigen::VectorXd& PairingSpectrum::sector_eigenvalues(int pairs) const {
  if (pairs < 0 || pairs > model_.n_levels) {
    throw Error(ErrorCode::kEmptySector,
                "no " + std::to_string(pairs) + "-pair sector on " +
                    std::to_string(model_.n_levels) + " levels");
  }
  return blocks_[static_cast<std::size_t>(pairs)].eigenvalues;
}

double PairingSpectrum::ground_energy(int pairs) const {
  return sector_eigenvalues(pairs)(0);
}

void PairingSpectrum::evolve(StateVector& state, double t, double shift) const {
  if (state.n_qubits() != model_.n_levels) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state size does not match the number of levels");
  }
  for (const auto& block : blocks_) {
    const auto size = static_cast<Eigen::Index>(block.indices.size());
    Eigen::VectorXcd local(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      local(i) = state[block.indices[static_cast<std::size_t>(i)]];
    }
    Eigen::VectorXcd coeffs = block.eigenvectors.transpose() * local;
    for (Eigen::Index e = 0; e < size; ++e) {
      coeffs(e) *= std::polar(1.0, -t * (block.eigenvalues(e) - shift));
    }
    local = block.eigenvectors * coeffs;
    for (Eigen::Index i = 0; i < size; ++i) {
      state[block.indices[static_cast<std::size_t>(i)]] = local(i);
    }
  }
}

double exact_sector_ground(const PairingModel& model, int pairs) {
  if (pairs < 0 || pairs > model.n_levels) {
    throw Error(ErrorCode::kEmptySector,
                "no " + std::to_string(pairs) + "-pair sector on " +
                    std::to_string(model.n_levels) + " levels");
  }
  return PairingSpectrum(model).ground_energy(pairs);
}

void time_evolve(StateVector& state, const PairingModel& model, double t,
                 const EvolutionOptions& options) {
  if (options.mode == EvolutionMode::kDense) {
    PairingSpectrum(model).evolve(state, t);
    return;
  }
  if (options.trotter_steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Trotter steps must be >= 1");
  }
  model.validate();
  const double tau = t / options.trotter_steps;
  const double theta = -2.0 * tau * model.g;
  for (int step = 0; step < options.trotter_steps; ++step) {
    apply_diagonal(state, [&](std::uint64_t k) {
      return -tau * diagonal_energy(model, k);
    });
    if (model.g == 0.0) continue;
    for (int p = 0; p < model.n_levels; ++p) {
      for (int q = p + 1; q < model.n_levels; ++q) {
        apply_xx_yy_rotation(state, p, q, theta);
      }
    }
  }
}

double gershgorin_bound(const PairingModel& model) {
  model.validate();
  const std::uint64_t dim = std::uint64_t{1} << model.n_levels;
  double bound = 0.0;
  for (std::uint64_t k = 0; k < dim; ++k) {
    const int pairs = popcount(k);
    const double hops = static_cast<double>(pairs) * (model.n_levels - pairs);
    bound = std::max(bound, std::abs(diagonal_energy(model, k)) + model.g * hops);
  }
  return bound;
}

}  // namespace symres
