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

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "symres/symmetry.hpp"

namespace symres {

SpinEigenbasis::SpinEigenbasis(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxExactSpinQubits) {
    throw Error(ErrorCode::kTooLarge,
                "exact S^2 eigendecomposition supports 1.." +
                    std::to_string(kMaxExactSpinQubits) + " qubits, got " +
                    std::to_string(n_qubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  // S^2 only permutes bits, so it never changes the popcount.
  blocks_.resize(static_cast<std::size_t>(n_qubits) + 1);
  std::vector<std::size_t> position(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    auto& idx = blocks_[static_cast<std::size_t>(popcount(k))].indices;
    position[k] = idx.size();
    idx.push_back(k);
  }
  const double constant = n_qubits * (4.0 - n_qubits) / 4.0;
  for (auto& block : blocks_) {
    const auto size = static_cast<Eigen::Index>(block.indices.size());
    Eigen::MatrixXd s2 = Eigen::MatrixXd::Identity(size, size) * constant;
    for (Eigen::Index col = 0; col < size; ++col) {
      const std::uint64_t k = block.indices[static_cast<std::size_t>(col)];
      for (int i = 0; i < n_qubits; ++i) {
        for (int j = i + 1; j < n_qubits; ++j) {
          const bool di = (k >> i) & 1U, dj = (k >> j) & 1U;
          const std::uint64_t swapped =
              di == dj ? k : k ^ (std::uint64_t{1} << i) ^ (std::uint64_t{1} << j);
          s2(static_cast<Eigen::Index>(position[swapped]), col) += 1.0;
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s2);
    block.eigenvalues = solver.eigenvalues();
    block.eigenvectors = solver.eigenvectors();
    // Snap to the exact S(S+1) values.
    for (Eigen::Index e = 0; e < size; ++e) {
      const double lam = block.eigenvalues(e);
      const double s = std::round(std::sqrt(1.0 + 4.0 * lam) - 1.0) / 2.0;
      block.eigenvalues(e) = s * (s + 1.0);
    }
  }
}

std::shared_ptr<const SpinEigenbasis> SpinEigenbasis::get(int n_qubits) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SpinEigenbasis>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n_qubits);
  if (it == cache.end()) {
    it = cache.emplace(n_qubits, std::make_shared<SpinEigenbasis>(n_qubits)).first;
  }
  return it->second;
}

void SpinEigenbasis::apply_phase(StateVector& state, double phi) const {
  if (state.n_qubits() != n_qubits_) {
    throw Error(ErrorCode::kDimensionMismatch, "spin eigenbasis size mismatch");
  }
  for (const auto& block : blocks_) {
    const auto size = static_cast<Eigen::Index>(block.indices.size());
    Eigen::VectorXcd local(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      local(i) = state[block.indices[static_cast<std::size_t>(i)]];
    }
    Eigen::VectorXcd coeffs = block.eigenvectors.transpose() * local;
    for (Eigen::Index e = 0; e < size; ++e) {
      coeffs(e) *= std::polar(1.0, phi * block.eigenvalues(e));
    }
    local = block.eigenvectors * coeffs;
    for (Eigen::Index i = 0; i < size; ++i) {
      state[block.indices[static_cast<std::size_t>(i)]] = local(i);
    }
  }
}

StateVector SpinEigenbasis::project(const StateVector& state,
                                    double lambda) const {
  if (state.n_qubits() != n_qubits_) {
    throw Error(ErrorCode::kDimensionMismatch, "spin eigenbasis size mismatch");
  }
  StateVector out = state;
  for (const auto& block : blocks_) {
    const auto size = static_cast<Eigen::Index>(block.indices.size());
    Eigen::VectorXcd local(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      local(i) = state[block.indices[static_cast<std::size_t>(i)]];
    }
    Eigen::VectorXcd coeffs = block.eigenvectors.transpose() * local;
    for (Eigen::Index e = 0; e < size; ++e) {
      if (std::abs(block.eigenvalues(e) - lambda) > 1e-9) coeffs(e) = 0.0;
    }
    local = block.eigenvectors * coeffs;
    for (Eigen::Index i = 0; i < size; ++i) {
      out[block.indices[static_cast<std::size_t>(i)]] = local(i);
    }
  }
  return out;
}

}  // namespace symres
