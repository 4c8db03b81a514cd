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

#include "symres/operator.hpp"

#include <algorithm>
#include <vector>

namespace symres {

Operator identity_operator() {
  return {"I", [](StateVector&) {}, true};
}

Complex expectation(const StateVector& state, const Operator& op) {
  return inner_product(state, op(state));
}

void apply_controlled_on_value(StateVector& composite, int n_system,
                               std::uint64_t ancilla_value,
                               const Operator& op) {
  if (n_system < 1 || n_system >= composite.n_qubits()) {
    throw Error(ErrorCode::kInvalidArgument,
                "system register must be a strict low part of the composite");
  }
  const std::size_t slice = std::size_t{1} << n_system;
  const std::uint64_t n_values = composite.dim() / slice;
  if (ancilla_value >= n_values) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "ancilla value " + std::to_string(ancilla_value) +
                    " out of range");
  }
  auto amps = composite.amplitudes();
  auto block = amps.subspan(ancilla_value * slice, slice);
  std::vector<Complex> buffer(block.begin(), block.end());
  StateVector sub = StateVector::from_amplitudes(std::move(buffer));
  op.apply(sub);
  std::ranges::copy(sub.amplitudes(), block.begin());
}

StateVector append_ancillas(const StateVector& system, int n_ancilla) {
  if (n_ancilla < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative ancilla count");
  }
  std::vector<Complex> amps(system.dim() << n_ancilla, Complex{0.0, 0.0});
  std::ranges::copy(system.amplitudes(), amps.begin());
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace symres
