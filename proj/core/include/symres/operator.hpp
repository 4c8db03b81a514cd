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

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "symres/state_vector.hpp"

namespace symres {

/// Opaque "apply to state" handle. `unitary` is a promise made by whoever
/// builds the handle; circuits that need a unitary check it.
struct Operator {
  std::string name;
  std::function<void(StateVector&)> apply;
  bool unitary = false;

  StateVector operator()(StateVector state) const {
    apply(state);
    return state;
  }
};

Operator identity_operator();

/// <psi| op |psi>.
Complex expectation(const StateVector& state, const Operator& op);

/// Applies `op` to the system slice of a composite register in which the
/// system occupies the low `n_system` qubits and the ancilla register the
/// high ones, but only where the ancilla register holds `ancilla_value`.
/// This is the amplitude-slice realization of a multi-controlled operator
/// whose open/filled controls spell out `ancilla_value` in binary.
void apply_controlled_on_value(StateVector& composite, int n_system,
                               std::uint64_t ancilla_value, const Operator& op);

/// |psi> (x) |0...0>_ancilla with the ancilla in the high qubits.
StateVector append_ancillas(const StateVector& system, int n_ancilla);

}  // namespace symres
