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


#include "symres/generating_function.hpp"

#include <cmath>
#include <string>

namespace symres {

namespace {

Operator z_rotation(int p, double angle) {
  // exp(-i angle Z_p)
  return {"exp(-i Z)", [p, angle](StateVector& s) { apply_gate(s, gates::rz(p, 2.0 * angle)); },
          true};
}

Operator hop_rotation(int p, int q, double angle) {
  // exp(-i angle (X_p X_q + Y_p Y_q) / 2)
  return {"exp(-i K)",
          [p, q, angle](StateVector& s) { apply_xx_yy_rotation(s, p, q, 2.0 * angle); },
          true};
}

// i (F(pi/2) - F(-pi/2)) / 2 for a generator with spectrum in {-1, 0, 1}.
double shifted_expectation(const GeneratingFunction& f, const Operator& plus,
                           const Operator& minus) {
  const Complex d = f.projected(plus) - f.projected(minus);
  return (Complex{0.0, 1.0} * d / 2.0).real();
}

}  // namespace

double spectral_center(const PairingModel& model) {
  return pairing_terms(model).constant;
}

GeneratingFunction::GeneratingFunction(StateVector state, const PairingModel& model,
                                       const LcuDecomposition& projector,
                                       const PhaseEvolution& evolver,
                                       GeneratingFunctionOptions options)
    : state_(std::move(state)),
      spectrum_(model),
      oracle_(oracle_operator(build_oracle(projector, options.phases), evolver)),
      phases_(options.phases),
      shift_(options.shift),
      sampling_(options.sampling) {
  if (state_.n_qubits() != model.n_levels ||
      projector.ladder.n_qubits() != model.n_levels) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state, projector and model must share " +
                    std::to_string(model.n_levels) + " qubits");
  }
}

Complex GeneratingFunction::oracle_pair(const Operator& v) const {
  std::optional<Sampling> s1, s2;
  if (sampling_) {
    s1 = Sampling{sampling_->n_shots, derive_seed(sampling_->seed, stream_++)};
    s2 = Sampling{sampling_->n_shots, derive_seed(sampling_->seed, stream_++)};
    shots_used_ += 4 * sampling_->n_shots;
  }
  const Operator with_oracle[] = {oracle_, v};
  const Operator alone[] = {v};
  const Complex uo = hadamard_expectation(state_, with_oracle, s1);
  const Complex u = hadamard_expectation(state_, alone, s2);
  return (uo - phases_.bad() * u) / (phases_.good() - phases_.bad());
}

Complex GeneratingFunction::projected(const Operator& v) const { return oracle_pair(v); }

Complex GeneratingFunction::operator()(double t) const {
  const Operator u{"exp(-i t H)",
                   [this, t](StateVector& s) { spectrum_.evolve(s, t, shift_); }, true};
  return oracle_pair(u);
}

GeneratingFunctionSeries GeneratingFunction::series(std::span<const double> times) const {
  GeneratingFunctionSeries out{{times.begin(), times.end()}, {}, (*this)(0.0)};
  out.values.reserve(times.size());
  for (double t : times) out.values.push_back(t == 0.0 ? out.norm : (*this)(t));
  return out;
}

double projected_energy_via_generating_function(const StateVector& state,
                                                const PairingModel& model,
                                                const LcuDecomposition& projector,
                                                double dt, DerivativeMethod method,
                                                const GeneratingFunctionOptions& options) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dt must be positive");
  }
  const GeneratingFunction f(state, model, projector,
                             PhaseEvolution::exact(projector.ladder.label()), options);
  const Complex norm = f(0.0);
  if (std::abs(norm) < options.floor) {
    throw Error(ErrorCode::kEmptySector,
                "sector weight " + std::to_string(std::abs(norm)) + " below floor");
  }

  if (method == DerivativeMethod::kFiniteDifference) {
    const Complex derivative = (f(dt) - f(-dt)) / (2.0 * dt);
    return (Complex{0.0, 1.0} * derivative / norm).real() + f.shift();
  }

  const double quarter = std::numbers::pi / 2;
  const PairingTerms terms = pairing_terms(model);
  double energy = terms.constant * norm.real();
  for (const auto& z : terms.z_terms) {
    energy += z.coeff * shifted_expectation(f, z_rotation(z.p, quarter),
                                            z_rotation(z.p, -quarter));
  }
  for (const auto& h : terms.hop_terms) {
    energy += h.coeff * shifted_expectation(f, hop_rotation(h.p, h.q, quarter),
                                            hop_rotation(h.p, h.q, -quarter));
  }
  return energy / norm.real();
}

}  // namespace symres
