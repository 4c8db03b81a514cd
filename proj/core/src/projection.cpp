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

#include "symres/projection.hpp"

#include <cmath>
#include <string>

namespace symres {

namespace {

std::vector<LcuTerm> oracle_terms(std::span<const LcuTerm> projector,
                                  const OraclePhases& phases) {
  const Complex diff = phases.good() - phases.bad();
  std::vector<LcuTerm> terms;
  terms.reserve(projector.size());
  for (const auto& t : projector) terms.push_back({diff * t.coefficient, t.phase});
  // phi_0 = 0, so the identity part lands on the first term.
  terms.front().coefficient += phases.bad();
  return terms;
}

void check_same_size(const StateVector& state, const SymmetryLadder& ladder) {
  if (state.n_qubits() != ladder.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state has " + std::to_string(state.n_qubits()) +
                    " qubits, symmetry is defined on " +
                    std::to_string(ladder.n_qubits()));
  }
}

}  // namespace

LcuDecomposition build_projector(const SymmetryLadder& ladder, std::size_t alpha) {
  if (alpha >= ladder.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sector " + std::to_string(alpha) + " not on a ladder of size " +
                    std::to_string(ladder.size()));
  }
  const int big_m = ladder.max_m();
  const double norm = 1.0 / (big_m + 1);
  const double target = ladder.eigenvalue(alpha);  // xi_alpha + lambda1
  LcuDecomposition out{ladder, alpha, {}};
  out.terms.reserve(static_cast<std::size_t>(big_m) + 1);
  for (int k = 0; k <= big_m; ++k) {
    const double phi_k =
        2.0 * std::numbers::pi * k / (ladder.spacing() * (big_m + 1));
    out.terms.push_back({norm * std::polar(1.0, -phi_k * target), phi_k});
  }
  return out;
}

void OraclePhases::validate() const {
  if (std::abs(good() - bad()) < 1e-12) {
    throw Error(ErrorCode::kDegenerateOracle,
                "oracle phases phi and mu coincide (mod 2 pi)");
  }
}

OracleDecomposition build_oracle(const LcuDecomposition& projector,
                                 const OraclePhases& phases) {
  phases.validate();
  return {projector, phases, oracle_terms(projector.terms, phases)};
}

StateVector apply_lcu(const StateVector& state, std::span<const LcuTerm> terms,
                      const PhaseEvolution& evolver) {
  StateVector acc = state;
  for (auto& c : acc.amplitudes()) c = 0.0;
  for (const auto& t : terms) {
    StateVector v = state;
    evolver.apply(v, t.phase);
    auto dst = acc.amplitudes();
    auto src = v.amplitudes();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += t.coefficient * src[k];
  }
  return acc;
}

Operator projector_operator(const LcuDecomposition& projector,
                            const PhaseEvolution& evolver) {
  return {"P[" + std::string(to_string(projector.ladder.label())) + "=" +
              projector.ladder.sector_label(projector.target) + "]",
          [terms = projector.terms, evolver](StateVector& s) {
            s = apply_lcu(s, terms, evolver);
          },
          false};
}

Operator oracle_operator(const OracleDecomposition& oracle,
                         const PhaseEvolution& evolver) {
  return {"O[" + std::string(to_string(oracle.base.ladder.label())) + "=" +
              oracle.base.ladder.sector_label(oracle.base.target) + "]",
          [terms = oracle.terms, evolver](StateVector& s) {
            s = apply_lcu(s, terms, evolver);
          },
          true};
}

ProjectedExpectation projected_expectation_lcu(const StateVector& state,
                                               const Operator& observable,
                                               const LcuDecomposition& projector,
                                               const PhaseEvolution& evolver,
                                               double floor) {
  check_same_size(state, projector.ladder);
  ProjectedExpectation out{{0.0, 0.0}, {0.0, 0.0}};
  for (const auto& t : projector.terms) {
    StateVector v = state;
    evolver.apply(v, t.phase);
    out.norm += t.coefficient * inner_product(state, v);
    out.numerator += t.coefficient * inner_product(state, observable(std::move(v)));
  }
  if (std::abs(out.norm) < floor) {
    throw Error(ErrorCode::kEmptySector,
                "sector weight " + std::to_string(std::abs(out.norm)) +
                    " below floor");
  }
  return out;
}

Complex projected_expectation_oracle_ratio(const StateVector& state,
                                           const Operator& observable,
                                           const OracleDecomposition& oracle,
                                           const PhaseEvolution& evolver,
                                           double floor) {
  check_same_size(state, oracle.base.ladder);
  const StateVector o_psi = apply_lcu(state, oracle.terms, evolver);
  const Complex ao = inner_product(state, observable(o_psi));
  const Complex a = expectation(state, observable);
  const Complex o = inner_product(state, o_psi);
  const Complex bad = oracle.phases.bad();
  const Complex denominator = o - bad * state.norm_squared();
  if (std::abs(denominator) < floor) {
    throw Error(ErrorCode::kEmptySector,
                "oracle denominator " + std::to_string(std::abs(denominator)) +
                    " below floor");
  }
  return (ao - bad * a) / denominator;
}

HadamardEstimate hadamard_test(const StateVector& state,
                               std::span<const Operator> controlled_ops,
                               Part part, std::optional<Sampling> sampling) {
  for (const auto& op : controlled_ops) {
    if (!op.unitary) {
      throw Error(ErrorCode::kNonUnitary,
                  "Hadamard test needs unitary operators, got '" + op.name + "'");
    }
  }
  const int n = state.n_qubits();
  StateVector reg = append_ancillas(state, 1);
  apply_gate(reg, gates::h(n));
  if (part == Part::kImag) {
    apply_gate(reg, gates::phase(n, -std::numbers::pi / 2));
  }
  for (const auto& op : controlled_ops) apply_controlled_on_value(reg, n, 1, op);
  apply_gate(reg, gates::h(n));

  HadamardEstimate out;
  out.p1 = probability_one(reg, n);
  out.p0 = 1.0 - out.p1;
  if (sampling) {
    const ShotCounts counts = sample_qubit(reg, n, sampling->n_shots, sampling->seed);
    out.value = counts.bias();
    out.shots_used = counts.total();
  } else {
    out.value = out.p0 - out.p1;
  }
  return out;
}

Complex hadamard_expectation(const StateVector& state,
                             std::span<const Operator> controlled_ops,
                             std::optional<Sampling> sampling) {
  std::optional<Sampling> imag_sampling = sampling;
  if (imag_sampling) imag_sampling->seed = derive_seed(imag_sampling->seed, 1);
  const double re = hadamard_test(state, controlled_ops, Part::kReal, sampling).value;
  const double im =
      hadamard_test(state, controlled_ops, Part::kImag, imag_sampling).value;
  return {re, im};
}

PhaseScan oracle_phase_scan(const StateVector& state,
                            const LcuDecomposition& projector,
                            const PhaseEvolution& evolver,
                            std::span<const double> phis,
                            std::span<const double> mus) {
  check_same_size(state, projector.ladder);
  PhaseScan scan{{phis.begin(), phis.end()}, {mus.begin(), mus.end()}, {}, {}};
  for (const auto& t : projector.terms) {
    StateVector v = state;
    evolver.apply(v, t.phase);
    scan.term_expectations.push_back(inner_product(state, v));
  }
  scan.values.reserve(phis.size() * mus.size());
  for (double phi : phis) {
    for (double mu : mus) {
      const auto terms = oracle_terms(projector.terms, {phi, mu});
      Complex o{0.0, 0.0};
      for (std::size_t k = 0; k < terms.size(); ++k) {
        o += terms[k].coefficient * scan.term_expectations[k];
      }
      scan.values.push_back(o.real());
    }
  }
  return scan;
}

}  // namespace symres
