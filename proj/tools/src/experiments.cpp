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


#include "symres/tools/experiments.hpp"

#include <cmath>
#include <future>
#include <numbers>

#include "symres/pairing_model.hpp"
#include "symres/qvap.hpp"

namespace symres::tools {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PhaseEvolution evolver_for(const ExperimentConfig& c) {
  const Symmetry s = parse_symmetry(c.symmetry);
  if (c.realization == "trotter") return PhaseEvolution::trotter(c.trotter_steps);
  return PhaseEvolution::exact(s);
}

ObjectiveRoute route_for(const std::string& r) {
  if (r == "lcu-terms") return ObjectiveRoute::kLcuTerms;
  if (r == "lcu-circuit") return ObjectiveRoute::kLcuCircuit;
  if (r == "mask") return ObjectiveRoute::kClassicalMask;
  return ObjectiveRoute::kOracleRatio;
}

std::vector<double> grid(int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = kTwoPi * i / points;
  return out;
}

double exact_weight(const StateVector& psi, const SymmetryLadder& ladder,
                    std::size_t alpha) {
  return project_exact(psi, ladder, alpha).norm_squared();
}

}  // namespace

std::size_t find_sector(const SymmetryLadder& ladder, const std::string& label) {
  for (std::size_t a = 0; a < ladder.size(); ++a) {
    if (ladder.sector_label(a) == label) return a;
  }
  throw Error(ErrorCode::kConfig, "no sector '" + label + "' for symmetry " +
                                      std::string(to_string(ladder.label())) + " on " +
                                      std::to_string(ladder.n_qubits()) + " qubits");
}

StateVector half_filled_hadamard_state(int n_qubits) {
  StateVector s(n_qubits);
  for (int q = 0; q < n_qubits / 2; ++q) apply_gate(s, gates::x(q));
  for (int q = 0; q < n_qubits; ++q) apply_gate(s, gates::h(q));
  return s;
}

Table run_shots_convergence(const ExperimentConfig& c) {
  c.validate();
  const SymmetryLadder ladder = make_ladder(parse_symmetry(c.symmetry), c.n_qubits);
  const auto oracle = build_oracle(build_projector(ladder, find_sector(ladder, c.target)),
                                   {c.oracle_phi, c.oracle_mu});
  const Operator ops[] = {oracle_operator(oracle, evolver_for(c))};
  const StateVector psi = StateVector::equiprobable(c.n_qubits);
  const double exact = hadamard_test(psi, ops, Part::kReal).value;

  Table t{{"N_e", "estimate", "exact", "errbar"}, {}};
  for (std::size_t i = 0; i < c.shots.size(); ++i) {
    const std::int64_t n = c.shots[i];
    const auto est =
        hadamard_test(psi, ops, Part::kReal, Sampling{n, derive_seed(c.seed, i)});
    t.add_row({n, est.value, exact, 1.0 / std::sqrt(static_cast<double>(n))});
  }
  return t;
}

Table run_phase_scan(const ExperimentConfig& c) {
  c.validate();
  const SymmetryLadder ladder = make_ladder(parse_symmetry(c.symmetry), c.n_qubits);
  const auto projector = build_projector(ladder, find_sector(ladder, c.target));
  const auto phis = grid(c.phi_points);
  const auto mus = grid(c.mu_points);
  const PhaseScan scan = oracle_phase_scan(StateVector::equiprobable(c.n_qubits),
                                           projector, evolver_for(c), phis, mus);
  Table t{{"phi", "mu", "re_oracle", "degenerate"}, {}};
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t j = 0; j < mus.size(); ++j) {
      const bool degenerate =
          std::abs(std::polar(1.0, phis[i]) - std::polar(1.0, mus[j])) < 1e-12;
      t.add_row({phis[i], mus[j], scan.at(i, j), std::int64_t{degenerate}});
    }
  }
  return t;
}

Table phase_scan_special_points(const ExperimentConfig& c) {
  c.validate();
  const SymmetryLadder ladder = make_ladder(parse_symmetry(c.symmetry), c.n_qubits);
  const std::size_t alpha = find_sector(ladder, c.target);
  const auto projector = build_projector(ladder, alpha);
  const StateVector psi = StateVector::equiprobable(c.n_qubits);
  const double good = exact_weight(psi, ladder, alpha);
  const double bad = psi.norm_squared() - good;

  const double pi = std::numbers::pi;
  const std::vector<double> phis = {0.0, pi / 2, pi};
  const std::vector<double> mus = {pi / 2, 0.0};
  const PhaseScan scan = oracle_phase_scan(psi, projector, evolver_for(c), phis, mus);

  Table t{{"point", "phi", "mu", "re_oracle", "expected"}, {}};
  t.add_row({std::string("good-weight"), 0.0, pi / 2, scan.at(0, 0), good});
  t.add_row({std::string("bad-weight"), pi / 2, 0.0, scan.at(1, 1), bad});
  t.add_row({std::string("grover"), pi, 0.0, scan.at(2, 1), bad - good});
  return t;
}

Table run_sector_decomposition(const ExperimentConfig& c) {
  c.validate();
  const Symmetry sym = parse_symmetry(c.symmetry);
  const SymmetryLadder ladder = make_ladder(sym, c.n_qubits);
  const StateVector psi = sym == Symmetry::kSpin ? half_filled_hadamard_state(c.n_qubits)
                                                 : StateVector::equiprobable(c.n_qubits);
  const PhaseEvolution evolver = evolver_for(c);
  const Operator identity = identity_operator();

  Table t{{"sector", "weight_lcu", "weight_exact"}, {}};
  for (std::size_t a = 0; a < ladder.size(); ++a) {
    const auto p = projected_expectation_lcu(psi, identity, build_projector(ladder, a),
                                             evolver, 0.0);
    t.add_row({ladder.sector_label(a), p.norm.real(), exact_weight(psi, ladder, a)});
  }
  return t;
}

Table run_qvap(const ExperimentConfig& c) {
  c.validate();
  ObjectiveSettings settings;
  settings.route = route_for(c.route);
  settings.phases = {c.oracle_phi, c.oracle_mu};
  if (c.qvap_shots > 0) settings.sampling = Sampling{c.qvap_shots, c.seed};
  OptimizerConfig opt;
  opt.seed = c.seed;
  opt.restarts = c.restarts;
  opt.max_iterations = c.max_iterations;

  struct Row {
    double energy, exact;
  };
  std::vector<std::future<Row>> jobs;
  for (double g : c.g) {
    jobs.push_back(std::async(std::launch::async, [=] {
      const PairingModel model{c.n_qubits, c.delta_e, g};
      const QvapResult r = minimize(model, c.pairs, settings, opt);
      return Row{r.energy, exact_sector_ground(model, c.pairs)};
    }));
  }
  Table t{{"g", "E_qvap_oracle", "E_exact_sector", "gap"}, {}};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Row r = jobs[i].get();
    t.add_row({c.g[i], r.energy, r.exact, r.energy - r.exact});
  }
  return t;
}

Table run_experiment(const ExperimentConfig& c) {
  c.validate();
  if (c.experiment == "shots-convergence") return run_shots_convergence(c);
  if (c.experiment == "phase-scan") return run_phase_scan(c);
  if (c.experiment == "sector-decomposition") return run_sector_decomposition(c);
  return run_qvap(c);
}

}  // namespace symres::tools
