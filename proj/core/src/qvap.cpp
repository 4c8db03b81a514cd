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


#include "symres/qvap.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

namespace symres {

namespace {

void check_pairs(const PairingModel& model, int pairs) {
  model.validate();
  if (pairs < 0 || pairs > model.n_levels) {
    throw Error(ErrorCode::kEmptySector,
                "no " + std::to_string(pairs) + "-pair sector on " +
                    std::to_string(model.n_levels) + " levels");
  }
}

struct PauliTerm {
  double coeff;
  Operator op;
};

Operator pauli_string(std::string name, std::vector<Gate> gs) {
  return {std::move(name),
          [gs = std::move(gs)](StateVector& s) {
            for (const auto& g : gs) apply_gate(s, g);
          },
          true};
}

std::vector<PauliTerm> pauli_terms(const PairingModel& model) {
  const PairingTerms t = pairing_terms(model);
  std::vector<PauliTerm> out;
  for (const auto& z : t.z_terms) {
    out.push_back({z.coeff, pauli_string("Z", {gates::z(z.p)})});
  }
  for (const auto& h : t.hop_terms) {
    out.push_back({h.coeff / 2, pauli_string("XX", {gates::x(h.p), gates::x(h.q)})});
    out.push_back({h.coeff / 2, pauli_string("YY", {gates::y(h.p), gates::y(h.q)})});
  }
  return out;
}

double masked_energy(const PairingModel& model, const StateVector& psi, int pairs,
                     double floor) {
  StateVector g = psi;
  for (std::uint64_t k = 0; k < g.dim(); ++k) {
    if (popcount(k) != pairs) g[k] = 0.0;
  }
  const double w = g.norm_squared();
  if (w < floor) {
    throw Error(ErrorCode::kEmptySector,
                "sector weight " + std::to_string(w) + " below floor");
  }
  return inner_product(g, apply_hamiltonian(model, g)).real() / w;
}

}  // namespace

StateVector ansatz_state(std::span<const double> thetas) {
  const int n = static_cast<int>(thetas.size());
  StateVector s(n);
  for (std::uint64_t k = 0; k < s.dim(); ++k) {
    double a = 1.0;
    for (int i = 0; i < n; ++i) {
      a *= ((k >> i) & 1U) ? std::sin(thetas[static_cast<std::size_t>(i)])
                           : std::cos(thetas[static_cast<std::size_t>(i)]);
    }
    s[k] = a;
  }
  return s;
}

double mean_pair_number(std::span<const double> thetas) {
  double acc = 0.0;
  for (double t : thetas) acc += std::sin(t) * std::sin(t);
  return acc;
}

std::vector<double> default_initial_thetas(int n_levels, int pairs) {
  if (n_levels < 1 || pairs < 0 || pairs > n_levels) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 <= pairs <= n_levels, got " + std::to_string(pairs));
  }
  const double theta =
      std::asin(std::sqrt(static_cast<double>(pairs) / static_cast<double>(n_levels)));
  return std::vector<double>(static_cast<std::size_t>(n_levels), theta);
}

QvapObjective::QvapObjective(const PairingModel& model, int pairs,
                             ObjectiveSettings settings)
    : model_((check_pairs(model, pairs), model)),
      pairs_(pairs),
      settings_(settings),
      projector_(build_projector(number_ladder(model.n_levels),
                                 static_cast<std::size_t>(pairs))),
      oracle_(build_oracle(projector_, settings.phases)),
      evolver_(PhaseEvolution::exact(Symmetry::kNumber)),
      hamiltonian_(hamiltonian_operator(model)) {
  if (settings_.sampling && settings_.route != ObjectiveRoute::kOracleRatio) {
    throw Error(ErrorCode::kInvalidArgument,
                "shot sampling is only available on the oracle route");
  }
  if (settings_.route == ObjectiveRoute::kLcuCircuit) {
    plan_ = make_lcu_plan(projector_, evolver_, Unprepare::kEDagger);
  }
}

double QvapObjective::sector_weight(std::span<const double> thetas) const {
  const StateVector psi = ansatz_state(thetas);
  Complex w{0.0, 0.0};
  for (const auto& t : projector_.terms) {
    StateVector v = psi;
    evolver_.apply(v, t.phase);
    w += t.coefficient * inner_product(psi, v);
  }
  return w.real();
}

double QvapObjective::operator()(std::span<const double> thetas) const {
  if (static_cast<int>(thetas.size()) != model_.n_levels) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(model_.n_levels) + " angles, got " +
                    std::to_string(thetas.size()));
  }
  ++evaluations_;
  const StateVector psi = ansatz_state(thetas);
  switch (settings_.route) {
    case ObjectiveRoute::kOracleRatio:
      if (settings_.sampling) return sampled_ratio(psi);
      return projected_expectation_oracle_ratio(psi, hamiltonian_, oracle_, evolver_,
                                                settings_.floor)
          .real();
    case ObjectiveRoute::kLcuTerms:
      return projected_expectation_lcu(psi, hamiltonian_, projector_, evolver_,
                                       settings_.floor)
          .value()
          .real();
    case ObjectiveRoute::kLcuCircuit: {
      // run_lcu's own floor is the post-selection probability, i.e. <P> here.
      if (sector_weight(thetas) < settings_.floor) {
        throw Error(ErrorCode::kEmptySector, "sector weight below floor");
      }
      const LcuResult r = run_lcu(psi, *plan_);
      return expectation(r.post_selected, hamiltonian_).real();
    }
    case ObjectiveRoute::kClassicalMask:
      return masked_energy(model_, psi, pairs_, settings_.floor);
  }
  return 0.0;
}

double QvapObjective::sampled_ratio(const StateVector& psi) const {
  const Sampling base = *settings_.sampling;
  auto next = [&] {
    shots_used_ += 2 * base.n_shots;
    return Sampling{base.n_shots, derive_seed(base.seed, stream_++)};
  };
  const Operator oracle = oracle_operator(oracle_, evolver_);
  const PairingTerms terms = pairing_terms(model_);

  const Operator just_oracle[] = {oracle};
  const Complex o = hadamard_expectation(psi, just_oracle, next());
  // The identity part of H is known exactly: c <O> and c <I>.
  Complex ho = terms.constant * o;
  Complex h = terms.constant;
  for (const auto& term : pauli_terms(model_)) {
    const Operator with_oracle[] = {oracle, term.op};
    const Operator alone[] = {term.op};
    ho += term.coeff * hadamard_expectation(psi, with_oracle, next());
    h += term.coeff * hadamard_expectation(psi, alone, next());
  }
  const Complex bad = settings_.phases.bad();
  const Complex denominator = o - bad;
  if (std::abs(denominator) < settings_.floor) {
    throw Error(ErrorCode::kEmptySector, "sampled oracle denominator below floor");
  }
  return ((ho - bad * h) / denominator).real();
}

double qvap_objective(std::span<const double> thetas, const PairingModel& model,
                      int pairs, const ObjectiveSettings& settings) {
  return QvapObjective(model, pairs, settings)(thetas);
}

namespace {

struct CallbackData {
  const QvapObjective* objective;
  std::vector<double> scratch;
  std::exception_ptr error{};
};

double gsl_objective(const gsl_vector* x, void* params) {
  auto* data = static_cast<CallbackData*>(params);
  for (std::size_t i = 0; i < data->scratch.size(); ++i) {
    data->scratch[i] = gsl_vector_get(x, i);
  }
  // Exceptions must not unwind through GSL frames.
  try {
    return (*data->objective)(data->scratch);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptySector) data->error = std::current_exception();
  } catch (...) {
    data->error = std::current_exception();
  }
  return std::numeric_limits<double>::infinity();
}

struct RunOutcome {
  std::vector<double> thetas;
  double energy;
  bool converged;
};

RunOutcome nelder_mead(const QvapObjective& objective, const std::vector<double>& start,
                       const OptimizerConfig& config, QvapResult& log) {
  const std::size_t n = start.size();
  CallbackData data{&objective, std::vector<double>(n)};
  gsl_multimin_function f{&gsl_objective, n, &data};

  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* step = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x, i, start[i]);
  gsl_vector_set_all(step, config.initial_step);
  gsl_multimin_fminimizer* s =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &f, x, step);

  auto release = [&] {
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(step);
    gsl_vector_free(x);
  };
  if (data.error) {
    release();
    std::rethrow_exception(data.error);
  }
  bool converged = false;
  for (int it = 0; it < config.max_iterations; ++it) {
    const int status = gsl_multimin_fminimizer_iterate(s);
    if (data.error) {
      release();
      std::rethrow_exception(data.error);
    }
    if (status != GSL_SUCCESS) break;
    ++log.iterations;
    const double best = std::min(s->fval, log.trajectory.empty()
                                              ? s->fval
                                              : log.trajectory.back());
    log.trajectory.push_back(best);
    for (std::size_t i = 0; i < n; ++i) data.scratch[i] = gsl_vector_get(s->x, i);
    log.sector_weights.push_back(objective.sector_weight(data.scratch));
    const double size = gsl_multimin_fminimizer_size(s);
    if (gsl_multimin_test_size(size, config.size_tolerance) == GSL_SUCCESS) {
      converged = true;
      break;
    }
  }

  RunOutcome out{std::vector<double>(n), s->fval, converged};
  for (std::size_t i = 0; i < n; ++i) out.thetas[i] = gsl_vector_get(s->x, i);
  release();
  return out;
}

}  // namespace

QvapResult minimize(const QvapObjective& objective, std::vector<double> initial,
                    const OptimizerConfig& config) {
  if (config.max_iterations < 1 || config.restarts < 0 || !(config.initial_step > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid optimizer configuration");
  }
  // Throws kEmptySector / kDimensionMismatch up front.
  const std::int64_t evals_before = objective.evaluations();
  const std::int64_t shots_before = objective.shots_used();
  const double start_energy = objective(initial);

  gsl_set_error_handler_off();
  QvapResult result;
  result.thetas = initial;
  result.energy = start_energy;
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> jitter(0.0, config.restart_spread);

  std::vector<double> start = std::move(initial);
  for (int run = 0; run <= config.restarts; ++run) {
    const RunOutcome r = nelder_mead(objective, start, config, result);
    if (r.energy < result.energy) {
      result.energy = r.energy;
      result.thetas = r.thetas;
    }
    result.converged = r.converged;
    start = result.thetas;
    for (double& t : start) t += jitter(rng);
  }
  result.evaluations = objective.evaluations() - evals_before;
  result.shots_used = objective.shots_used() - shots_before;
  return result;
}

QvapResult minimize(const PairingModel& model, int pairs,
                    const ObjectiveSettings& settings, const OptimizerConfig& config) {
  const QvapObjective objective(model, pairs, settings);
  return minimize(objective, default_initial_thetas(model.n_levels, pairs), config);
}

}  // namespace symres
