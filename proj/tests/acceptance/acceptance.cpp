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


// Acceptance suite. One line per criterion:
//
//   [PASS] AC1 sector weights ... (0.01 s)
//
// `acceptance --criterion N` runs a single criterion. The exit code is
// nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "symres/generating_function.hpp"
#include "symres/lcu_circuit.hpp"
#include "symres/qvap.hpp"

namespace {

using namespace symres;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
constexpr double kWeight = 70.0 / 256.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

StateVector masked(const StateVector& s, int pairs) {
  StateVector out = s;
  for (std::uint64_t k = 0; k < out.dim(); ++k) {
    if (popcount(k) != pairs) out[k] = 0.0;
  }
  return out;
}

Operator dense_operator(const Eigen::MatrixXcd& m, std::string name) {
  return {std::move(name),
          [m](StateVector& s) {
            Eigen::Map<Eigen::VectorXcd> v(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
            const Eigen::VectorXcd r = m * v;
            v = r;
          },
          false};
}

Eigen::MatrixXcd materialize(const std::function<void(StateVector&)>& f, int n) {
  const auto d = Eigen::Index{1} << n;
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    StateVector s = StateVector::basis(n, static_cast<std::uint64_t>(k));
    f(s);
    for (Eigen::Index r = 0; r < d; ++r) m(r, k) = s[static_cast<std::size_t>(r)];
  }
  return m;
}

StateVector spin_target_state() {
  StateVector s(8);
  for (int q = 0; q < 4; ++q) apply_gate(s, gates::x(q));
  for (int q = 0; q < 8; ++q) apply_gate(s, gates::h(q));
  return s;
}

// Least-squares slope of log(err) against log(n_t).
double loglog_slope(const std::vector<int>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

void ac1(Outcome& o) {
  const auto t0 = Clock::now();
  const StateVector psi = StateVector::equiprobable(8);
  const SymmetryLadder ladder = number_ladder(8);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  const Operator ops[] = {oracle_operator(build_oracle(build_projector(ladder, 4), {0.0, kPi / 2}), ev)};
  const double hadamard = hadamard_test(psi, ops, Part::kReal).value;
  o.detail << "p0-p1(A=4)=" << hadamard;
  o.check(std::abs(hadamard - kWeight) < 1e-12, "A=4 weight");
  double worst = 0.0;
  for (int a = 0; a <= 8; ++a) {
    const auto r = projected_expectation_lcu(psi, identity_operator(),
                                             build_projector(ladder, static_cast<std::size_t>(a)), ev);
    worst = std::max(worst, std::abs(r.norm - binomial(8, a) / 256.0));
  }
  o.detail << " sweep max|err|=" << worst;
  o.check(worst < 1e-12, "A sweep");
  const double secs = seconds_since(t0);
  o.check(secs < 1.0, "runtime");
}

void ac2(Outcome& o) {
  const auto t0 = Clock::now();
  const StateVector psi = StateVector::equiprobable(8);
  const Operator ops[] = {oracle_operator(build_oracle(build_projector(number_ladder(8), 4), {0.0, kPi / 2}),
                                          PhaseEvolution::exact(Symmetry::kNumber))};
  int inside = 0, total = 0;
  for (int seed = 0; seed < 100; ++seed) {
    for (int e = 4; e <= 13; ++e) {
      const std::int64_t n = std::int64_t{1} << e;
      const auto est = hadamard_test(psi, ops, Part::kReal,
                                     Sampling{n, derive_seed(static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(e))});
      inside += std::abs(est.value - kWeight) < 3.0 / std::sqrt(static_cast<double>(n));
      ++total;
    }
  }
  const double frac = static_cast<double>(inside) / total;
  o.detail << "within 3/sqrt(N_e): " << inside << "/" << total;
  o.check(frac >= 0.99, "coverage");
  o.check(seconds_since(t0) < 30.0, "runtime");
}

void ac3(Outcome& o) {
  const StateVector psi = StateVector::equiprobable(8);
  const auto proj = build_projector(number_ladder(8), 4);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  std::vector<double> grid(64);
  for (int i = 0; i < 64; ++i) grid[static_cast<std::size_t>(i)] = 2 * kPi * i / 64;
  const PhaseScan scan = oracle_phase_scan(psi, proj, ev, grid, grid);
  // The two scalars, each from one oracle evaluation.
  const std::vector<double> p0 = {0.0}, p1 = {kPi / 2};
  const double g = oracle_phase_scan(psi, proj, ev, p0, p1).at(0, 0);
  const double b = oracle_phase_scan(psi, proj, ev, p1, p0).at(0, 0);
  double worst = 0.0;
  for (std::size_t i = 0; i < 64; ++i) {
    for (std::size_t j = 0; j < 64; ++j) {
      worst = std::max(worst, std::abs(scan.at(i, j) - (g * std::cos(grid[i]) + b * std::cos(grid[j]))));
    }
  }
  const double grover = scan.at(32, 0);
  o.detail << "g=" << g << " b=" << b << " grover=" << grover << " max recon err=" << worst;
  o.check(worst < 1e-12, "reconstruction");
  o.check(std::abs(g - 70.0 / 256) < 1e-12, "g");
  o.check(std::abs(b - 186.0 / 256) < 1e-12, "b");
  o.check(std::abs(grover - 116.0 / 256) < 1e-12, "grover point");
}

void ac4(Outcome& o) {
  double delta_worst = 0.0;
  for (int big_m = 0; big_m <= 16; ++big_m) {
    std::vector<int> ms(static_cast<std::size_t>(big_m) + 1);
    for (int m = 0; m <= big_m; ++m) ms[static_cast<std::size_t>(m)] = m;
    for (double a : {1.0, 2.0}) {
      const SymmetryLadder ladder(Symmetry::kNumber, 1, 0.75, a, ms);
      for (std::size_t alpha = 0; alpha < ladder.size(); ++alpha) {
        const auto p = build_projector(ladder, alpha);
        for (std::size_t beta = 0; beta < ladder.size(); ++beta) {
          Complex s{0.0, 0.0};
          for (const auto& t : p.terms) s += t.coefficient * std::polar(1.0, t.phase * ladder.eigenvalue(beta));
          delta_worst = std::max(delta_worst, std::abs(s - (alpha == beta ? 1.0 : 0.0)));
        }
      }
    }
  }
  double idem_worst = 0.0;
  for (Symmetry sym : {Symmetry::kParity, Symmetry::kNumber, Symmetry::kSpin}) {
    for (int n = 1; n <= 6; ++n) {
      const SymmetryLadder ladder = make_ladder(sym, n);
      for (std::size_t a = 0; a < ladder.size(); ++a) {
        const Operator p = projector_operator(build_projector(ladder, a), PhaseEvolution::exact(sym));
        const Eigen::MatrixXcd m = materialize(p.apply, n);
        idem_worst = std::max(idem_worst, (m * m - m).cwiseAbs().maxCoeff());
      }
    }
  }
  o.detail << "delta identity max err=" << delta_worst << " (M<=16), max |P^2-P|=" << idem_worst;
  o.check(delta_worst < 1e-12, "delta identity");
  o.check(idem_worst < 1e-12, "idempotence");
}

void ac5(Outcome& o) {
  const int n = 8;
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  const SymmetryLadder ladder = number_ladder(n);
  const std::vector<OraclePhases> phases = {{0.0, kPi / 2}, {kPi, 0.0}, {0.7, -2.1}};
  std::mt19937_64 rng(20240501);
  std::normal_distribution<double> z;
  double worst = 0.0;
  for (int inst = 0; inst < 50; ++inst) {
    std::vector<Complex> amps(256);
    for (auto& c : amps) c = {z(rng), z(rng)};
    StateVector psi = StateVector::from_amplitudes(std::move(amps));
    psi.normalize();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(256, 256);
    for (int i = 0; i < 256; ++i) {
      for (int j = i; j < 256; ++j) {
        if (popcount(static_cast<std::uint64_t>(i)) != popcount(static_cast<std::uint64_t>(j))) continue;
        const Complex v = i == j ? Complex(z(rng), 0.0) : Complex(z(rng), z(rng));
        a(i, j) = v;
        a(j, i) = std::conj(v);
      }
    }
    const Operator obs = dense_operator(a, "A");
    const int pairs = 1 + inst % 7;
    const auto proj = build_projector(ladder, static_cast<std::size_t>(pairs));

    std::vector<Complex> values;
    values.push_back(projected_expectation_lcu(psi, obs, proj, ev).value());
    for (const auto& ph : phases) {
      values.push_back(projected_expectation_oracle_ratio(psi, obs, build_oracle(proj, ph), ev));
    }
    const LcuResult post = run_lcu(psi, make_lcu_plan(proj, ev, Unprepare::kEDagger));
    values.push_back(expectation(post.post_selected, obs));
    const StateVector g = masked(psi, pairs);
    values.push_back(inner_product(g, obs(g)) / g.norm_squared());
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        worst = std::max(worst, std::abs(values[i] - values[j]));
      }
    }
  }
  o.detail << "50 instances, 3 (phi,mu) pairs, max pairwise diff=" << worst;
  o.check(worst < 1e-10, "route agreement");
}

void ac6(Outcome& o) {
  const int n = 8;
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  const auto proj = build_projector(number_ladder(n), 4);
  const auto e_plan = make_lcu_plan(proj, ev, Unprepare::kEDagger);
  const auto h_plan = make_lcu_plan(proj, ev, Unprepare::kHadamardAll);
  const double expected_ratio = static_cast<double>(1 << e_plan.n_lcu) / e_plan.k_max;

  std::mt19937_64 rng(6);
  std::normal_distribution<double> z;
  double state_worst = 0.0, ratio_worst = 0.0;
  for (int inst = 0; inst < 5; ++inst) {
    StateVector psi = StateVector::equiprobable(n);
    if (inst > 0) {
      for (auto& c : psi.amplitudes()) c = {z(rng), z(rng)};
      psi.normalize();
    }
    StateVector g = masked(psi, 4);
    g.normalize();
    const LcuResult e = run_lcu(psi, e_plan);
    const LcuResult h = run_lcu(psi, h_plan);
    for (const LcuResult* r : {&e, &h}) {
      double d = 0.0;
      for (std::size_t k = 0; k < g.dim(); ++k) d += std::norm(r->post_selected[k] - g[k]);
      state_worst = std::max(state_worst, std::sqrt(d));
    }
    ratio_worst = std::max(ratio_worst,
                           std::abs(e.success_probability / h.success_probability - expected_ratio));
  }
  o.detail << "max |post - G psi/|G psi||=" << state_worst << " E/H success ratio vs 2^n_lcu/k_max="
           << expected_ratio << " max err=" << ratio_worst;
  o.check(state_worst < 1e-10, "post-selected state");
  o.check(ratio_worst < 1e-10, "success ratio");
}

void ac7(Outcome& o) {
  const int n = 8;
  const StateVector psi = spin_target_state();
  const SymmetryLadder ladder = spin_ladder(n);

  // Dense S^2 from Pauli sums, eigenprojected.
  Eigen::MatrixXcd s2 = Eigen::MatrixXcd::Zero(256, 256);
  for (int axis = 0; axis < 3; ++axis) {
    const auto s_axis = materialize(
        [axis, n](StateVector& s) {
          StateVector acc = s;
          for (auto& c : acc.amplitudes()) c = 0.0;
          for (int q = 0; q < n; ++q) {
            StateVector t = s;
            apply_gate(t, axis == 0 ? gates::x(q) : axis == 1 ? gates::y(q) : gates::z(q));
            for (std::size_t k = 0; k < t.dim(); ++k) acc[k] += 0.5 * t[k];
          }
          s = acc;
        },
        n);
    s2 += s_axis * s_axis;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s2);
  Eigen::VectorXcd v(256);
  for (int k = 0; k < 256; ++k) v(k) = psi[static_cast<std::size_t>(k)];
  const Eigen::VectorXcd amp = es.eigenvectors().adjoint() * v;

  double exact_worst = 0.0, trotter_worst = 0.0;
  const PhaseEvolution exact = PhaseEvolution::exact(Symmetry::kSpin);
  const PhaseEvolution trotter = PhaseEvolution::trotter(kDefaultSpinTrotterSteps);
  for (std::size_t a = 0; a < ladder.size(); ++a) {
    double dense = 0.0;
    for (int k = 0; k < 256; ++k) {
      if (std::abs(es.eigenvalues()(k) - ladder.eigenvalue(a)) < 1e-8) dense += std::norm(amp(k));
    }
    const auto proj = build_projector(ladder, a);
    const double w_exact = projected_expectation_lcu(psi, identity_operator(), proj, exact, 0.0).norm.real();
    const double w_trot = projected_expectation_lcu(psi, identity_operator(), proj, trotter, 0.0).norm.real();
    exact_worst = std::max(exact_worst, std::abs(w_exact - dense));
    trotter_worst = std::max(trotter_worst, std::abs(w_trot - dense));
  }

  // Trotter error of exp(i phi S^2) at phi = 2 pi / 22, the first projector phase.
  const double phi = 2 * kPi / 22;
  const Eigen::MatrixXcd target = es.eigenvectors() *
                                  (es.eigenvalues().cast<Complex>() * Complex(0, phi)).array().exp().matrix().asDiagonal() *
                                  es.eigenvectors().adjoint();
  std::vector<int> steps = {1, 2, 4, 8, 16, 32};
  std::vector<double> op_err, state_err;
  for (int n_t : steps) {
    const PhaseEvolution tr = PhaseEvolution::trotter(n_t);
    const Eigen::MatrixXcd u = materialize([&](StateVector& s) { tr.apply(s, phi); }, n);
    const Eigen::MatrixXcd diff = u - target;
    const Eigen::MatrixXcd gram = diff.adjoint() * diff;
    op_err.push_back(std::sqrt(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(gram, Eigen::EigenvaluesOnly)
                                   .eigenvalues()
                                   .maxCoeff()));
    state_err.push_back(((u - target) * v).norm());
  }
  const double slope = loglog_slope(steps, op_err);
  const double state_slope = loglog_slope(steps, state_err);
  o.detail << "exact-mode max err=" << exact_worst << " n_t=8 max err=" << trotter_worst
           << " slope(||U_trot-U||)=" << slope << " slope(state)=" << state_slope;
  o.check(exact_worst < 1e-10, "exact weights");
  o.check(trotter_worst < 1e-3, "n_t=8 weights");
  o.check(std::abs(slope + 1.0) <= 0.2, "O(1/n_t) slope");
}

void ac8(Outcome& o) {
  const PairingModel model{8, 1.0, 0.5};
  const int pairs = 4;
  const StateVector psi = ansatz_state(default_initial_thetas(8, pairs));
  const auto proj = build_projector(number_ladder(8), pairs);
  const StateVector g = masked(psi, pairs);
  const double norm_ref = g.norm_squared();
  const double h_ref = inner_product(g, apply_hamiltonian(model, g)).real();

  const GeneratingFunction f(psi, model, proj, PhaseEvolution::exact(Symmetry::kNumber));
  const Complex f0 = f(0.0);
  auto derivative = [&](double dt) {
    return (Complex(0, 1) * (f(dt) - f(-dt)) / (2.0 * dt)).real();
  };
  const double d4 = derivative(1e-4);
  o.detail << "|F(0)-<G|G>|=" << std::abs(f0 - norm_ref) << " |iF'(0)-<G|H|G>|(dt=1e-4)="
           << std::abs(d4 - h_ref);
  o.check(std::abs(f0 - norm_ref) < 1e-8, "F(0)");
  o.check(std::abs(d4 - h_ref) < 1e-8, "iF'(0) at dt=1e-4");

  const std::vector<double> dts = {1e-2, 5e-3, 2.5e-3};
  std::vector<double> errs;
  for (double dt : dts) errs.push_back(std::abs(derivative(dt) - h_ref));
  const double r1 = errs[0] / errs[1], r2 = errs[1] / errs[2];
  o.detail << " halving ratios=" << r1 << "," << r2;
  o.check(std::abs(r1 - 4.0) < 0.4 && std::abs(r2 - 4.0) < 0.4, "second order");

  const double shift_energy = projected_energy_via_generating_function(
      psi, model, proj, 1e-3, DerivativeMethod::kParameterShift);
  o.detail << " (parameter-shift |err|=" << std::abs(shift_energy * norm_ref - h_ref) << ")";
}

void ac9(Outcome& o) {
  const auto t0 = Clock::now();
  double worst_rel = 0.0, g0_gap = 0.0;
  bool bound = true;
  for (double gval : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const PairingModel model{8, 1.0, gval};
    const QvapResult r = minimize(model, 4);
    const double exact = exact_sector_ground(model, 4);
    const double rel = (r.energy - exact) / std::abs(exact);
    bound = bound && r.energy >= exact - 1e-9;
    if (gval == 0.0) g0_gap = std::abs(r.energy - exact);
    worst_rel = std::max(worst_rel, rel);
    o.detail << "g=" << gval << ":" << rel << " ";
  }
  const double secs = seconds_since(t0);
  o.detail << "| g=0 gap=" << g0_gap;
  o.check(worst_rel < 0.01, "1% relative");
  o.check(g0_gap < 1e-6, "g=0 exact");
  o.check(bound, "variational bound");
  o.check(secs < 300.0, "runtime");
}

void ac10(Outcome& o) {
  const StateVector psi = StateVector::equiprobable(8);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  const auto proj = build_projector(number_ladder(8), 4);
  const Operator ops[] = {oracle_operator(build_oracle(proj, {0.0, kPi / 2}), ev)};
  const auto plan = make_lcu_plan(proj, ev, Unprepare::kEDagger);
  for (std::int64_t budget : {1000, 4096}) {
    const auto h = hadamard_test(psi, ops, Part::kReal, Sampling{budget, 10});
    const auto l = run_lcu_shots(psi, plan, budget, 10);
    o.detail << "budget " << budget << ": oracle used=" << h.shots_used << " discarded=" << h.shots_discarded
             << "; LCU accepted=" << l.accepted << " rejected=" << l.rejected << ". ";
    o.check(h.shots_used == budget && h.shots_discarded == 0, "oracle budget");
    o.check(l.accepted + l.rejected == budget && l.rejected > 0, "LCU rejection count");
  }
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {1, "sector-weight reproduction", ac1},
    {2, "shot-noise law", ac2},
    {3, "phase-surface law", ac3},
    {4, "projector algebra", ac4},
    {5, "route equivalence", ac5},
    {6, "LCU circuit", ac6},
    {7, "spin machinery", ac7},
    {8, "generating function", ac8},
    {9, "Q-VAP", ac9},
    {10, "no-rejection property", ac10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symres acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    o.detail.precision(3);
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " threw " << e.what();
    }
    std::printf("[%s] AC%d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
