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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dense.hpp"
#include "error_code.hpp"
#include "symres/projection.hpp"

namespace symres {
namespace {

using testing::code_of;
using testing::Mat;
using testing::Vec;

constexpr double kPi = std::numbers::pi;

Mat dense_symmetry(Symmetry s, int n) {
  switch (s) {
    case Symmetry::kParity: return testing::parity_operator(n);
    case Symmetry::kNumber: return testing::number_operator(n);
    case Symmetry::kSpin: return testing::spin_squared(n);
  }
  return {};
}

// Columns of the operator applied to every basis state.
Mat materialize(const Operator& op, int n) {
  const auto d = Eigen::Index{1} << n;
  Mat m(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    m.col(k) = testing::to_vec(op(StateVector::basis(n, static_cast<std::uint64_t>(k))));
  }
  return m;
}

TEST(Projector, DiscreteFourierDeltaIdentity) {
  for (int big_m = 0; big_m <= 16; ++big_m) {
    std::vector<int> ms(static_cast<std::size_t>(big_m) + 1);
    for (int m = 0; m <= big_m; ++m) ms[static_cast<std::size_t>(m)] = m;
    for (double a : {1.0, 2.0}) {
      const SymmetryLadder ladder(Symmetry::kNumber, 1, -0.5, a, ms);
      for (std::size_t alpha = 0; alpha < ladder.size(); ++alpha) {
        const LcuDecomposition p = build_projector(ladder, alpha);
        for (std::size_t beta = 0; beta < ladder.size(); ++beta) {
          Complex s{0.0, 0.0};
          for (const auto& t : p.terms) s += t.coefficient * std::polar(1.0, t.phase * ladder.eigenvalue(beta));
          EXPECT_LT(std::abs(s - (alpha == beta ? 1.0 : 0.0)), 1e-12)
              << "M=" << big_m << " alpha=" << alpha << " beta=" << beta;
        }
      }
    }
  }
}

TEST(Projector, CoefficientsAndPhases) {
  const LcuDecomposition p = build_projector(number_ladder(4), 2);
  ASSERT_EQ(p.terms.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    const double phi = 2 * kPi * k / 5.0;
    EXPECT_NEAR(p.terms[k].phase, phi, 1e-15);
    EXPECT_LT(std::abs(p.terms[k].coefficient - std::polar(0.2, -2.0 * phi)), 1e-15);
  }
  EXPECT_EQ(code_of([] { (void)build_projector(number_ladder(4), 5); }),
            ErrorCode::kIndexOutOfRange);
}

class DenseProjectorTest : public ::testing::TestWithParam<std::tuple<Symmetry, int>> {};

TEST_P(DenseProjectorTest, IdempotentHermitianAndEqualToEigenprojector) {
  const auto [sym, n] = GetParam();
  const SymmetryLadder ladder = make_ladder(sym, n);
  const PhaseEvolution evolver = PhaseEvolution::exact(sym);
  Mat sum = Mat::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (std::size_t a = 0; a < ladder.size(); ++a) {
    const Mat p = materialize(projector_operator(build_projector(ladder, a), evolver), n);
    EXPECT_LT((p * p - p).norm(), 1e-12);
    EXPECT_LT((p - p.adjoint()).norm(), 1e-12);
    EXPECT_LT((p - testing::eigenprojector(dense_symmetry(sym, n), ladder.eigenvalue(a))).norm(),
              1e-11);
    sum += p;
  }
  EXPECT_LT((sum - Mat::Identity(sum.rows(), sum.cols())).norm(), 1e-11);
}

INSTANTIATE_TEST_SUITE_P(
    SmallRegisters, DenseProjectorTest,
    ::testing::Combine(::testing::Values(Symmetry::kParity, Symmetry::kNumber, Symmetry::kSpin),
                       ::testing::Values(1, 2, 3, 4, 5, 6)));

TEST(Oracle, IsUnitaryAndMarksTheSector) {
  const int n = 4;
  const SymmetryLadder ladder = number_ladder(n);
  const auto proj = build_projector(ladder, 2);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  const Mat p = testing::eigenprojector(testing::number_operator(n), 2);
  const Mat id = Mat::Identity(16, 16);
  for (auto [phi, mu] : {std::pair{0.0, kPi / 2}, {kPi, 0.0}, {0.4, -2.2}}) {
    const OracleDecomposition o = build_oracle(proj, {phi, mu});
    const Mat om = materialize(oracle_operator(o, ev), n);
    EXPECT_LT((om.adjoint() * om - id).norm(), 1e-12);
    const Mat expected = std::polar(1.0, mu) * id + (std::polar(1.0, phi) - std::polar(1.0, mu)) * p;
    EXPECT_LT((om - expected).norm(), 1e-12);
    EXPECT_TRUE(oracle_operator(o, ev).unitary);
  }
  EXPECT_FALSE(projector_operator(proj, ev).unitary);
  EXPECT_EQ(code_of([&] { (void)build_oracle(proj, {1.0, 1.0 + 2 * kPi}); }),
            ErrorCode::kDegenerateOracle);
}

TEST(SectorWeights, EquiprobableStateFollowsBinomialLaw) {
  const int n = 8;
  const StateVector psi = StateVector::equiprobable(n);
  const SymmetryLadder ladder = number_ladder(n);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  for (int a = 0; a <= n; ++a) {
    const auto r = projected_expectation_lcu(psi, identity_operator(),
                                             build_projector(ladder, static_cast<std::size_t>(a)), ev);
    EXPECT_NEAR(r.norm.real(), testing::binomial(n, a) / 256.0, 1e-12);
    EXPECT_NEAR(r.norm.imag(), 0.0, 1e-12);
  }
}

TEST(ProjectedExpectation, RoutesAgreeWithDenseProjection) {
  const int n = 6;
  const SymmetryLadder ladder = number_ladder(n);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  const Mat nop = testing::number_operator(n);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vec psi = testing::random_state(n, seed);
    const Mat a = testing::random_number_conserving_hermitian(n, 1000 + seed);
    const Operator obs{"A", testing::DenseOp{a}, false};
    const std::size_t target = 1 + seed % 5;
    const Mat p = testing::eigenprojector(nop, static_cast<double>(target));
    const Complex expected = psi.dot(a * p * psi) / psi.dot(p * psi);
    const StateVector s = testing::from_vec(psi);
    const auto proj = build_projector(ladder, target);
    EXPECT_LT(std::abs(projected_expectation_lcu(s, obs, proj, ev).value() - expected), 1e-10);
    for (auto [phi, mu] : {std::pair{0.0, kPi / 2}, {kPi, 0.0}, {1.1, 2.9}}) {
      const Complex r = projected_expectation_oracle_ratio(s, obs, build_oracle(proj, {phi, mu}), ev);
      EXPECT_LT(std::abs(r - expected), 1e-10);
    }
  }
}

TEST(ProjectedExpectation, EmptySectorAndSizeErrors) {
  const StateVector vac(4);  // |0000>, zero weight on 2 pairs
  const auto proj = build_projector(number_ladder(4), 2);
  const PhaseEvolution ev = PhaseEvolution::exact(Symmetry::kNumber);
  EXPECT_EQ(code_of([&] { (void)projected_expectation_lcu(vac, identity_operator(), proj, ev); }),
            ErrorCode::kEmptySector);
  EXPECT_EQ(code_of([&] {
              (void)projected_expectation_oracle_ratio(vac, identity_operator(),
                                                       build_oracle(proj, {}), ev);
            }),
            ErrorCode::kEmptySector);
  EXPECT_EQ(code_of([&] {
              (void)projected_expectation_lcu(StateVector(3), identity_operator(), proj, ev);
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(HadamardTest, ExactPartsMatchDenseExpectation) {
  const int n = 3;
  const Vec psi = testing::random_state(n, 17);
  const Mat u1 = testing::expi(testing::random_number_conserving_hermitian(n, 1), 0.7);
  const Mat u2 = testing::expi(testing::random_number_conserving_hermitian(n, 2), -1.3);
  const Operator ops[] = {{"U1", testing::DenseOp{u1}, true}, {"U2", testing::DenseOp{u2}, true}};
  const Complex expected = psi.dot(u2 * u1 * psi);
  const StateVector s = testing::from_vec(psi);
  const auto re = hadamard_test(s, ops, Part::kReal);
  const auto im = hadamard_test(s, ops, Part::kImag);
  EXPECT_NEAR(re.value, expected.real(), 1e-12);
  EXPECT_NEAR(im.value, expected.imag(), 1e-12);
  EXPECT_NEAR(re.p0 + re.p1, 1.0, 1e-12);
  EXPECT_LT(std::abs(hadamard_expectation(s, ops) - expected), 1e-12);
  EXPECT_EQ(re.shots_used, 0);
}

TEST(HadamardTest, OracleGivesSectorWeight) {
  const StateVector psi = StateVector::equiprobable(8);
  const auto o = build_oracle(build_projector(number_ladder(8), 4), {0.0, kPi / 2});
  const Operator ops[] = {oracle_operator(o, PhaseEvolution::exact(Symmetry::kNumber))};
  EXPECT_NEAR(hadamard_test(psi, ops, Part::kReal).value, 70.0 / 256.0, 1e-12);
}

TEST(HadamardTest, SampledModeSpendsExactlyTheBudget) {
  const StateVector psi = StateVector::equiprobable(4);
  const auto o = build_oracle(build_projector(number_ladder(4), 2), {});
  const Operator ops[] = {oracle_operator(o, PhaseEvolution::exact(Symmetry::kNumber))};
  const auto a = hadamard_test(psi, ops, Part::kReal, Sampling{777, 5});
  const auto b = hadamard_test(psi, ops, Part::kReal, Sampling{777, 5});
  EXPECT_EQ(a.shots_used, 777);
  EXPECT_EQ(a.shots_discarded, 0);
  EXPECT_EQ(a.value, b.value);
  EXPECT_LT(std::abs(a.value - 6.0 / 16.0), 5.0 / std::sqrt(777.0));
}

TEST(HadamardTest, RejectsNonUnitaryOperators) {
  const auto proj = build_projector(number_ladder(2), 1);
  const Operator ops[] = {projector_operator(proj, PhaseEvolution::exact(Symmetry::kNumber))};
  EXPECT_EQ(code_of([&] { (void)hadamard_test(StateVector(2), ops, Part::kReal); }),
            ErrorCode::kNonUnitary);
}

TEST(PhaseScan, SurfaceIsFixedByTwoScalars) {
  const int n = 6;
  const Vec psi = testing::random_state(n, 3);
  const StateVector s = testing::from_vec(psi);
  const auto proj = build_projector(number_ladder(n), 3);
  const Mat p = testing::eigenprojector(testing::number_operator(n), 3);
  const double g = psi.dot(p * psi).real();
  const double b = 1.0 - g;
  std::vector<double> phis, mus;
  for (int i = 0; i < 9; ++i) phis.push_back(2 * kPi * i / 9.0);
  for (int j = 0; j < 7; ++j) mus.push_back(2 * kPi * j / 7.0 - 1.0);
  phis.push_back(mus[2]);  // one degenerate point
  const PhaseScan scan = oracle_phase_scan(s, proj, PhaseEvolution::exact(Symmetry::kNumber), phis, mus);
  ASSERT_EQ(scan.values.size(), phis.size() * mus.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t j = 0; j < mus.size(); ++j) {
      EXPECT_NEAR(scan.at(i, j), g * std::cos(phis[i]) + b * std::cos(mus[j]), 1e-12);
    }
  }
}

}  // namespace
}  // namespace symres
