// Copyright 2026 The unruhent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unruhent/entanglement.hpp"
#include "unruhent/errors.hpp"
#include "unruhent/sampling.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

namespace unruhent {
namespace {

using namespace mode;

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix bell_pair() {
  Matrix rho = Matrix::Zero(4, 4);
  rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
  return rho;
}

std::vector<double> q_spread_values(const StateFamily& f, const OperatorOrdering& ord) {
  std::vector<double> out;
  for (double q : default_q_right_grid())
    out.push_back(negativity(reduced_state(f, UnruhParams::from_real(kInfiniteAcceleration, q), ord)));
  return out;
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

TEST(OperatorOrdering, PresetsAndParsing) {
  EXPECT_EQ(OperatorOrdering::physical().digits(), "01234");
  EXPECT_EQ(OperatorOrdering::legacy_interleaved().digits(), "01423");
  EXPECT_EQ(OperatorOrdering::parse("01423").name(), "legacy-interleaved");
  EXPECT_EQ(OperatorOrdering::parse("physical"), OperatorOrdering::physical());
  EXPECT_EQ(OperatorOrdering::parse("02134").label(), "02134");
  EXPECT_EQ(OperatorOrdering::parse("43210").position_of(kAlice), 4);
  EXPECT_THROW(OperatorOrdering::parse("01123"), UsageError);
  EXPECT_THROW(OperatorOrdering::parse("0123"), UsageError);
  EXPECT_THROW(OperatorOrdering::parse("01235"), UsageError);
  EXPECT_THROW(OperatorOrdering::parse("sideways"), UsageError);
}

TEST(DensityMatrix, RejectsInconsistentDims) {
  EXPECT_THROW(DensityMatrix(Matrix::Identity(8, 8), {2, 2}), UsageError);
  EXPECT_THROW(DensityMatrix(Matrix::Identity(4, 3), {2, 2}), UsageError);
  EXPECT_TRUE(DensityMatrix(Matrix::Identity(8, 8) / 8.0, {2, 4}).is_valid());
}

TEST(ToQubitBasis, PhysicalIsIdentity) {
  Rng rng(1);
  const StateVector psi = random_state(rng);
  EXPECT_LT((to_qubit_basis(psi, OperatorOrdering::physical()).amplitudes() - psi.amplitudes()).norm(), kTol);
}

TEST(ToQubitBasis, LegacyInterleavedSignExample) {
  // psi = c_II^+ d_I^+ |0>; the legacy basis ket for the same occupations is
  // d_I^+ c_II^+ |0> = -psi, so the qubit amplitude is -1.
  const auto op = OperatorExpr::create(kParticleII) * OperatorExpr::create(kAntiparticleI);
  const StateVector psi = apply_operator(op, StateVector::vacuum());
  const StateVector q = to_qubit_basis(psi, OperatorOrdering::legacy_interleaved());
  EXPECT_LT(std::abs(q[0b00011] - (-1.0)), kTol);
  EXPECT_NEAR(q.norm(), 1.0, kTol);
}

TEST(ToQubitBasis, MatchesCreationOracleForEveryOrdering) {
  Rng rng(2);
  const StateVector psi = random_state(rng);
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  do {
    const StateVector q = to_qubit_basis(psi, OperatorOrdering(perm));
    EXPECT_LT((q.amplitudes() - testing_oracle::qubit_amplitudes(psi.amplitudes(), perm)).norm(), kTol);
    EXPECT_NEAR(q.norm(), psi.norm(), kTol);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(QubitPartialTrace, Examples) {
  Rng rng(3);
  const StateVector psi = random_state(rng);
  const DensityMatrix full = qubit_partial_trace(psi, {});
  EXPECT_LT(max_abs(full.matrix() - psi.amplitudes() * psi.amplitudes().adjoint()), kTol);
  EXPECT_NEAR(full.matrix().trace().real(), 1.0, kTol);

  const DensityMatrix none = qubit_partial_trace(psi, {0, 1, 2, 3, 4});
  EXPECT_EQ(none.dimension(), 1);
  EXPECT_NEAR(none.matrix()(0, 0).real(), 1.0, kTol);

  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = kInvSqrt2;
  const DensityMatrix half = qubit_partial_trace(StateVector(2, bell), {1});
  EXPECT_LT(max_abs(half.matrix() - 0.5 * Matrix::Identity(2, 2)), kTol);

  EXPECT_THROW(qubit_partial_trace(psi, {5}), UsageError);
  EXPECT_THROW(qubit_partial_trace(psi, {1, 1}), UsageError);
}

TEST(QubitPartialTrace, DensityMatrixInputAgreesWithPureState) {
  Rng rng(4);
  const StateVector psi = random_state(rng);
  const DensityMatrix rho(psi.amplitudes() * psi.amplitudes().adjoint(), {2, 2, 2, 2, 2});
  for (const std::vector<int>& traced : {std::vector<int>{3, 4}, {0}, {1, 3}, {0, 2, 4}}) {
    EXPECT_LT(max_abs(qubit_partial_trace(rho, traced).matrix() - qubit_partial_trace(psi, traced).matrix()), kTol);
  }
}

TEST(ReducedState, MatchesExplicitTraceOracle) {
  Rng rng(5);
  const StateVector psi = build_state(random_family(rng), random_unruh_params(rng));
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  do {
    const OperatorOrdering ord(perm);
    const Vector reg = testing_oracle::qubit_amplitudes(psi.amplitudes(), perm);
    std::vector<int> kept = {ord.position_of(kAlice)};
    for (int pos = 0; pos < 5; ++pos)
      if (perm[static_cast<std::size_t>(pos)] == kParticleI || perm[static_cast<std::size_t>(pos)] == kAntiparticleI)
        kept.push_back(pos);
    const Matrix oracle = testing_oracle::keep_qubits(reg, 5, kept);
    const DensityMatrix rho = reduced_state(psi, ord);
    EXPECT_EQ(rho.dims(), (std::vector<int>{2, 4}));
    EXPECT_LT(max_abs(rho.matrix() - oracle), kTol) << ord.digits();
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(ReducedState, VacuumAtInfiniteAccelerationIsThermal) {
  const StateFamily vac{1.0, 0.0, 1.0, 0.0, 1.0, 0.0};
  const DensityMatrix rho = reduced_state(vac, UnruhParams::from_real(kInfiniteAcceleration, 0.8),
                                          OperatorOrdering::physical());
  Matrix expected = Matrix::Zero(8, 8);
  for (int i = 0; i < 4; ++i) expected(i, i) = 0.25;
  EXPECT_LT(max_abs(rho.matrix() - expected), kTol);
}

TEST(ReducedState, BellLikeAtZeroAcceleration) {
  const DensityMatrix rho =
      reduced_state(StateFamily::bell_like(), UnruhParams(0.0, 1.0, 0.0), OperatorOrdering::physical());
  // (|0,00> + |1,10>)/sqrt2 over (A | c_I d_I): indices 0 and 6.
  Matrix expected = Matrix::Zero(8, 8);
  expected(0, 0) = expected(0, 6) = expected(6, 0) = expected(6, 6) = 0.5;
  EXPECT_LT(max_abs(rho.matrix() - expected), kTol);
}

TEST(ReducedState, OrderingsDisagreeAwayFromProductStates) {
  const StateFamily f = StateFamily::bell_like();
  const auto p = UnruhParams::from_real(kInfiniteAcceleration, 0.8);
  const DensityMatrix phys = reduced_state(f, p, OperatorOrdering::physical());
  const DensityMatrix legacy = reduced_state(f, p, OperatorOrdering::legacy_interleaved());
  EXPECT_GT(max_abs(phys.matrix() - legacy.matrix()), 1e-3);
  EXPECT_GT(std::abs(negativity(phys) - negativity(legacy)), 1e-3);
}

TEST(ReducedState, ValidForAllOrderingsAndRandomDraws) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const StateVector psi = build_state(random_family(rng), random_unruh_params(rng));
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    do {
      const DensityMatrix rho = reduced_state(psi, OperatorOrdering(perm));
      ASSERT_LE(rho.hermiticity_residual(), 1e-12);
      ASSERT_LE(rho.trace_residual(), 1e-12);
      ASSERT_GE(rho.min_eigenvalue(), -1e-10);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
}

TEST(SubalgebraReducedState, Examples) {
  Matrix vac_proj = Matrix::Zero(8, 8);
  vac_proj(0, 0) = 1.0;
  EXPECT_LT(max_abs(subalgebra_reduced_state(StateVector::vacuum()).matrix() - vac_proj), kTol);

  Matrix thermal = Matrix::Zero(8, 8);
  for (int i = 0; i < 4; ++i) thermal(i, i) = 0.25;
  EXPECT_LT(max_abs(subalgebra_reduced_state(unruh_vacuum(kInfiniteAcceleration)).matrix() - thermal), kTol);

  EXPECT_THROW(subalgebra_reduced_state(2.0 * StateVector::vacuum()), UsageError);
}

TEST(SubalgebraReducedState, ReproducesEveryRetainedMonomial) {
  Rng rng(7);
  const StateVector psi = random_state(rng);
  const DensityMatrix rho = subalgebra_reduced_state(psi);
  EXPECT_TRUE(rho.is_valid());
  for (int alpha = 0; alpha < 8; ++alpha)
    for (int beta = 0; beta < 8; ++beta) {
      Term t{1.0, {}};
      for (int m = 0; m < 3; ++m)
        if (alpha & (4 >> m)) t.factors.push_back({m, Ladder::kCreate});
      for (int m = 0; m < 3; ++m)
        if (beta & (4 >> m)) t.factors.push_back({m, Ladder::kAnnihilate});
      const OperatorExpr o({t});
      const Complex lhs = (rho.matrix() * testing_oracle::jw_matrix(o, 3)).trace();
      const Complex rhs = psi.amplitudes().dot(testing_oracle::jw_matrix(o, 5) * psi.amplitudes());
      EXPECT_LT(std::abs(lhs - rhs), kTol);
    }
}

TEST(SubalgebraReducedState, NegativityMatchesPhysicalOrdering) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const StateVector psi = build_state(random_family(rng), random_unruh_params(rng));
    EXPECT_NEAR(negativity(subalgebra_reduced_state(psi)), negativity(reduced_state(psi, OperatorOrdering::physical())),
                1e-10);
  }
}

TEST(InfiniteAccelerationReducedState, VacuumFamily) {
  const StateFamily vac{1.0, 0.0, 1.0, 0.0, 1.0, 0.0};
  const DensityMatrix rho = infinite_acceleration_reduced_state(vac, UnruhParams::from_real(kInfiniteAcceleration, 0.3));
  Matrix thermal = Matrix::Zero(8, 8);
  for (int i = 0; i < 4; ++i) thermal(i, i) = 0.25;
  EXPECT_LT(max_abs(rho.matrix() - thermal), kTol);
}

TEST(InfiniteAccelerationReducedState, AgreesWithOtherRoutes) {
  const StateFamily f = StateFamily::bell_like();
  std::vector<double> across_q;
  for (double q : default_q_right_grid()) {
    const auto p = UnruhParams::from_real(kInfiniteAcceleration, q);
    const double limit = negativity(infinite_acceleration_reduced_state(f, p));
    const StateVector psi = build_state(f, p);
    EXPECT_NEAR(limit, negativity(subalgebra_reduced_state(psi)), 1e-10);
    EXPECT_NEAR(limit, negativity(reduced_state(psi, OperatorOrdering::physical())), 1e-10);
    across_q.push_back(limit);
  }
  EXPECT_LE(spread(across_q), 1e-12);
  EXPECT_THROW(infinite_acceleration_reduced_state(f, UnruhParams::from_real(0.5, 1.0)), UsageError);
}

TEST(PartialTranspose, Examples) {
  const DensityMatrix mixed(Matrix::Identity(8, 8) / 8.0, {2, 4});
  EXPECT_LT(max_abs(partial_transpose(mixed, 0) - mixed.matrix()), kTol);

  Rng rng(9);
  const StateVector a = random_state(rng, 1);
  const StateVector b = random_state(rng, 2);
  const Matrix ra = a.amplitudes() * a.amplitudes().adjoint();
  const Matrix rb = b.amplitudes() * b.amplitudes().adjoint();
  const DensityMatrix product(testing_oracle::kron(ra, rb), {2, 4});
  EXPECT_LT(max_abs(partial_transpose(product, 0) - testing_oracle::kron(ra.transpose(), rb)), kTol);
  EXPECT_LT(max_abs(partial_transpose(product, 1) - testing_oracle::kron(ra, rb.transpose())), kTol);
  EXPECT_EQ(negativity(product), 0.0);

  const DensityMatrix bell(bell_pair(), {2, 2});
  for (int side : {0, 1}) {
    const auto ev = partial_transpose_spectrum(bell, side);
    ASSERT_EQ(ev.size(), 4u);
    EXPECT_NEAR(ev[0], -0.5, kTol);
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(ev[static_cast<std::size_t>(i)], 0.5, kTol);
  }
  EXPECT_THROW(partial_transpose(bell, 2), UsageError);
}

TEST(PartialTranspose, MiddleFactorOfThree) {
  Rng rng(10);
  const StateVector a = random_state(rng, 1);
  const StateVector b = random_state(rng, 1);
  const StateVector c = random_state(rng, 2);
  auto proj = [](const StateVector& v) -> Matrix { return v.amplitudes() * v.amplitudes().adjoint(); };
  const DensityMatrix rho(testing_oracle::kron(testing_oracle::kron(proj(a), proj(b)), proj(c)), {2, 2, 4});
  const Matrix expected = testing_oracle::kron(testing_oracle::kron(proj(a), proj(b).transpose()), proj(c));
  EXPECT_LT(max_abs(partial_transpose(rho, 1) - expected), kTol);
}

TEST(Negativity, Examples) {
  EXPECT_NEAR(negativity(DensityMatrix(bell_pair(), {2, 2})), 0.5, kTol);
  Matrix not_hermitian = bell_pair();
  not_hermitian(0, 3) = Complex{0.5, 0.1};
  EXPECT_THROW(negativity(DensityMatrix(not_hermitian, {2, 2})), UsageError);
}

TEST(Negativity, GeneralSchmidtPairAtZeroAcceleration) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    StateFamily f = StateFamily::bell_like();
    std::tie(f.p, f.q) = random_unit_pair(rng);
    const double n = negativity(reduced_state(f, UnruhParams(0.0, 1.0, 0.0), OperatorOrdering::physical()));
    EXPECT_NEAR(n, std::abs(f.p * f.q), kTol);
  }
}

TEST(Negativity, FrozenFigureValues) {
  // From an independent numpy implementation (dense matrices, explicit
  // creation-operator products for the qubit basis).
  const StateFamily f = StateFamily::bell_like();
  const auto phys = OperatorOrdering::physical();
  EXPECT_NEAR(negativity(reduced_state(f, UnruhParams(0.0, 1.0, 0.0), phys)), 0.5, kTol);
  EXPECT_NEAR(negativity(reduced_state(f, UnruhParams::from_real(std::numbers::pi / 8, 1.0), phys)),
              0.4267766952966368, kTol);
  EXPECT_NEAR(negativity(reduced_state(f, UnruhParams::from_real(kInfiniteAcceleration, 1.0), phys)), 0.25, kTol);

  const std::vector<double> legacy_expected = {0.25, 0.2296516100438054, 0.19151111077974448, 0.125,
                                               0.16348768223696647, 0.20614044989562041, 0.22792289159121598, 0.25};
  const auto legacy = q_spread_values(f, OperatorOrdering::legacy_interleaved());
  for (std::size_t i = 0; i < legacy.size(); ++i) EXPECT_NEAR(legacy[i], legacy_expected[i], 1e-12) << i;
  EXPECT_NEAR(negativity(reduced_state(f, UnruhParams::from_real(std::numbers::pi / 8, 0.8),
                                       OperatorOrdering::legacy_interleaved())),
              0.2803070364722062, kTol);
}

TEST(Negativity, MatchesBlockTransposeOracle) {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho =
        reduced_state(random_family(rng), random_unruh_params(rng), OperatorOrdering::legacy_interleaved());
    const double oracle = testing_oracle::alice_negativity(rho.matrix());
    EXPECT_NEAR(negativity(rho), oracle < 1e-12 ? 0.0 : oracle, 1e-12);
  }
}

TEST(Property, NegativityInvariantUnderLocalUnitaries) {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = reduced_state(random_family(rng), random_unruh_params(rng), OperatorOrdering::physical());
    const Matrix u = testing_oracle::kron(random_unitary(rng, 2), random_unitary(rng, 4));
    EXPECT_NEAR(negativity(DensityMatrix(u * rho.matrix() * u.adjoint(), {2, 4})), negativity(rho), 1e-10);
  }
}

TEST(Property, ConvergenceAtInfiniteAccelerationForPhysicalOrdering) {
  Rng rng(14);
  EXPECT_LE(spread(q_spread_values(StateFamily::bell_like(), OperatorOrdering::physical())), 1e-10);
  for (int t = 0; t < 20; ++t)
    EXPECT_LE(spread(q_spread_values(random_family(rng), OperatorOrdering::physical())), 1e-10);
}

TEST(Property, LegacyOrderingDoesNotConverge) {
  EXPECT_GT(spread(q_spread_values(StateFamily::bell_like(), OperatorOrdering::legacy_interleaved())), 0.01);
}

TEST(ClassifyOrderings, ReportsConvergentSet) {
  const auto rows = classify_orderings(StateFamily::bell_like(), default_q_right_grid());
  ASSERT_EQ(rows.size(), 24u);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(),
                             [](const OrderingClass& a, const OrderingClass& b) { return a.spread < b.spread; }));
  std::vector<std::string> convergent;
  for (const auto& row : rows) {
    EXPECT_EQ(row.ordering.permutation()[0], kAlice);
    EXPECT_EQ(row.negativities.size(), 8u);
    if (row.convergent) convergent.push_back(row.ordering.digits());
    if (row.ordering == OperatorOrdering::physical()) {
      EXPECT_TRUE(row.convergent);
      EXPECT_EQ(row.ordering.name(), "physical");
    }
    if (row.ordering == OperatorOrdering::legacy_interleaved()) {
      EXPECT_FALSE(row.convergent);
      EXPECT_GT(row.spread, 0.01);
    }
    const auto& perm = row.ordering.permutation();
    if (std::min(perm[3], perm[4]) == kParticleII && std::max(perm[3], perm[4]) == kAntiparticleII)
      EXPECT_TRUE(row.convergent) << row.ordering.digits();
  }
  // For this family the convergent set is larger than "region II last":
  // 12 of the 24 orderings converge (frozen from the numpy prototype).
  std::sort(convergent.begin(), convergent.end());
  const std::vector<std::string> expected = {"01234", "01243", "01324", "02134", "02143", "02413",
                                             "03142", "03412", "03421", "04231", "04312", "04321"};
  EXPECT_EQ(convergent, expected);
}

TEST(ClassifyOrderings, AllPermutations) {
  const auto rows = classify_orderings(StateFamily::bell_like(), {0.5, 1.0}, true);
  EXPECT_EQ(rows.size(), 120u);
  EXPECT_THROW(classify_orderings(StateFamily::bell_like(), {}), UsageError);
}

}  // namespace
}  // namespace unruhent
