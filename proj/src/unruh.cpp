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

#include "unruhent/unruh.hpp"

#include "unruhent/errors.hpp"

#include <cmath>
#include <sstream>

namespace unruhent {

namespace {

using mode::kAlice;
using mode::kAntiparticleI;
using mode::kAntiparticleII;
using mode::kParticleI;
using mode::kParticleII;

void require_unit_pair(Complex x, Complex y, const char* what) {
  const double deviation = std::abs(std::norm(x) + std::norm(y) - 1.0);
  if (!(deviation <= kParamTolerance)) {
    std::ostringstream msg;
    msg << what << " must satisfy |x|^2 + |y|^2 = 1 (off by " << deviation << ")";
    throw UsageError(msg.str());
  }
}

OperatorExpr cr(int m) { return OperatorExpr::create(m); }
OperatorExpr an(int m) { return OperatorExpr::annihilate(m); }

}  // namespace

UnruhParams::UnruhParams(double r, Complex q_right, Complex q_left)
    : r_(r), q_right_(q_right), q_left_(q_left) {
  if (!(r >= 0.0 && r <= kInfiniteAcceleration)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "r must lie in [0, pi/4], got " << r;
    throw UsageError(msg.str());
  }
  require_unit_pair(q_right, q_left, "(q_R, q_L)");
}

UnruhParams UnruhParams::from_real(double r, double q_right) {
  if (!(q_right >= 0.0 && q_right <= 1.0))
    throw UsageError("real q_R must lie in [0, 1], got " + std::to_string(q_right));
  return UnruhParams(r, q_right, std::sqrt(1.0 - q_right * q_right));
}

bool UnruhParams::at_infinite_acceleration() const {
  return std::abs(r_ - kInfiniteAcceleration) <= kParamTolerance;
}

void StateFamily::validate() const {
  require_unit_pair(p, q, "(P, Q)");
  require_unit_pair(a1, a2, "(a1, a2)");
  require_unit_pair(b1, b2, "(b1, b2)");
}

StateFamily StateFamily::bell_like() {
  const double h = std::numbers::sqrt2 / 2.0;
  return StateFamily{h, h, 1.0, 0.0, 0.0, 1.0};
}

OperatorExpr unruh_creation(const UnruhParams& p) {
  const double c = std::cos(p.r());
  const double s = std::sin(p.r());
  return (p.q_right() * c) * cr(kParticleI) + (-p.q_right() * s) * an(kAntiparticleII) +
         (p.q_left() * c) * cr(kParticleII) + (-p.q_left() * s) * an(kAntiparticleI);
}

OperatorExpr unruh_annihilation(const UnruhParams& p) { return unruh_creation(p).adjoint(); }

RegionModes region_modes(const UnruhParams& p) {
  return RegionModes{
      p.q_right() * cr(kParticleI) + (-p.q_left()) * an(kAntiparticleI),
      p.q_left() * cr(kParticleII) + (-p.q_right()) * an(kAntiparticleII),
  };
}

StateVector unruh_vacuum(double r) {
  if (!(r >= 0.0 && r <= kInfiniteAcceleration))
    throw UsageError("unruh_vacuum: r must lie in [0, pi/4]");
  const double c = std::cos(r);
  const double s = std::sin(r);
  // cos^2 r + cos r sin r c_II^+ d_I^+ - cos r sin r d_II^+ c_I^+
  //   + sin^2 r d_II^+ c_II^+ c_I^+ d_I^+, acting on the Rindler vacuum.
  const OperatorExpr builder =
      OperatorExpr::identity(c * c) + (c * s) * (cr(kParticleII) * cr(kAntiparticleI)) +
      (-c * s) * (cr(kAntiparticleII) * cr(kParticleI)) +
      (s * s) * (cr(kAntiparticleII) * cr(kParticleII) * cr(kParticleI) * cr(kAntiparticleI));
  return apply_operator(builder, StateVector::vacuum()).certify_normalized();
}

StateVector build_state(const StateFamily& f, const UnruhParams& p) {
  f.validate();
  const StateVector vac = unruh_vacuum(p.r());
  const StateVector excited = apply_operator(unruh_creation(p), vac);
  const StateVector rob_if_alice_empty = f.a1 * vac + f.a2 * excited;
  const StateVector rob_if_alice_full = f.b1 * vac + f.b2 * excited;
  StateVector psi = f.p * rob_if_alice_empty + f.q * apply_creation(kAlice, rob_if_alice_full);
  const double deviation = std::abs(psi.norm() - 1.0);
  if (deviation > 1e-9) {
    std::ostringstream msg;
    msg << "build_state produced a state with norm deviation " << deviation;
    throw InternalError(msg.str());
  }
  return psi.certify_normalized(1e-9);
}

OperatorExpr region_i_operator(const StateFamily& f, const UnruhParams& p) {
  f.validate();
  if (!p.at_infinite_acceleration())
    throw UsageError("region_i_operator is only defined at r = pi/4");
  // C_U^+ |0>_U = sqrt(2) a_I^+ |0>_U in this limit.
  const OperatorExpr excite = std::numbers::sqrt2 * region_modes(p).region_i;
  const OperatorExpr one = OperatorExpr::identity();
  const OperatorExpr alice_empty_branch = f.a1 * one + f.a2 * excite;
  const OperatorExpr alice_full_branch = cr(kAlice) * (f.b1 * one + f.b2 * excite);
  return (f.p * alice_empty_branch + f.q * alice_full_branch).pruned();
}

std::vector<double> r_grid(int points) {
  if (points < 1) throw UsageError("r grid needs at least one point");
  if (points == 1) return {kInfiniteAcceleration};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] = kInfiniteAcceleration * i / (points - 1);
  grid.back() = kInfiniteAcceleration;
  return grid;
}

std::vector<double> default_q_right_grid() {
  return {0.0, 0.3, 0.5, std::numbers::sqrt2 / 2.0, 0.8, 0.9, 0.95, 1.0};
}

}  // namespace unruhent
