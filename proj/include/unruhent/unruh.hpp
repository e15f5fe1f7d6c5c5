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

// Unruh-mode construction for a single Grassmann scalar mode seen by an
// inertial observer (Alice) and a uniformly accelerated observer whose
// Rindler wedge is region I.

#pragma once

#include "unruhent/fock.hpp"

#include <numbers>
#include <utility>
#include <vector>

namespace unruhent {

/// r -> pi/4 is the infinite-acceleration limit.
inline constexpr double kInfiniteAcceleration = std::numbers::pi / 4.0;

inline constexpr double kParamTolerance = 1e-12;

/// Acceleration parameter r and Unruh-mode weights (q_R, q_L).
class UnruhParams {
 public:
  /// Throws UsageError unless r is in [0, pi/4] and |q_R|^2 + |q_L|^2 = 1.
  UnruhParams(double r, Complex q_right, Complex q_left);

  /// Real q_R in [0, 1] with q_L = sqrt(1 - q_R^2).
  static UnruhParams from_real(double r, double q_right);

  double r() const { return r_; }
  Complex q_right() const { return q_right_; }
  Complex q_left() const { return q_left_; }
  bool at_infinite_acceleration() const;

 private:
  double r_;
  Complex q_right_;
  Complex q_left_;
};

/// P|0>_A [a1 + a2 C_U^+]|0>_U + Q|1>_A [b1 + b2 C_U^+]|0>_U.
struct StateFamily {
  Complex p = 1.0, q = 0.0;
  Complex a1 = 1.0, a2 = 0.0;
  Complex b1 = 1.0, b2 = 0.0;

  /// Throws UsageError unless each pair is unit norm within kParamTolerance.
  void validate() const;

  /// P = Q = 1/sqrt(2), a1 = b2 = 1, a2 = b1 = 0.
  static StateFamily bell_like();
};

/// q_R (cos r c_I^+ - sin r d_II) + q_L (cos r c_II^+ - sin r d_I).
OperatorExpr unruh_creation(const UnruhParams& p);
OperatorExpr unruh_annihilation(const UnruhParams& p);

struct RegionModes {
  OperatorExpr region_i;   // q_R c_I^+ - q_L d_I
  OperatorExpr region_ii;  // q_L c_II^+ - q_R d_II
};
RegionModes region_modes(const UnruhParams& p);

/// Unruh vacuum over the Rindler modes, Alice unoccupied. Unit norm for every r.
StateVector unruh_vacuum(double r);

StateVector build_state(const StateFamily& f, const UnruhParams& p);

/// Operator over (A, c_I, d_I) only whose action on the Unruh vacuum
/// reproduces build_state at r = pi/4. Zero-coefficient terms are dropped.
OperatorExpr region_i_operator(const StateFamily& f, const UnruhParams& p);

/// Uniform grid of `points` values over [0, pi/4]; the last entry is exactly
/// kInfiniteAcceleration.
std::vector<double> r_grid(int points = 50);

/// {0, 0.3, 0.5, 1/sqrt(2), 0.8, 0.9, 0.95, 1}.
std::vector<double> default_q_right_grid();

}  // namespace unruhent
