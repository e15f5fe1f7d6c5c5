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

// Seeded random draws used by the invariant suite and the tests.

#pragma once

#include "unruhent/fock.hpp"
#include "unruhent/unruh.hpp"

#include <random>

namespace unruhent {

using Rng = std::mt19937_64;

Complex random_complex(Rng& rng);

/// Haar-distributed point on the unit sphere of C^2.
std::pair<Complex, Complex> random_unit_pair(Rng& rng);

StateFamily random_family(Rng& rng);

/// r uniform in [0, pi/4], complex (q_R, q_L) on the unit sphere.
UnruhParams random_unruh_params(Rng& rng);

/// Random normalized vector over `mode_count` modes.
StateVector random_state(Rng& rng, int mode_count = kCanonicalModes);

/// Up to `max_terms` terms of up to `max_factors` random ladder factors.
OperatorExpr random_operator(Rng& rng, int mode_count = kCanonicalModes, int max_terms = 4, int max_factors = 4);

/// Haar-ish unitary from the QR decomposition of a complex Gaussian matrix.
Matrix random_unitary(Rng& rng, int dim);

}  // namespace unruhent
