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

#include "unruhent/sampling.hpp"

#include <Eigen/QR>

#include <cmath>

namespace unruhent {

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

std::pair<Complex, Complex> random_unit_pair(Rng& rng) {
  Complex x = random_complex(rng);
  Complex y = random_complex(rng);
  const double n = std::sqrt(std::norm(x) + std::norm(y));
  return {x / n, y / n};
}

StateFamily random_family(Rng& rng) {
  StateFamily f;
  std::tie(f.p, f.q) = random_unit_pair(rng);
  std::tie(f.a1, f.a2) = random_unit_pair(rng);
  std::tie(f.b1, f.b2) = random_unit_pair(rng);
  return f;
}

UnruhParams random_unruh_params(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, kInfiniteAcceleration);
  const double r = u(rng);
  const auto [qr, ql] = random_unit_pair(rng);
  return UnruhParams(r, qr, ql);
}

StateVector random_state(Rng& rng, int mode_count) {
  StateVector v(mode_count);
  Vector amps(static_cast<Eigen::Index>(v.dimension()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps(i) = random_complex(rng);
  return StateVector(mode_count, amps / amps.norm()).certify_normalized();
}

OperatorExpr random_operator(Rng& rng, int mode_count, int max_terms, int max_factors) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> factors(0, max_factors);
  std::uniform_int_distribution<int> mode(0, mode_count - 1);
  std::bernoulli_distribution create(0.5);
  std::vector<Term> out;
  const int nt = terms(rng);
  for (int t = 0; t < nt; ++t) {
    Term term{random_complex(rng), {}};
    const int nf = factors(rng);
    for (int k = 0; k < nf; ++k)
      term.factors.push_back({mode(rng), create(rng) ? Ladder::kCreate : Ladder::kAnnihilate});
    out.push_back(std::move(term));
  }
  return OperatorExpr(std::move(out));
}

Matrix random_unitary(Rng& rng, int dim) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = random_complex(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

}  // namespace unruhent
