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

// The invariant suite run by `unruhent check`. Names prefixed "Cn" are the
// numbered acceptance criteria; the rest are per-module invariants.

#include "unruhent/harness.hpp"
#include "unruhent/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace unruhent {

namespace {

using mode::kAlice;
using mode::kAntiparticleII;
using mode::kParticleII;

constexpr std::uint64_t kSeed = 20260418;

class Collector {
 public:
  void at_most(std::string name, double measured, double threshold) {
    add(std::move(name), measured, threshold, Bound::kAtMost, measured <= threshold);
  }
  void at_least(std::string name, double measured, double threshold) {
    add(std::move(name), measured, threshold, Bound::kAtLeast, measured >= threshold);
  }
  void above(std::string name, double measured, double threshold) {
    add(std::move(name), measured, threshold, Bound::kAbove, measured > threshold);
  }
  CheckReport take() { return std::move(report_); }

 private:
  void add(std::string name, double measured, double threshold, Bound bound, bool ok) {
    // NaN never passes.
    report_.results.push_back({std::move(name), measured, threshold, bound, ok && !std::isnan(measured)});
  }
  CheckReport report_;
};

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

using MonomialKey = std::vector<std::pair<int, int>>;

std::map<MonomialKey, Complex> coefficients(const OperatorExpr& op) {
  std::map<MonomialKey, Complex> out;
  for (const Term& t : op.terms()) {
    MonomialKey key;
    for (const auto& f : t.factors) key.emplace_back(f.mode, static_cast<int>(f.kind));
    out[key] += t.coefficient;
  }
  return out;
}

double coefficient_distance(const OperatorExpr& a, const OperatorExpr& b) {
  auto ca = coefficients(a);
  const auto cb = coefficients(b);
  for (const auto& [k, v] : cb) ca[k] -= v;
  double d = 0.0;
  for (const auto& [k, v] : ca) d = std::max(d, std::abs(v));
  return d;
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

double physical_spread_at_limit(const StateFamily& f) {
  std::vector<double> n;
  for (double q : default_q_right_grid())
    n.push_back(negativity(reduced_state(f, UnruhParams::from_real(kInfiniteAcceleration, q),
                                         OperatorOrdering::physical())));
  return spread(n);
}

void fock_checks(Collector& c, Rng& rng) {
  double anticomm = 0.0;
  const Matrix id = Matrix::Identity(32, 32);
  for (int j = 0; j < kCanonicalModes; ++j) {
    for (int k = 0; k < kCanonicalModes; ++k) {
      const auto fj = OperatorExpr::annihilate(j);
      const auto fk = OperatorExpr::annihilate(k);
      const auto fkd = OperatorExpr::create(k);
      const auto fjd = OperatorExpr::create(j);
      anticomm = std::max(anticomm, max_abs(operator_matrix(anticommutator(fj, fkd)) - (j == k ? id : 0.0 * id)));
      anticomm = std::max(anticomm, max_abs(operator_matrix(anticommutator(fj, fk))));
      anticomm = std::max(anticomm, max_abs(operator_matrix(anticommutator(fjd, fkd))));
    }
  }
  c.at_most("C1 anticommutation relations, max residual", anticomm, 1e-12);

  double projector = 0.0;
  for (int m = 0; m < kCanonicalModes; ++m) {
    for (std::size_t i = 0; i < 32; ++i) {
      const StateVector ket = StateVector::basis(i);
      const StateVector out = apply_annihilation(m, apply_creation(m, ket));
      const bool empty = (i & mode_bit(m, kCanonicalModes)) == 0;
      projector = std::max(projector, (out.amplitudes() - (empty ? ket.amplitudes() : 0.0 * ket.amplitudes())).norm());
    }
  }
  c.at_most("fock: annihilate after create projects onto n_m = 0", projector, 1e-12);

  double adj = 0.0;
  double agree = 0.0;
  for (int t = 0; t < 100; ++t) {
    const OperatorExpr op = random_operator(rng);
    const Matrix m = operator_matrix(op);
    adj = std::max(adj, max_abs(m.adjoint() - operator_matrix(op.adjoint())));
    const StateVector psi = random_state(rng);
    agree = std::max(agree, (apply_operator(op, psi).amplitudes() - m * psi.amplitudes()).norm());
  }
  c.at_most("fock: matrix of adjoint == adjoint of matrix (100 random)", adj, 1e-12);
  c.at_most("fock: apply_operator == operator_matrix * psi (100 random)", agree, 1e-12);
}

void unruh_checks(Collector& c, Rng& rng) {
  const auto rs = r_grid(50);
  const auto qs = default_q_right_grid();

  double norm_dev = 0.0;
  for (double r : rs) norm_dev = std::max(norm_dev, std::abs(unruh_vacuum(r).norm() - 1.0));
  c.at_most("C2 unruh vacuum unit norm (50 r)", norm_dev, 1e-12);

  auto annihilation_residual = [&](const std::vector<double>& r_values) {
    double res = 0.0;
    for (double r : r_values)
      for (double q : qs)
        res = std::max(res, apply_operator(unruh_annihilation(UnruhParams::from_real(r, q)), unruh_vacuum(r)).norm());
    return res;
  };
  c.at_most("C2 C_U annihilates unruh vacuum (8 q_R x {0, pi/8, pi/4})",
            annihilation_residual({0.0, std::numbers::pi / 8.0, kInfiniteAcceleration}), 1e-12);
  c.at_most("unruh: C_U annihilates unruh vacuum (8 q_R x 50 r)", annihilation_residual(rs), 1e-12);

  auto limit_norm = [](double r, double q) {
    const auto modes = region_modes(UnruhParams::from_real(r, q));
    return apply_operator(modes.region_i - modes.region_ii, unruh_vacuum(r)).norm();
  };
  double at_limit = 0.0;
  double at_eighth = 1e300;
  for (double q : qs) {
    at_limit = std::max(at_limit, limit_norm(kInfiniteAcceleration, q));
    at_eighth = std::min(at_eighth, limit_norm(std::numbers::pi / 8.0, q));
  }
  c.at_most("C3 ||(a_I^+ - a_II^+)|0>_U|| at r = pi/4 (8 q_R)", at_limit, 1e-12);
  c.at_least("C3 ||(a_I^+ - a_II^+)|0>_U|| at r = pi/8 (min over q_R)", at_eighth, 0.1);

  double closed_form = 0.0;
  double away_from_limit = 1e300;
  for (double r : rs) {
    for (double q : qs) {
      const double n = limit_norm(r, q);
      closed_form = std::max(closed_form, std::abs(n - std::numbers::sqrt2 * std::sin(kInfiniteAcceleration - r)));
      if (r < kInfiniteAcceleration - 0.071) away_from_limit = std::min(away_from_limit, n);
    }
  }
  c.at_most("unruh: ||(a_I^+ - a_II^+)|0>_U|| == sqrt2 sin(pi/4 - r) (50 r x 8 q_R)", closed_form, 1e-12);
  c.above("unruh: limit identity fails for r < pi/4 - 0.071", away_from_limit, 0.1);

  double coeff = 0.0;
  for (double q : qs) {
    const auto p = UnruhParams::from_real(kInfiniteAcceleration, q);
    const auto modes = region_modes(p);
    coeff = std::max(coeff, coefficient_distance(unruh_creation(p),
                                                 (1.0 / std::numbers::sqrt2) * (modes.region_i + modes.region_ii)));
  }
  c.at_most("unruh: C_U^+ == (a_I^+ + a_II^+)/sqrt2 at pi/4 (coefficients)", coeff, 1e-15);

  double state_norm = 0.0;
  for (int t = 0; t < 100; ++t)
    state_norm = std::max(state_norm, std::abs(build_state(random_family(rng), random_unruh_params(rng)).norm() - 1.0));
  c.at_most("unruh: build_state unit norm (100 random)", state_norm, 1e-12);

  double region_i = 0.0;
  for (int t = 0; t < 20; ++t) {
    const StateFamily f = random_family(rng);
    const auto [qr, ql] = random_unit_pair(rng);
    const UnruhParams p(kInfiniteAcceleration, qr, ql);
    region_i = std::max(region_i, (apply_operator(region_i_operator(f, p), unruh_vacuum(p.r())).amplitudes() -
                                   build_state(f, p).amplitudes()).norm());
  }
  c.at_most("unruh: A_I |0>_U == build_state at pi/4 (20 random)", region_i, 1e-12);
}

void entanglement_checks(Collector& c, Rng& rng) {
  const auto rs = r_grid(50);
  const auto qs = default_q_right_grid();
  const StateFamily reference = StateFamily::bell_like();

  // Trace Alice and region II from the vacuum: qubits are (A, c_I, d_I, c_II, d_II).
  const DensityMatrix thermal = qubit_partial_trace(unruh_vacuum(kInfiniteAcceleration), {0, 3, 4});
  c.at_most("C4 Tr_{A,II} |0>_U<0|_U at pi/4 == I/4", max_abs(thermal.matrix() - 0.25 * Matrix::Identity(4, 4)),
            1e-12);

  std::vector<OperatorOrdering> all_orderings;
  for (const auto& row : classify_orderings(reference, qs)) all_orderings.push_back(row.ordering);

  double herm = 0.0;
  double trace = 0.0;
  double min_eig = 1e300;
  for (int t = 0; t < 100; ++t) {
    const StateVector psi = build_state(random_family(rng), random_unruh_params(rng));
    for (const auto& ord : all_orderings) {
      const DensityMatrix rho = reduced_state(psi, ord);
      herm = std::max(herm, rho.hermiticity_residual());
      trace = std::max(trace, rho.trace_residual());
      min_eig = std::min(min_eig, rho.min_eigenvalue());
    }
  }
  c.at_most("entanglement: reduced_state hermitian (24 orderings x 100 random)", herm, 1e-12);
  c.at_most("entanglement: reduced_state unit trace (24 orderings x 100 random)", trace, 1e-12);
  c.at_least("entanglement: reduced_state min eigenvalue (24 orderings x 100 random)", min_eig, -1e-10);

  double lu = 0.0;
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho =
        reduced_state(random_family(rng), random_unruh_params(rng), OperatorOrdering::physical());
    Matrix u(8, 8);
    const Matrix ua = random_unitary(rng, 2);
    const Matrix ub = random_unitary(rng, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) u.block(4 * i, 4 * j, 4, 4) = ua(i, j) * ub;
    lu = std::max(lu, std::abs(negativity(DensityMatrix(u * rho.matrix() * u.adjoint(), {2, 4})) - negativity(rho)));
  }
  c.at_most("entanglement: negativity invariant under U_A x U_I (20 random)", lu, 1e-10);

  std::vector<StateFamily> families;
  for (int t = 0; t < 20; ++t) families.push_back(random_family(rng));

  double reference_spread = physical_spread_at_limit(reference);
  double random_spread = 0.0;
  for (const auto& f : families) random_spread = std::max(random_spread, physical_spread_at_limit(f));
  c.at_most("C5 physical spread over q_R at pi/4, reference family", reference_spread, 1e-10);
  c.at_most("C5 physical spread over q_R at pi/4, 20 random families", random_spread, 1e-10);

  std::vector<double> legacy;
  for (double q : qs)
    legacy.push_back(negativity(reduced_state(reference, UnruhParams::from_real(kInfiniteAcceleration, q),
                                              OperatorOrdering::legacy_interleaved())));
  c.above("C6 legacy-interleaved spread over q_R at pi/4, reference family", spread(legacy), 0.01);

  auto route_gap = [&](const StateFamily& f, double r, double q) {
    const UnruhParams p = UnruhParams::from_real(r, q);
    const StateVector psi = build_state(f, p);
    std::vector<double> n = {negativity(reduced_state(psi, OperatorOrdering::physical())),
                             negativity(subalgebra_reduced_state(psi))};
    if (p.at_infinite_acceleration()) n.push_back(negativity(infinite_acceleration_reduced_state(f, p)));
    return spread(n);
  };
  double triple = 0.0;
  for (double r : rs)
    for (double q : qs) triple = std::max(triple, route_gap(reference, r, q));
  c.at_most("C7 qubit/subalgebra/A_I routes agree, default grid", triple, 1e-10);

  double random_routes = 0.0;
  for (const auto& f : families)
    for (double r : rs)
      for (double q : qs) random_routes = std::max(random_routes, route_gap(f, r, q));
  c.at_most("entanglement: routes agree, default grid x 20 random families", random_routes, 1e-10);

  const auto bell = UnruhParams::from_real(0.0, 1.0);
  c.at_most("C8 |N - 0.5| at r = 0, q_R = 1, reference family",
            std::abs(negativity(reduced_state(reference, bell, OperatorOrdering::physical())) - 0.5), 1e-12);

  double pq = 0.0;
  for (int t = 0; t < 10; ++t) {
    StateFamily f = reference;
    std::tie(f.p, f.q) = random_unit_pair(rng);
    const double n = negativity(reduced_state(f, bell, OperatorOrdering::physical()));
    pq = std::max(pq, std::abs(n - std::abs(f.p * f.q)));
  }
  c.at_most("C8 |N - |PQ|| at r = 0, q_R = 1 (10 draws)", pq, 1e-12);

  double product = 0.0;
  for (int t = 0; t < 2; ++t) {
    StateFamily f = random_family(rng);
    f.p = t == 0 ? 1.0 : 0.0;
    f.q = t == 0 ? 0.0 : 1.0;
    for (double r : rs)
      for (double q : qs) {
        const auto p = UnruhParams::from_real(r, q);
        const StateVector psi = build_state(f, p);
        for (const auto& ord : {OperatorOrdering::physical(), OperatorOrdering::legacy_interleaved()})
          product = std::max(product, negativity(reduced_state(psi, ord)));
        product = std::max(product, negativity(subalgebra_reduced_state(psi)));
      }
  }
  c.at_most("C8 N for product families P in {0, 1}, whole grid", product, 1e-12);

  double region_ii_last = 0.0;
  bool physical_convergent = false;
  for (const auto& row : classify_orderings(reference, qs)) {
    const auto& perm = row.ordering.permutation();
    if (std::min(perm[3], perm[4]) == kParticleII && std::max(perm[3], perm[4]) == kAntiparticleII)
      region_ii_last = std::max(region_ii_last, row.spread);
    if (row.ordering == OperatorOrdering::physical()) physical_convergent = row.convergent;
  }
  c.at_most("orderings: region II last => convergent (max spread)", region_ii_last, kConvergenceTolerance);
  c.at_least("orderings: physical preset flagged convergent", physical_convergent ? 1.0 : 0.0, 1.0);
}

void harness_checks(Collector& c) {
  SweepConfig config;
  const auto first = run_sweep(config);
  const std::string a = sweep_csv(first);
  const std::string b = sweep_csv(run_sweep(config));
  config.threads = 4;
  const std::string parallel = sweep_csv(run_sweep(config));
  c.at_most("C9 default sweep CSV byte-identical across runs (differs?)", a == b ? 0.0 : 1.0, 0.0);
  c.at_most("harness: sequential and parallel sweep CSV identical (differs?)", a == parallel ? 0.0 : 1.0, 0.0);
  c.at_most("harness: default sweep row count - 800", std::abs(static_cast<double>(first.size()) - 800.0), 0.0);

  double out_of_range = 0.0;
  double limit_physical = 0.0;
  std::vector<double> at_limit;
  for (const auto& rec : first) {
    if (rec.negativity < 0.0) out_of_range = std::max(out_of_range, -rec.negativity);
    if (rec.negativity > 0.5 + 1e-9) out_of_range = std::max(out_of_range, rec.negativity - 0.5);
    if (rec.r == kInfiniteAcceleration && rec.ordering == "physical") at_limit.push_back(rec.negativity);
  }
  limit_physical = spread(at_limit);
  c.at_most("harness: sweep negativities within [0, 0.5 + 1e-9] (excess)", out_of_range, 0.0);
  c.at_most("harness: physical rows at pi/4 share one value", limit_physical, 1e-10);
}

}  // namespace

CheckReport run_checks() {
  Collector c;
  Rng rng(kSeed);
  fock_checks(c, rng);
  unruh_checks(c, rng);
  entanglement_checks(c, rng);
  harness_checks(c);
  return c.take();
}

}  // namespace unruhent
