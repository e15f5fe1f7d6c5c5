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

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace unruhent {

namespace {

constexpr int kRetainedModes = 3;  // A, c_I, d_I
constexpr Eigen::Index kRetainedDim = Eigen::Index{1} << kRetainedModes;

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

int qubit_count(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw UsageError("dimension is not a power of two");
  return n;
}

std::size_t qubit_bit(int position, int qubits) { return mode_bit(position, qubits); }

/// Splits the register index into (kept, traced) sub-indices, both big-endian
/// over the positions in ascending order.
std::pair<std::size_t, std::size_t> split_index(std::size_t index, int qubits, const std::vector<bool>& is_traced) {
  std::size_t kept = 0;
  std::size_t traced = 0;
  for (int pos = 0; pos < qubits; ++pos) {
    const std::size_t b = (index & qubit_bit(pos, qubits)) ? 1 : 0;
    if (is_traced[static_cast<std::size_t>(pos)])
      traced = (traced << 1) | b;
    else
      kept = (kept << 1) | b;
  }
  return {kept, traced};
}

std::vector<bool> traced_mask(const std::vector<int>& traced, int qubits) {
  std::vector<bool> mask(static_cast<std::size_t>(qubits), false);
  for (int pos : traced) {
    if (pos < 0 || pos >= qubits) throw UsageError("traced qubit position out of range");
    if (mask[static_cast<std::size_t>(pos)]) throw UsageError("traced qubit position repeated");
    mask[static_cast<std::size_t>(pos)] = true;
  }
  return mask;
}

/// Linear system Tr(rho rep(O)) = <O> over the 64 retained-mode monomials.
struct SubalgebraSystem {
  std::vector<OperatorExpr> monomials;
  Eigen::FullPivLU<Matrix> lu;
};

const SubalgebraSystem& subalgebra_system() {
  static const SubalgebraSystem system = [] {
    SubalgebraSystem s;
    for (int alpha = 0; alpha < 8; ++alpha) {
      for (int beta = 0; beta < 8; ++beta) {
        Term t{1.0, {}};
        for (int m = 0; m < kRetainedModes; ++m)
          if (alpha & (4 >> m)) t.factors.push_back({m, Ladder::kCreate});
        for (int m = 0; m < kRetainedModes; ++m)
          if (beta & (4 >> m)) t.factors.push_back({m, Ladder::kAnnihilate});
        s.monomials.emplace_back(std::vector<Term>{t});
      }
    }
    const Eigen::Index n = kRetainedDim * kRetainedDim;
    Matrix system(n, n);
    for (Eigen::Index row = 0; row < n; ++row) {
      const Matrix rep = operator_matrix(s.monomials[static_cast<std::size_t>(row)], kRetainedModes);
      // Unknown (i, j) sits at column i * 8 + j; Tr(rho R) = sum_ij rho_ij R_ji.
      for (Eigen::Index i = 0; i < kRetainedDim; ++i)
        for (Eigen::Index j = 0; j < kRetainedDim; ++j) system(row, i * kRetainedDim + j) = rep(j, i);
    }
    s.lu.compute(system);
    return s;
  }();
  return system;
}

}  // namespace

// ---------------------------------------------------------------------------
// OperatorOrdering

OperatorOrdering::OperatorOrdering(std::array<int, kCanonicalModes> permutation, std::string name)
    : permutation_(permutation), name_(std::move(name)) {
  std::array<bool, kCanonicalModes> seen{};
  for (int m : permutation_) {
    if (m < 0 || m >= kCanonicalModes || seen[static_cast<std::size_t>(m)])
      throw UsageError("ordering must be a permutation of the modes 0..4");
    seen[static_cast<std::size_t>(m)] = true;
  }
}

OperatorOrdering OperatorOrdering::physical() {
  return OperatorOrdering({mode::kAlice, mode::kParticleI, mode::kAntiparticleI, mode::kParticleII,
                           mode::kAntiparticleII},
                          "physical");
}

OperatorOrdering OperatorOrdering::legacy_interleaved() {
  return OperatorOrdering({mode::kAlice, mode::kParticleI, mode::kAntiparticleII, mode::kAntiparticleI,
                           mode::kParticleII},
                          "legacy-interleaved");
}

OperatorOrdering OperatorOrdering::parse(std::string_view text) {
  if (text == "physical") return physical();
  if (text == "legacy-interleaved") return legacy_interleaved();
  if (text.size() != kCanonicalModes)
    throw UsageError("ordering '" + std::string(text) +
                     "' is neither a preset nor a 5-digit permutation");
  std::array<int, kCanonicalModes> perm{};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '4')
      throw UsageError("ordering '" + std::string(text) + "' must use the digits 0-4");
    perm[i] = text[i] - '0';
  }
  OperatorOrdering parsed(perm);
  if (parsed == physical()) return physical();
  if (parsed == legacy_interleaved()) return legacy_interleaved();
  return parsed;
}

std::string OperatorOrdering::label() const { return name_.empty() ? digits() : name_; }

std::string OperatorOrdering::digits() const {
  std::string s;
  for (int m : permutation_) s.push_back(static_cast<char>('0' + m));
  return s;
}

int OperatorOrdering::position_of(int m) const {
  for (int pos = 0; pos < kCanonicalModes; ++pos)
    if (permutation_[static_cast<std::size_t>(pos)] == m) return pos;
  throw UsageError("mode " + std::to_string(m) + " not in ordering");
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Matrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols()) throw UsageError("density matrix must be square");
  for (int d : dims_)
    if (d < 1) throw UsageError("subsystem dimensions must be positive");
  if (product(dims_) != matrix_.rows())
    throw UsageError("subsystem dimensions do not multiply to the matrix size");
}

double DensityMatrix::hermiticity_residual() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_residual() const { return std::abs(matrix_.trace() - Complex{1.0}); }

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid() const {
  return hermiticity_residual() <= 1e-12 && trace_residual() <= 1e-12 && min_eigenvalue() >= -1e-10;
}

DensityMatrix DensityMatrix::with_dims(std::vector<int> dims) const {
  return DensityMatrix(matrix_, std::move(dims));
}

// ---------------------------------------------------------------------------
// Qubit mapping and partial traces

StateVector to_qubit_basis(const StateVector& psi, const OperatorOrdering& ord) {
  if (psi.mode_count() != kCanonicalModes)
    throw UsageError("to_qubit_basis expects a state over the five canonical modes");
  const auto& perm = ord.permutation();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(psi.dimension()));
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    // Qubit at position `pos` holds the occupation of canonical mode perm[pos].
    std::size_t q = 0;
    int inversions = 0;
    for (int pos = 0; pos < kCanonicalModes; ++pos) {
      const int m = perm[static_cast<std::size_t>(pos)];
      if (!(i & mode_bit(m, kCanonicalModes))) continue;
      q |= qubit_bit(pos, kCanonicalModes);
      for (int later = pos + 1; later < kCanonicalModes; ++later) {
        const int m2 = perm[static_cast<std::size_t>(later)];
        if (m2 < m && (i & mode_bit(m2, kCanonicalModes))) ++inversions;
      }
    }
    out(static_cast<Eigen::Index>(q)) = (inversions % 2 == 0 ? 1.0 : -1.0) * psi[i];
  }
  return StateVector(kCanonicalModes, std::move(out));
}

DensityMatrix qubit_partial_trace(const StateVector& register_state, const std::vector<int>& traced) {
  const int n = register_state.mode_count();
  const std::vector<bool> mask = traced_mask(traced, n);
  const int kept_qubits = n - static_cast<int>(traced.size());
  const Eigen::Index kept_dim = Eigen::Index{1} << kept_qubits;
  const Eigen::Index traced_dim = Eigen::Index{1} << traced.size();
  Matrix m = Matrix::Zero(kept_dim, traced_dim);
  for (std::size_t i = 0; i < register_state.dimension(); ++i) {
    const auto [k, t] = split_index(i, n, mask);
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(t)) = register_state[i];
  }
  return DensityMatrix(m * m.adjoint(), std::vector<int>(static_cast<std::size_t>(kept_qubits), 2));
}

DensityMatrix qubit_partial_trace(const DensityMatrix& rho, const std::vector<int>& traced) {
  const int n = qubit_count(rho.dimension());
  const std::vector<bool> mask = traced_mask(traced, n);
  const int kept_qubits = n - static_cast<int>(traced.size());
  const Eigen::Index kept_dim = Eigen::Index{1} << kept_qubits;
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  const std::size_t dim = static_cast<std::size_t>(rho.dimension());
  for (std::size_t i = 0; i < dim; ++i) {
    const auto [ki, ti] = split_index(i, n, mask);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto [kj, tj] = split_index(j, n, mask);
      if (ti != tj) continue;
      out(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(kj)) +=
          rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return DensityMatrix(std::move(out), std::vector<int>(static_cast<std::size_t>(kept_qubits), 2));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& order) {
  const int n = qubit_count(rho.dimension());
  if (static_cast<int>(order.size()) != n) throw UsageError("qubit order has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int q : order) {
    if (q < 0 || q >= n || seen[static_cast<std::size_t>(q)]) throw UsageError("qubit order is not a permutation");
    seen[static_cast<std::size_t>(q)] = true;
  }
  const std::size_t dim = static_cast<std::size_t>(rho.dimension());
  std::vector<Eigen::Index> new_of_old(dim);
  for (std::size_t old = 0; old < dim; ++old) {
    std::size_t fresh = 0;
    for (int k = 0; k < n; ++k)
      if (old & qubit_bit(order[static_cast<std::size_t>(k)], n)) fresh |= qubit_bit(k, n);
    new_of_old[old] = static_cast<Eigen::Index>(fresh);
  }
  Matrix out(rho.dimension(), rho.dimension());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out(new_of_old[i], new_of_old[j]) = rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return DensityMatrix(std::move(out), std::vector<int>(static_cast<std::size_t>(n), 2));
}

DensityMatrix reduced_state(const StateVector& psi, const OperatorOrdering& ord) {
  const StateVector reg = to_qubit_basis(psi, ord);
  const std::vector<int> traced = {ord.position_of(mode::kParticleII), ord.position_of(mode::kAntiparticleII)};
  const DensityMatrix kept = qubit_partial_trace(reg, traced);

  // Surviving qubits are in register order; move Alice to the front.
  std::vector<int> kept_modes;
  for (int pos = 0; pos < kCanonicalModes; ++pos) {
    const int m = ord.permutation()[static_cast<std::size_t>(pos)];
    if (m != mode::kParticleII && m != mode::kAntiparticleII) kept_modes.push_back(m);
  }
  std::vector<int> order;
  for (int k = 0; k < 3; ++k)
    if (kept_modes[static_cast<std::size_t>(k)] == mode::kAlice) order.push_back(k);
  for (int k = 0; k < 3; ++k)
    if (kept_modes[static_cast<std::size_t>(k)] != mode::kAlice) order.push_back(k);
  return permute_qubits(kept, order).with_dims({2, 4});
}

DensityMatrix reduced_state(const StateFamily& f, const UnruhParams& p, const OperatorOrdering& ord) {
  return reduced_state(build_state(f, p), ord);
}

DensityMatrix subalgebra_reduced_state(const StateVector& psi) {
  if (psi.mode_count() != kCanonicalModes)
    throw UsageError("subalgebra_reduced_state expects a state over the five canonical modes");
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw UsageError("subalgebra_reduced_state expects a normalized state");
  const SubalgebraSystem& sys = subalgebra_system();
  if (sys.lu.rank() != kRetainedDim * kRetainedDim)
    throw InternalError("retained-mode monomials do not span the operator space");

  Vector expectations(kRetainedDim * kRetainedDim);
  for (std::size_t row = 0; row < sys.monomials.size(); ++row)
    expectations(static_cast<Eigen::Index>(row)) = inner_product(psi, apply_operator(sys.monomials[row], psi));
  const Vector solution = sys.lu.solve(expectations);

  Matrix rho(kRetainedDim, kRetainedDim);
  for (Eigen::Index i = 0; i < kRetainedDim; ++i)
    for (Eigen::Index j = 0; j < kRetainedDim; ++j) rho(i, j) = solution(i * kRetainedDim + j);
  return DensityMatrix(std::move(rho), {2, 4});
}

DensityMatrix infinite_acceleration_reduced_state(const StateFamily& f, const UnruhParams& p) {
  const OperatorExpr a_i = region_i_operator(f, p);
  const Matrix rep = operator_matrix(a_i, kRetainedModes);
  Matrix vacuum = Matrix::Zero(kRetainedDim, kRetainedDim);
  for (Eigen::Index i = 0; i < kRetainedDim / 2; ++i) vacuum(i, i) = 0.25;  // Alice bit is the MSB
  Matrix rho = rep * vacuum * rep.adjoint();
  const Complex tr = rho.trace();
  if (std::abs(tr) == 0.0) throw InternalError("A_I annihilated the reduced vacuum");
  rho /= tr;
  return DensityMatrix(std::move(rho), {2, 4});
}

// ---------------------------------------------------------------------------
// Partial transpose and negativity

Matrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  const auto& dims = rho.dims();
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size()))
    throw UsageError("partial_transpose: subsystem index out of range");
  // Row index = outer * (d * inner) + s * inner + rest.
  int inner = 1;
  for (std::size_t k = static_cast<std::size_t>(subsystem) + 1; k < dims.size(); ++k) inner *= dims[k];
  const int d = dims[static_cast<std::size_t>(subsystem)];
  const Eigen::Index dim = rho.dimension();
  auto swap_sub = [&](Eigen::Index row, Eigen::Index col) {
    const Eigen::Index sr = (row / inner) % d;
    const Eigen::Index sc = (col / inner) % d;
    return std::pair{row + (sc - sr) * inner, col + (sr - sc) * inner};
  };
  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto [ti, tj] = swap_sub(i, j);
      out(ti, tj) = rho.matrix()(i, j);
    }
  return out;
}

std::vector<double> partial_transpose_spectrum(const DensityMatrix& rho, int subsystem) {
  if (rho.hermiticity_residual() > 1e-12) {
    std::ostringstream msg;
    msg << "density matrix is not hermitian (residual " << rho.hermiticity_residual() << ")";
    throw UsageError(msg.str());
  }
  const Matrix pt = partial_transpose(rho, subsystem);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double negativity(const DensityMatrix& rho, int subsystem) {
  double n = 0.0;
  for (double ev : partial_transpose_spectrum(rho, subsystem))
    if (ev < -1e-12) n -= ev;
  return n < 1e-12 ? 0.0 : n;
}

// ---------------------------------------------------------------------------
// Ordering classification

std::vector<OrderingClass> classify_orderings(const StateFamily& f, const std::vector<double>& q_right_grid,
                                              bool all_permutations) {
  f.validate();
  if (q_right_grid.empty()) throw UsageError("classify_orderings needs at least one q_R value");
  std::vector<StateVector> states;
  for (double q : q_right_grid) states.push_back(build_state(f, UnruhParams::from_real(kInfiniteAcceleration, q)));

  std::array<int, kCanonicalModes> perm{0, 1, 2, 3, 4};
  const auto first = all_permutations ? perm.begin() : perm.begin() + 1;
  std::vector<OrderingClass> out;
  do {
    OrderingClass c{OperatorOrdering::parse(OperatorOrdering(perm).digits()), 0.0, false, {}};
    for (const StateVector& psi : states) c.negativities.push_back(negativity(reduced_state(psi, c.ordering)));
    const auto [lo, hi] = std::minmax_element(c.negativities.begin(), c.negativities.end());
    c.spread = *hi - *lo;
    c.convergent = c.spread <= kConvergenceTolerance;
    out.push_back(std::move(c));
  } while (std::next_permutation(first, perm.end()));

  std::stable_sort(out.begin(), out.end(), [](const OrderingClass& a, const OrderingClass& b) {
    if (a.spread != b.spread) return a.spread < b.spread;
    return a.ordering.digits() < b.ordering.digits();
  });
  return out;
}

}  // namespace unruhent
