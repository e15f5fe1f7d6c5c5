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

// Reduced states of Alice + region I and their negativity.
//
// Three independent routes to the same reduced state are provided:
//  * reduced_state: map the fermions onto qubits with a chosen operator
//    ordering, then take the ordinary qubit partial trace over region II;
//  * subalgebra_reduced_state: the ordering-free definition, solving for the
//    operator on (A, c_I, d_I) that reproduces every monomial expectation;
//  * infinite_acceleration_reduced_state: A_I (|0><0|_A x I/4) A_I^+, valid
//    only at r = pi/4.
//
// Negativity is N = (||rho^{T_A}||_1 - 1) / 2, so a Bell pair has N = 1/2.

#pragma once

#include "unruhent/fock.hpp"
#include "unruhent/unruh.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unruhent {

/// Order in which creation operators are applied to define a qubit basis.
/// permutation()[k] is the canonical mode carried by qubit k.
class OperatorOrdering {
 public:
  explicit OperatorOrdering(std::array<int, kCanonicalModes> permutation, std::string name = {});

  /// (A, c_I, d_I, c_II, d_II): region II contiguous and last.
  static OperatorOrdering physical();
  /// (A, c_I, d_II, d_I, c_II).
  static OperatorOrdering legacy_interleaved();

  /// Accepts "physical", "legacy-interleaved" or five distinct digits 0-4
  /// such as "01423".
  static OperatorOrdering parse(std::string_view text);

  const std::array<int, kCanonicalModes>& permutation() const { return permutation_; }
  const std::string& name() const { return name_; }

  /// Preset name if any, else the digit string.
  std::string label() const;
  std::string digits() const;

  /// Qubit position that carries canonical mode `m`.
  int position_of(int m) const;

  bool operator==(const OperatorOrdering& o) const { return permutation_ == o.permutation_; }

 private:
  std::array<int, kCanonicalModes> permutation_;
  std::string name_;
};

class DensityMatrix {
 public:
  /// Throws UsageError if the product of dims differs from the matrix size.
  DensityMatrix(Matrix matrix, std::vector<int> dims);

  const Matrix& matrix() const { return matrix_; }
  const std::vector<int>& dims() const { return dims_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

  double hermiticity_residual() const;
  double trace_residual() const;
  double min_eigenvalue() const;

  /// hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
  bool is_valid() const;

  /// Same matrix, different factorisation of the dimension.
  DensityMatrix with_dims(std::vector<int> dims) const;

 private:
  Matrix matrix_;
  std::vector<int> dims_;
};

/// Qubit register amplitudes for the basis built in `ord` order. The returned
/// vector is indexed big-endian over qubit positions.
StateVector to_qubit_basis(const StateVector& psi, const OperatorOrdering& ord);

/// Partial trace over the listed qubit positions of a register state.
DensityMatrix qubit_partial_trace(const StateVector& register_state, const std::vector<int>& traced);
DensityMatrix qubit_partial_trace(const DensityMatrix& rho, const std::vector<int>& traced);

/// Reorders qubits of an all-qubit density matrix; new qubit k is old qubit order[k].
DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& order);

/// Reduced state on Alice | region I (dims {2, 4}) via the qubit mapping.
/// Region I qubits keep their relative order from `ord`.
DensityMatrix reduced_state(const StateVector& psi, const OperatorOrdering& ord);
DensityMatrix reduced_state(const StateFamily& f, const UnruhParams& p, const OperatorOrdering& ord);

/// Ordering-free reduced state on (A, c_I, d_I), dims {2, 4}.
DensityMatrix subalgebra_reduced_state(const StateVector& psi);

/// A_I (|0><0|_A x I_4/4) A_I^+ normalised, dims {2, 4}. Requires r = pi/4.
DensityMatrix infinite_acceleration_reduced_state(const StateFamily& f, const UnruhParams& p);

Matrix partial_transpose(const DensityMatrix& rho, int subsystem);

/// Ascending eigenvalues of the partial transpose on `subsystem`.
std::vector<double> partial_transpose_spectrum(const DensityMatrix& rho, int subsystem = 0);

/// Sum of |negative eigenvalues| of rho^{T_subsystem}; below 1e-12 clamps to 0.
/// rho is regrouped into the bipartition (dims[0] | rest).
double negativity(const DensityMatrix& rho, int subsystem = 0);

struct OrderingClass {
  OperatorOrdering ordering;
  double spread;       // max - min negativity over the q_R grid at r = pi/4
  bool convergent;     // spread <= kConvergenceTolerance
  std::vector<double> negativities;  // one per q_R grid value
};

inline constexpr double kConvergenceTolerance = 1e-10;

/// Every ordering with Alice first (24), or all 120 when `all_permutations`.
/// Sorted by spread, ties by digit string. Preset orderings carry their names.
std::vector<OrderingClass> classify_orderings(const StateFamily& f,
                                              const std::vector<double>& q_right_grid,
                                              bool all_permutations = false);

}  // namespace unruhent
