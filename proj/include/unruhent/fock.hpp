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

// Exact fermionic Fock space over a handful of modes.
//
// Conventions used throughout the library:
//
//  * Basis kets are |n_0 n_1 ... n_{m-1}> = (f0^+)^{n_0} (f1^+)^{n_1} ... |0>,
//    i.e. the creation operator of mode 0 is applied last.
//  * The basis index is big-endian: mode 0 is the most significant bit, so
//    for five modes index = sum_k n_k * 2^(4-k).
//  * A ladder operator on mode k picks up the sign (-1)^(n_0 + ... + n_{k-1})
//    (Jordan-Wigner string over the modes that precede k).
//  * Monomials are written left to right and act right to left: the factor
//    list {c^+, d^+} means c^+ d^+, so d^+ is applied first.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unruhent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kCanonicalModes = 5;
inline constexpr int kMaxModes = 16;

/// Canonical mode indices: Alice, then region I particle/antiparticle,
/// then region II particle/antiparticle.
namespace mode {
inline constexpr int kAlice = 0;
inline constexpr int kParticleI = 1;      // c_I
inline constexpr int kAntiparticleI = 2;  // d_I
inline constexpr int kParticleII = 3;     // c_II
inline constexpr int kAntiparticleII = 4; // d_II
}  // namespace mode

class ModeTable {
 public:
  explicit ModeTable(std::vector<std::string> labels);

  /// (A, c_I, d_I, c_II, d_II).
  static const ModeTable& canonical();

  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t dimension() const { return std::size_t{1} << labels_.size(); }
  const std::string& label(int mode) const;
  int index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

inline std::size_t mode_bit(int mode, int mode_count) {
  return std::size_t{1} << (mode_count - 1 - mode);
}

std::size_t basis_index(std::span<const int> occupations);
std::vector<int> occupations_of(std::size_t index, int mode_count);

/// Number of occupied modes strictly before `mode` in ket `index`.
int occupied_before(std::size_t index, int mode, int mode_count);

class StateVector {
 public:
  explicit StateVector(int mode_count = kCanonicalModes);
  StateVector(int mode_count, Vector amplitudes);

  static StateVector vacuum(int mode_count = kCanonicalModes);
  static StateVector basis(std::size_t index, int mode_count = kCanonicalModes);
  static StateVector from_occupations(std::initializer_list<int> occupations);

  int mode_count() const { return mode_count_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

  double norm() const { return amplitudes_.norm(); }
  bool is_normalized() const { return normalized_; }

  /// Rescales to unit norm and sets the normalized flag.
  StateVector normalized() const;

  /// Sets the normalized flag without rescaling. Throws InternalError when the
  /// norm is further than `tolerance` from one.
  StateVector certify_normalized(double tolerance = 1e-12) const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Complex scale);

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(Complex s, StateVector a) { return a *= s; }
  friend StateVector operator*(StateVector a, Complex s) { return a *= s; }

 private:
  int mode_count_;
  Vector amplitudes_;
  bool normalized_ = false;
};

enum class Ladder : std::uint8_t { kCreate, kAnnihilate };

struct LadderFactor {
  int mode;
  Ladder kind;
  bool operator==(const LadderFactor&) const = default;
};

struct Term {
  Complex coefficient;
  std::vector<LadderFactor> factors;  // empty = identity
};

/// Complex-weighted sum of ladder monomials.
class OperatorExpr {
 public:
  OperatorExpr() = default;  // the zero operator
  explicit OperatorExpr(std::vector<Term> terms);

  static OperatorExpr identity(Complex coefficient = 1.0);
  static OperatorExpr create(int mode);
  static OperatorExpr annihilate(int mode);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Reverses every monomial, swaps create/annihilate and conjugates.
  OperatorExpr adjoint() const;

  /// Drops terms whose coefficient is exactly zero.
  OperatorExpr pruned() const;

  /// Largest mode index referenced, -1 for scalar expressions.
  int max_mode() const;

  std::string to_string(const ModeTable& table = ModeTable::canonical()) const;

  OperatorExpr& operator+=(const OperatorExpr& other);
  OperatorExpr& operator*=(Complex scale);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a += (-1.0) * b; }
  friend OperatorExpr operator*(Complex s, OperatorExpr a) { return a *= s; }
  friend OperatorExpr operator*(OperatorExpr a, Complex s) { return a *= s; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

 private:
  std::vector<Term> terms_;
};

/// {a, b} = ab + ba.
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);

StateVector apply_creation(int mode, const StateVector& psi);
StateVector apply_annihilation(int mode, const StateVector& psi);
StateVector apply_operator(const OperatorExpr& op, const StateVector& psi);

/// Dense representation; column j is apply_operator(op, |j>).
Matrix operator_matrix(const OperatorExpr& op, int mode_count = kCanonicalModes);

Complex inner_product(const StateVector& phi, const StateVector& psi);

}  // namespace unruhent
