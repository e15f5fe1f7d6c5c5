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

#include "unruhent/fock.hpp"

#include "unruhent/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

namespace unruhent {

namespace {

void require_mode_count(int mode_count) {
  if (mode_count < 1 || mode_count > kMaxModes)
    throw UsageError("mode count must be in [1, " + std::to_string(kMaxModes) +
                     "], got " + std::to_string(mode_count));
}

void require_mode(int mode, int mode_count) {
  if (mode < 0 || mode >= mode_count)
    throw UsageError("mode index " + std::to_string(mode) + " out of range for " +
                     std::to_string(mode_count) + " modes");
}

void require_same_space(const StateVector& a, const StateVector& b) {
  if (a.mode_count() != b.mode_count())
    throw UsageError("state vectors live in different Fock spaces (" +
                     std::to_string(a.mode_count()) + " vs " +
                     std::to_string(b.mode_count()) + " modes)");
}

StateVector apply_ladder(int mode, Ladder kind, const StateVector& psi) {
  const int n = psi.mode_count();
  require_mode(mode, n);
  const std::size_t bit = mode_bit(mode, n);
  const bool wants_occupied = kind == Ladder::kAnnihilate;
  Vector out = Vector::Zero(static_cast<Eigen::Index>(psi.dimension()));
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    const Complex amp = psi[i];
    if (amp == Complex{}) continue;
    if (((i & bit) != 0) != wants_occupied) continue;
    const double sign = (occupied_before(i, mode, n) % 2 == 0) ? 1.0 : -1.0;
    out(static_cast<Eigen::Index>(i ^ bit)) += sign * amp;
  }
  return StateVector(n, std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------
// ModeTable

ModeTable::ModeTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  require_mode_count(static_cast<int>(labels_.size()));
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw UsageError("mode labels must be unique");
}

const ModeTable& ModeTable::canonical() {
  static const ModeTable table({"A", "c_I", "d_I", "c_II", "d_II"});
  return table;
}

const std::string& ModeTable::label(int mode) const {
  require_mode(mode, size());
  return labels_[static_cast<std::size_t>(mode)];
}

int ModeTable::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UsageError("unknown mode label '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

// ---------------------------------------------------------------------------
// Basis indexing

std::size_t basis_index(std::span<const int> occupations) {
  const int n = static_cast<int>(occupations.size());
  require_mode_count(n);
  std::size_t index = 0;
  for (int k = 0; k < n; ++k) {
    const int occ = occupations[static_cast<std::size_t>(k)];
    if (occ != 0 && occ != 1) throw UsageError("occupation numbers must be 0 or 1");
    if (occ) index |= mode_bit(k, n);
  }
  return index;
}

std::vector<int> occupations_of(std::size_t index, int mode_count) {
  require_mode_count(mode_count);
  if (index >= (std::size_t{1} << mode_count)) throw UsageError("basis index out of range");
  std::vector<int> occ(static_cast<std::size_t>(mode_count));
  for (int k = 0; k < mode_count; ++k) occ[static_cast<std::size_t>(k)] = (index & mode_bit(k, mode_count)) ? 1 : 0;
  return occ;
}

int occupied_before(std::size_t index, int mode, int mode_count) {
  // Modes before `mode` occupy the bits above mode_bit(mode).
  const std::size_t above = ~((mode_bit(mode, mode_count) << 1) - 1);
  const std::size_t in_space = (std::size_t{1} << mode_count) - 1;
  return std::popcount(index & above & in_space);
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int mode_count) : mode_count_(mode_count) {
  require_mode_count(mode_count);
  amplitudes_ = Vector::Zero(Eigen::Index{1} << mode_count);
}

StateVector::StateVector(int mode_count, Vector amplitudes)
    : mode_count_(mode_count), amplitudes_(std::move(amplitudes)) {
  require_mode_count(mode_count);
  if (amplitudes_.size() != (Eigen::Index{1} << mode_count))
    throw UsageError("amplitude count does not match 2^" + std::to_string(mode_count));
  if (!amplitudes_.allFinite()) throw UsageError("state amplitudes must be finite");
}

StateVector StateVector::vacuum(int mode_count) { return basis(0, mode_count); }

StateVector StateVector::basis(std::size_t index, int mode_count) {
  StateVector v(mode_count);
  if (index >= v.dimension()) throw UsageError("basis index out of range");
  v.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
  v.normalized_ = true;
  return v;
}

StateVector StateVector::from_occupations(std::initializer_list<int> occupations) {
  std::vector<int> occ(occupations);
  return basis(basis_index(occ), static_cast<int>(occ.size()));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw UsageError("cannot normalize the zero vector");
  StateVector out(mode_count_, amplitudes_ / n);
  return out.certify_normalized();
}

StateVector StateVector::certify_normalized(double tolerance) const {
  const double deviation = std::abs(norm() - 1.0);
  if (deviation > tolerance) {
    std::ostringstream msg;
    msg << "state norm deviates from 1 by " << deviation << " (tolerance " << tolerance << ")";
    throw InternalError(msg.str());
  }
  StateVector out = *this;
  out.normalized_ = true;
  return out;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same_space(*this, other);
  amplitudes_ += other.amplitudes_;
  normalized_ = false;
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same_space(*this, other);
  amplitudes_ -= other.amplitudes_;
  normalized_ = false;
  return *this;
}

StateVector& StateVector::operator*=(Complex scale) {
  amplitudes_ *= scale;
  normalized_ = false;
  return *this;
}

// ---------------------------------------------------------------------------
// OperatorExpr

OperatorExpr::OperatorExpr(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (const Term& t : terms_)
    for (const LadderFactor& f : t.factors)
      if (f.mode < 0 || f.mode >= kMaxModes) throw UsageError("ladder factor mode out of range");
}

OperatorExpr OperatorExpr::identity(Complex coefficient) {
  return OperatorExpr({Term{coefficient, {}}});
}

OperatorExpr OperatorExpr::create(int mode) {
  return OperatorExpr({Term{1.0, {LadderFactor{mode, Ladder::kCreate}}}});
}

OperatorExpr OperatorExpr::annihilate(int mode) {
  return OperatorExpr({Term{1.0, {LadderFactor{mode, Ladder::kAnnihilate}}}});
}

OperatorExpr OperatorExpr::adjoint() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term a{std::conj(t.coefficient), {}};
    a.factors.reserve(t.factors.size());
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
      a.factors.push_back({it->mode, it->kind == Ladder::kCreate ? Ladder::kAnnihilate : Ladder::kCreate});
    out.push_back(std::move(a));
  }
  return OperatorExpr(std::move(out));
}

OperatorExpr OperatorExpr::pruned() const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.coefficient != Complex{}) out.push_back(t);
  return OperatorExpr(std::move(out));
}

int OperatorExpr::max_mode() const {
  int m = -1;
  for (const Term& t : terms_)
    for (const LadderFactor& f : t.factors) m = std::max(m, f.mode);
  return m;
}

std::string OperatorExpr::to_string(const ModeTable& table) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coefficient.real() << (t.coefficient.imag() < 0 ? "-" : "+")
       << std::abs(t.coefficient.imag()) << "i)";
    for (const LadderFactor& f : t.factors)
      os << " " << table.label(f.mode) << (f.kind == Ladder::kCreate ? "^+" : "");
  }
  return os.str();
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(Complex scale) {
  for (Term& t : terms_) t.coefficient *= scale;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      Term t{ta.coefficient * tb.coefficient, ta.factors};
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      out.push_back(std::move(t));
    }
  }
  return OperatorExpr(std::move(out));
}

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
  return a * b + b * a;
}

// ---------------------------------------------------------------------------
// Ladder action

StateVector apply_creation(int mode, const StateVector& psi) {
  return apply_ladder(mode, Ladder::kCreate, psi);
}

StateVector apply_annihilation(int mode, const StateVector& psi) {
  return apply_ladder(mode, Ladder::kAnnihilate, psi);
}

StateVector apply_operator(const OperatorExpr& op, const StateVector& psi) {
  if (op.max_mode() >= psi.mode_count())
    throw UsageError("operator references mode " + std::to_string(op.max_mode()) +
                     " outside a " + std::to_string(psi.mode_count()) + "-mode space");
  StateVector result(psi.mode_count());
  for (const Term& t : op.terms()) {
    if (t.coefficient == Complex{}) continue;
    StateVector v = psi;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
      v = apply_ladder(it->mode, it->kind, v);
    result += t.coefficient * v;
  }
  return result;
}

Matrix operator_matrix(const OperatorExpr& op, int mode_count) {
  require_mode_count(mode_count);
  const Eigen::Index dim = Eigen::Index{1} << mode_count;
  Matrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    m.col(j) = apply_operator(op, StateVector::basis(static_cast<std::size_t>(j), mode_count)).amplitudes();
  return m;
}

Complex inner_product(const StateVector& phi, const StateVector& psi) {
  require_same_space(phi, psi);
  return phi.amplitudes().dot(psi.amplitudes());  // Eigen conjugates the left side
}

}  // namespace unruhent
