// Copyright 2026 The qclone Authors
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

#pragma once

// Dense state-vector algebra for small registers.
//
// Basis index convention: bit k of a basis index is the value of qubit k, so
// qubit 0 is the least significant bit. For two qubits the basis order is
// 00, 01, 10, 11 (text written MSB first).

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qclone/errors.hpp"

namespace qclone {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxQubits = 8;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

/// Tolerance for exact-algebra checks (unitarity, normalisation, hermiticity).
inline constexpr double kExactTol = 1e-12;

/// Number of qubits for a power-of-two dimension; throws otherwise.
std::size_t qubits_for_dim(std::size_t dim);

/// Text label of a basis state, MSB first ("01" is index 1 for two qubits).
std::string basis_label(std::size_t index, std::size_t n_qubits);

/// Normalised amplitude vector over 2^n basis states.
class StateVector {
 public:
  /// Validates length (power of two, <= kMaxDim) and norm (within kExactTol).
  explicit StateVector(CVector amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  static StateVector basis(std::size_t n_qubits, std::size_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

 private:
  CVector amps_;
  std::size_t n_qubits_ = 0;
};

/// Residual of a unitarity check: ||M^dagger M - I||_F.
struct UnitaryCheck {
  bool unitary = false;
  double residual = 0.0;
};

UnitaryCheck check_unitary(const CMatrix& m);

/// Square matrix with U^dagger U = I within kExactTol.
class UnitaryMatrix {
 public:
  /// Throws InvalidState when the residual exceeds kExactTol.
  explicit UnitaryMatrix(CMatrix entries);

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t n_qubits() const { return qubits_for_dim(dim()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  CMatrix m_;
};

/// Kronecker product; the left operand owns the high-order bits.
/// Results larger than kMaxDim are rejected with DimensionError.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CVector tensor_product(const CVector& a, const CVector& b);
UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);

StateVector apply(const UnitaryMatrix& u, const StateVector& psi);

/// Product of the gates in application order: compose({G1, G2, G3}) is
/// G3 * G2 * G1. An empty list yields the identity of `dim`, and is an error
/// when no dimension is declared.
UnitaryMatrix compose(std::span<const UnitaryMatrix> gates,
                      std::optional<std::size_t> dim = std::nullopt);

// ---------------------------------------------------------------------------
// Gates and circuits

enum class GateKind {
  Not,
  Swap,
  Cnot,       // control above target
  CnotBar,    // control above target, fires on control = 0
  CnotR,      // control below target
  CnotRBar,   // control below target, fires on control = 0
  U1q,        // arbitrary 2x2 unitary on the target
  Crot,       // [[cos t/2, sin t/2], [-sin t/2, cos t/2]], optionally controlled
};

struct GateSpec {
  GateKind kind = GateKind::Not;
  std::size_t target = 0;
  /// Control qubit for the c-not family and a controlled Crot; second qubit
  /// of a Swap.
  std::optional<std::size_t> control;
  std::optional<double> angle;
  std::optional<Eigen::Matrix2cd> matrix2;

  static GateSpec not_gate(std::size_t target);
  static GateSpec swap(std::size_t q0, std::size_t q1);
  static GateSpec cnot(std::size_t control, std::size_t target);
  static GateSpec cnot_bar(std::size_t control, std::size_t target);
  static GateSpec cnot_r(std::size_t control, std::size_t target);
  static GateSpec cnot_r_bar(std::size_t control, std::size_t target);
  static GateSpec u1q(std::size_t target, const Eigen::Matrix2cd& m);
  static GateSpec crot(std::size_t target, double angle);
  static GateSpec crot(std::size_t control, std::size_t target, double angle);
};

/// Throws InvalidGate when the gate is not realisable on n_qubits.
void validate_gate(const GateSpec& spec, std::size_t n_qubits);

/// The 2x2 rotation used by Crot: cosine diagonal, +sine upper right.
Eigen::Matrix2cd rotation_matrix(double angle);

/// Full 2^n x 2^n matrix of a gate.
UnitaryMatrix build_gate_matrix(const GateSpec& spec, std::size_t n_qubits);

/// Short human-readable name, e.g. "cnot 1 0" or "crot 1 theta=0.7".
std::string gate_label(const GateSpec& spec);

struct Circuit {
  std::size_t n_qubits = 1;
  std::vector<GateSpec> gates;

  /// Throws InvalidGate / DimensionError on the first bad gate.
  void validate() const;
  UnitaryMatrix unitary() const;
  StateVector run(const StateVector& initial) const;
};

}  // namespace qclone
