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

#include "qclone/qcore.hpp"

#include <bit>
#include <cmath>

namespace qclone {

std::size_t qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " is not a power of two >= 2");
  }
  if (dim > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " exceeds the limit of 2^" +
                         std::to_string(kMaxQubits));
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

std::string basis_label(std::size_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t k = 0; k < n_qubits; ++k) {
    if ((index >> k) & 1U) s[n_qubits - 1 - k] = '1';
  }
  return s;
}

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
  n_qubits_ = qubits_for_dim(static_cast<std::size_t>(amps_.size()));
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    if (!std::isfinite(amps_(i).real()) || !std::isfinite(amps_(i).imag())) {
      throw InvalidState("state amplitude " + std::to_string(i) +
                         " is not finite");
    }
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kExactTol) {
    throw InvalidState("state is not normalised (norm^2 = " +
                       std::to_string(norm2) + ")");
  }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector([&] {
        CVector v(static_cast<Eigen::Index>(amplitudes.size()));
        Eigen::Index i = 0;
        for (const Complex& a : amplitudes) v(i++) = a;
        return v;
      }()) {}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  qubits_for_dim(dim);
  if (index >= dim) throw DimensionError("basis index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

UnitaryCheck check_unitary(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return {false, INFINITY};
  const CMatrix residual =
      m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
  const double r = residual.norm();
  return {r <= kExactTol, r};
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw DimensionError("matrix is not square");
  qubits_for_dim(static_cast<std::size_t>(m_.rows()));
  const UnitaryCheck check = check_unitary(m_);
  if (!check.unitary) {
    throw InvalidState("matrix is not unitary (residual " +
                       std::to_string(check.residual) + ")");
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(CMatrix::Identity(d, d));
}

namespace {

void guard_dim(Eigen::Index rows, Eigen::Index cols) {
  if (static_cast<std::size_t>(rows) > kMaxDim ||
      static_cast<std::size_t>(cols) > kMaxDim) {
    throw DimensionError("tensor product exceeds dimension limit " +
                         std::to_string(kMaxDim));
  }
}

}  // namespace

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  guard_dim(rows, cols);
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector tensor_product(const CVector& a, const CVector& b) {
  guard_dim(a.size() * b.size(), 1);
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix(tensor_product(a.matrix(), b.matrix()));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  return StateVector(tensor_product(a.amplitudes(), b.amplitudes()));
}

StateVector apply(const UnitaryMatrix& u, const StateVector& psi) {
  if (u.dim() != psi.dim()) {
    throw DimensionError("gate dimension " + std::to_string(u.dim()) +
                         " does not match state dimension " +
                         std::to_string(psi.dim()));
  }
  return StateVector(u.matrix() * psi.amplitudes());
}

UnitaryMatrix compose(std::span<const UnitaryMatrix> gates,
                      std::optional<std::size_t> dim) {
  if (gates.empty()) {
    if (!dim) throw DimensionError("cannot compose an empty gate list of unknown dimension");
    return UnitaryMatrix::identity(*dim);
  }
  const std::size_t d = gates.front().dim();
  if (dim && *dim != d) throw DimensionError("declared dimension does not match gates");
  CMatrix acc = gates.front().matrix();
  for (std::size_t k = 1; k < gates.size(); ++k) {
    if (gates[k].dim() != d) throw DimensionError("gates have mixed dimensions");
    acc = gates[k].matrix() * acc;
  }
  return UnitaryMatrix(std::move(acc));
}

}  // namespace qclone
