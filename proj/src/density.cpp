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

#include "qclone/density.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qclone {

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw DimensionError("density matrix is not square");
  n_qubits_ = qubits_for_dim(static_cast<std::size_t>(m_.rows()));
  const double herm = (m_ - m_.adjoint()).norm();
  if (herm > kExactTol) {
    throw InvalidState("density matrix is not Hermitian (residual " +
                       std::to_string(herm) + ")");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kExactTol) {
    throw InvalidState("density matrix trace is " + std::to_string(tr.real()));
  }
  const CMatrix h = (m_ + m_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < kPsdFloor) {
    throw InvalidState("density matrix has eigenvalue " +
                       std::to_string(eig.eigenvalues().minCoeff()));
  }
}

double BlochVector::length() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix density_from_state(const StateVector& psi) {
  const CVector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& traced) {
  const std::size_t n = rho.n_qubits();
  std::vector<bool> is_traced(n, false);
  for (std::size_t q : traced) {
    if (q >= n) throw DimensionError("traced qubit " + std::to_string(q) + " out of range");
    is_traced[q] = true;
  }
  std::vector<std::size_t> kept;
  std::vector<std::size_t> gone;
  for (std::size_t q = 0; q < n; ++q) (is_traced[q] ? gone : kept).push_back(q);
  if (gone.empty()) throw DimensionError("partial trace needs at least one traced qubit");
  if (kept.empty()) throw DimensionError("cannot trace out every qubit");

  // Scatter a (kept, traced) index pair back into a full basis index.
  auto spread = [](std::size_t bits, const std::vector<std::size_t>& qubits) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      if ((bits >> k) & 1U) out |= std::size_t{1} << qubits[k];
    }
    return out;
  };

  const std::size_t kd = std::size_t{1} << kept.size();
  const std::size_t td = std::size_t{1} << gone.size();
  std::vector<std::size_t> kept_full(kd);
  std::vector<std::size_t> gone_full(td);
  for (std::size_t k = 0; k < kd; ++k) kept_full[k] = spread(k, kept);
  for (std::size_t t = 0; t < td; ++t) gone_full[t] = spread(t, gone);

  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::size_t r = 0; r < kd; ++r) {
    for (std::size_t c = 0; c < kd; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < td; ++t) {
        acc += rho(kept_full[r] | gone_full[t], kept_full[c] | gone_full[t]);
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

BlochVector bloch_coords(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("Bloch coordinates need a single-qubit matrix");
  const Complex r10 = rho(1, 0);
  return {2.0 * r10.real(), 2.0 * r10.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  if (r.length() > 1.0 + 1e-10) throw InvalidState("Bloch vector longer than 1");
  CMatrix m(2, 2);
  m << Complex(1.0 + r.z, 0.0), Complex(r.x, -r.y),
       Complex(r.x, r.y), Complex(1.0 - r.z, 0.0);
  return DensityMatrix(m / 2.0);
}

double fidelity_pure(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim()) {
    throw DimensionError("fidelity operands have dimensions " +
                         std::to_string(rho.dim()) + " and " + std::to_string(psi.dim()));
  }
  const CVector& v = psi.amplitudes();
  return std::abs(v.dot(rho.matrix() * v));
}

double fidelity_from_scaling(double s) { return 0.5 * (1.0 + s); }

double product_determinant(const StateVector& psi) {
  if (psi.n_qubits() != 2) {
    throw DimensionError("factorisability test is only defined for 2 qubits");
  }
  return std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

bool is_product_2q(const StateVector& psi, double tol) {
  return product_determinant(psi) <= tol;
}

DensityMatrix reduced_qubit(const StateVector& psi, std::size_t qubit) {
  const DensityMatrix rho = density_from_state(psi);
  if (psi.n_qubits() == 1) {
    if (qubit != 0) throw DimensionError("qubit out of range");
    return rho;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < psi.n_qubits(); ++q) {
    if (q != qubit) traced.push_back(q);
  }
  if (traced.size() == psi.n_qubits()) throw DimensionError("qubit out of range");
  return partial_trace(rho, traced);
}

}  // namespace qclone
