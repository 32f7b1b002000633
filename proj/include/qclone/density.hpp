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

#include <cstddef>
#include <vector>

#include "qclone/qcore.hpp"

namespace qclone {

/// Eigenvalue floor for the positive-semidefinite check.
inline constexpr double kPsdFloor = -1e-10;

/// Default threshold for the 2x2 determinant factorisability test.
inline constexpr double kEntanglementTol = 1e-10;

/// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  /// Throws InvalidState if any invariant fails.
  explicit DensityMatrix(CMatrix entries);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  CMatrix m_;
  std::size_t n_qubits_ = 0;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double length() const;
};

DensityMatrix density_from_state(const StateVector& psi);

/// Reduced matrix on the qubits not in `traced`, kept in ascending original
/// order. Tracing out every qubit is rejected.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& traced);

/// X = 2 Re rho10, Y = 2 Im rho10, Z = rho00 - rho11.
BlochVector bloch_coords(const DensityMatrix& rho);

/// rho = (I + X sx + Y sy + Z sz) / 2; requires |r| <= 1 + 1e-10.
DensityMatrix density_from_bloch(const BlochVector& r);

/// |<psi|rho|psi>|.
double fidelity_pure(const DensityMatrix& rho, const StateVector& psi);

/// Fidelity of an isotropically shrunk Bloch vector: (1 + S) / 2.
double fidelity_from_scaling(double s);

/// |x00 x11 - x01 x10|, the factorisability determinant of a 2-qubit state.
double product_determinant(const StateVector& psi);

/// True iff the 2-qubit state factorises (determinant <= tol).
bool is_product_2q(const StateVector& psi, double tol = kEntanglementTol);

/// Reduced density matrix of a single qubit of a pure state.
DensityMatrix reduced_qubit(const StateVector& psi, std::size_t qubit);

}  // namespace qclone
