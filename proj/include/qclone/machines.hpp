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

// Griffiths-Niu and Buzek-Hillery copying machines.

#include <array>
#include <cstddef>
#include <vector>

#include "qclone/density.hpp"
#include "qclone/qcore.hpp"

namespace qclone::machines {

// ---------------------------------------------------------------------------
// Griffiths-Niu (two qubits: Bob = LSB carries the input, Eve = MSB)

inline constexpr std::size_t kGnBobQubit = 0;
inline constexpr std::size_t kGnEveQubit = 1;

struct GNParams {
  double theta0 = 0.0;
  double theta1 = 0.0;

  // Half-angle cosines/sines of each rotation.
  double c0() const;
  double s0() const;
  double c1() const;
  double s1() const;
  // Sum and difference angles (theta0 +- theta1) / 2.
  double angle_sum() const { return (theta0 + theta1) / 2.0; }
  double angle_diff() const { return (theta0 - theta1) / 2.0; }
};

struct GNOperators {
  UnitaryMatrix a;  // rotation by theta0 on Eve's qubit
  UnitaryMatrix b;  // c-not controlled by Bob, target Eve
  UnitaryMatrix c;  // rotation by theta1 on Eve's qubit
  UnitaryMatrix d;  // c-not controlled by Eve, target Bob
};

GNOperators gn_operators(const GNParams& p);

/// The modified machine as a gate list: A, B, C, B, D.
Circuit gn_circuit(const GNParams& p);

/// The original machine, whose outputs are swapped relative to the modified
/// one: the modified circuit followed by a swap.
Circuit gn_original_circuit(const GNParams& p);

/// Psi_0 ... Psi_5 and the reduced matrices of stages 2 ... 5.
struct GNTrace {
  std::array<StateVector, 6> psi;
  std::array<DensityMatrix, 4> rho_bob;
  std::array<DensityMatrix, 4> rho_eve;

  const DensityMatrix& bob(std::size_t stage) const;
  const DensityMatrix& eve(std::size_t stage) const;
};

GNTrace gn_run(const GNParams& p, Complex a, Complex b);

/// Affine map r -> scale * r + offset (componentwise) on Bloch vectors.
struct BlochMap {
  std::array<double, 3> scale{1.0, 1.0, 1.0};
  std::array<double, 3> offset{0.0, 0.0, 0.0};

  BlochVector operator()(const BlochVector& r) const;
};

struct GNBlochMaps {
  BlochMap bob;
  BlochMap eve;
};

GNBlochMaps gn_bloch_maps(const GNParams& p);

// ---------------------------------------------------------------------------
// Buzek-Hillery (three qubits: Bob = input carrier, Eve, ancilla = MSB)

inline constexpr std::size_t kBhBobQubit = 0;
inline constexpr std::size_t kBhEveQubit = 1;
inline constexpr std::size_t kBhAncillaQubit = 2;

/// Ancilla preparation alpha|00> + beta|01> + gamma|10> + delta|11>.
struct ControlState {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;

  double norm2() const;
  /// Throws InvalidState unless the squared norm is 1 within kExactTol.
  void validate() const;
  CVector amplitudes() const;
};

struct ScalingFactors {
  double s_bob = 1.0;
  double s_eve = 0.0;
};

/// The eight-state permutation realised by the four c-nots.
UnitaryMatrix bh_unitary();

/// The four c-not gates: input -> Eve, input -> ancilla, Eve -> input,
/// ancilla -> input.
Circuit bh_circuit();

struct BHResult {
  StateVector psi_out;
  DensityMatrix rho_bob;
  DensityMatrix rho_eve;
  DensityMatrix rho_anc;
};

BHResult bh_run(const ControlState& c, Complex a, Complex b);

/// X/Y Bloch scalings (2 alpha delta, 2 alpha gamma) of Bob and Eve. They
/// describe the full map only when beta = 0.
ScalingFactors bh_xy_scaling(const ControlState& c);

inline constexpr double kSymmetricAlphaMin = 0.70710678118654752440;  // 1/sqrt 2
inline constexpr double kSymmetricAlphaMax = 0.81649658092772603273;  // sqrt 2/3

/// Values within this distance outside a parameter interval are clamped
/// onto it instead of rejected.
inline constexpr double kDomainSlack = 1e-12;

/// Isotropic cloner for a free alpha in [1/sqrt 2, sqrt(2/3)]:
/// beta = 0, gamma/delta = alpha/2 -/+ sqrt(1/2 - 3 alpha^2 / 4).
struct SymmetricCloner {
  ControlState control;
  ScalingFactors scaling;
};

SymmetricCloner bh_symmetric_params(double alpha);

/// Optimal cloner for equatorial states at a given Eve scaling in [0, 1].
struct EquatorialCloner {
  ControlState control;
  double s_bob = 1.0;
};

EquatorialCloner bh_equatorial_params(double s_eve);

/// Bob's X/Y scaling 2 alpha delta for beta = 0, with gamma fixed by s_eve and
/// delta by normalisation. Throws DomainError if alpha admits no real delta.
double equatorial_bob_scaling(double alpha, double s_eve);

struct SymmetricSweepRow {
  double alpha = 0.0;
  double s_bob = 0.0;
  double s_eve = 0.0;
  double f_bob = 0.0;
  double f_eve = 0.0;
};

/// Uniform alpha grid over the symmetric interval, both endpoints included.
std::vector<SymmetricSweepRow> sweep_symmetric(std::size_t n_steps);

struct EquatorialSweepRow {
  double s_eve = 0.0;
  double s_bob = 0.0;
  double alpha = 0.0;
};

/// Uniform s_eve grid over [0, 1], both endpoints included.
std::vector<EquatorialSweepRow> sweep_equatorial(std::size_t n_steps);

// ---------------------------------------------------------------------------
// Control-state synthesis

struct SynthesisAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

/// (cos t1 cos t2, cos t1 sin t2, sin t1 cos t3, sin t1 sin t3).
ControlState synth_control(const SynthesisAngles& angles);

/// U1 (rotation of the high qubit) and U2 (rotation of the low qubit by t2
/// or t3 depending on the high qubit); U2 U1 |00> is the control state.
std::pair<UnitaryMatrix, UnitaryMatrix> synthesis_operators(const SynthesisAngles& angles);

/// Inverse of synth_control. theta2 lies in (-pi/2, pi/2] with the sign of
/// alpha carried by cos theta1, so beta = 0 always gives theta2 = 0.
SynthesisAngles solve_synthesis(const ControlState& c);

/// Gate list preparing the control state from |00>. Zero-angle rotations are
/// omitted, so beta = 0 needs two gates and the general case three.
Circuit synthesis_circuit(const SynthesisAngles& angles);

}  // namespace qclone::machines
