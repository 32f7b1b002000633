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

#include <cmath>

#include "qclone/machines.hpp"

namespace qclone::machines {

double GNParams::c0() const { return std::cos(theta0 / 2.0); }
double GNParams::s0() const { return std::sin(theta0 / 2.0); }
double GNParams::c1() const { return std::cos(theta1 / 2.0); }
double GNParams::s1() const { return std::sin(theta1 / 2.0); }

namespace {

// Rotation of the high qubit with the machine's sign convention.
CMatrix high_qubit_rotation(double c, double s) {
  CMatrix m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, s,
       -s, 0, c, 0,
       0, -s, 0, c;
  return m;
}

void require_normalized(Complex a, Complex b) {
  const double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > kExactTol) {
    throw InvalidState("input qubit is not normalised (|a|^2 + |b|^2 = " +
                       std::to_string(n2) + ")");
  }
}

}  // namespace

GNOperators gn_operators(const GNParams& p) {
  CMatrix b(4, 4);
  b << 1, 0, 0, 0,
       0, 0, 0, 1,
       0, 0, 1, 0,
       0, 1, 0, 0;
  CMatrix d(4, 4);
  d << 1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 0, 1,
       0, 0, 1, 0;
  return GNOperators{UnitaryMatrix(high_qubit_rotation(p.c0(), p.s0())),
                     UnitaryMatrix(b),
                     UnitaryMatrix(high_qubit_rotation(p.c1(), p.s1())),
                     UnitaryMatrix(d)};
}

Circuit gn_circuit(const GNParams& p) {
  return Circuit{2,
                 {GateSpec::crot(kGnEveQubit, p.theta0),
                  GateSpec::cnot_r(kGnBobQubit, kGnEveQubit),
                  GateSpec::crot(kGnEveQubit, p.theta1),
                  GateSpec::cnot_r(kGnBobQubit, kGnEveQubit),
                  GateSpec::cnot(kGnEveQubit, kGnBobQubit)}};
}

Circuit gn_original_circuit(const GNParams& p) {
  Circuit c = gn_circuit(p);
  c.gates.push_back(GateSpec::swap(kGnBobQubit, kGnEveQubit));
  return c;
}

const DensityMatrix& GNTrace::bob(std::size_t stage) const {
  if (stage < 2 || stage > 5) throw DimensionError("reduced matrices exist for stages 2..5");
  return rho_bob[stage - 2];
}

const DensityMatrix& GNTrace::eve(std::size_t stage) const {
  if (stage < 2 || stage > 5) throw DimensionError("reduced matrices exist for stages 2..5");
  return rho_eve[stage - 2];
}

GNTrace gn_run(const GNParams& p, Complex a, Complex b) {
  require_normalized(a, b);
  const GNOperators ops = gn_operators(p);
  const StateVector psi0{a, b, 0.0, 0.0};
  const StateVector psi1 = apply(ops.a, psi0);
  const StateVector psi2 = apply(ops.b, psi1);
  const StateVector psi3 = apply(ops.c, psi2);
  const StateVector psi4 = apply(ops.b, psi3);
  const StateVector psi5 = apply(ops.d, psi4);

  auto bob = [](const StateVector& s) { return reduced_qubit(s, kGnBobQubit); };
  auto eve = [](const StateVector& s) { return reduced_qubit(s, kGnEveQubit); };
  return GNTrace{{psi0, psi1, psi2, psi3, psi4, psi5},
                 {bob(psi2), bob(psi3), bob(psi4), bob(psi5)},
                 {eve(psi2), eve(psi3), eve(psi4), eve(psi5)}};
}

BlochVector BlochMap::operator()(const BlochVector& r) const {
  return {scale[0] * r.x + offset[0], scale[1] * r.y + offset[1],
          scale[2] * r.z + offset[2]};
}

GNBlochMaps gn_bloch_maps(const GNParams& p) {
  const double ca = std::cos(p.angle_sum());
  const double sa = std::sin(p.angle_sum());
  const double cb = std::cos(p.angle_diff());
  const double sb = std::sin(p.angle_diff());

  GNBlochMaps maps;
  maps.bob.scale = {ca * cb + sa * sb, ca * cb - sa * sb, ca * ca - sb * sb};
  maps.bob.offset = {0.0, 0.0, ca * ca - cb * cb};
  maps.eve.scale = {-(ca * sb + sa * cb), -ca * sb + sa * cb, ca * ca - cb * cb};
  maps.eve.offset = {0.0, 0.0, ca * ca - sb * sb};
  return maps;
}

}  // namespace qclone::machines
