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

ControlState synth_control(const SynthesisAngles& t) {
  const double c1 = std::cos(t.theta1), s1 = std::sin(t.theta1);
  return ControlState{c1 * std::cos(t.theta2), c1 * std::sin(t.theta2),
                      s1 * std::cos(t.theta3), s1 * std::sin(t.theta3)};
}

std::pair<UnitaryMatrix, UnitaryMatrix> synthesis_operators(const SynthesisAngles& t) {
  const double c1 = std::cos(t.theta1), s1 = std::sin(t.theta1);
  const double c2 = std::cos(t.theta2), s2 = std::sin(t.theta2);
  const double c3 = std::cos(t.theta3), s3 = std::sin(t.theta3);
  CMatrix u1(4, 4);
  u1 << c1, 0, -s1, 0,
        0, c1, 0, -s1,
        s1, 0, c1, 0,
        0, s1, 0, c1;
  CMatrix u2(4, 4);
  u2 << c2, -s2, 0, 0,
        s2, c2, 0, 0,
        0, 0, c3, -s3,
        0, 0, s3, c3;
  return {UnitaryMatrix(u1), UnitaryMatrix(u2)};
}

SynthesisAngles solve_synthesis(const ControlState& c) {
  c.validate();
  const double sign = c.alpha < 0.0 ? -1.0 : 1.0;
  const double low = std::hypot(c.alpha, c.beta);
  const double high = std::hypot(c.gamma, c.delta);
  SynthesisAngles t;
  t.theta1 = std::atan2(high, sign * low);
  t.theta2 = low == 0.0 ? 0.0 : std::atan2(sign * c.beta, sign * c.alpha) + 0.0;
  t.theta3 = high == 0.0 ? 0.0 : std::atan2(c.delta, c.gamma) + 0.0;
  return t;
}

Circuit synthesis_circuit(const SynthesisAngles& t) {
  // Crot(x) has +sin(x/2) in its upper-right entry while U1/U2 carry -sin,
  // hence the factor -2. U2 is a rotation by theta2 on the low qubit followed
  // by a rotation by theta3 - theta2 controlled by the high qubit.
  Circuit c{2, {}};
  if (t.theta1 != 0.0) c.gates.push_back(GateSpec::crot(1, -2.0 * t.theta1));
  if (t.theta2 != 0.0) c.gates.push_back(GateSpec::crot(0, -2.0 * t.theta2));
  if (t.theta3 - t.theta2 != 0.0) {
    c.gates.push_back(GateSpec::crot(1, 0, -2.0 * (t.theta3 - t.theta2)));
  }
  return c;
}

}  // namespace qclone::machines
