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

// Line-oriented circuit scripts:
//
//   qubits 2                      # register size, must come first
//   state 0.6, 0.8, 0, 0          # optional, before any gate; default |0...0>
//   not 0
//   swap 0 1
//   cnot 1 0                      # control above target (cnotbar: fires on 0)
//   cnotr 0 1                     # control below target (cnotrbar: fires on 0)
//   crot 1 theta=0.7              # rotation of qubit 1
//   crot 0 1 theta=0.7            # the same, controlled by qubit 0
//   u1q 0 [[0.6, 0.8], [-0.8, 0.6]]
//
// Complex literals are "re", "imi", "re+imi" or "re-imi".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qclone/qcore.hpp"

namespace qclone {

/// Amplitude vectors whose squared norm is within this of 1 are rescaled;
/// anything further off is rejected.
inline constexpr double kScriptNormSlack = 1e-8;

struct CircuitScript {
  Circuit circuit;
  /// Declared initial amplitudes, if any.
  std::optional<std::vector<Complex>> state;

  StateVector initial_state() const;
};

/// Throws ParseError carrying the 1-based line and column of the problem.
CircuitScript parse_circuit(std::string_view source);

/// Canonical text: one statement per line, no comments, numbers written
/// exactly. parse_circuit(print_script(s)) reproduces s.
std::string print_script(const CircuitScript& script);

/// Parses one complex literal, surrounding whitespace allowed.
std::optional<Complex> parse_complex(std::string_view text);

/// Parses a real number; rejects trailing garbage and non-finite values.
std::optional<double> parse_real(std::string_view text);

bool operator==(const GateSpec& a, const GateSpec& b);

}  // namespace qclone
