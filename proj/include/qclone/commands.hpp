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

// Subcommand bodies of the qclone executable. Each returns the text it would
// print so the same code serves the binary and the tests.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/machines.hpp"
#include "qclone/script.hpp"

namespace qclone::cli {

/// Bad command-line usage; maps to exit code 1 like a parse error.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Command-line numbers within this of an interval end, or of unit norm, are
/// pulled onto it so that truncated decimals such as 0.5477226 are accepted.
inline constexpr double kInputSlack = 1e-6;

/// Exit code for an exception escaping a command: 1 for usage and parse
/// errors, 2 for everything else.
int exit_code_for(const std::exception& e);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Real number from a command-line token; throws UsageError.
double parse_number(std::string_view text, std::string_view what);

/// Input qubit a|0> + b|1>, renormalised within kInputSlack. Throws
/// UsageError on bad literals and InvalidState on a wrong norm.
std::pair<Complex, Complex> parse_input_qubit(std::string_view a, std::string_view b);

/// Real 4-vector "alpha,beta,gamma,delta", renormalised within kInputSlack.
/// Complex components and wrong norms throw DomainError.
machines::ControlState parse_control(std::string_view text);

/// The elementary gate matrices, with unitaries shown symbolically.
std::string gates_report();

/// Final amplitudes and per-qubit Bloch vectors, as "csv" or "json".
std::string simulate_report(const CircuitScript& script, std::string_view format);

struct DiagramFlags {
  std::string format = "ascii";
  bool simplify = false;
  bool annotate = false;
  bool alt_msb = false;
};

std::string diagram_document(const CircuitScript& script, const DiagramFlags& flags);

std::string gn_report(const machines::GNParams& params, Complex a, Complex b);

struct BhSelection {
  std::string mode;
  machines::ControlState control;
};

/// Parses "sym alpha=<v>", "eq se=<v>" or "raw <a,b,c,d>".
BhSelection parse_bh_mode(const std::vector<std::string>& args);

std::string bh_report(const BhSelection& selection, Complex a, Complex b);

struct SweepFiles {
  std::string csv;
  std::string svg;
};

/// machine is "bh-sym" or "bh-eq".
SweepFiles sweep_outputs(std::string_view machine, std::size_t steps);

std::string synth_report(const machines::ControlState& control);

/// Two-qubit script preparing the control state from |00>.
CircuitScript synth_script(const machines::ControlState& control);

}  // namespace qclone::cli
