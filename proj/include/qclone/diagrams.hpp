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

// Diagrams of states: one horizontal line per basis state and, for every
// gate, an edge from input state i to output state j for each nonzero matrix
// entry U[j][i]. Edges carrying a nonzero amplitude are emphasised.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qclone/qcore.hpp"

namespace qclone {

/// Threshold below which matrix entries and amplitudes count as zero.
inline constexpr double kDiagramZeroTol = 1e-12;

struct DiagramEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Complex weight = 1.0;
  /// Empty for unit entries (pure exchanges of states).
  std::string label;
  bool emphasized = false;

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct DiagramColumn {
  std::string gate_label;
  /// Sorted by (from, to).
  std::vector<DiagramEdge> edges;
  std::optional<bool> entangled_after;

  friend bool operator==(const DiagramColumn&, const DiagramColumn&) = default;
};

struct Diagram {
  std::size_t n_qubits = 1;
  std::size_t n_states = 2;
  std::vector<std::string> state_labels;
  std::vector<DiagramColumn> columns;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct CompileOptions {
  /// Mark each column with the factorisability of the state after it
  /// (two-qubit circuits only).
  bool annotate_entanglement = false;
  /// Draw single-qubit unitaries on a non-LSB qubit as swap, unitary on the
  /// LSB, swap.
  bool msb_via_swaps = false;
};

Diagram compile_diagram(const Circuit& circuit, const StateVector& initial,
                        const CompileOptions& options = {});

/// Drops edges that never carry amplitude and merges runs of adjacent columns
/// that are generalised permutations (one edge per row and column).
Diagram simplify_diagram(const Diagram& d);

/// Dense matrix rebuilt from a column's edges.
CMatrix column_matrix(const DiagramColumn& column, std::size_t n_states);

/// Pushes amplitudes through every column's edges.
CVector propagate(const Diagram& d, const CVector& initial);

/// Text label of a matrix entry: empty for exactly 1, else six significant
/// digits.
std::string edge_label(Complex weight);

/// Fixed-grid UTF-8 rendering; throws DomainError above 16 states.
std::string render_ascii(const Diagram& d);
inline constexpr std::size_t kAsciiMaxStates = 16;

/// Deterministic SVG 1.1 (line, text and rect elements only).
std::string render_svg(const Diagram& d);
inline constexpr std::size_t kSvgMaxStates = 256;

}  // namespace qclone
