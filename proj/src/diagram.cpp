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

#include <algorithm>
#include <cmath>

#include "qclone/density.hpp"
#include "qclone/diagrams.hpp"
#include "qclone/number_format.hpp"

namespace qclone {

std::string edge_label(Complex weight) {
  if (std::abs(weight - Complex(1.0, 0.0)) <= kDiagramZeroTol) return "";
  return format_complex(weight, format_short);
}

namespace {

bool is_single_qubit_unitary(const GateSpec& g) {
  return g.kind == GateKind::U1q || (g.kind == GateKind::Crot && !g.control);
}

std::vector<GateSpec> expand_gates(const Circuit& circuit, const CompileOptions& options) {
  if (!options.msb_via_swaps) return circuit.gates;
  std::vector<GateSpec> out;
  for (const GateSpec& g : circuit.gates) {
    if (is_single_qubit_unitary(g) && g.target != 0) {
      GateSpec moved = g;
      moved.target = 0;
      out.push_back(GateSpec::swap(0, g.target));
      out.push_back(moved);
      out.push_back(GateSpec::swap(0, g.target));
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool is_monomial(const DiagramColumn& col, std::size_t n_states) {
  std::vector<int> out_count(n_states, 0);
  std::vector<int> in_count(n_states, 0);
  for (const DiagramEdge& e : col.edges) {
    if (++out_count[e.from] > 1 || ++in_count[e.to] > 1) return false;
  }
  return true;
}

void sort_edges(std::vector<DiagramEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const DiagramEdge& a, const DiagramEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
}

DiagramColumn merge(const DiagramColumn& first, const DiagramColumn& second) {
  DiagramColumn out;
  out.gate_label = first.gate_label + "; " + second.gate_label;
  out.entangled_after = second.entangled_after;
  for (const DiagramEdge& e1 : first.edges) {
    for (const DiagramEdge& e2 : second.edges) {
      if (e2.from != e1.to) continue;
      const Complex w = e1.weight * e2.weight;
      out.edges.push_back({e1.from, e2.to, w, edge_label(w), e1.emphasized});
    }
  }
  sort_edges(out.edges);
  return out;
}

}  // namespace

Diagram compile_diagram(const Circuit& circuit, const StateVector& initial,
                        const CompileOptions& options) {
  circuit.validate();
  if (initial.n_qubits() != circuit.n_qubits) {
    throw DimensionError("initial state has " + std::to_string(initial.n_qubits()) +
                         " qubits, circuit has " + std::to_string(circuit.n_qubits));
  }
  if (options.annotate_entanglement && circuit.n_qubits != 2) {
    throw DomainError("entanglement annotation is only defined for 2-qubit circuits");
  }

  Diagram d;
  d.n_qubits = circuit.n_qubits;
  d.n_states = std::size_t{1} << d.n_qubits;
  for (std::size_t s = 0; s < d.n_states; ++s) d.state_labels.push_back(basis_label(s, d.n_qubits));

  CVector amp = initial.amplitudes();
  for (const GateSpec& g : expand_gates(circuit, options)) {
    const UnitaryMatrix u = build_gate_matrix(g, circuit.n_qubits);
    DiagramColumn col;
    col.gate_label = gate_label(g);
    for (std::size_t i = 0; i < d.n_states; ++i) {
      const bool carries = std::abs(amp(static_cast<Eigen::Index>(i))) > kDiagramZeroTol;
      for (std::size_t j = 0; j < d.n_states; ++j) {
        const Complex w = u(j, i);
        if (std::abs(w) <= kDiagramZeroTol) continue;
        col.edges.push_back({i, j, w, edge_label(w), carries});
      }
    }
    amp = u.matrix() * amp;
    if (options.annotate_entanglement) {
      col.entangled_after = !is_product_2q(StateVector(amp));
    }
    d.columns.push_back(std::move(col));
  }
  return d;
}

Diagram simplify_diagram(const Diagram& d) {
  Diagram out = d;
  out.columns.clear();
  for (const DiagramColumn& col : d.columns) {
    DiagramColumn kept = col;
    std::erase_if(kept.edges, [](const DiagramEdge& e) { return !e.emphasized; });
    if (!out.columns.empty() && is_monomial(out.columns.back(), d.n_states) &&
        is_monomial(kept, d.n_states)) {
      out.columns.back() = merge(out.columns.back(), kept);
    } else {
      out.columns.push_back(std::move(kept));
    }
  }
  return out;
}

CMatrix column_matrix(const DiagramColumn& column, std::size_t n_states) {
  const auto n = static_cast<Eigen::Index>(n_states);
  CMatrix m = CMatrix::Zero(n, n);
  for (const DiagramEdge& e : column.edges) {
    m(static_cast<Eigen::Index>(e.to), static_cast<Eigen::Index>(e.from)) += e.weight;
  }
  return m;
}

CVector propagate(const Diagram& d, const CVector& initial) {
  if (static_cast<std::size_t>(initial.size()) != d.n_states) {
    throw DimensionError("initial amplitudes do not match the diagram");
  }
  CVector amp = initial;
  for (const DiagramColumn& col : d.columns) {
    CVector next = CVector::Zero(amp.size());
    for (const DiagramEdge& e : col.edges) {
      next(static_cast<Eigen::Index>(e.to)) += e.weight * amp(static_cast<Eigen::Index>(e.from));
    }
    amp = std::move(next);
  }
  return amp;
}

}  // namespace qclone
