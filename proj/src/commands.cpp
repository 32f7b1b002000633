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

#include "qclone/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qclone/density.hpp"
#include "qclone/diagrams.hpp"
#include "qclone/number_format.hpp"
#include "qclone/svg_writer.hpp"

namespace qclone::cli {

namespace m = qclone::machines;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return 1;
  if (dynamic_cast<const UsageError*>(&e) != nullptr) return 1;
  return 2;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

double parse_number(std::string_view text, std::string_view what) {
  const auto v = parse_real(text);
  if (!v) throw UsageError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  return *v;
}

namespace {

Complex parse_amplitude(std::string_view text, std::string_view what) {
  const auto z = parse_complex(text);
  if (!z) throw UsageError(std::string(what) + ": not a complex number: '" + std::string(text) + "'");
  return *z;
}

// Pulls v onto [lo, hi] when it is within kInputSlack of it; the library
// reports anything further out.
double snap(double v, double lo, double hi) {
  if (v < lo && v >= lo - kInputSlack) return lo;
  if (v > hi && v <= hi + kInputSlack) return hi;
  return v;
}

std::string matrix_text(const CMatrix& mat) {
  std::string s = "[";
  for (Eigen::Index r = 0; r < mat.rows(); ++r) {
    s += r ? ", [" : "[";
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      if (c) s += ", ";
      s += format_complex(mat(r, c));
    }
    s += "]";
  }
  return s + "]";
}

std::string bloch_text(const BlochVector& v) {
  return "(" + format_report(v.x) + ", " + format_report(v.y) + ", " + format_report(v.z) + ")";
}

std::string amplitudes_text(const StateVector& psi) {
  std::string s;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (i) s += "  ";
    s += basis_label(i, psi.n_qubits()) + ": " + format_complex(psi[i]);
  }
  return s;
}

// Column-aligned rows of text, each prefixed with two spaces.
std::string grid_text(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line = "  [";
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += " " + std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out += line + " ]\n";
  }
  return out;
}

std::vector<std::vector<std::string>> numeric_cells(const CMatrix& mat) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(mat.rows()));
  for (Eigen::Index r = 0; r < mat.rows(); ++r) {
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      cells[static_cast<std::size_t>(r)].push_back(format_complex(mat(r, c)));
    }
  }
  return cells;
}

// Entries of the symbolic single-qubit unitary are tagged 1..4 so they can be
// traced through products that only permute and place them.
CMatrix tagged_unitary() {
  CMatrix u(2, 2);
  u << 1.0, 2.0, 3.0, 4.0;
  return u;
}

std::vector<std::vector<std::string>> symbolic_cells(const CMatrix& tagged) {
  static const char* const kNames[] = {"0", "u00", "u01", "u10", "u11"};
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(tagged.rows()));
  for (Eigen::Index r = 0; r < tagged.rows(); ++r) {
    for (Eigen::Index c = 0; c < tagged.cols(); ++c) {
      const auto tag = static_cast<std::size_t>(std::lround(tagged(r, c).real()));
      cells[static_cast<std::size_t>(r)].push_back(kNames[tag]);
    }
  }
  return cells;
}

}  // namespace

std::pair<Complex, Complex> parse_input_qubit(std::string_view a_text, std::string_view b_text) {
  Complex a = parse_amplitude(a_text, "a");
  Complex b = parse_amplitude(b_text, "b");
  const double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > kInputSlack) {
    throw InvalidState("input qubit is not normalised (|a|^2 + |b|^2 = " + format_report(n2) + ")");
  }
  if (std::abs(n2 - 1.0) > kExactTol) {
    const double k = 1.0 / std::sqrt(n2);
    a *= k;
    b *= k;
  }
  return {a, b};
}

m::ControlState parse_control(std::string_view text) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const Complex z = parse_amplitude(token, "control component");
    if (z.imag() != 0.0) {
      throw DomainError("control state must be real, got '" + std::string(token) + "'");
    }
    parts.push_back(z.real());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw UsageError("control state needs 4 components alpha,beta,gamma,delta, got " +
                     std::to_string(parts.size()));
  }
  m::ControlState c{parts[0], parts[1], parts[2], parts[3]};
  const double n2 = c.norm2();
  if (std::abs(n2 - 1.0) > kInputSlack) {
    throw DomainError("control state is not normalised (squared norm = " + format_report(n2) + ")");
  }
  if (std::abs(n2 - 1.0) > kExactTol) {
    const double k = 1.0 / std::sqrt(n2);
    c = m::ControlState{c.alpha * k, c.beta * k, c.gamma * k, c.delta * k};
  }
  return c;
}

// ---------------------------------------------------------------------------
// gates

std::string gates_report() {
  std::string out;
  auto numeric = [&](const std::string& title, const GateSpec& g, std::size_t n) {
    out += title + "\n" + grid_text(numeric_cells(build_gate_matrix(g, n).matrix())) + "\n";
  };
  auto symbolic = [&](const std::string& title, const CMatrix& tagged) {
    out += title + "\n" + grid_text(symbolic_cells(tagged)) + "\n";
  };
  const CMatrix id2 = CMatrix::Identity(2, 2);
  const CMatrix u = tagged_unitary();
  const CMatrix swap = build_gate_matrix(GateSpec::swap(0, 1), 2).matrix();

  numeric("not, one qubit", GateSpec::not_gate(0), 1);
  symbolic("u, one qubit", u);
  numeric("not on qubit 0 (LSB): not 0", GateSpec::not_gate(0), 2);
  numeric("not on qubit 1 (MSB): not 1", GateSpec::not_gate(1), 2);
  symbolic("u on qubit 0 (LSB): I x U", tensor_product(id2, u));
  symbolic("u on qubit 1 (MSB): U x I", tensor_product(u, id2));
  symbolic("u on qubit 1 (MSB) as swap, u on qubit 0, swap", swap * tensor_product(id2, u) * swap);
  numeric("swap: swap 0 1", GateSpec::swap(0, 1), 2);
  numeric("c-not, control 1, target 0: cnot 1 0", GateSpec::cnot(1, 0), 2);
  numeric("c-not firing on 0, control 1, target 0: cnotbar 1 0", GateSpec::cnot_bar(1, 0), 2);
  numeric("reversed c-not, control 0, target 1: cnotr 0 1", GateSpec::cnot_r(0, 1), 2);
  numeric("reversed c-not firing on 0, control 0, target 1: cnotrbar 0 1",
          GateSpec::cnot_r_bar(0, 1), 2);
  out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// simulate

std::string simulate_report(const CircuitScript& script, std::string_view format) {
  const StateVector psi = script.circuit.run(script.initial_state());
  const std::size_t n = psi.n_qubits();
  std::vector<BlochVector> bloch;
  for (std::size_t q = 0; q < n; ++q) bloch.push_back(bloch_coords(reduced_qubit(psi, q)));

  if (format == "csv") {
    std::string out = "state,re,im\n";
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      out += basis_label(i, n) + "," + format_report(psi[i].real()) + "," +
             format_report(psi[i].imag()) + "\n";
    }
    out += "qubit,x,y,z\n";
    for (std::size_t q = 0; q < n; ++q) {
      out += std::to_string(q) + "," + format_report(bloch[q].x) + "," +
             format_report(bloch[q].y) + "," + format_report(bloch[q].z) + "\n";
    }
    return out;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["qubits"] = n;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      const std::string key = "amp_" + basis_label(i, n);
      j[key + "_re"] = psi[i].real() + 0.0;
      j[key + "_im"] = psi[i].imag() + 0.0;
    }
    for (std::size_t q = 0; q < n; ++q) {
      const std::string key = "bloch_" + std::to_string(q);
      j[key + "_x"] = bloch[q].x + 0.0;
      j[key + "_y"] = bloch[q].y + 0.0;
      j[key + "_z"] = bloch[q].z + 0.0;
    }
    return j.dump(2) + "\n";
  }
  throw UsageError("unknown format '" + std::string(format) + "' (use csv or json)");
}

// ---------------------------------------------------------------------------
// diagram

std::string diagram_document(const CircuitScript& script, const DiagramFlags& flags) {
  if (flags.format != "ascii" && flags.format != "svg") {
    throw UsageError("unknown format '" + flags.format + "' (use ascii or svg)");
  }
  CompileOptions opts;
  opts.annotate_entanglement = flags.annotate;
  opts.msb_via_swaps = flags.alt_msb;
  Diagram d = compile_diagram(script.circuit, script.initial_state(), opts);
  if (flags.simplify) d = simplify_diagram(d);
  return flags.format == "svg" ? render_svg(d) : render_ascii(d);
}

// ---------------------------------------------------------------------------
// gn

std::string gn_report(const m::GNParams& p, Complex a, Complex b) {
  const m::GNTrace t = m::gn_run(p, a, b);
  const m::GNBlochMaps maps = m::gn_bloch_maps(p);
  std::string out = "Griffiths-Niu machine (Bob = qubit 0, Eve = qubit 1)\n";
  out += "theta0 = " + format_report(p.theta0) + "\n";
  out += "theta1 = " + format_report(p.theta1) + "\n";
  out += "input = " + format_complex(a) + " |0> + " + format_complex(b) + " |1>\n\n";

  out += "states\n";
  for (std::size_t k = 0; k < t.psi.size(); ++k) {
    out += "  psi" + std::to_string(k) + "  " + amplitudes_text(t.psi[k]) + "  (" +
           (is_product_2q(t.psi[k]) ? "product" : "entangled") + ")\n";
  }
  for (std::size_t stage = 2; stage <= 5; ++stage) {
    out += "\nstage " + std::to_string(stage) + "\n";
    out += "  rho_bob = " + matrix_text(t.bob(stage).matrix()) + "\n";
    out += "  rho_eve = " + matrix_text(t.eve(stage).matrix()) + "\n";
    out += "  bloch_bob = " + bloch_text(bloch_coords(t.bob(stage))) + "\n";
    out += "  bloch_eve = " + bloch_text(bloch_coords(t.eve(stage))) + "\n";
  }
  auto map_text = [](const m::BlochMap& bm) {
    static const char* const kAxis[] = {"x", "y", "z"};
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
      s += "  " + std::string(kAxis[i]) + "' = " + format_report(bm.scale[i]) + " " + kAxis[i];
      if (bm.offset[i] > 0.0) s += " + " + format_report(bm.offset[i]);
      if (bm.offset[i] < 0.0) s += " - " + format_report(-bm.offset[i]);
      s += "\n";
    }
    return s;
  };
  out += "\nbloch map bob\n" + map_text(maps.bob);
  out += "\nbloch map eve\n" + map_text(maps.eve);
  return out;
}

// ---------------------------------------------------------------------------
// bh

BhSelection parse_bh_mode(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("bh needs a mode: sym alpha=<v> | eq se=<v> | raw a,b,c,d");
  const std::string& mode = args[0];
  std::string rest;
  for (std::size_t i = 1; i < args.size(); ++i) rest += args[i];

  auto keyed_value = [&](std::string_view key) {
    std::string_view v = rest;
    if (v.substr(0, key.size() + 1) == std::string(key) + "=") v.remove_prefix(key.size() + 1);
    if (v.empty()) throw UsageError("bh " + mode + " needs " + std::string(key) + "=<value>");
    return parse_number(v, key);
  };

  if (mode == "sym") {
    const double alpha = snap(keyed_value("alpha"), m::kSymmetricAlphaMin, m::kSymmetricAlphaMax);
    return {mode, m::bh_symmetric_params(alpha).control};
  }
  if (mode == "eq") {
    const double se = snap(keyed_value("se"), 0.0, 1.0);
    return {mode, m::bh_equatorial_params(se).control};
  }
  if (mode == "raw") {
    if (rest.empty()) throw UsageError("bh raw needs alpha,beta,gamma,delta");
    return {mode, parse_control(rest)};
  }
  throw UsageError("unknown bh mode '" + mode + "' (use sym, eq or raw)");
}

std::string bh_report(const BhSelection& sel, Complex a, Complex b) {
  const m::ControlState& c = sel.control;
  const m::BHResult r = m::bh_run(c, a, b);
  const m::ScalingFactors s = m::bh_xy_scaling(c);
  CVector in(2);
  in << a, b;
  const StateVector input(in);

  std::string out = "Buzek-Hillery machine, mode " + sel.mode +
                    " (Bob = qubit 0, Eve = qubit 1, ancilla = qubit 2)\n";
  out += "control = " + format_report(c.alpha) + ", " + format_report(c.beta) + ", " +
         format_report(c.gamma) + ", " + format_report(c.delta) + "\n";
  out += "input = " + format_complex(a) + " |0> + " + format_complex(b) + " |1>\n";
  out += "s_bob = " + format_report(s.s_bob) + "\n";
  out += "s_eve = " + format_report(s.s_eve) + "\n";
  if (c.beta != 0.0) out += "note: beta != 0, so the Bloch maps are not pure scalings\n";
  out += "f_bob = " + format_report(fidelity_from_scaling(s.s_bob)) + "\n";
  out += "f_eve = " + format_report(fidelity_from_scaling(s.s_eve)) + "\n";
  out += "f_bob_input = " + format_report(fidelity_pure(r.rho_bob, input)) + "\n";
  out += "f_eve_input = " + format_report(fidelity_pure(r.rho_eve, input)) + "\n";
  out += "rho_bob = " + matrix_text(r.rho_bob.matrix()) + "\n";
  out += "rho_eve = " + matrix_text(r.rho_eve.matrix()) + "\n";
  out += "rho_anc = " + matrix_text(r.rho_anc.matrix()) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// sweep

namespace {

struct Series {
  std::vector<std::pair<double, double>> points;
  std::string name;
  std::string colour;
};

// Line chart with fixed geometry; y always spans [0, 1].
std::string line_plot(const std::vector<Series>& series, double x_lo, double x_hi,
                      const std::string& x_name, const std::string& y_name) {
  constexpr double kW = 520.0, kH = 380.0;
  constexpr double kLeft = 60.0, kRight = 130.0, kTop = 20.0, kBottom = 50.0;
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - y) * ph; };

  SvgWriter svg(kW, kH);
  svg.line(kLeft, kTop + ph, kLeft + pw, kTop + ph, "#000000", 1.0);
  svg.line(kLeft, kTop, kLeft, kTop + ph, "#000000", 1.0);
  for (int k = 0; k <= 5; ++k) {
    const double f = k / 5.0;
    const double xv = x_lo + f * (x_hi - x_lo);
    svg.line(px(xv), kTop + ph, px(xv), kTop + ph + 4.0, "#000000", 1.0);
    svg.text(px(xv), kTop + ph + 16.0, format_short(xv), "middle", 10.0);
    svg.line(kLeft - 4.0, py(f), kLeft, py(f), "#000000", 1.0);
    svg.text(kLeft - 6.0, py(f) + 4.0, format_short(f), "end", 10.0);
  }
  svg.text(kLeft + pw / 2.0, kH - 12.0, x_name, "middle", 12.0);
  svg.text(14.0, kTop + ph / 2.0, y_name, "start", 12.0);
  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& sr = series[s];
    for (std::size_t i = 1; i < sr.points.size(); ++i) {
      svg.line(px(sr.points[i - 1].first), py(sr.points[i - 1].second), px(sr.points[i].first),
               py(sr.points[i].second), sr.colour, 2.0);
    }
    const double ly = kTop + 10.0 + 18.0 * static_cast<double>(s);
    svg.line(kLeft + pw + 12.0, ly, kLeft + pw + 36.0, ly, sr.colour, 2.0);
    svg.text(kLeft + pw + 42.0, ly + 4.0, sr.name, "start", 12.0);
  }
  return svg.finish();
}

}  // namespace

SweepFiles sweep_outputs(std::string_view machine, std::size_t steps) {
  SweepFiles files;
  if (machine == "bh-sym") {
    const auto rows = m::sweep_symmetric(steps);
    files.csv = "alpha,s_bob,s_eve,f_bob,f_eve\n";
    Series bob{{}, "S_B", "#1f4e9c"};
    Series eve{{}, "S_E", "#c0392b"};
    for (const auto& r : rows) {
      files.csv += format_exact(r.alpha) + "," + format_exact(r.s_bob) + "," +
                   format_exact(r.s_eve) + "," + format_exact(r.f_bob) + "," +
                   format_exact(r.f_eve) + "\n";
      bob.points.emplace_back(r.alpha, r.s_bob);
      eve.points.emplace_back(r.alpha, r.s_eve);
    }
    files.svg = line_plot({bob, eve}, m::kSymmetricAlphaMin, m::kSymmetricAlphaMax, "alpha",
                          "S");
    return files;
  }
  if (machine == "bh-eq") {
    const auto rows = m::sweep_equatorial(steps);
    files.csv = "s_eve,s_bob,alpha\n";
    Series curve{{}, "S_B(S_E)", "#1f4e9c"};
    for (const auto& r : rows) {
      files.csv += format_exact(r.s_eve) + "," + format_exact(r.s_bob) + "," +
                   format_exact(r.alpha) + "\n";
      curve.points.emplace_back(r.s_eve, r.s_bob);
    }
    files.svg = line_plot({curve}, 0.0, 1.0, "S_E", "S_B");
    return files;
  }
  throw UsageError("unknown machine '" + std::string(machine) + "' (use bh-sym or bh-eq)");
}

// ---------------------------------------------------------------------------
// synth

CircuitScript synth_script(const m::ControlState& control) {
  return CircuitScript{m::synthesis_circuit(m::solve_synthesis(control)), std::nullopt};
}

std::string synth_report(const m::ControlState& control) {
  const m::SynthesisAngles angles = m::solve_synthesis(control);
  const CircuitScript script = synth_script(control);
  std::string out = "control = " + format_report(control.alpha) + ", " +
                    format_report(control.beta) + ", " + format_report(control.gamma) + ", " +
                    format_report(control.delta) + "\n";
  out += "theta1 = " + format_report(angles.theta1) + "\n";
  out += "theta2 = " + format_report(angles.theta2) + "\n";
  out += "theta3 = " + format_report(angles.theta3) + "\n";
  out += "gates = " + std::to_string(script.circuit.gates.size()) + "\n";
  if (script.circuit.gates.empty()) {
    out += "note: the control state is |00>, no gates are needed\n";
  } else if (angles.theta2 == 0.0) {
    out += "note: theta2 = 0, the controlled-theta2 gate is absent\n";
  }
  out += "\n" + print_script(script);
  return out;
}

}  // namespace qclone::cli
