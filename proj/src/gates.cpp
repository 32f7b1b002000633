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

#include "qclone/number_format.hpp"
#include "qclone/qcore.hpp"

namespace qclone {

GateSpec GateSpec::not_gate(std::size_t target) {
  return GateSpec{GateKind::Not, target, std::nullopt, std::nullopt, std::nullopt};
}

GateSpec GateSpec::swap(std::size_t q0, std::size_t q1) {
  return GateSpec{GateKind::Swap, q0, q1, std::nullopt, std::nullopt};
}

GateSpec GateSpec::cnot(std::size_t control, std::size_t target) {
  return GateSpec{GateKind::Cnot, target, control, std::nullopt, std::nullopt};
}

GateSpec GateSpec::cnot_bar(std::size_t control, std::size_t target) {
  return GateSpec{GateKind::CnotBar, target, control, std::nullopt, std::nullopt};
}

GateSpec GateSpec::cnot_r(std::size_t control, std::size_t target) {
  return GateSpec{GateKind::CnotR, target, control, std::nullopt, std::nullopt};
}

GateSpec GateSpec::cnot_r_bar(std::size_t control, std::size_t target) {
  return GateSpec{GateKind::CnotRBar, target, control, std::nullopt, std::nullopt};
}

GateSpec GateSpec::u1q(std::size_t target, const Eigen::Matrix2cd& m) {
  return GateSpec{GateKind::U1q, target, std::nullopt, std::nullopt, m};
}

GateSpec GateSpec::crot(std::size_t target, double angle) {
  return GateSpec{GateKind::Crot, target, std::nullopt, angle, std::nullopt};
}

GateSpec GateSpec::crot(std::size_t control, std::size_t target, double angle) {
  return GateSpec{GateKind::Crot, target, control, angle, std::nullopt};
}

Eigen::Matrix2cd rotation_matrix(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd m;
  m << c, s, -s, c;
  return m;
}

namespace {

bool is_cnot_family(GateKind k) {
  return k == GateKind::Cnot || k == GateKind::CnotBar || k == GateKind::CnotR ||
         k == GateKind::CnotRBar;
}

std::string_view kind_keyword(GateKind k) {
  switch (k) {
    case GateKind::Not: return "not";
    case GateKind::Swap: return "swap";
    case GateKind::Cnot: return "cnot";
    case GateKind::CnotBar: return "cnotbar";
    case GateKind::CnotR: return "cnotr";
    case GateKind::CnotRBar: return "cnotrbar";
    case GateKind::U1q: return "u1q";
    case GateKind::Crot: return "crot";
  }
  return "?";
}

void check_index(std::size_t q, std::size_t n_qubits, std::string_view what) {
  if (q >= n_qubits) {
    throw InvalidGate(std::string(what) + " qubit " + std::to_string(q) +
                      " out of range for " + std::to_string(n_qubits) +
                      " qubits");
  }
}

// Action of a single-target gate: a 2x2 block applied to the target bit of
// every basis state whose control bit (if any) has the firing value.
struct LocalAction {
  Eigen::Matrix2cd block;
  std::optional<std::size_t> control;
  unsigned firing_value = 1;
};

LocalAction local_action(const GateSpec& spec) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  switch (spec.kind) {
    case GateKind::Not: return {x, std::nullopt, 1};
    case GateKind::Cnot:
    case GateKind::CnotR: return {x, spec.control, 1};
    case GateKind::CnotBar:
    case GateKind::CnotRBar: return {x, spec.control, 0};
    case GateKind::U1q: return {*spec.matrix2, std::nullopt, 1};
    case GateKind::Crot: return {rotation_matrix(*spec.angle), spec.control, 1};
    case GateKind::Swap: break;
  }
  throw InvalidGate("swap has no single-target action");
}

}  // namespace

void validate_gate(const GateSpec& spec, std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw DimensionError("register size " + std::to_string(n_qubits) +
                         " outside 1.." + std::to_string(kMaxQubits));
  }
  const std::string name(kind_keyword(spec.kind));
  check_index(spec.target, n_qubits, name + " target");
  if (spec.control) {
    check_index(*spec.control, n_qubits, name + " control");
    if (*spec.control == spec.target) {
      throw InvalidGate(name + " control and target coincide");
    }
  }
  if (is_cnot_family(spec.kind) || spec.kind == GateKind::Swap) {
    if (!spec.control) throw InvalidGate(name + " needs two qubits");
  }
  if (spec.kind == GateKind::Cnot || spec.kind == GateKind::CnotBar) {
    if (*spec.control < spec.target) {
      throw InvalidGate(name + " needs the control above the target; use " +
                        name.substr(0, 4) + "r" + name.substr(4));
    }
  }
  if (spec.kind == GateKind::CnotR || spec.kind == GateKind::CnotRBar) {
    if (*spec.control > spec.target) {
      throw InvalidGate(name + " needs the control below the target; use " +
                        (spec.kind == GateKind::CnotR ? "cnot" : "cnotbar"));
    }
  }
  if (spec.kind == GateKind::U1q) {
    if (!spec.matrix2) throw InvalidGate("u1q without a matrix");
    if (spec.control) throw InvalidGate("u1q takes no control");
    const UnitaryCheck check = check_unitary(*spec.matrix2);
    if (!check.unitary) {
      throw InvalidGate("u1q matrix is not unitary (residual " +
                        format_report(check.residual) + ")");
    }
  }
  if (spec.kind == GateKind::Crot) {
    if (!spec.angle || !std::isfinite(*spec.angle)) {
      throw InvalidGate("crot needs a finite angle");
    }
  }
}

UnitaryMatrix build_gate_matrix(const GateSpec& spec, std::size_t n_qubits) {
  validate_gate(spec, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const auto d = static_cast<Eigen::Index>(dim);
  CMatrix u = CMatrix::Zero(d, d);

  if (spec.kind == GateKind::Swap) {
    const std::size_t q0 = spec.target;
    const std::size_t q1 = *spec.control;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t b0 = (i >> q0) & 1U;
      const std::size_t b1 = (i >> q1) & 1U;
      std::size_t j = i & ~((std::size_t{1} << q0) | (std::size_t{1} << q1));
      j |= (b0 << q1) | (b1 << q0);
      u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return UnitaryMatrix(std::move(u));
  }

  const LocalAction act = local_action(spec);
  const std::size_t tmask = std::size_t{1} << spec.target;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    const bool fires =
        !act.control || ((i >> *act.control) & 1U) == act.firing_value;
    if (!fires) {
      u(col, col) = 1.0;
      continue;
    }
    const auto bit = static_cast<Eigen::Index>((i & tmask) ? 1 : 0);
    const auto row0 = static_cast<Eigen::Index>(i & ~tmask);
    const auto row1 = static_cast<Eigen::Index>(i | tmask);
    u(row0, col) = act.block(0, bit);
    u(row1, col) = act.block(1, bit);
  }
  return UnitaryMatrix(std::move(u));
}

std::string gate_label(const GateSpec& spec) {
  std::string out(kind_keyword(spec.kind));
  switch (spec.kind) {
    case GateKind::Not:
      out += " " + std::to_string(spec.target);
      break;
    case GateKind::Swap:
      out += " " + std::to_string(spec.target) + " " + std::to_string(*spec.control);
      break;
    case GateKind::Cnot:
    case GateKind::CnotBar:
    case GateKind::CnotR:
    case GateKind::CnotRBar:
      out += " " + std::to_string(*spec.control) + " " + std::to_string(spec.target);
      break;
    case GateKind::Crot:
      if (spec.control) out += " " + std::to_string(*spec.control);
      out += " " + std::to_string(spec.target) + " theta=" + format_exact(*spec.angle);
      break;
    case GateKind::U1q: {
      const auto& m = *spec.matrix2;
      out += " " + std::to_string(spec.target) + " [[" +
             format_complex(m(0, 0), format_exact) + "," +
             format_complex(m(0, 1), format_exact) + "],[" +
             format_complex(m(1, 0), format_exact) + "," +
             format_complex(m(1, 1), format_exact) + "]]";
      break;
    }
  }
  return out;
}

void Circuit::validate() const {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw DimensionError("register size " + std::to_string(n_qubits) +
                         " outside 1.." + std::to_string(kMaxQubits));
  }
  for (const GateSpec& g : gates) validate_gate(g, n_qubits);
}

UnitaryMatrix Circuit::unitary() const {
  validate();
  std::vector<UnitaryMatrix> mats;
  mats.reserve(gates.size());
  for (const GateSpec& g : gates) mats.push_back(build_gate_matrix(g, n_qubits));
  return compose(mats, std::size_t{1} << n_qubits);
}

StateVector Circuit::run(const StateVector& initial) const {
  validate();
  if (initial.n_qubits() != n_qubits) {
    throw DimensionError("initial state has " + std::to_string(initial.n_qubits()) +
                         " qubits, circuit has " + std::to_string(n_qubits));
  }
  StateVector psi = initial;
  for (const GateSpec& g : gates) psi = apply(build_gate_matrix(g, n_qubits), psi);
  return psi;
}

}  // namespace qclone
