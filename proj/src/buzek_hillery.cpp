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
#include "qclone/number_format.hpp"

namespace qclone::machines {

double ControlState::norm2() const {
  return alpha * alpha + beta * beta + gamma * gamma + delta * delta;
}

void ControlState::validate() const {
  for (double v : {alpha, beta, gamma, delta}) {
    if (!std::isfinite(v)) throw InvalidState("control state has a non-finite component");
  }
  if (std::abs(norm2() - 1.0) > kExactTol) {
    throw InvalidState("control state is not normalised (norm^2 = " +
                       format_report(norm2()) + ")");
  }
}

CVector ControlState::amplitudes() const {
  CVector v(4);
  v << alpha, beta, gamma, delta;
  return v;
}

UnitaryMatrix bh_unitary() {
  // Row r has its single 1 in column kSource[r].
  static constexpr std::array<int, 8> kSource{0, 7, 5, 2, 3, 4, 6, 1};
  CMatrix u = CMatrix::Zero(8, 8);
  for (int r = 0; r < 8; ++r) u(r, kSource[static_cast<std::size_t>(r)]) = 1.0;
  return UnitaryMatrix(std::move(u));
}

Circuit bh_circuit() {
  return Circuit{3,
                 {GateSpec::cnot_r(kBhBobQubit, kBhEveQubit),
                  GateSpec::cnot_r(kBhBobQubit, kBhAncillaQubit),
                  GateSpec::cnot(kBhEveQubit, kBhBobQubit),
                  GateSpec::cnot(kBhAncillaQubit, kBhBobQubit)}};
}

BHResult bh_run(const ControlState& c, Complex a, Complex b) {
  c.validate();
  const double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > kExactTol) {
    throw InvalidState("input qubit is not normalised (|a|^2 + |b|^2 = " +
                       format_report(n2) + ")");
  }
  CVector input(2);
  input << a, b;
  const StateVector psi_in(tensor_product(c.amplitudes(), input));
  StateVector out = apply(bh_unitary(), psi_in);
  const DensityMatrix rho = density_from_state(out);
  return BHResult{std::move(out),
                  partial_trace(rho, {kBhEveQubit, kBhAncillaQubit}),
                  partial_trace(rho, {kBhBobQubit, kBhAncillaQubit}),
                  partial_trace(rho, {kBhBobQubit, kBhEveQubit})};
}

ScalingFactors bh_xy_scaling(const ControlState& c) {
  return ScalingFactors{2.0 * c.alpha * c.delta, 2.0 * c.alpha * c.gamma};
}

namespace {

double clamp_to(double v, double lo, double hi, const char* what) {
  if (!std::isfinite(v) || v < lo - kDomainSlack || v > hi + kDomainSlack) {
    throw DomainError(std::string(what) + " = " + format_report(v) +
                      " is outside [" + format_report(lo) + ", " +
                      format_report(hi) + "]");
  }
  return std::clamp(v, lo, hi);
}

}  // namespace

SymmetricCloner bh_symmetric_params(double alpha) {
  const double a = clamp_to(alpha, kSymmetricAlphaMin, kSymmetricAlphaMax, "alpha");
  // 1/2 - 3a^2/4 and a^2 - 1/2 written as products so both vanish exactly at
  // the interval ends.
  const double root =
      std::sqrt(0.75 * (kSymmetricAlphaMax - a) * (kSymmetricAlphaMax + a));
  const double delta = a / 2.0 + root;
  const double gamma = (a - kSymmetricAlphaMin) * (a + kSymmetricAlphaMin) / delta;
  SymmetricCloner out;
  out.control = ControlState{a, 0.0, gamma, delta};
  out.scaling = bh_xy_scaling(out.control);
  return out;
}

EquatorialCloner bh_equatorial_params(double s_eve) {
  const double se = clamp_to(s_eve, 0.0, 1.0, "s_eve");
  const double alpha = kSymmetricAlphaMin;
  const double gamma = se * alpha;
  const double delta = std::sqrt(std::max(0.0, 0.5 - gamma * gamma));
  return EquatorialCloner{ControlState{alpha, 0.0, gamma, delta}, 2.0 * alpha * delta};
}

double equatorial_bob_scaling(double alpha, double s_eve) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  const double gamma = s_eve / (2.0 * alpha);
  const double delta2 = 1.0 - alpha * alpha - gamma * gamma;
  if (delta2 < 0.0) {
    throw DomainError("no real delta for alpha = " + format_report(alpha) +
                      ", s_eve = " + format_report(s_eve));
  }
  return 2.0 * alpha * std::sqrt(delta2);
}

namespace {

double grid_point(double lo, double hi, std::size_t k, std::size_t n) {
  if (k + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

}  // namespace

std::vector<SymmetricSweepRow> sweep_symmetric(std::size_t n_steps) {
  if (n_steps < 2) throw DomainError("a sweep needs at least 2 steps");
  std::vector<SymmetricSweepRow> rows;
  rows.reserve(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double alpha = grid_point(kSymmetricAlphaMin, kSymmetricAlphaMax, k, n_steps);
    const SymmetricCloner cl = bh_symmetric_params(alpha);
    rows.push_back({alpha, cl.scaling.s_bob, cl.scaling.s_eve,
                    fidelity_from_scaling(cl.scaling.s_bob),
                    fidelity_from_scaling(cl.scaling.s_eve)});
  }
  return rows;
}

std::vector<EquatorialSweepRow> sweep_equatorial(std::size_t n_steps) {
  if (n_steps < 2) throw DomainError("a sweep needs at least 2 steps");
  std::vector<EquatorialSweepRow> rows;
  rows.reserve(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double se = grid_point(0.0, 1.0, k, n_steps);
    const EquatorialCloner cl = bh_equatorial_params(se);
    rows.push_back({se, cl.s_bob, cl.control.alpha});
  }
  return rows;
}

}  // namespace qclone::machines
