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

// Hand-derived closed forms for the copying machines, transcribed entry by
// entry. Shared by the unit tests and the acceptance runner.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "support/oracle.hpp"

namespace closed_forms {

using oracle::C;
using oracle::Mat;
using oracle::Vec;
using Mat2 = std::array<std::array<C, 2>, 2>;

// --- Griffiths-Niu ---------------------------------------------------------

/// Rotation of the high qubit by theta: half-angle cosine and sine.
inline Mat gn_rotation(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {{c, 0, s, 0}, {0, c, 0, s}, {-s, 0, c, 0}, {0, -s, 0, c}};
}

/// D B C B A with angles (t0 + t1) / 2 and (t0 - t1) / 2.
inline Mat gn_composite(double t0, double t1) {
  const double ca = std::cos((t0 + t1) / 2.0), sa = std::sin((t0 + t1) / 2.0);
  const double cb = std::cos((t0 - t1) / 2.0), sb = std::sin((t0 - t1) / 2.0);
  return {{ca, 0, sa, 0}, {0, cb, 0, sb}, {0, -sb, 0, cb}, {-sa, 0, ca, 0}};
}

struct Half {
  double c0, s0, c1, s1, ca, sa, cb, sb;
};

inline Half half(double t0, double t1) {
  return {std::cos(t0 / 2), std::sin(t0 / 2), std::cos(t1 / 2), std::sin(t1 / 2),
          std::cos((t0 + t1) / 2), std::sin((t0 + t1) / 2), std::cos((t0 - t1) / 2),
          std::sin((t0 - t1) / 2)};
}

inline Vec gn_psi(std::size_t k, double t0, double t1, C a, C b) {
  const Half h = half(t0, t1);
  const double c0 = h.c0, s0 = h.s0, c1 = h.c1, s1 = h.s1;
  switch (k) {
    case 0: return {a, b, 0.0, 0.0};
    case 1: return {c0 * a, c0 * b, -s0 * a, -s0 * b};
    case 2: return {c0 * a, -s0 * b, -s0 * a, c0 * b};
    case 3: return {(c0 * c1 - s0 * s1) * a, (c0 * s1 - s0 * c1) * b, -(c0 * s1 + s0 * c1) * a,
                    (c0 * c1 + s0 * s1) * b};
    case 4: return {(c0 * c1 - s0 * s1) * a, (c0 * c1 + s0 * s1) * b, -(c0 * s1 + s0 * c1) * a,
                    (c0 * s1 - s0 * c1) * b};
    default: return {h.ca * a, h.cb * b, -h.sb * b, -h.sa * a};
  }
}

inline Mat2 gn_rho_bob(std::size_t stage, double t0, double t1, C a, C b) {
  const Half h = half(t0, t1);
  const double a2 = std::norm(a), b2 = std::norm(b);
  const C abc = a * std::conj(b), acb = std::conj(a) * b;
  switch (stage) {
    case 2:
    case 3: {
      const double k = -2.0 * h.c0 * h.s0;
      return {{{a2, k * abc}, {k * acb, b2}}};
    }
    case 4: {
      const double k = h.c1 * h.c1 - h.s1 * h.s1;
      return {{{a2, k * abc}, {k * acb, b2}}};
    }
    default:
      return {{{h.ca * h.ca * a2 + h.sb * h.sb * b2, h.ca * h.cb * abc + h.sa * h.sb * acb},
               {h.ca * h.cb * acb + h.sa * h.sb * abc, h.sa * h.sa * a2 + h.cb * h.cb * b2}}};
  }
}

inline Mat2 gn_rho_eve(std::size_t stage, double t0, double t1, C a, C b) {
  const Half h = half(t0, t1);
  const double a2 = std::norm(a), b2 = std::norm(b);
  const C abc = a * std::conj(b), acb = std::conj(a) * b;
  switch (stage) {
    case 2:
      return {{{h.c0 * h.c0 * a2 + h.s0 * h.s0 * b2, -h.c0 * h.s0},
               {-h.c0 * h.s0, h.s0 * h.s0 * a2 + h.c0 * h.c0 * b2}}};
    case 3: {
      const double off = -(h.ca * h.sa * a2 + h.cb * h.sb * b2);
      return {{{h.ca * h.ca * a2 + h.sb * h.sb * b2, off}, {off, h.sa * h.sa * a2 + h.cb * h.cb * b2}}};
    }
    case 4: {
      // Real off-diagonal, so the lower-left entry equals the upper-right.
      const double off = -(h.ca * h.sa * a2 + h.cb * h.sb * b2);
      return {{{h.ca * h.ca * a2 + h.cb * h.cb * b2, off}, {off, h.sa * h.sa * a2 + h.sb * h.sb * b2}}};
    }
    default:
      return {{{h.ca * h.ca * a2 + h.cb * h.cb * b2, -(h.ca * h.sb * abc + h.sa * h.cb * acb)},
               {-(h.ca * h.sb * acb + h.sa * h.cb * abc), h.sa * h.sa * a2 + h.sb * h.sb * b2}}};
  }
}

// --- Buzek-Hillery ---------------------------------------------------------

/// Row r holds its single 1 in column kCols[r].
inline Mat bh_matrix() {
  static constexpr std::size_t kCols[8] = {0, 7, 5, 2, 3, 4, 6, 1};
  Mat m = oracle::zeros(8, 8);
  for (std::size_t r = 0; r < 8; ++r) m[r][kCols[r]] = 1.0;
  return m;
}

inline Vec bh_output(const std::array<double, 4>& v, C a, C b) {
  const double al = v[0], be = v[1], ga = v[2], de = v[3];
  return {al * a, de * b, ga * b, be * a, be * b, ga * a, de * a, al * b};
}

/// [[p |a|^2 + q |b|^2, 2 (u a b* + w a* b)], [h.c., q |a|^2 + p |b|^2]].
inline Mat2 bh_shape(double p, double q, double u, double w, C a, C b) {
  const double a2 = std::norm(a), b2 = std::norm(b);
  const C abc = a * std::conj(b), acb = std::conj(a) * b;
  return {{{p * a2 + q * b2, 2.0 * u * abc + 2.0 * w * acb},
           {2.0 * u * acb + 2.0 * w * abc, q * a2 + p * b2}}};
}

inline Mat2 bh_rho_bob(const std::array<double, 4>& v, C a, C b) {
  const double al = v[0], be = v[1], ga = v[2], de = v[3];
  return bh_shape(al * al + de * de, be * be + ga * ga, al * de, be * ga, a, b);
}

inline Mat2 bh_rho_eve(const std::array<double, 4>& v, C a, C b) {
  const double al = v[0], be = v[1], ga = v[2], de = v[3];
  return bh_shape(al * al + ga * ga, be * be + de * de, al * ga, be * de, a, b);
}

inline Mat2 bh_rho_anc(const std::array<double, 4>& v, C a, C b) {
  const double al = v[0], be = v[1], ga = v[2], de = v[3];
  return bh_shape(al * al + be * be, ga * ga + de * de, al * be, ga * de, a, b);
}

// --- control-state synthesis -----------------------------------------------

inline Mat synth_u1(double t1) {
  const double c = std::cos(t1), s = std::sin(t1);
  return {{c, 0, -s, 0}, {0, c, 0, -s}, {s, 0, c, 0}, {0, s, 0, c}};
}

inline Mat synth_u2(double t2, double t3) {
  const double c2 = std::cos(t2), s2 = std::sin(t2), c3 = std::cos(t3), s3 = std::sin(t3);
  return {{c2, -s2, 0, 0}, {s2, c2, 0, 0}, {0, 0, c3, -s3}, {0, 0, s3, c3}};
}

}  // namespace closed_forms
