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

#include "qclone/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace qclone {

namespace {

std::string trim_mantissa(std::string s) {
  const auto epos = s.find_first_of("eE");
  std::string mantissa = epos == std::string::npos ? s : s.substr(0, epos);
  std::string exponent = epos == std::string::npos ? "" : s.substr(epos);
  if (mantissa.find('.') != std::string::npos) {
    while (!mantissa.empty() && mantissa.back() == '0') mantissa.pop_back();
    if (!mantissa.empty() && mantissa.back() == '.') mantissa.pop_back();
  }
  if (!exponent.empty()) {
    // "e-07" -> "e-7", "e+08" -> "e+8"
    std::string digits = exponent.substr(2);
    while (digits.size() > 1 && digits.front() == '0') digits.erase(0, 1);
    exponent = exponent.substr(0, 2) + digits;
  }
  return mantissa + exponent;
}

std::string fix_negative_zero(std::string s) {
  if (s == "-0") return "0";
  return s;
}

std::string significant(double x, int digits, double lo, double hi) {
  if (x == 0.0 || !std::isfinite(x)) {
    if (x == 0.0) return "0";
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  }
  std::array<char, 64> buf{};
  const double ax = std::abs(x);
  if (ax >= lo && ax < hi) {
    const int exp10 = static_cast<int>(std::floor(std::log10(ax)));
    const int decimals = std::max(0, digits - 1 - exp10);
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, x);
    return fix_negative_zero(trim_mantissa(buf.data()));
  }
  std::snprintf(buf.data(), buf.size(), "%.*e", digits - 1, x);
  return fix_negative_zero(trim_mantissa(buf.data()));
}

}  // namespace

std::string format_report(double x) { return significant(x, 12, 1e-6, 1e6); }

std::string format_short(double x) { return significant(x, 6, 1e-4, 1e6); }

std::string format_exact(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return fix_negative_zero(std::string(buf.data(), res.ptr));
}

std::string format_complex(Complex z, RealFormatter fmt) {
  const std::string re = fmt(z.real());
  const std::string im = fmt(z.imag());
  if (im == "0") return re;
  if (re == "0") return im + "i";
  if (im.front() == '-') return re + im + "i";
  return re + "+" + im + "i";
}

}  // namespace qclone
