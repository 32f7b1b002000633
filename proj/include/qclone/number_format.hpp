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

#include <string>

#include "qclone/qcore.hpp"

namespace qclone {

/// Report formatting: 12 significant digits, fixed notation for
/// 1e-6 <= |x| < 1e6 and e-notation otherwise, trailing zeros trimmed,
/// "-0" printed as "0".
std::string format_report(double x);

/// Shortest text that parses back to the same double ("-0" printed as "0").
std::string format_exact(double x);

/// Six significant digits, used for SVG coordinates and diagram labels.
std::string format_short(double x);

using RealFormatter = std::string (*)(double);

/// Complex literal "re", "imi", "re+imi" or "re-imi" with the given real
/// formatter. This is also the syntax the circuit parser accepts.
std::string format_complex(Complex z, RealFormatter fmt = format_report);

}  // namespace qclone
