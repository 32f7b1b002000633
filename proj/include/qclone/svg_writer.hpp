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
#include <string_view>

namespace qclone {

/// Appends SVG 1.1 elements in call order. Coordinates are written with six
/// significant digits, so equal inputs always give byte-identical documents.
class SvgWriter {
 public:
  SvgWriter(double width, double height);

  void line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double stroke_width);
  void text(double x, double y, std::string_view content, std::string_view anchor = "start",
            double font_size = 12.0, std::string_view fill = "#000000");
  void rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view stroke);

  std::string finish() const;

 private:
  std::string body_;
  std::string head_;
};

std::string xml_escape(std::string_view s);

}  // namespace qclone
