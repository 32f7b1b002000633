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

#include "qclone/svg_writer.hpp"

#include "qclone/number_format.hpp"

namespace qclone {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

SvgWriter::SvgWriter(double width, double height) {
  const std::string w = format_short(width);
  const std::string h = format_short(height);
  head_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
          "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2, std::string_view stroke,
                     double stroke_width) {
  body_ += "<line x1=\"" + format_short(x1) + "\" y1=\"" + format_short(y1) + "\" x2=\"" +
           format_short(x2) + "\" y2=\"" + format_short(y2) + "\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"" + format_short(stroke_width) + "\"/>\n";
}

void SvgWriter::text(double x, double y, std::string_view content, std::string_view anchor,
                     double font_size, std::string_view fill) {
  body_ += "<text x=\"" + format_short(x) + "\" y=\"" + format_short(y) +
           "\" font-family=\"monospace\" font-size=\"" + format_short(font_size) +
           "\" text-anchor=\"" + std::string(anchor) + "\" fill=\"" + std::string(fill) +
           "\">" + xml_escape(content) + "</text>\n";
}

void SvgWriter::rect(double x, double y, double w, double h, std::string_view fill,
                     std::string_view stroke) {
  body_ += "<rect x=\"" + format_short(x) + "\" y=\"" + format_short(y) + "\" width=\"" +
           format_short(w) + "\" height=\"" + format_short(h) + "\" fill=\"" +
           std::string(fill) + "\" stroke=\"" + std::string(stroke) + "\"/>\n";
}

std::string SvgWriter::finish() const { return head_ + body_ + "</svg>\n"; }

}  // namespace qclone
