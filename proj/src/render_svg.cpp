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

#include "qclone/diagrams.hpp"
#include "qclone/svg_writer.hpp"

namespace qclone {

namespace {

constexpr double kMargin = 20.0;
constexpr double kGutter = 60.0;
constexpr double kColumnWidth = 140.0;
constexpr double kRowPitch = 40.0;
constexpr double kHeader = 44.0;
constexpr double kBadgeBand = 30.0;
constexpr double kThin = 1.0;
constexpr double kThick = 3.0;
// Fraction along an edge where its label sits; off-centre so the labels of
// two crossing edges do not overlap.
constexpr double kLabelAt = 0.25;

}  // namespace

std::string render_svg(const Diagram& d) {
  if (d.n_states > kSvgMaxStates) {
    throw DomainError("SVG rendering supports at most " + std::to_string(kSvgMaxStates) +
                      " states");
  }
  const double ncols = static_cast<double>(d.columns.size());
  const double rows_h = d.n_states == 0 ? 0.0 : static_cast<double>(d.n_states - 1) * kRowPitch;
  const double width = 2.0 * kMargin + kGutter + ncols * kColumnWidth;
  const double height = kMargin + kHeader + rows_h + kBadgeBand + kMargin;
  SvgWriter svg(width, height);

  const double x0 = kMargin + kGutter;
  auto rail_y = [&](std::size_t s) { return kMargin + kHeader + static_cast<double>(s) * kRowPitch; };

  for (std::size_t s = 0; s < d.n_states; ++s) {
    svg.text(x0 - 8.0, rail_y(s) + 4.0, "|" + d.state_labels[s] + ">", "end");
  }

  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    const DiagramColumn& col = d.columns[c];
    const double xl = x0 + static_cast<double>(c) * kColumnWidth;
    const double xr = xl + kColumnWidth;
    const double header_y = kMargin + (c % 2 == 0 ? 12.0 : 26.0);
    svg.text((xl + xr) / 2.0, header_y, std::to_string(c + 1) + ": " + col.gate_label, "middle", 10.0);

    for (const DiagramEdge& e : col.edges) {
      svg.line(xl, rail_y(e.from), xr, rail_y(e.to), "#000000", e.emphasized ? kThick : kThin);
    }
    for (const DiagramEdge& e : col.edges) {
      if (e.label.empty()) continue;
      const double lx = xl + kLabelAt * (xr - xl);
      const double ly = rail_y(e.from) + kLabelAt * (rail_y(e.to) - rail_y(e.from)) - 4.0;
      svg.text(lx, ly, e.label, "middle", 10.0, "#1f4e9c");
    }
    if (col.entangled_after) {
      const double by = kMargin + kHeader + rows_h + 10.0;
      const bool ent = *col.entangled_after;
      svg.rect((xl + xr) / 2.0 - 34.0, by, 68.0, 16.0, ent ? "#f4cccc" : "#d9ead3", "#666666");
      svg.text((xl + xr) / 2.0, by + 12.0, ent ? "entangled" : "product", "middle", 10.0);
    }
  }
  return svg.finish();
}

}  // namespace qclone
