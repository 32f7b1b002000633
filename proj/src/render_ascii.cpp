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
#include <cstdint>

#include "qclone/diagrams.hpp"

namespace qclone {

namespace {

// Strokes that can occupy a grid cell.
enum Stroke : std::uint8_t {
  kHorizontal = 1,
  kFalling = 2,  // top-left to bottom-right
  kRising = 4,   // bottom-left to top-right
};

struct Cell {
  std::uint8_t strokes = 0;
  std::uint8_t heavy = 0;  // strokes drawn for emphasized edges
};

// Light diagonals are plain ASCII, heavy ones the box-drawing diagonals.
const char* glyph(const Cell& c) {
  const bool h = (c.strokes & kHorizontal) != 0;
  const bool f = (c.strokes & kFalling) != 0;
  const bool r = (c.strokes & kRising) != 0;
  const bool diag_heavy = (c.heavy & (kFalling | kRising)) != 0;
  if (!h && !f && !r) return " ";
  if (h && !f && !r) return (c.heavy & kHorizontal) ? "━" : "─";
  if (h) return (c.heavy & kHorizontal) ? "╋" : "┼";
  if (f && r) return diag_heavy ? "╳" : "X";
  if (f) return diag_heavy ? "╲" : "\\";
  return diag_heavy ? "╱" : "/";
}

class Grid {
 public:
  Grid(std::size_t width, std::size_t height) : width_(width), cells_(width * height) {}

  void mark(std::size_t x, std::size_t y, Stroke s, bool heavy) {
    Cell& c = cells_[y * width_ + x];
    c.strokes |= s;
    if (heavy) c.heavy |= s;
  }

  std::string row(std::size_t y) const {
    std::string out;
    for (std::size_t x = 0; x < width_; ++x) out += glyph(cells_[y * width_ + x]);
    return out;
  }

 private:
  std::size_t width_;
  std::vector<Cell> cells_;
};

std::size_t distance(const DiagramEdge& e) {
  return e.from > e.to ? e.from - e.to : e.to - e.from;
}

void rstrip(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  if (d.n_states > kAsciiMaxStates) {
    throw DomainError("ASCII rendering supports at most " + std::to_string(kAsciiMaxStates) +
                      " states, diagram has " + std::to_string(d.n_states));
  }

  // Each state owns grid row 2*s; odd rows hold the diagonals. A column block
  // is 2*maxd + 3 cells wide, with every diagonal centred in it.
  std::vector<std::size_t> block_x;
  std::vector<std::size_t> block_w;
  std::size_t total = 0;
  for (const DiagramColumn& col : d.columns) {
    std::size_t maxd = 0;
    for (const DiagramEdge& e : col.edges) maxd = std::max(maxd, distance(e));
    block_x.push_back(total);
    block_w.push_back(2 * maxd + 3);
    total += 2 * maxd + 3;
  }
  const std::size_t height = d.n_states == 0 ? 0 : 2 * d.n_states - 1;
  Grid grid(total, height);

  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    const std::size_t w = block_w[c];
    const std::size_t maxd = (w - 3) / 2;
    for (const DiagramEdge& e : d.columns[c].edges) {
      const std::size_t dist = distance(e);
      const std::size_t y0 = 2 * e.from;
      const std::size_t y1 = 2 * e.to;
      const std::size_t x0 = 1 + maxd - dist;
      const bool heavy = e.emphasized;
      const std::size_t left_end = dist == 0 ? w - 1 : x0;
      for (std::size_t x = 0; x <= left_end; ++x) grid.mark(block_x[c] + x, y0, kHorizontal, heavy);
      if (dist == 0) continue;
      for (std::size_t k = 1; k < 2 * dist; ++k) {
        const std::size_t y = e.to > e.from ? y0 + k : y0 - k;
        grid.mark(block_x[c] + x0 + k, y, e.to > e.from ? kFalling : kRising, heavy);
      }
      for (std::size_t x = x0 + 2 * dist; x < w; ++x) grid.mark(block_x[c] + x, y1, kHorizontal, heavy);
    }
  }

  const std::size_t label_w = d.n_qubits + 3;
  std::string out;

  // Header: column numbers centred over their blocks.
  std::string header(label_w, ' ');
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    std::string tag = std::to_string(c + 1);
    std::string cell(block_w[c], ' ');
    const std::size_t at = tag.size() >= block_w[c] ? 0 : (block_w[c] - tag.size()) / 2;
    cell.replace(at, std::min(tag.size(), block_w[c] - at), tag.substr(0, block_w[c] - at));
    header += cell;
  }
  rstrip(header);
  out += header + "\n";

  for (std::size_t y = 0; y < height; ++y) {
    std::string line = (y % 2 == 0) ? "|" + d.state_labels[y / 2] + "> " : std::string(label_w, ' ');
    line += grid.row(y);
    rstrip(line);
    out += line + "\n";
  }

  // Legend: gate names, entanglement marks and weighted edges.
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    const DiagramColumn& col = d.columns[c];
    std::string line = "[" + std::to_string(c + 1) + "] " + col.gate_label;
    if (col.entangled_after) line += *col.entangled_after ? "  (entangled)" : "  (product)";
    out += line + "\n";
    std::string weights;
    for (const DiagramEdge& e : col.edges) {
      if (e.label.empty()) continue;
      weights += "  " + d.state_labels[e.from] + "->" + d.state_labels[e.to] + " " + e.label;
    }
    if (!weights.empty()) out += "   " + weights + "\n";
  }
  return out;
}

}  // namespace qclone
