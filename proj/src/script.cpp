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

#include "qclone/script.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "qclone/number_format.hpp"

namespace qclone {

bool operator==(const GateSpec& a, const GateSpec& b) {
  if (a.kind != b.kind || a.target != b.target || a.control != b.control ||
      a.angle != b.angle || a.matrix2.has_value() != b.matrix2.has_value()) {
    return false;
  }
  return !a.matrix2 || *a.matrix2 == *b.matrix2;
}

std::optional<double> parse_real(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<Complex> parse_complex(std::string_view text) {
  // Whitespace may surround the literal and the sign joining its parts.
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (!std::isspace(static_cast<unsigned char>(text[k]))) {
      s += text[k];
      continue;
    }
    std::size_t next = k;
    while (next < text.size() && std::isspace(static_cast<unsigned char>(text[next]))) ++next;
    const bool edge = s.empty() || next == text.size();
    if (!edge && s.back() != '+' && s.back() != '-' && text[next] != '+' && text[next] != '-') {
      return std::nullopt;
    }
    k = next - 1;
  }
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  s.pop_back();
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+" || im_text == "-") im_text += "1";
  double re = 0.0;
  if (!re_text.empty()) {
    const auto r = parse_real(re_text);
    if (!r) return std::nullopt;
    re = *r;
  }
  const auto im = parse_real(im_text);
  if (!im) return std::nullopt;
  return Complex(re, *im);
}

namespace {

// Cursor over one source line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const {
    throw ParseError(line_, col, msg);
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::size_t index(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t v = 0;
    const auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (res.ec != std::errc() || res.ptr == text_.data() + start) {
      fail(std::string("expected ") + what);
    }
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return v;
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  /// Reads a complex literal ending at ',' or ']' or the end of line.
  Complex complex_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']') ++pos_;
    const auto z = parse_complex(text_.substr(start, pos_ - start));
    if (!z) fail_at(start + 1, "bad complex literal '" + std::string(text_.substr(start, pos_ - start)) + "'");
    return *z;
  }

  /// Reads a real number ending at whitespace or end of line.
  double real_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto v = parse_real(text_.substr(start, pos_ - start));
    if (!v) fail_at(start + 1, "bad number '" + std::string(text_.substr(start, pos_ - start)) + "'");
    return *v;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

}  // namespace

StateVector CircuitScript::initial_state() const {
  if (!state) return StateVector::basis(circuit.n_qubits, 0);
  CVector v(static_cast<Eigen::Index>(state->size()));
  for (std::size_t i = 0; i < state->size(); ++i) v(static_cast<Eigen::Index>(i)) = (*state)[i];
  return StateVector(std::move(v));
}

CircuitScript parse_circuit(std::string_view source) {
  CircuitScript script;
  bool have_qubits = false;
  std::size_t line_no = 0;
  std::size_t last_line = 1;

  while (!source.empty() || line_no == 0) {
    ++line_no;
    const std::size_t nl = source.find('\n');
    std::string_view line = source.substr(0, nl);
    source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor cur(line, line_no);
    if (cur.at_end()) {
      if (source.empty()) break;
      continue;
    }
    last_line = line_no;
    const std::size_t kw_col = cur.column();
    const std::string kw = cur.word();
    if (kw.empty()) cur.fail("expected a statement");

    if (kw == "qubits") {
      if (have_qubits) cur.fail_at(kw_col, "duplicate 'qubits' declaration");
      if (!script.circuit.gates.empty() || script.state) {
        cur.fail_at(kw_col, "'qubits' must come before any other statement");
      }
      const std::size_t col = cur.column();
      const std::size_t n = cur.index("a qubit count");
      if (n < 1 || n > kMaxQubits) {
        cur.fail_at(col, "qubit count must be in 1.." + std::to_string(kMaxQubits));
      }
      cur.expect_end();
      script.circuit.n_qubits = n;
      have_qubits = true;
      continue;
    }
    if (!have_qubits) cur.fail_at(kw_col, "'qubits' must come first");
    const std::size_t n = script.circuit.n_qubits;

    if (kw == "state") {
      if (script.state) cur.fail_at(kw_col, "duplicate 'state' declaration");
      if (!script.circuit.gates.empty()) cur.fail_at(kw_col, "'state' must precede the gates");
      std::vector<Complex> amps;
      do {
        amps.push_back(cur.complex_literal());
      } while (cur.accept(','));
      cur.expect_end();
      const std::size_t dim = std::size_t{1} << n;
      if (amps.size() != dim) {
        cur.fail_at(kw_col, "state needs " + std::to_string(dim) + " amplitudes, got " +
                                std::to_string(amps.size()));
      }
      const double n2 = norm2(amps);
      if (std::abs(n2 - 1.0) > kScriptNormSlack) {
        cur.fail_at(kw_col, "state is not normalised (norm = " + format_report(std::sqrt(n2)) + ")");
      }
      if (std::abs(n2 - 1.0) > kExactTol) {
        const double scale = 1.0 / std::sqrt(n2);
        for (Complex& z : amps) z *= scale;
      }
      script.state = std::move(amps);
      continue;
    }

    GateSpec g;
    if (kw == "not") {
      g = GateSpec::not_gate(cur.index("a target qubit"));
    } else if (kw == "swap") {
      const std::size_t q0 = cur.index("a qubit");
      g = GateSpec::swap(q0, cur.index("a second qubit"));
    } else if (kw == "cnot" || kw == "cnotbar" || kw == "cnotr" || kw == "cnotrbar") {
      const std::size_t c = cur.index("a control qubit");
      const std::size_t t = cur.index("a target qubit");
      if (kw == "cnot") g = GateSpec::cnot(c, t);
      else if (kw == "cnotbar") g = GateSpec::cnot_bar(c, t);
      else if (kw == "cnotr") g = GateSpec::cnot_r(c, t);
      else g = GateSpec::cnot_r_bar(c, t);
    } else if (kw == "crot") {
      const std::size_t first = cur.index("a qubit");
      std::optional<std::size_t> second;
      if (cur.peek_digit()) second = cur.index("a target qubit");
      const std::size_t key_col = cur.column();
      if (cur.word() != "theta") cur.fail_at(key_col, "expected theta=<radians>");
      cur.expect('=');
      const double theta = cur.real_literal();
      g = second ? GateSpec::crot(first, *second, theta) : GateSpec::crot(first, theta);
    } else if (kw == "u1q") {
      const std::size_t t = cur.index("a target qubit");
      Eigen::Matrix2cd m;
      cur.expect('[');
      for (int r = 0; r < 2; ++r) {
        if (r == 1) cur.expect(',');
        cur.expect('[');
        m(r, 0) = cur.complex_literal();
        cur.expect(',');
        m(r, 1) = cur.complex_literal();
        cur.expect(']');
      }
      cur.expect(']');
      g = GateSpec::u1q(t, m);
    } else {
      cur.fail_at(kw_col, "unknown statement '" + kw + "'");
    }
    cur.expect_end();
    try {
      validate_gate(g, n);
    } catch (const Error& e) {
      cur.fail_at(kw_col, e.what());
    }
    script.circuit.gates.push_back(std::move(g));
  }

  if (!have_qubits) throw ParseError(last_line, 1, "missing 'qubits' declaration");
  return script;
}

std::string print_script(const CircuitScript& script) {
  std::string out = "qubits " + std::to_string(script.circuit.n_qubits) + "\n";
  if (script.state) {
    out += "state ";
    for (std::size_t i = 0; i < script.state->size(); ++i) {
      if (i) out += ",";
      out += format_complex((*script.state)[i], format_exact);
    }
    out += "\n";
  }
  for (const GateSpec& g : script.circuit.gates) out += gate_label(g) + "\n";
  return out;
}

}  // namespace qclone
