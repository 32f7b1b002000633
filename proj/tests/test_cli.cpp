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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "qclone/commands.hpp"
#include "qclone/density.hpp"
#include "support/oracle.hpp"

using namespace qclone;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / ("qclone_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  const auto dir = scratch_dir();
  const auto in = dir / "stdin", out = dir / "stdout", err = dir / "stderr";
  std::ofstream(in, std::ios::binary) << stdin_text;
  const std::string cmd = std::string("'") + QCLONE_CLI + "' " + args + " <'" + in.string() + "' >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = oracle::slurp(out);
  r.err = oracle::slurp(err);
  return r;
}

std::string line_value(const std::string& text, const std::string& key) {
  const std::string prefix = key + " = ";
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    const std::size_t first = line.find_first_not_of(' ');
    if (first != std::string::npos && line.compare(first, prefix.size(), prefix) == 0)
      return line.substr(first + prefix.size());
    pos = end + 1;
  }
  return "<missing " + key + ">";
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("gates").status, 0);
  EXPECT_EQ(run_cli("--help").status, 0);
  EXPECT_EQ(run_cli("").status, 1);
  EXPECT_EQ(run_cli("frobnicate").status, 1);
  EXPECT_EQ(run_cli("simulate - --format xml", "qubits 1\n").status, 1);
  EXPECT_EQ(run_cli("simulate -", "qubits 1\nnot 3\n").status, 1);
  EXPECT_EQ(run_cli("simulate /nonexistent/file.qc").status, 2);
  EXPECT_EQ(run_cli("bh sym alpha=0.9").status, 2);
  EXPECT_EQ(run_cli("bh sym alpha=abc").status, 1);
  EXPECT_EQ(run_cli("bh raw 0.5,0.5,0.5").status, 1);
  EXPECT_EQ(run_cli("bh raw 0.5,0.5i,0.5,0.5").status, 2);
  EXPECT_EQ(run_cli("bh raw 0.5,0.5,0.5,0.6").status, 2);
  EXPECT_EQ(run_cli("gn --theta0 abc").status, 1);
}

TEST(Cli, ErrorsGoToStderr) {
  const RunResult r = run_cli("simulate -", "qubits 2\nnot 5\n");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err.rfind("qclone: 2:1: ", 0), 0u) << r.err;
}

TEST(Cli, SimulateJsonIsBitExact) {
  const std::string src = oracle::slurp(oracle::data_dir() / "scripts" / "20_mixed.qc");
  const RunResult r = run_cli("simulate - --format json", src);
  ASSERT_EQ(r.status, 0) << r.err;
  const CircuitScript script = parse_circuit(src);
  EXPECT_EQ(r.out, cli::simulate_report(script, "json"));
  const StateVector out = script.circuit.run(script.initial_state());
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("qubits").get<std::size_t>(), 3u);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::string bits = basis_label(i, 3);
    EXPECT_EQ(doc.at("amp_" + bits + "_re").get<double>(), out.amplitudes()(i).real()) << bits;
    EXPECT_EQ(doc.at("amp_" + bits + "_im").get<double>(), out.amplitudes()(i).imag()) << bits;
  }
  for (std::size_t q = 0; q < 3; ++q) {
    const BlochVector b = bloch_coords(reduced_qubit(out, q));
    EXPECT_EQ(doc.at("bloch_" + std::to_string(q) + "_z").get<double>(), b.z);
  }
}

TEST(Cli, SimulateCsvFromFile) {
  const RunResult r = run_cli("simulate '" + (oracle::data_dir() / "scripts" / "01_not.qc").string() + "'");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("state,re,im\n0,0,0\n1,1,0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("qubit,x,y,z\n0,0,0,-1\n"), std::string::npos) << r.out;
}

TEST(Cli, DiagramMatchesLibraryAndHonoursOutput) {
  const std::string src = oracle::slurp(oracle::data_dir() / "scripts" / "03_gn.qc");
  const CircuitScript script = parse_circuit(src);
  const RunResult ascii = run_cli("diagram - --annotate", src);
  ASSERT_EQ(ascii.status, 0) << ascii.err;
  EXPECT_EQ(ascii.out, cli::diagram_document(script, {"ascii", false, true, false}));
  const auto path = scratch_dir() / "gn.svg";
  const RunResult svg = run_cli("diagram - --format svg --simplify -o '" + path.string() + "'", src);
  ASSERT_EQ(svg.status, 0) << svg.err;
  EXPECT_EQ(oracle::slurp(path), cli::diagram_document(script, {"svg", true, false, false}));
  EXPECT_EQ(run_cli("diagram - --annotate", "qubits 3\nnot 0\n").status, 2);
  EXPECT_EQ(run_cli("diagram - -o /nonexistent/dir/x.txt", "qubits 1\n").status, 2);
}

TEST(Cli, ClonerReportMatchesLibrary) {
  const RunResult r = run_cli("gn --theta0 0.7 --theta1 0.3 --a 0.6 --b 0.8");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, cli::gn_report(machines::GNParams{0.7, 0.3}, 0.6, 0.8));
  EXPECT_NE(r.out.find("psi0"), std::string::npos);
  EXPECT_NE(r.out.find("psi5"), std::string::npos);
}

TEST(Cli, SymmetricAndEquatorialExamples) {
  const RunResult sym = run_cli("bh sym alpha=0.70710678");
  ASSERT_EQ(sym.status, 0) << sym.err;
  EXPECT_EQ(line_value(sym.out, "s_bob"), "1");
  EXPECT_EQ(line_value(sym.out, "s_eve"), "0");
  EXPECT_EQ(line_value(sym.out, "f_bob"), "1");

  const RunResult eq = run_cli("bh eq se=0.6");
  ASSERT_EQ(eq.status, 0) << eq.err;
  EXPECT_EQ(line_value(eq.out, "s_bob"), "0.8");
  EXPECT_EQ(line_value(eq.out, "f_bob"), "0.9");
  EXPECT_EQ(line_value(eq.out, "f_eve"), "0.8");

  const RunResult raw = run_cli("bh raw 1,0,0,0");
  ASSERT_EQ(raw.status, 0) << raw.err;
  EXPECT_EQ(line_value(raw.out, "f_bob_input"), "1");

  const RunResult bad = run_cli("bh sym alpha=0.9");
  EXPECT_NE(bad.err.find("0.707106781187"), std::string::npos) << bad.err;
}

TEST(Cli, SweepIsDeterministicAndCorrect) {
  const auto dir = scratch_dir();
  const RunResult a = run_cli("sweep bh-sym --steps 11 --csv '" + (dir / "a.csv").string() + "' --svg '" +
                              (dir / "a.svg").string() + "'");
  const RunResult b = run_cli("sweep bh-sym --steps 11 --csv '" + (dir / "b.csv").string() + "' --svg '" +
                              (dir / "b.svg").string() + "'");
  ASSERT_EQ(a.status, 0) << a.err;
  ASSERT_EQ(b.status, 0) << b.err;
  const std::string csv = oracle::slurp(dir / "a.csv");
  EXPECT_EQ(csv, oracle::slurp(dir / "b.csv"));
  EXPECT_EQ(oracle::slurp(dir / "a.svg"), oracle::slurp(dir / "b.svg"));
  EXPECT_EQ(csv, cli::sweep_outputs("bh-sym", 11).csv);

  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::size_t rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    std::istringstream cells(row);
    std::string cell;
    std::vector<double> v;
    while (std::getline(cells, cell, ',')) v.push_back(std::stod(cell));
    ASSERT_EQ(v.size(), 5u) << row;
    EXPECT_GE(v[0], machines::kSymmetricAlphaMin);
    EXPECT_LE(v[0], machines::kSymmetricAlphaMax);
    const machines::SymmetricCloner s = machines::bh_symmetric_params(v[0]);
    EXPECT_NEAR(v[1], s.scaling.s_bob, 1e-12) << row;
    EXPECT_NEAR(v[2], s.scaling.s_eve, 1e-12) << row;
    EXPECT_NEAR(v[3], (1.0 + v[1]) / 2.0, 1e-12) << row;
    EXPECT_NEAR(v[4], (1.0 + v[2]) / 2.0, 1e-12) << row;
  }
  EXPECT_EQ(rows, 11u);
  EXPECT_EQ(csv.substr(0, header.size()), "alpha,s_bob,s_eve,f_bob,f_eve");

  const RunResult stdout_csv = run_cli("sweep bh-eq --steps 5");
  ASSERT_EQ(stdout_csv.status, 0) << stdout_csv.err;
  EXPECT_EQ(stdout_csv.out, cli::sweep_outputs("bh-eq", 5).csv);
  EXPECT_EQ(run_cli("sweep bh-sym --steps 1").status, 2);
  EXPECT_EQ(run_cli("sweep gn").status, 1);
}

TEST(Cli, SynthesisExamples) {
  const auto dir = scratch_dir();
  const auto script_path = dir / "synth.qc";
  const RunResult r =
      run_cli("synth 0.6,0.3,0.5,0.5477226 --script '" + script_path.string() + "' --diagram '" +
              (dir / "synth.svg").string() + "'");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(line_value(r.out, "gates"), "3");
  const CircuitScript script = parse_circuit(oracle::slurp(script_path));
  const CVector out = script.circuit.run(script.initial_state()).amplitudes();
  const machines::ControlState c = cli::parse_control("0.6,0.3,0.5,0.5477226");
  EXPECT_LT((out - c.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(oracle::slurp(dir / "synth.svg").rfind("<?xml", 0), 0u);

  const RunResult id = run_cli("synth 1,0,0,0");
  ASSERT_EQ(id.status, 0) << id.err;
  EXPECT_EQ(line_value(id.out, "gates"), "0");
  const RunResult no_beta = run_cli("synth 0.6,0,0.8,0");
  ASSERT_EQ(no_beta.status, 0) << no_beta.err;
  EXPECT_EQ(line_value(no_beta.out, "theta2"), "0");
  EXPECT_EQ(run_cli("synth 0.6,0.3i,0.5,0.5477226").status, 2);
  EXPECT_EQ(run_cli("synth 1,0,0,0 --script /nonexistent/dir/s.qc").status, 2);
}
