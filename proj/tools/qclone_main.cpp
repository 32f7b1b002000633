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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qclone/commands.hpp"
#include "qclone/diagrams.hpp"

namespace {

using namespace qclone;
using namespace qclone::cli;

CircuitScript load_script(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_circuit(text);
  }
  return parse_circuit(read_file(path));
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::string joined(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += p;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact small-circuit simulator, quantum copying machines and diagrams of states"};
  app.require_subcommand(1);

  auto* gates = app.add_subcommand("gates", "Print the elementary gate matrices");

  auto* simulate = app.add_subcommand("simulate", "Run a circuit script");
  std::string sim_path;
  std::string sim_format = "csv";
  simulate->add_option("script", sim_path, "Circuit script ('-' for stdin)")->required();
  simulate->add_option("--format", sim_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* diagram = app.add_subcommand("diagram", "Render the diagram of states of a script");
  std::string dia_path;
  std::string dia_out;
  DiagramFlags dia_flags;
  diagram->add_option("script", dia_path, "Circuit script ('-' for stdin)")->required();
  diagram->add_option("--format", dia_flags.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  diagram->add_flag("--simplify", dia_flags.simplify, "Drop empty edges, merge permutations");
  diagram->add_flag("--annotate", dia_flags.annotate, "Mark entanglement after each gate");
  diagram->add_flag("--alt-msb", dia_flags.alt_msb, "Draw MSB unitaries between swaps");
  diagram->add_option("-o,--output", dia_out, "Output file (default stdout)");

  auto* gn = app.add_subcommand("gn", "Analyse the Griffiths-Niu machine");
  double theta0 = 0.0;
  double theta1 = 0.0;
  std::string gn_a = "1";
  std::string gn_b = "0";
  gn->add_option("--theta0", theta0, "First rotation angle (radians)");
  gn->add_option("--theta1", theta1, "Second rotation angle (radians)");
  gn->add_option("--a", gn_a, "Input amplitude of |0>");
  gn->add_option("--b", gn_b, "Input amplitude of |1>");

  auto* bh = app.add_subcommand("bh", "Analyse the Buzek-Hillery machine");
  std::vector<std::string> bh_args;
  std::string bh_a = "1";
  std::string bh_b = "0";
  bh->add_option("mode", bh_args, "sym alpha=<v> | eq se=<v> | raw a,b,c,d")->required();
  bh->add_option("--a", bh_a, "Input amplitude of |0>");
  bh->add_option("--b", bh_b, "Input amplitude of |1>");

  auto* sweep = app.add_subcommand("sweep", "Tabulate and plot a cloner family");
  std::string sweep_machine;
  std::size_t sweep_steps = 50;
  std::string sweep_csv;
  std::string sweep_svg;
  sweep->add_option("machine", sweep_machine, "bh-sym or bh-eq")->required();
  sweep->add_option("--steps", sweep_steps, "Grid points, endpoints included");
  sweep->add_option("--csv", sweep_csv, "CSV output file (default stdout)");
  sweep->add_option("--svg", sweep_svg, "SVG plot output file");

  auto* synth = app.add_subcommand("synth", "Synthesise a control state");
  std::vector<std::string> synth_args;
  std::string synth_diagram;
  std::string synth_script_path;
  synth->add_option("control", synth_args, "alpha,beta,gamma,delta")->required();
  synth->add_option("--diagram", synth_diagram, "Write the diagram (.svg, else ASCII)");
  synth->add_option("--script", synth_script_path, "Write the circuit script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gates) {
      std::cout << gates_report();
    } else if (*simulate) {
      std::cout << simulate_report(load_script(sim_path), sim_format);
    } else if (*diagram) {
      emit(dia_out, diagram_document(load_script(dia_path), dia_flags));
    } else if (*gn) {
      const auto [a, b] = parse_input_qubit(gn_a, gn_b);
      std::cout << gn_report(machines::GNParams{theta0, theta1}, a, b);
    } else if (*bh) {
      const auto [a, b] = parse_input_qubit(bh_a, bh_b);
      std::cout << bh_report(parse_bh_mode(bh_args), a, b);
    } else if (*sweep) {
      const SweepFiles files = sweep_outputs(sweep_machine, sweep_steps);
      emit(sweep_csv, files.csv);
      if (!sweep_svg.empty()) write_file(sweep_svg, files.svg);
    } else if (*synth) {
      const machines::ControlState control = parse_control(joined(synth_args));
      std::cout << synth_report(control);
      const CircuitScript script = synth_script(control);
      if (!synth_script_path.empty()) write_file(synth_script_path, print_script(script));
      if (!synth_diagram.empty()) {
        DiagramFlags flags;
        flags.format = synth_diagram.ends_with(".svg") ? "svg" : "ascii";
        write_file(synth_diagram, diagram_document(script, flags));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "qclone: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
