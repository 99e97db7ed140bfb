// Copyright 2026 The schmidt-encoder Authors
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

// Compiles a real data vector into an amplitude-encoding circuit.
//
//   schmidt-encode --input data.json --mode both --emit-qasm out.qasm

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "schmidt/job.hpp"

int main(int argc, char** argv) {
  using namespace schmidt;

  CLI::App app{"Amplitude-encoding circuit compiler (Schmidt decomposition)"};
  app.set_version_flag("--version", "schmidt-encode 0.1.0");

  JobConfig cfg;
  std::string qasm_path;
  std::string report_path;
  bool verify = false;

  std::string format = "json-array";
  std::string mode = "schmidt";
  std::string synth = "exact";

  app.add_option("-i,--input", cfg.input_path, "Input data file")->required();
  app.add_option("--format", format, "Input format: json-array | csv-column")
      ->check(CLI::IsMember({"json-array", "csv-column"}));
  app.add_option("--mode", mode, "Encoder: schmidt | naive | both")
      ->check(CLI::IsMember({"schmidt", "naive", "both"}));
  app.add_option("--synth", synth, "Basis-change synthesis: exact | opaque")
      ->check(CLI::IsMember({"exact", "opaque"}));
  auto* qasm_opt = app.add_option("--emit-qasm", qasm_path, "Write OpenQASM 2.0 here");
  auto* report_opt =
      app.add_option("--report", report_path, "Write the JSON report here (default: stdout)");
  auto* verify_opt = app.add_flag("--verify,!--no-verify", verify,
                                  "Simulate and report fidelity (default: on for q <= 16)");
  app.add_option("--rank-tol", cfg.rank_tol, "Relative tolerance for Schmidt rank")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  cfg.format = *parse_input_format(format);
  cfg.mode = *parse_job_mode(mode);
  cfg.synth = *parse_synth_mode(synth);
  if (*qasm_opt) cfg.qasm_path = qasm_path;
  if (*report_opt) cfg.report_path = report_path;
  if (*verify_opt) cfg.verify = verify;
  return run_job(cfg, std::cout, std::cerr);
}
