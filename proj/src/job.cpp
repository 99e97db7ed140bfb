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

#include "schmidt/job.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schmidt/errors.hpp"
#include "schmidt/serialize.hpp"

namespace schmidt {

std::optional<InputFormat> parse_input_format(std::string_view s) {
  if (s == "json-array") return InputFormat::kJsonArray;
  if (s == "csv-column") return InputFormat::kCsvColumn;
  return std::nullopt;
}

std::optional<JobMode> parse_job_mode(std::string_view s) {
  if (s == "schmidt") return JobMode::kSchmidt;
  if (s == "naive") return JobMode::kNaive;
  if (s == "both") return JobMode::kBoth;
  return std::nullopt;
}

std::optional<SynthMode> parse_synth_mode(std::string_view s) {
  if (s == "exact") return SynthMode::kExact;
  if (s == "opaque") return SynthMode::kOpaque;
  return std::nullopt;
}

std::string_view to_string(JobMode m) {
  switch (m) {
    case JobMode::kSchmidt: return "schmidt";
    case JobMode::kNaive: return "naive";
    case JobMode::kBoth: return "both";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view field) {
  const std::string s(trim(field));
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) return std::nullopt;
  return v;
}

std::vector<double> parse_csv_column(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const std::string_view field = trim(line.substr(0, line.find(',')));
    const auto v = parse_number(field);
    if (!v) {
      if (!seen_content) {
        seen_content = true;  // header
        continue;
      }
      throw InvalidInput("line " + std::to_string(line_no) + ": '" + std::string(field) +
                         "' is not a number");
    }
    seen_content = true;
    values.push_back(*v);
  }
  return values;
}

std::vector<double> parse_json_array(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidInput("JSON input must be an array of numbers");
  std::vector<double> values;
  values.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw InvalidInput("JSON element " + std::to_string(i) + " is not a number");
    }
    values.push_back(j[i].get<double>());
  }
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw EmissionError("cannot write '" + path + "'");
  }
}

nlohmann::json encoder_entry(const EncodeResult& r) { return counts_to_json(r.report.counts); }

}  // namespace

std::vector<double> parse_values(std::string_view text, InputFormat format) {
  auto values = format == InputFormat::kJsonArray ? parse_json_array(text) : parse_csv_column(text);
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidInput("input contains a non-finite value");
  return values;
}

nlohmann::json build_report(const DataVector& d, JobMode mode, SynthMode synth, double rank_tol,
                            const EncodeResult* schmidt, const EncodeResult* naive) {
  nlohmann::json report;
  report["input_norm"] = d.input_norm();
  report["qubits"] = d.qubits();
  report["mode"] = to_string(mode);
  report["synth"] = to_string(synth);
  report["rank_tol"] = rank_tol;

  nlohmann::json ranks = nlohmann::json::array();
  nlohmann::json paths = nlohmann::json::array();
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json fidelity = nlohmann::json::object();
  nlohmann::json circuits = nlohmann::json::object();
  bool verified = false;

  for (const EncodeResult* r : {schmidt, naive}) {
    if (!r) continue;
    const std::string key(to_string(r->report.kind));
    counts[key] = encoder_entry(*r);
    circuits[key] = circuit_to_json(r->circuit);
    if (r->report.fidelity) {
      fidelity[key] = *r->report.fidelity;
      verified = true;
    }
  }
  if (schmidt) {
    for (const auto& lvl : schmidt->report.schmidt_levels) {
      ranks.push_back({{"depth", lvl.depth},
                       {"first_qubit", lvl.first_qubit},
                       {"qubits", lvl.qubits},
                       {"rank", lvl.rank}});
    }
    for (const auto& s : schmidt->report.synthesis) {
      paths.push_back({{"depth", s.depth},
                       {"register", s.register_name},
                       {"qubits", s.qubits},
                       {"path", to_string(s.path)}});
    }
  }
  report["schmidt_ranks"] = std::move(ranks);
  report["gate_counts"] = std::move(counts);
  if (verified) report["fidelity"] = std::move(fidelity);
  report["synthesis_paths"] = std::move(paths);
  report["circuits"] = std::move(circuits);
  return report;
}

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.qasm_path && cfg.synth == SynthMode::kOpaque) {
      throw InvalidInput("--emit-qasm requires --synth exact (opaque gates have no QASM form)");
    }
    if (!(cfg.rank_tol >= 0.0) || !std::isfinite(cfg.rank_tol)) {
      throw InvalidInput("rank tolerance must be a finite nonnegative number");
    }
    const DataVector d = normalize(parse_values(read_file(cfg.input_path), cfg.format));

    EncodeOptions opts;
    opts.synth = cfg.synth;
    opts.rank_tol = cfg.rank_tol;
    opts.verify = cfg.verify.value_or(d.qubits() <= kDefaultVerifyMaxQubits);

    std::optional<EncodeResult> schmidt;
    std::optional<EncodeResult> naive;
    try {
      if (cfg.mode != JobMode::kNaive) schmidt = encode_schmidt(d, opts);
      if (cfg.mode != JobMode::kSchmidt) naive = encode_naive(d, opts);
    } catch (const SynthesisError& e) {
      err << "error: synthesis failed: " << e.what() << '\n';
      return kExitSynthesisError;
    }

    const nlohmann::json report =
        build_report(d, cfg.mode, cfg.synth, cfg.rank_tol, schmidt ? &*schmidt : nullptr,
                     naive ? &*naive : nullptr);

    if (cfg.qasm_path) {
      const Circuit& c = schmidt ? schmidt->circuit : naive->circuit;
      write_file(*cfg.qasm_path, emit_qasm(c));
    }
    if (cfg.report_path) {
      write_file(*cfg.report_path, report.dump(2) + "\n");
    } else {
      out << report.dump(2) << '\n';
    }
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const EmissionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSynthesisError;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSynthesisError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSynthesisError;
  }
}

}  // namespace schmidt
