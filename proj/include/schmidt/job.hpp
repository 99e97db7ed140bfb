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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schmidt/encoder.hpp"
#include "schmidt/synth.hpp"

namespace schmidt {

enum class InputFormat { kJsonArray, kCsvColumn };
enum class JobMode { kSchmidt, kNaive, kBoth };

enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitSynthesisError = 3 };

struct JobConfig {
  std::string input_path;
  InputFormat format = InputFormat::kJsonArray;
  JobMode mode = JobMode::kSchmidt;
  SynthMode synth = SynthMode::kExact;
  std::optional<std::string> qasm_path;
  /// Report goes to the `out` stream when unset.
  std::optional<std::string> report_path;
  /// Unset means: verify when q <= 16.
  std::optional<bool> verify;
  double rank_tol = kDefaultRankTolerance;
};

inline constexpr std::size_t kDefaultVerifyMaxQubits = 16;

std::optional<InputFormat> parse_input_format(std::string_view s);
std::optional<JobMode> parse_job_mode(std::string_view s);
std::optional<SynthMode> parse_synth_mode(std::string_view s);
std::string_view to_string(JobMode m);

/// Parses the numbers of a JSON array or a single-column CSV (an optional
/// non-numeric header line is skipped). Throws InvalidInput.
std::vector<double> parse_values(std::string_view text, InputFormat format);

/// Builds the report object for already-compiled results.
nlohmann::json build_report(const DataVector& d, JobMode mode, SynthMode synth, double rank_tol,
                            const EncodeResult* schmidt, const EncodeResult* naive);

/// Runs one compile job. Writes the QASM file and the JSON report; returns
/// an ExitCode and prints a one-line diagnostic to `err` on failure.
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace schmidt
