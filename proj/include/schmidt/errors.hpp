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

#include <stdexcept>
#include <string>

namespace schmidt {

/// Bad caller input: non-finite values, wrong lengths, out-of-range qubits.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A matrix could not be turned into gates (or a circuit cannot be lowered).
class SynthesisError : public std::runtime_error {
 public:
  explicit SynthesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Circuit cannot be written in the requested output format.
class EmissionError : public std::runtime_error {
 public:
  explicit EmissionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schmidt
