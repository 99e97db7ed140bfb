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

#include "json.hpp"
#include "schmidt/circuit.hpp"
#include "schmidt/encoder.hpp"

namespace schmidt {

/// {"width": q, "gates": [{"kind": "ROT", "qubits": [t], "theta": x}, ...]}.
/// OPAQUE gates also carry "matrix" as a list of rows.
nlohmann::json circuit_to_json(const Circuit& c);

/// Inverse of circuit_to_json; throws InvalidInput on malformed input.
Circuit circuit_from_json(const nlohmann::json& j);

/// Per-kind counts; "two_qubit_lowered" is null when lowering is blocked.
nlohmann::json counts_to_json(const GateCounts& counts);

}  // namespace schmidt
