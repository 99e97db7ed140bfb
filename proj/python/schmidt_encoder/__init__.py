# Copyright 2026 The schmidt-encoder Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Compile real data vectors into amplitude-encoding circuits."""

from ._core import (
    Circuit,
    EmissionError,
    InvalidInput,
    SynthesisError,
    emit_qasm,
    encode_naive,
    encode_schmidt,
    normalize,
    schmidt_split,
    simulate,
    svd,
)

__all__ = [
    "Circuit",
    "EmissionError",
    "InvalidInput",
    "SynthesisError",
    "emit_qasm",
    "encode_naive",
    "encode_schmidt",
    "normalize",
    "schmidt_split",
    "simulate",
    "svd",
]
