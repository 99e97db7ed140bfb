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

import json
import math

import numpy as np
import pytest

import schmidt_encoder as se

SQ3 = math.sqrt(3.0)
FOUR_QUBIT = [3 * SQ3, -SQ3, -9, 3, -2 * SQ3, -6 * SQ3, 6, 18,
              -3 * SQ3, SQ3, -3, 1, 2 * SQ3, 6 * SQ3, 2, 6]
TWO_QUBIT = [math.sqrt(3 / 5), 1 / math.sqrt(5), math.sqrt(3 / 5) / 2, 1 / (2 * math.sqrt(5))]


def overlap(circuit, values):
    target = np.asarray(values, dtype=float)
    target /= np.linalg.norm(target)
    return abs(np.vdot(target, se.simulate(circuit))) ** 2


def test_normalize():
    unit, norm = se.normalize([2, 2, 2, 2])
    assert unit == pytest.approx([0.5] * 4)
    assert norm == pytest.approx(4.0)


def test_bad_length_raises_value_error():
    with pytest.raises(ValueError, match="length 5 is not a power of two"):
        se.normalize([1, 2, 3, 4, 5])
    assert issubclass(se.InvalidInput, ValueError)


def test_product_state_is_two_rotations():
    r = se.encode_schmidt(TWO_QUBIT)
    kinds = [g[0] for g in r["circuit"].gates]
    assert kinds == ["ROT", "ROT"]
    assert r["circuit"].gates[0][2] == pytest.approx(math.asin(1 / math.sqrt(5)), abs=1e-12)
    assert r["circuit"].gates[1][2] == pytest.approx(math.asin(0.5), abs=1e-12)
    assert r["counts"]["two_qubit_raw"] == 0


def test_four_qubit_fixture():
    r = se.encode_schmidt(FOUR_QUBIT)
    assert r["fidelity"] >= 1 - 1e-10
    assert overlap(r["circuit"], FOUR_QUBIT) >= 1 - 1e-10
    split = se.schmidt_split(FOUR_QUBIT)
    expected = np.linalg.svd(np.asarray(FOUR_QUBIT).reshape(4, 4) / math.sqrt(800),
                             compute_uv=False)
    assert split["lambda"] == pytest.approx(expected, abs=1e-12)
    assert split["rank"] == 4


def test_random_round_trip_both_modes():
    rng = np.random.default_rng(7)
    for q in range(1, 8):
        v = rng.standard_normal(2 ** q)
        for synth in ("exact", "opaque"):
            r = se.encode_schmidt(v, synth=synth)
            assert overlap(r["circuit"], v) >= 1 - 1e-9
        n = se.encode_naive(v)
        assert overlap(n["circuit"], v) >= 1 - 1e-9
        if q >= 2:
            assert n["counts"]["cnot"] == 2 ** q - 2


def test_qasm_and_json_round_trip():
    c = se.encode_schmidt(FOUR_QUBIT)["circuit"]
    text = se.emit_qasm(c)
    assert text.startswith("OPENQASM 2.0;")
    body = [ln for ln in text.splitlines()[3:] if ln]
    assert all(ln.split("(")[0].split(" ")[0] in {"ry", "x", "cx"} for ln in body)
    again = se.Circuit.from_json(c.to_json())
    assert again == c
    assert json.loads(c.to_json())["width"] == 4


def test_opaque_circuit_cannot_emit_qasm():
    rng = np.random.default_rng(3)
    c = se.encode_schmidt(rng.standard_normal(16), synth="opaque")["circuit"]
    with pytest.raises(se.EmissionError):
        se.emit_qasm(c)
    with pytest.raises(se.SynthesisError):
        c.lower()


def test_svd_matches_numpy():
    rng = np.random.default_rng(11)
    a = rng.uniform(-1, 1, size=(6, 4))
    u, sigma, v = se.svd(a)
    assert np.allclose(u[:, :4] @ np.diag(sigma) @ v.T, a, atol=1e-12)
    assert np.allclose(sigma, np.linalg.svd(a, compute_uv=False), atol=1e-12)
    assert np.allclose(u.T @ u, np.eye(6), atol=1e-12)
