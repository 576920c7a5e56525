"""The three-qubit layered circuit (H X H | CNOT 1->2 | Y T Z | CNOT 3->2)."""

from __future__ import annotations

import cmath

import numpy as np

from .compiler import Circuit, Gate, GateOp, compile_circuit
from .graph import Schedule
from .radians import Radians
from .walk import DEFAULT_DT, WalkTrace, basis_state, trace_schedule

LAYERED_CIRCUIT_TEXT = """\
qubits 3
h 1
x 2
h 3
layer
cnot 1 2
layer
y 1
t 2
z 3
layer
cnot 3 2
"""

LAYER_TIMES = {
    "layer1": Radians.pi(17, 2),
    "layer2": Radians.pi(21, 2),
    "layer3": Radians.pi(59, 4),
    "layer4": Radians.pi(67, 4),
}


def layered_circuit() -> Circuit:
    ops = [
        GateOp(Gate.H, (1,)),
        GateOp(Gate.X, (2,)),
        GateOp(Gate.H, (3,)),
        GateOp(Gate.CNOT, (1, 2)),
        GateOp(Gate.Y, (1,)),
        GateOp(Gate.T, (2,)),
        GateOp(Gate.Z, (3,)),
        GateOp(Gate.CNOT, (3, 2)),
    ]
    return Circuit(3, tuple(ops), (3, 4, 7))


def _state(terms: dict[str, complex]) -> np.ndarray:
    psi = np.zeros(8, dtype=complex)
    for bits, amp in terms.items():
        psi[int(bits, 2)] = amp
    return psi


def expected_layer_states() -> dict[str, np.ndarray]:
    """Analytic state after each layer, starting from |000>."""
    w = cmath.exp(3j * cmath.pi / 4)
    return {
        "layer1": _state({"010": 0.5, "011": 0.5, "110": 0.5, "111": 0.5}),
        "layer2": _state({"010": 0.5, "011": 0.5, "100": 0.5, "101": 0.5}),
        "layer3": _state({"000": -0.5j, "001": 0.5j, "110": 0.5 * w, "111": -0.5 * w}),
        "layer4": _state({"000": -0.5j, "011": 0.5j, "101": -0.5 * w, "110": 0.5 * w}),
    }


def run_layers(dt: float = DEFAULT_DT) -> tuple[Schedule, WalkTrace]:
    s = compile_circuit(layered_circuit())
    return s, trace_schedule(s, basis_state(8, 0), dt)


def compare_checkpoints(s: Schedule, trace: WalkTrace) -> list[tuple[str, float, float]]:
    """(label, time, max amplitude deviation) for every checkpoint."""
    expected = expected_layer_states()
    rows = []
    for c in s.checkpoints:
        got = trace.amplitudes[trace.at(c.time)]
        rows.append((c.label, float(c.time), float(np.abs(got - expected[c.label]).max())))
    return rows
