"""
Gates as dynamic graphs
=======================

Compile each gate, print its graph sequence and total time, then check the
walk reproduces the textbook matrix exactly (global phase included).
"""

# %%
import numpy as np

from dyngraph import Gate, GateOp, Radians, compile_gate, compile_gate_legacy, gate_unitary, textbook_unitary
from dyngraph.formats import serialize_schedule

print(serialize_schedule(compile_gate(GateOp(Gate.H, (1,)), 1)))

# %%
for gate in (Gate.X, Gate.Y, Gate.Z, Gate.H, Gate.H_ALT, Gate.T, Gate.S):
    op = GateOp(gate, (1,))
    s = compile_gate(op, 1)
    dev = np.abs(gate_unitary(s) - textbook_unitary(op, 1)).max()
    print(f"{gate.value:5s} {len(s.segments)} graph(s)  total {s.total_duration}  deviation {dev:.1e}")

# %%
# arbitrary phase: a single looped vertex held for 2pi - theta
op = GateOp(Gate.PHASE, (1,), Radians.pi(1, 8))
print(compile_gate(op, 1).total_duration, np.round(gate_unitary(compile_gate(op, 1)), 12))

# %%
# multi-qubit embedding and controlled gates on three qubits
for op in (GateOp(Gate.X, (3,)), GateOp(Gate.CNOT, (3, 2)), GateOp(Gate.TOFFOLI, (1, 2, 3))):
    u = gate_unitary(compile_gate(op, 3))
    print(op.gate.value, op.qubits, np.abs(u - textbook_unitary(op, 3)).max())

# %%
# the older all-looped forms need ancilla vertices
y = gate_unitary(compile_gate_legacy(Gate.Y))
print(np.round(y[:2, :2], 12))
print(np.round(np.diag(gate_unitary(compile_gate_legacy(Gate.Z))).real, 12))
