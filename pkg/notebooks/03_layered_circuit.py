"""
A three-qubit layered circuit as one walk
=========================================

H X H | CNOT 1->2 | Y T Z | CNOT 3->2 compiled to sixteen graphs, simulated
from |000>, and compared with the analytic state after every layer.
"""

# %%
import math

import numpy as np

from dyngraph import compile_circuit, parse_circuit
from dyngraph.demo import LAYERED_CIRCUIT_TEXT, compare_checkpoints, expected_layer_states
from dyngraph.formats import trace_csv
from dyngraph.walk import basis_state, trace_schedule

circuit = parse_circuit(LAYERED_CIRCUIT_TEXT)
schedule = compile_circuit(circuit)
print(len(schedule.segments), "graphs, total time", schedule.total_duration)
for c in schedule.checkpoints:
    print(c.label, c.time)

# %%
trace = trace_schedule(schedule, basis_state(8, 0), dt=math.pi / 100)
for label, t, dev in compare_checkpoints(schedule, trace):
    p = trace.probabilities[trace.at(t)]
    print(f"{label}  t={t:6.2f}  max amplitude error {dev:.1e}  p={np.round(p, 6)}")

# %%
print(np.round(expected_layer_states()["layer4"], 6))

# %%
# the probability curves as CSV, one column per vertex
csv = trace_csv(trace)
print(csv.splitlines()[0], "...", len(csv.splitlines()) - 1, "rows")
