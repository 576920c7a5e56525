"""
Walks on the four closed-form components
========================================

A loopless isolated vertex, a looped isolated vertex, a two-vertex path and a
four-cycle, all in one eight-vertex graph.
"""

# %%
import math

import numpy as np

from dyngraph import Graph, adjacency_matrix, classify_component, connected_components, evolve_segment

g = Graph(8, frozenset({(2, 3), (4, 5), (4, 6), (5, 7), (6, 7)}), frozenset({1}))
print(adjacency_matrix(g).astype(int))

# %%
# each component is recognised and gets its own closed-form propagator
for comp in connected_components(g):
    kind = classify_component(g, comp)
    print(comp, kind.tag.value, kind.pairs)

# %%
# at t = pi/2: vertex 1 picks up -i, the path swaps with -i, the cycle swaps
# opposite corners with -1, vertex 0 never moves
c = np.arange(1, 9) / np.linalg.norm(np.arange(1, 9))
out = evolve_segment(g, c, math.pi / 2)
np.set_printoptions(precision=4, suppress=True)
print(np.round(out / c[[0, 1, 3, 2, 7, 6, 5, 4]], 12))

# %%
# the cycle is back where it started at t = pi, the path and loop at 2 pi
for t in (math.pi, 2 * math.pi):
    print(t / math.pi, np.round(evolve_segment(g, c, t) / c, 12))
