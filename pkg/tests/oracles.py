"""Independent reference computations used only by the tests.

Nothing here touches the eigendecomposition or closed-form paths of the
package, so agreement is a genuine cross-check.
"""

import math

import numpy as np


def taylor_expm(m, terms=30):
    """exp(m) by scaling and squaring with a truncated Taylor series."""
    m = np.asarray(m, dtype=complex)
    norm = np.abs(m).sum(axis=1).max(initial=0.0)
    s = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    x = m / (2**s)
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ x / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out


def walk_propagator(a, t):
    return taylor_expm(-1j * t * np.asarray(a, dtype=float))


def reachability_components(n, edges):
    """Components from the transitive closure of (I + A)."""
    r = np.eye(n, dtype=bool)
    for u, v in edges:
        r[u, v] = r[v, u] = True
    for _ in range(max(1, int(math.ceil(math.log2(max(n, 2)))))):
        r = (r.astype(int) @ r.astype(int)) > 0
    return sorted({tuple(np.flatnonzero(row)) for row in r})


def textbook_action(gate, qubits, n_qubits, theta=None):
    """Gate matrix assembled column by column from bit-level basis actions."""
    dim = 1 << n_qubits
    s2 = 1 / math.sqrt(2)
    single = {
        "x": {0: [(1, 1)], 1: [(0, 1)]},
        "y": {0: [(1, 1j)], 1: [(0, -1j)]},
        "z": {0: [(0, 1)], 1: [(1, -1)]},
        "i": {0: [(0, 1)], 1: [(1, 1)]},
        "h": {0: [(0, s2), (1, s2)], 1: [(0, s2), (1, -s2)]},
        "t": {0: [(0, 1)], 1: [(1, complex(math.cos(math.pi / 4), math.sin(math.pi / 4)))]},
        "s": {0: [(0, 1)], 1: [(1, 1j)]},
    }
    single["halt"] = single["h"]
    if gate == "phase":
        single["phase"] = {0: [(0, 1)], 1: [(1, complex(math.cos(theta), math.sin(theta)))]}
    u = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        bits = [(col >> (n_qubits - q)) & 1 for q in range(1, n_qubits + 1)]
        if gate in ("cnot", "toffoli"):
            *ctrl, tgt = qubits
            out = list(bits)
            if all(bits[c - 1] for c in ctrl):
                out[tgt - 1] ^= 1
            u[int("".join(map(str, out)), 2), col] = 1
            continue
        q = qubits[0]
        for new_bit, amp in single[gate][bits[q - 1]]:
            out = list(bits)
            out[q - 1] = new_bit
            u[int("".join(map(str, out)), 2), col] += amp
    return u
