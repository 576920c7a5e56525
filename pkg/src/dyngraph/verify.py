"""Unitary extraction and comparison against textbook gate matrices."""

from __future__ import annotations

import math
from functools import reduce

import numpy as np

from .compiler import CompileError, Gate, GateOp
from .graph import Schedule
from .walk import basis_state, evolve_schedule

_S2 = 1 / math.sqrt(2)

SINGLE_QUBIT = {
    Gate.X: np.array([[0, 1], [1, 0]], dtype=complex),
    Gate.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    Gate.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    Gate.I: np.eye(2, dtype=complex),
    Gate.H: np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    Gate.H_ALT: np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    Gate.T: np.diag([1, np.exp(1j * math.pi / 4)]),
    Gate.S: np.diag([1, 1j]),
}


def gate_matrix(op: GateOp) -> np.ndarray:
    """2x2 matrix of a single-qubit gate."""
    if op.gate is Gate.PHASE:
        return np.diag([1, np.exp(1j * float(op.theta))])
    if op.gate not in SINGLE_QUBIT:
        raise CompileError(f"{op.gate.value} is not a single-qubit gate")
    return SINGLE_QUBIT[op.gate]


def textbook_unitary(op: GateOp, n_qubits: int) -> np.ndarray:
    """Full 2^n x 2^n matrix of ``op`` with qubit 1 as the most significant factor."""
    op.check(n_qubits)
    if op.gate.arity == 1:
        factors = [gate_matrix(op) if q == op.target else np.eye(2) for q in range(1, n_qubits + 1)]
        return reduce(np.kron, factors)
    # controlled X: permutation swapping target-bit partners when all controls are set
    dim = 1 << n_qubits
    u = np.zeros((dim, dim), dtype=complex)
    mask = sum(1 << (n_qubits - c) for c in op.controls)
    flip = 1 << (n_qubits - op.target)
    for v in range(dim):
        u[v ^ flip if v & mask == mask else v, v] = 1
    return u


def gate_unitary(s: Schedule) -> np.ndarray:
    """Matrix whose column j is the schedule applied to basis state j."""
    cols = [evolve_schedule(s, basis_state(s.n, j), strict=True) for j in range(s.n)]
    u = np.column_stack(cols) if cols else np.zeros((0, 0), dtype=complex)
    dev = np.abs(u.conj().T @ u - np.eye(s.n)).max(initial=0.0)
    if dev > 1e-10:
        raise ArithmeticError(f"schedule unitary deviates from unitarity by {dev:.3e}")
    return u


def equal_up_to_global_phase(u, v, tol: float = 1e-9) -> tuple[bool, complex]:
    """Whether ``u`` is a unit-modulus multiple of ``v`` within ``tol`` (max norm).

    The phase is read off the largest-magnitude entry of ``v``; it is
    returned alongside the verdict.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch: {u.shape} vs {v.shape}")
    if v.size == 0:
        return True, 1 + 0j
    k = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    if abs(v[k]) == 0 or abs(u[k]) == 0:
        return bool(np.abs(u - v).max() <= tol), 1 + 0j
    ratio = u[k] / v[k]
    phase = ratio / abs(ratio)
    return bool(np.abs(u - phase * v).max() <= tol), complex(phase)


def max_deviation(u, v) -> float:
    return float(np.abs(np.asarray(u) - np.asarray(v)).max(initial=0.0))
