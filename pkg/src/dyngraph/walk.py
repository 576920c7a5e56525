"""Continuous-time quantum walk evolution, psi(t) = exp(-iAt) psi(0)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import ComponentKind, Graph, Kind, Schedule, adjacency_matrix, classify_component, connected_components
from .radians import Radians

NORM_TOL = 1e-12
DRIFT_TOL = 1e-10
DEFAULT_DT = math.pi / 100


class UnitarityError(RuntimeError):
    """Norm drift beyond tolerance; indicates an engine defect, never a user error."""


def as_state(amps, n: int | None = None) -> np.ndarray:
    """Validate a state vector: complex, 1-D, unit norm within 1e-12."""
    psi = np.asarray(amps, dtype=complex).reshape(-1)
    if n is not None and psi.size != n:
        raise ValueError(f"state has {psi.size} amplitudes, expected {n}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state norm {norm!r} differs from 1")
    return psi


def basis_state(n: int, index: int) -> np.ndarray:
    if not 0 <= index < n:
        raise ValueError(f"basis index {index} out of range [0, {n})")
    psi = np.zeros(n, dtype=complex)
    psi[index] = 1.0
    return psi


def evolve_closed_form(kind: ComponentKind, amps, t: float) -> np.ndarray:
    """Evolve one recognised component by its closed-form propagator.

    ``amps`` must be ordered as ``kind.ordering`` returns the vertices; for a
    4-cycle that is (a, b, c, d) with (a, d) and (b, c) the antipodal pairs.
    """
    c = np.asarray(amps, dtype=complex)
    if kind.tag is Kind.OTHER:
        raise ValueError("no closed form for OTHER components")
    if c.shape != (kind.size,):
        raise ValueError(f"{kind.tag.value} needs {kind.size} amplitudes, got shape {c.shape}")
    if kind.tag is Kind.LOOPLESS_ISOLATED:
        return c.copy()
    if kind.tag is Kind.LOOPED_ISOLATED:
        return np.exp(-1j * t) * c
    if kind.tag is Kind.PATH2:
        co, si = math.cos(t), math.sin(t)
        return np.array([c[0] * co - 1j * c[1] * si, c[1] * co - 1j * c[0] * si])
    a, b, cc, d = c
    co, si = math.cos(2 * t), math.sin(2 * t)
    ad, bc = a + d, b + cc
    return 0.5 * np.array(
        [
            a - d + ad * co - 1j * bc * si,
            b - cc + bc * co - 1j * ad * si,
            cc - b + bc * co - 1j * ad * si,
            d - a + ad * co - 1j * bc * si,
        ]
    )


@dataclass(frozen=True)
class Spectral:
    """Eigendecomposition A = Q diag(w) Q^T of a real symmetric matrix."""

    w: np.ndarray
    q: np.ndarray

    @classmethod
    def of(cls, a: np.ndarray) -> Spectral:
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")
        w, q = np.linalg.eigh(a)
        scale = np.linalg.norm(a, 2)
        residual = np.linalg.norm(a @ q - q * w, 2)
        if residual > 1e-12 * max(scale, 1.0):
            raise ArithmeticError(f"eigendecomposition residual {residual:.3e} too large")
        return cls(w, q)

    def apply(self, amps: np.ndarray, t: float) -> np.ndarray:
        return self.q @ (np.exp(-1j * self.w * t) * (self.q.T @ amps))


def evolve_generic(a, amps, t: float) -> np.ndarray:
    """exp(-iAt) @ amps through the spectral decomposition of symmetric A."""
    spec = Spectral.of(a)
    amps = np.asarray(amps, dtype=complex)
    if amps.shape != (spec.w.size,):
        raise ValueError(f"amplitude vector shape {amps.shape} does not match matrix {spec.q.shape}")
    return spec.apply(amps, t)


class _Propagator:
    """Per-graph evolution plan: closed forms where possible, spectral otherwise."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.parts: list[tuple[ComponentKind, np.ndarray, Spectral | None]] = []
        a = None
        for comp in connected_components(g):
            kind = classify_component(g, comp)
            idx = np.array(kind.ordering(comp))
            spec = None
            if kind.tag is Kind.OTHER:
                if a is None:
                    a = adjacency_matrix(g)
                spec = Spectral.of(a[np.ix_(idx, idx)])
            if kind.tag is not Kind.LOOPLESS_ISOLATED:
                self.parts.append((kind, idx, spec))

    def __call__(self, psi: np.ndarray, t: float) -> np.ndarray:
        out = psi.copy()
        for kind, idx, spec in self.parts:
            if spec is None:
                out[idx] = evolve_closed_form(kind, psi[idx], t)
            else:
                out[idx] = spec.apply(psi[idx], t)
        return out


def _check_length(n: int, psi: np.ndarray) -> None:
    if psi.shape != (n,):
        raise ValueError(f"state has shape {psi.shape}, graph has {n} vertices")


def _time(t) -> float:
    t = float(t)
    if t < 0:
        raise ValueError(f"evolution time must be nonnegative, got {t}")
    return t


def evolve_segment(g: Graph, state, t: float | Radians) -> np.ndarray:
    """Evolve ``state`` on static graph ``g`` for time ``t``; no renormalization."""
    psi = np.asarray(state, dtype=complex)
    _check_length(g.n, psi)
    return _Propagator(g)(psi, _time(t))


def evolve_schedule(s: Schedule, state, strict: bool = False) -> np.ndarray:
    """Run every segment of ``s`` in order.

    With ``strict`` the norm is checked after each segment and drift above
    1e-10 raises ``UnitarityError``.
    """
    psi = np.asarray(state, dtype=complex)
    _check_length(s.n, psi)
    norm0 = np.linalg.norm(psi)
    for seg in s.segments:
        psi = _Propagator(seg.graph)(psi, _time(seg.duration))
        if strict and abs(np.linalg.norm(psi) - norm0) > DRIFT_TOL:
            raise UnitarityError(f"norm drifted to {np.linalg.norm(psi)!r}")
    return psi


@dataclass(frozen=True)
class WalkTrace:
    times: np.ndarray
    probabilities: np.ndarray
    amplitudes: np.ndarray
    final_state: np.ndarray

    def at(self, t: float, atol: float = 1e-9) -> int:
        """Row index of the sample taken at time ``t``."""
        hits = np.flatnonzero(np.abs(self.times - float(t)) <= atol)
        if hits.size == 0:
            raise KeyError(f"no sample at t={float(t)}")
        return int(hits[0])


def _sample_times(s: Schedule, dt: float) -> list[float]:
    total = float(s.total_duration)
    marks = [float(b) for b in s.boundaries()] + [float(c.time) for c in s.checkpoints]
    k = int(math.floor(total / dt + 1e-9))
    grid = [i * dt for i in range(k + 1)]
    # a grid point within rounding of an exact mark is replaced by the mark
    eps = 1e-9 * dt
    out = sorted(set(marks))
    for t in grid:
        if t <= total and all(abs(t - m) > eps for m in marks):
            out.append(t)
    return sorted(x for x in set(out) if x <= total + eps)


def trace_schedule(s: Schedule, state, dt: float = DEFAULT_DT) -> WalkTrace:
    """Sample the walk on a time grid of step ``dt``.

    Segment boundaries and checkpoints are always sampled at their exact
    times; within a segment the state is propagated from the segment start.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    psi = np.asarray(state, dtype=complex)
    _check_length(s.n, psi)
    times = _sample_times(s, dt)
    starts = [float(b) for b in s.boundaries()]
    amps = np.empty((len(times), s.n), dtype=complex)
    seg_i = 0
    props = [_Propagator(seg.graph) for seg in s.segments]
    start_state = psi
    for row, t in enumerate(times):
        # advance whole segments that end at or before t
        while seg_i < len(s.segments) and starts[seg_i + 1] <= t:
            start_state = props[seg_i](start_state, _time(s.segments[seg_i].duration))
            seg_i += 1
        if seg_i < len(s.segments) and t > starts[seg_i]:
            amps[row] = props[seg_i](start_state, t - starts[seg_i])
        else:
            amps[row] = start_state
    while seg_i < len(s.segments):
        start_state = props[seg_i](start_state, _time(s.segments[seg_i].duration))
        seg_i += 1
    return WalkTrace(np.array(times), np.abs(amps) ** 2, amps, start_state)
