"""Lower gates and circuits to dynamic-graph schedules."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .graph import Graph, Schedule, Segment
from .radians import Radians

# Durations shorter than this are dropped instead of emitted as segments.
MIN_DURATION = 1e-12


class CompileError(ValueError):
    pass


class LegacyUnsupportedError(CompileError):
    pass


class Gate(enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"
    I = "i"  # noqa: E741
    H = "h"
    H_ALT = "halt"
    T = "t"
    S = "s"
    PHASE = "phase"
    CNOT = "cnot"
    TOFFOLI = "toffoli"

    @property
    def arity(self) -> int:
        return {Gate.CNOT: 2, Gate.TOFFOLI: 3}.get(self, 1)


@dataclass(frozen=True)
class GateOp:
    """One gate application.

    ``qubits`` are 1-based with qubit 1 the leftmost (most significant) bit.
    For CNOT and Toffoli the controls come first and the target last.
    """

    gate: Gate
    qubits: tuple[int, ...]
    theta: Radians | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(self.qubits) != self.gate.arity:
            raise CompileError(f"{self.gate.value} takes {self.gate.arity} qubit(s), got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise CompileError(f"repeated qubit in {self.gate.value} {self.qubits}")
        if any(q < 1 for q in self.qubits):
            raise CompileError(f"qubit indices are 1-based, got {self.qubits}")
        if self.gate is Gate.PHASE:
            if self.theta is None:
                raise CompileError("phase gate needs an angle")
            object.__setattr__(self, "theta", self.theta.mod_2pi())
        elif self.theta is not None:
            raise CompileError(f"{self.gate.value} takes no angle")

    @property
    def target(self) -> int:
        return self.qubits[-1]

    @property
    def controls(self) -> tuple[int, ...]:
        return self.qubits[:-1]

    def check(self, n_qubits: int) -> None:
        bad = [q for q in self.qubits if q > n_qubits]
        if bad:
            raise CompileError(f"qubit {bad[0]} out of range for {n_qubits} qubit(s)")


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    ops: tuple[GateOp, ...] = ()
    layer_marks: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n_qubits < 1:
            raise CompileError("a circuit needs at least one qubit")
        object.__setattr__(self, "ops", tuple(self.ops))
        object.__setattr__(self, "layer_marks", tuple(self.layer_marks))
        for op in self.ops:
            op.check(self.n_qubits)
        if list(self.layer_marks) != sorted(self.layer_marks) or any(
            not 0 <= m <= len(self.ops) for m in self.layer_marks
        ):
            raise CompileError(f"bad layer marks {self.layer_marks}")


def _bit(q: int, n_qubits: int) -> int:
    return 1 << (n_qubits - q)


# Per-pair patterns. Each step names the graph on a (|0>-role, |1>-role)
# vertex pair and its duration in units of pi.
#   "path": the pair joined by an edge
#   "both": both vertices looped
#   "one":  |0>-role loopless, |1>-role looped
#   "zero": |0>-role looped, |1>-role loopless
_PATTERNS: dict[Gate, list[tuple[str, Radians]]] = {
    Gate.X: [("path", Radians.pi(1, 2)), ("both", Radians.pi(3, 2))],
    Gate.Y: [("path", Radians.pi(1, 2)), ("one", Radians.pi(1))],
    Gate.Z: [("one", Radians.pi(1))],
    Gate.H: [("one", Radians.pi(3, 2)), ("path", Radians.pi(1, 4)), ("one", Radians.pi(3, 2))],
    Gate.H_ALT: [
        ("zero", Radians.pi(1, 2)),
        ("path", Radians.pi(1, 4)),
        ("both", Radians.pi(1)),
        ("zero", Radians.pi(1, 2)),
    ],
    Gate.T: [("one", Radians.pi(7, 4))],
}


def _pair_graph(n: int, pairs: Iterable[tuple[int, int]], role: str) -> Graph:
    edges, loops = set(), set()
    for v0, v1 in pairs:
        if role == "path":
            edges.add((v0, v1))
        elif role == "both":
            loops.update((v0, v1))
        elif role == "one":
            loops.add(v1)
        elif role == "zero":
            loops.add(v0)
        else:
            raise AssertionError(role)
    return Graph(n, frozenset(edges), frozenset(loops))


def _pattern_schedule(n: int, pairs: list[tuple[int, int]], pattern) -> Schedule:
    segs = [Segment(_pair_graph(n, pairs, role), d) for role, d in pattern if float(d) >= MIN_DURATION]
    return Schedule(n, segs)


def phase_duration(theta: Radians) -> Radians:
    """Smallest positive ``2*pi*k - theta``; zero for theta = 0."""
    theta = theta.mod_2pi()
    if theta.is_zero():
        return Radians.pi(0)
    return Radians.pi(2) - theta


def qubit_pairs(q: int, n_qubits: int) -> list[tuple[int, int]]:
    """Vertex pairs differing only in qubit ``q``, lower index first."""
    b = _bit(q, n_qubits)
    return [(v, v | b) for v in range(1 << n_qubits) if not v & b]


def controlled_pairs(controls: Sequence[int], target: int, n_qubits: int) -> list[tuple[int, int]]:
    mask = sum(_bit(c, n_qubits) for c in controls)
    return [(v0, v1) for v0, v1 in qubit_pairs(target, n_qubits) if v0 & mask == mask]


def compile_gate(op: GateOp, n_qubits: int) -> Schedule:
    if n_qubits < 1:
        raise CompileError("need at least one qubit")
    op.check(n_qubits)
    n = 1 << n_qubits
    if op.gate is Gate.I:
        return Schedule(n)
    if op.gate in (Gate.CNOT, Gate.TOFFOLI):
        pairs = controlled_pairs(op.controls, op.target, n_qubits)
        return _pattern_schedule(n, pairs, _PATTERNS[Gate.X])
    if op.gate is Gate.S:
        pattern = [("one", phase_duration(Radians.pi(1, 2)))]
    elif op.gate is Gate.PHASE:
        pattern = [("one", phase_duration(op.theta))]
    else:
        pattern = _PATTERNS[op.gate]
    return _pattern_schedule(n, qubit_pairs(op.target, n_qubits), pattern)


def identity_schedule(n_qubits: int, construction: str = "empty") -> Schedule:
    """Identity on ``n_qubits`` qubits.

    ``construction`` is one of ``empty`` (no segments), ``loops`` (every
    vertex looped for 2pi), ``paths`` (vertices paired along the last qubit
    for 2pi) or ``cycles`` (4-cycles over the last two qubits for pi).
    """
    n = 1 << n_qubits
    if construction == "empty":
        return Schedule(n)
    if construction == "loops":
        return Schedule(n, [Segment(Graph(n, loops=frozenset(range(n))), Radians.pi(2))])
    if construction == "paths":
        pairs = qubit_pairs(n_qubits, n_qubits)
        return Schedule(n, [Segment(_pair_graph(n, pairs, "path"), Radians.pi(2))])
    if construction == "cycles":
        if n_qubits < 2:
            raise CompileError("the 4-cycle identity needs at least two qubits")
        edges = set()
        for base in range(0, n, 4):
            # 00 - 01 - 11 - 10 - 00 on the two least significant bits
            a, b, c, d = base, base + 1, base + 3, base + 2
            edges.update({(a, b), (b, c), (c, d), (a, d)})
        return Schedule(n, [Segment(Graph(n, frozenset(edges)), Radians.pi(1))])
    raise CompileError(f"unknown identity construction {construction!r}")


def _graph(n: int, edges=(), loops=()) -> Graph:
    return Graph(n, frozenset(edges), frozenset(loops))


def compile_gate_legacy(op: GateOp | Gate) -> Schedule:
    """All-looped isolated-vertex forms of X, Y, Z and CNOT on fixed vertex counts.

    X acts on 2 vertices, CNOT on 4. Y and Z act on 8 vertices with the gate
    applied to the pair (|000>, |001>) and the rest serving as ancillas.
    """
    gate = op.gate if isinstance(op, GateOp) else op
    if gate is Gate.X:
        return compile_gate(GateOp(Gate.X, (1,)), 1)
    if gate is Gate.Y:
        others = range(2, 8)
        # |000> sits in a 4-cycle with ancillas |010>, |011>, |100>: 0-2-3-4-0
        cycle = {(0, 2), (2, 3), (3, 4), (0, 4)}
        return Schedule(
            8,
            [
                Segment(_graph(8, {(0, 1)}, others), Radians.pi(1, 2)),
                Segment(_graph(8, cycle, {1, 5, 6, 7}), Radians.pi(1)),
            ],
        )
    if gate is Gate.Z:
        cycle = {(0, 2), (2, 6), (6, 4), (0, 4)}
        return Schedule(8, [Segment(_graph(8, cycle, {1, 3, 5, 7}), Radians.pi(1))])
    if gate is Gate.CNOT:
        return Schedule(
            4,
            [
                Segment(_graph(4, loops=range(4)), Radians.pi(3, 2)),
                Segment(_graph(4, {(2, 3)}, {0, 1}), Radians.pi(1, 2)),
            ],
        )
    raise LegacyUnsupportedError(f"{gate.value}: legacy form not prose-specified")


def compile_circuit(c: Circuit, legacy: bool = False) -> Schedule:
    """Concatenate gate schedules in op order.

    When the circuit has layer marks a checkpoint ``layer<k>`` is emitted at
    the end of every layer, including the last one.
    """
    n = 1 << c.n_qubits
    out = Schedule(n)
    marks = set(c.layer_marks)
    layer = 0
    for i, op in enumerate(c.ops):
        if i in marks and i > 0:
            layer += 1
            out = out.with_checkpoint(f"layer{layer}")
        sched = compile_gate_legacy(op) if legacy else compile_gate(op, c.n_qubits)
        if sched.n != n:
            raise CompileError(
                f"legacy {op.gate.value} acts on {sched.n} vertices; circuit has {n}"
            )
        out = out.then(sched)
    if marks and c.ops:
        out = out.with_checkpoint(f"layer{layer + 1}")
    return out


def checkpoint_times(s: Schedule) -> dict[str, Radians]:
    return {c.label: c.time for c in s.checkpoints}

