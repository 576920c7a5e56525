"""Text formats: circuit DSL, schedule files, initial-state specs, trace CSV.

Circuit files use 1-based qubit indices (qubit 1 is leftmost). Schedule
files use 0-based vertex indices matching matrix rows.
"""

from __future__ import annotations

import io
import math
import re

import numpy as np

from .compiler import Circuit, CompileError, Gate, GateOp
from .graph import Checkpoint, Graph, GraphError, Schedule, Segment
from .radians import format_radians, parse_radians
from .walk import WalkTrace


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", no) from None


_PHASE = re.compile(r"^phase\((.*)\)$")
_SIMPLE = {g.value: g for g in Gate if g is not Gate.PHASE}


def parse_circuit(text: str) -> Circuit:
    n_qubits = None
    ops: list[GateOp] = []
    marks: list[int] = []
    for no, toks in _lines(text):
        head = toks[0].lower()
        if n_qubits is None:
            if head != "qubits" or len(toks) != 2:
                raise ParseError("expected 'qubits <n>' header", no)
            n_qubits = _int(toks[1], no, "qubit count")
            if n_qubits < 1:
                raise ParseError("qubit count must be positive", no)
            continue
        if head == "qubits":
            raise ParseError("duplicate 'qubits' header", no)
        if head == "layer":
            if len(toks) != 1:
                raise ParseError("'layer' takes no arguments", no)
            if not marks or marks[-1] != len(ops):
                marks.append(len(ops))
            continue
        theta = None
        m = _PHASE.match(head)
        if m:
            gate = Gate.PHASE
            try:
                theta = parse_radians(m.group(1))
            except ValueError as e:
                raise ParseError(str(e), no) from None
        elif head in _SIMPLE:
            gate = _SIMPLE[head]
        else:
            raise ParseError(f"unknown mnemonic {toks[0]!r}", no)
        qubits = tuple(_int(t, no, "qubit index") for t in toks[1:])
        try:
            op = GateOp(gate, qubits, theta)
            op.check(n_qubits)
        except CompileError as e:
            raise ParseError(str(e), no) from None
        ops.append(op)
    if n_qubits is None:
        raise ParseError("missing 'qubits <n>' header", 1)
    return Circuit(n_qubits, tuple(ops), tuple(marks))


def _op_text(op: GateOp) -> str:
    head = f"phase({format_radians(op.theta)})" if op.gate is Gate.PHASE else op.gate.value
    return " ".join([head, *map(str, op.qubits)])


def serialize_circuit(c: Circuit) -> str:
    out = [f"qubits {c.n_qubits}"]
    marks = set(c.layer_marks)
    for i, op in enumerate(c.ops):
        if i in marks:
            out.append("layer")
        out.append(_op_text(op))
    if len(c.ops) in marks:
        out.append("layer")
    return "\n".join(out) + "\n"


def parse_schedule(text: str) -> Schedule:
    n = None
    segments: list[Segment] = []
    checkpoints: list[Checkpoint] = []
    current = None  # (duration, edges, loops, touched)

    def vertex(tok, no):
        v = _int(tok, no, "vertex")
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range [0, {n})", no)
        return v

    def angle(tok, no):
        try:
            r = parse_radians(tok)
        except ValueError as e:
            raise ParseError(str(e), no) from None
        if float(r) < 0:
            raise ParseError(f"negative time {tok!r}", no)
        return r

    for no, toks in _lines(text):
        head = toks[0].lower()
        if n is None:
            if head != "vertices" or len(toks) != 2:
                raise ParseError("expected 'vertices <n>' header", no)
            n = _int(toks[1], no, "vertex count")
            if n < 1:
                raise ParseError("vertex count must be positive", no)
            continue
        if head == "segment":
            if current is not None:
                raise ParseError("'segment' before previous segment's 'end'", no)
            if len(toks) != 2:
                raise ParseError("expected 'segment <duration>'", no)
            current = (angle(toks[1], no), set(), set(), set())
        elif head in ("edge", "loop"):
            if current is None:
                raise ParseError(f"'{head}' outside a segment", no)
            _, edges, loops, touched = current
            if head == "edge":
                if len(toks) != 3:
                    raise ParseError("expected 'edge <u> <v>'", no)
                u, v = vertex(toks[1], no), vertex(toks[2], no)
                if u == v:
                    raise ParseError("edge endpoints must differ; use 'loop'", no)
                if u in loops or v in loops:
                    raise ParseError("edge touches a looped vertex", no)
                edges.add((min(u, v), max(u, v)))
                touched.update((u, v))
            else:
                if len(toks) != 2:
                    raise ParseError("expected 'loop <v>'", no)
                v = vertex(toks[1], no)
                if v in touched:
                    raise ParseError(f"loop on vertex {v} which has incident edges", no)
                loops.add(v)
        elif head == "end":
            if current is None:
                raise ParseError("'end' without 'segment'", no)
            dur, edges, loops, _ = current
            try:
                segments.append(Segment(Graph(n, frozenset(edges), frozenset(loops)), dur))
            except GraphError as e:
                raise ParseError(str(e), no) from None
            current = None
        elif head == "checkpoint":
            if len(toks) != 3:
                raise ParseError("expected 'checkpoint <label> <time>'", no)
            checkpoints.append(Checkpoint(toks[1], angle(toks[2], no)))
        elif head == "vertices":
            raise ParseError("duplicate 'vertices' header", no)
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", no)
    if n is None:
        raise ParseError("missing 'vertices <n>' header", 1)
    if current is not None:
        raise ParseError("unterminated segment", no)
    try:
        return Schedule(n, tuple(segments), tuple(checkpoints))
    except GraphError as e:
        raise ParseError(str(e), no) from None


def serialize_schedule(s: Schedule) -> str:
    out = [f"vertices {s.n}"]
    for seg in s.segments:
        out.append(f"segment {format_radians(seg.duration)}")
        out.extend(f"edge {u} {v}" for u, v in sorted(seg.graph.edges))
        out.extend(f"loop {v}" for v in sorted(seg.graph.loops))
        out.append("end")
    out.extend(f"checkpoint {c.label} {format_radians(c.time)}" for c in s.checkpoints)
    return "\n".join(out) + "\n"


def parse_state(spec: str, n: int) -> np.ndarray:
    """Initial state from ``basis:<bits>`` or ``amps:<c0>,<c1>,...``.

    The bit string must have log2(n) characters; explicit amplitudes are
    Python complex literals and must have unit norm within 1e-9.
    """
    kind, _, body = spec.partition(":")
    if kind == "basis":
        n_bits = int(round(math.log2(n))) if n > 1 else 0
        if (1 << n_bits) != n:
            raise ValueError(f"{n} vertices is not a qubit register; give amplitudes")
        if len(body) != max(n_bits, 1) or set(body) - {"0", "1"}:
            raise ValueError(f"basis state {body!r} must be {max(n_bits, 1)} bits")
        psi = np.zeros(n, dtype=complex)
        psi[int(body, 2)] = 1
        return psi
    if kind == "amps":
        try:
            psi = np.array([complex(x.replace(" ", "")) for x in body.split(",")])
        except ValueError:
            raise ValueError(f"malformed amplitude list {body!r}") from None
        if psi.size != n:
            raise ValueError(f"{psi.size} amplitudes given for {n} vertices")
        norm = np.linalg.norm(psi)
        if abs(norm - 1) > 1e-9:
            raise ValueError(f"amplitudes have norm {norm}, expected 1")
        return psi / norm
    raise ValueError(f"state spec must start with 'basis:' or 'amps:', got {spec!r}")


def trace_csv(trace: WalkTrace) -> str:
    n = trace.probabilities.shape[1]
    buf = io.StringIO(newline="")
    buf.write(",".join(["t", *(f"p{i}" for i in range(n))]) + "\n")
    for t, row in zip(trace.times, trace.probabilities):
        buf.write(",".join(f"{x:.17g}" for x in (t, *row)) + "\n")
    return buf.getvalue()


def format_amplitudes(psi) -> str:
    return "".join(f"{a.real:.15g},{a.imag:.15g}\n" for a in np.asarray(psi, dtype=complex))


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
