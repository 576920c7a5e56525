"""Command-line front end: compile, simulate, verify, demo-layers.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

from .compiler import CompileError, Gate, GateOp, compile_circuit, compile_gate
from .demo import compare_checkpoints, run_layers
from .formats import (
    ParseError,
    format_amplitudes,
    parse_circuit,
    parse_schedule,
    parse_state,
    serialize_schedule,
    trace_csv,
    write_text,
)
from .radians import format_radians, parse_radians
from .verify import equal_up_to_global_phase, gate_unitary, max_deviation, textbook_unitary
from .walk import DEFAULT_DT, basis_state, trace_schedule

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _positive(text: str) -> float:
    try:
        x = float(parse_radians(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def parse_targets(text: str) -> tuple[int, ...]:
    """``2``, ``1->2`` or ``(1,2)->3`` to a qubit tuple, controls first."""
    m = re.fullmatch(r"\s*(?:\(?\s*([\d,\s]+?)\s*\)?\s*->\s*)?(\d+)\s*", text)
    if not m:
        raise UsageError(f"bad target spec {text!r}")
    controls = [int(x) for x in re.split(r"[,\s]+", m.group(1).strip())] if m.group(1) else []
    return (*controls, int(m.group(2)))


def cmd_compile(args) -> int:
    circuit = parse_circuit(_read(args.circuit))
    schedule = compile_circuit(circuit, legacy=args.legacy)
    text = serialize_schedule(schedule)
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"total duration {format_radians(schedule.total_duration)}", file=sys.stdout if args.out else sys.stderr)
    return OK


def cmd_simulate(args) -> int:
    schedule = parse_schedule(_read(args.schedule))
    if args.init is None:
        psi0 = basis_state(schedule.n, 0)
    else:
        try:
            psi0 = parse_state(args.init, schedule.n)
        except ValueError as e:
            raise UsageError(str(e)) from None
    trace = trace_schedule(schedule, psi0, args.dt)
    if args.out:
        write_text(args.out, trace_csv(trace))
    sys.stdout.write(format_amplitudes(trace.final_state))
    return OK


def cmd_verify(args) -> int:
    try:
        gate = Gate(args.gate.lower())
    except ValueError:
        raise UsageError(f"unsupported gate {args.gate!r}") from None
    theta = None
    if gate is Gate.PHASE:
        if args.theta is None:
            raise UsageError("phase needs --theta")
        theta = parse_radians(args.theta)
    op = GateOp(gate, parse_targets(args.target), theta)
    u = gate_unitary(compile_gate(op, args.n_qubits))
    ref = textbook_unitary(op, args.n_qubits)
    dev = max_deviation(u, ref)
    _, phase = equal_up_to_global_phase(u, ref, args.tol)
    passed = dev <= args.tol
    print(f"{'PASS' if passed else 'FAIL'} {gate.value} {args.target} on {args.n_qubits} qubit(s): "
          f"max deviation {dev:.3e}, global phase {phase.real:.15g}{phase.imag:+.15g}j")
    return OK if passed else FAIL


def cmd_demo_layers(args) -> int:
    schedule, trace = run_layers(args.dt)
    if args.out:
        write_text(args.out, trace_csv(trace))
    ok = True
    for label, t, dev in compare_checkpoints(schedule, trace):
        good = dev <= args.tol
        ok &= good
        p = trace.probabilities[trace.at(t)]
        probs = " ".join(f"{x:.6f}" for x in p)
        print(f"{label} t={t / math.pi:.4g}pi {'match' if good else 'MISMATCH'} dev={dev:.3e} p=[{probs}]")
    return OK if ok else FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dyngraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", help="lower a circuit file to a schedule file")
    c.add_argument("circuit")
    c.add_argument("--out")
    c.add_argument("--legacy", action="store_true", help="use the all-looped legacy constructions")
    c.set_defaults(func=cmd_compile)

    s = sub.add_parser("simulate", help="run a schedule and write a probability trace")
    s.add_argument("schedule")
    s.add_argument("--init", help="basis:<bits> or amps:<c0>,<c1>,... (default: vertex 0)")
    s.add_argument("--dt", type=_positive, default=DEFAULT_DT)
    s.add_argument("--out")
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="compare a compiled gate with its textbook matrix")
    v.add_argument("gate")
    v.add_argument("target", help="e.g. 2, 1->2, (1,2)->3")
    v.add_argument("n_qubits", type=int)
    v.add_argument("--theta", help="phase angle, e.g. pi/8")
    v.add_argument("--tol", type=_positive, default=1e-9)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("demo-layers", help="simulate the layered three-qubit demo circuit")
    d.add_argument("--out")
    d.add_argument("--dt", type=_positive, default=DEFAULT_DT)
    d.add_argument("--tol", type=_positive, default=1e-9)
    d.set_defaults(func=cmd_demo_layers)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except (UsageError, ParseError, CompileError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
