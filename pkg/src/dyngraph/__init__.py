"""Continuous-time quantum walks on dynamic graphs as a quantum gate set."""

from .compiler import (
    Circuit,
    CompileError,
    Gate,
    GateOp,
    LegacyUnsupportedError,
    compile_circuit,
    compile_gate,
    compile_gate_legacy,
    identity_schedule,
)
from .formats import ParseError, parse_circuit, parse_schedule, serialize_circuit, serialize_schedule
from .graph import (
    Checkpoint,
    ComponentKind,
    Graph,
    GraphError,
    Kind,
    Schedule,
    Segment,
    adjacency_matrix,
    classify_component,
    connected_components,
)
from .radians import Radians
from .verify import equal_up_to_global_phase, gate_unitary, textbook_unitary
from .walk import (
    WalkTrace,
    basis_state,
    evolve_closed_form,
    evolve_generic,
    evolve_schedule,
    evolve_segment,
    trace_schedule,
)

__version__ = "0.1.0"
