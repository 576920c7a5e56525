"""Static graphs, dynamic-graph schedules, and component classification."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .radians import ZERO, Radians


class GraphError(ValueError):
    """Raised when a graph or schedule violates its structural invariants."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on ``n`` vertices plus self-loops.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``. A self-loop is
    only allowed on a vertex with no incident edges.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n <= 0:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a self-loop; use loops")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphError(f"vertex {x} out of range [0, {self.n})")
            norm.add((min(u, v), max(u, v)))
        loops = set()
        for v in self.loops:
            v = int(v)
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range [0, {self.n})")
            loops.add(v)
        touched = {x for e in norm for x in e}
        clash = sorted(loops & touched)
        if clash:
            raise GraphError(f"looped vertex {clash[0]} has incident edges")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "loops", frozenset(loops))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    def neighbors(self, v: int) -> list[int]:
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    for v in g.loops:
        a[v, v] = 1.0
    return a


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum vertex."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


class Kind(enum.Enum):
    LOOPLESS_ISOLATED = "loopless-isolated"
    LOOPED_ISOLATED = "looped-isolated"
    PATH2 = "path2"
    CYCLE4 = "cycle4"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentKind:
    """Closed-form class of a component.

    For ``CYCLE4`` the two antipodal (non-adjacent) vertex pairs are kept in
    ``pairs``; each pair is sorted and the pairs are ordered by first vertex.
    """

    tag: Kind
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if (self.tag is Kind.CYCLE4) != bool(self.pairs):
            raise ValueError("antipodal pairs are required for, and only for, CYCLE4")

    @property
    def size(self) -> int | None:
        return {
            Kind.LOOPLESS_ISOLATED: 1,
            Kind.LOOPED_ISOLATED: 1,
            Kind.PATH2: 2,
            Kind.CYCLE4: 4,
        }.get(self.tag)

    def ordering(self, comp: Sequence[int]) -> list[int]:
        """Order component vertices as the closed form expects them."""
        if self.tag is Kind.CYCLE4:
            (a, d), (b, c) = self.pairs
            return [a, b, c, d]
        return sorted(comp)


def classify_component(g: Graph, comp: Iterable[int]) -> ComponentKind:
    comp = sorted(comp)
    cset = set(comp)
    inner = [e for e in g.edges if e[0] in cset or e[1] in cset]
    has_loop = any(v in g.loops for v in comp)
    if len(comp) == 1:
        if inner:
            return ComponentKind(Kind.OTHER)
        return ComponentKind(Kind.LOOPED_ISOLATED if has_loop else Kind.LOOPLESS_ISOLATED)
    if has_loop:
        return ComponentKind(Kind.OTHER)
    if len(comp) == 2 and len(inner) == 1:
        return ComponentKind(Kind.PATH2)
    if len(comp) == 4 and len(inner) == 4 and all(g.degree(v) == 2 for v in comp):
        a = comp[0]
        opposite = next(v for v in comp[1:] if v not in g.neighbors(a))
        rest = [v for v in comp if v not in (a, opposite)]
        if rest[0] not in g.neighbors(rest[1]):
            return ComponentKind(Kind.CYCLE4, ((a, opposite), (rest[0], rest[1])))
    return ComponentKind(Kind.OTHER)


@dataclass(frozen=True)
class Segment:
    graph: Graph
    duration: Radians

    def __post_init__(self):
        if float(self.duration) < 0:
            raise GraphError(f"negative segment duration {self.duration}")


@dataclass(frozen=True)
class Checkpoint:
    label: str
    time: Radians


@dataclass(frozen=True)
class Schedule:
    """A dynamic graph: static graphs held for given durations, in order."""

    n: int
    segments: tuple[Segment, ...] = ()
    checkpoints: tuple[Checkpoint, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        object.__setattr__(self, "checkpoints", tuple(self.checkpoints))
        for s in self.segments:
            if s.graph.n != self.n:
                raise GraphError(f"segment graph has {s.graph.n} vertices, schedule has {self.n}")
        total = float(self.total_duration)
        last = float("-inf")
        for c in self.checkpoints:
            t = float(c.time)
            if t < last:
                raise GraphError(f"checkpoint {c.label!r} goes back in time")
            if t > total + 1e-12 * max(1.0, total):
                raise GraphError(f"checkpoint {c.label!r} at {c.time} is past the end ({self.total_duration})")
            if " " in c.label or not c.label:
                raise GraphError(f"invalid checkpoint label {c.label!r}")
            last = t

    @property
    def total_duration(self) -> Radians:
        total = ZERO
        for s in self.segments:
            total = total + s.duration
        return total

    def boundaries(self) -> list[Radians]:
        """Cumulative start time of each segment followed by the end time."""
        out = [ZERO]
        for s in self.segments:
            out.append(out[-1] + s.duration)
        return out

    def then(self, other: Schedule) -> Schedule:
        """Concatenate, shifting the other schedule's checkpoints."""
        if other.n != self.n:
            raise GraphError(f"cannot join schedules on {self.n} and {other.n} vertices")
        shift = self.total_duration
        moved = tuple(Checkpoint(c.label, shift + c.time) for c in other.checkpoints)
        return Schedule(self.n, self.segments + other.segments, self.checkpoints + moved)

    def with_checkpoint(self, label: str, time: Radians | None = None) -> Schedule:
        time = self.total_duration if time is None else time
        return Schedule(self.n, self.segments, self.checkpoints + (Checkpoint(label, time),))
