"""Multi-digraph data model: arcs with identity, degree reports, vertex
splitting, named fixtures, and seeded random generators.

Vertices are dense integers ``0..n-1`` and arcs dense integers ``0..m-1``.
Parallel arcs and loops are first-class; arc identity is the index. All
values are immutable after construction and every operation is pure, so
everything here is safe to share between threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import PreconditionError, StructuralError

TAIL = "t"
HEAD = "h"


class Arc(NamedTuple):
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


class ArcEnd(NamedTuple):
    """One of the two ends of an arc.

    ``(a, TAIL)`` sits at the arc's tail vertex (the arc leaves through
    it) and ``(a, HEAD)`` at its head vertex. A loop contributes both
    ends to the same vertex, which keeps rotations unambiguous even with
    parallel arcs and loops.
    """

    arc: int
    side: str

    @property
    def is_out(self) -> bool:
        return self.side == TAIL

    @property
    def is_in(self) -> bool:
        return self.side == HEAD

    def token(self) -> str:
        return f"{self.arc}{self.side}"


@dataclass(frozen=True)
class Digraph:
    """Immutable multi-digraph with indexed arcs."""

    vertex_count: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(Arc(*a) for a in self.arcs))
        if self.vertex_count < 0:
            raise StructuralError("vertex count must be nonnegative")
        n = self.vertex_count
        for i, arc in enumerate(self.arcs):
            if not (0 <= arc.tail < n and 0 <= arc.head < n):
                raise StructuralError(
                    f"arc {i} endpoints ({arc.tail}, {arc.head}) out of range "
                    f"for {n} vertices"
                )

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, arc in enumerate(self.arcs):
            buckets[arc.tail].append(i)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, arc in enumerate(self.arcs):
            buckets[arc.head].append(i)
        return tuple(tuple(b) for b in buckets)

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_arcs(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def outdegree(self, v: int) -> int:
        return len(self._out[v])

    def indegree(self, v: int) -> int:
        return len(self._in[v])

    def ends_at(self, v: int) -> tuple[ArcEnd, ...]:
        """All arc-ends incident to ``v``, in ascending (arc, side) order."""
        ends = [ArcEnd(a, TAIL) for a in self._out[v]]
        ends += [ArcEnd(a, HEAD) for a in self._in[v]]
        return tuple(sorted(ends))

    def end_vertex(self, end: ArcEnd) -> int:
        arc = self.arcs[end.arc]
        return arc.tail if end.side == TAIL else arc.head


@dataclass(frozen=True)
class DegreeReport:
    indegree: tuple[int, ...]
    outdegree: tuple[int, ...]
    is_eulerian: bool
    is_2regular: bool
    is_connected: bool


def validate(H: Digraph) -> DegreeReport:
    """Per-vertex degrees plus the three structural flags.

    ``is_eulerian`` means indegree equals outdegree everywhere
    (connectivity is reported separately); ``is_connected`` refers to the
    underlying undirected graph.
    """
    from .connectivity import weak_components

    indeg = tuple(H.indegree(v) for v in range(H.vertex_count))
    outdeg = tuple(H.outdegree(v) for v in range(H.vertex_count))
    eulerian = indeg == outdeg
    regular2 = eulerian and all(d == 2 for d in indeg)
    connected = len(weak_components(H)) <= 1
    return DegreeReport(indeg, outdeg, eulerian, regular2, connected)


@dataclass(frozen=True)
class SplitChoice:
    """Matching of the two in-arcs at a degree-(2,2) vertex to its two
    out-arcs, written as ``((in_a, out_a), (in_b, out_b))``."""

    vertex: int
    pairing: tuple[tuple[int, int], tuple[int, int]]


def split_choices(H: Digraph, v: int) -> tuple[SplitChoice, SplitChoice]:
    """The two matchings available at a degree-(2,2) vertex: in-arcs in
    ascending id order paired straight with the out-arcs or crossed."""
    ins = sorted(H.in_arcs(v))
    outs = sorted(H.out_arcs(v))
    if len(ins) != 2 or len(outs) != 2:
        raise PreconditionError(f"vertex {v} does not have indegree 2 and outdegree 2")
    straight = ((ins[0], outs[0]), (ins[1], outs[1]))
    crossed = ((ins[0], outs[1]), (ins[1], outs[0]))
    return (SplitChoice(v, straight), SplitChoice(v, crossed))


def split_vertex(H: Digraph, choice: SplitChoice) -> Digraph:
    """Delete the vertex and reconnect its in-arcs to the matched out-arcs.

    Each matched (in, out) pair becomes one strand through the deleted
    vertex; strands chain through loops at the vertex, and every maximal
    strand with free endpoints becomes one new arc from the entering
    arc's tail to the leaving arc's head. A strand made only of loops
    closes into a vertex-free circle and vanishes with the vertex. Either
    way the arc count drops by exactly two. Surviving arcs keep their
    relative order; new arcs take the highest ids.
    """
    return split_vertex_maps(H, choice)[0]


def split_vertex_maps(
    H: Digraph, choice: SplitChoice
) -> tuple[Digraph, dict[int, int], dict[int, int]]:
    """Like :func:`split_vertex` but also returns the old-to-new vertex and
    arc id maps for the surviving vertices and arcs."""
    v = choice.vertex
    if not (0 <= v < H.vertex_count):
        raise PreconditionError(f"vertex {v} out of range")
    ins = sorted(H.in_arcs(v))
    outs = sorted(H.out_arcs(v))
    if len(ins) != 2 or len(outs) != 2:
        raise PreconditionError(f"vertex {v} does not have indegree 2 and outdegree 2")
    pair_map = dict(choice.pairing)
    if sorted(pair_map) != ins or sorted(pair_map.values()) != outs:
        raise PreconditionError(
            f"pairing {choice.pairing} does not match the in/out arcs at vertex {v}"
        )

    new_endpoints: list[tuple[int, int]] = []
    for i0 in sorted(pair_map):
        if H.arcs[i0].tail == v:
            continue  # the strand through this loop is reached from outside, if ever
        o = pair_map[i0]
        while H.arcs[o].head == v:
            o = pair_map[o]  # the out-arc is a loop; follow its matched continuation
        new_endpoints.append((H.arcs[i0].tail, H.arcs[o].head))

    vertex_map = {w: (w if w < v else w - 1) for w in range(H.vertex_count) if w != v}
    incident = set(ins) | set(outs)
    survivors = [a for a in range(H.arc_count) if a not in incident]
    arc_map = {old: idx for idx, old in enumerate(survivors)}
    arcs = [Arc(vertex_map[H.arcs[a].tail], vertex_map[H.arcs[a].head]) for a in survivors]
    arcs += [Arc(vertex_map[t], vertex_map[h]) for t, h in new_endpoints]
    return Digraph(H.vertex_count - 1, tuple(arcs)), vertex_map, arc_map


def generate_random_eulerian(n: int, d: int, seed: int) -> Digraph:
    """Random connected Eulerian digraph with half-degree at most ``d``.

    Built as a union of directed cycles over random vertex subsets;
    retries until every vertex is covered and the underlying graph is
    connected. Deterministic for a fixed seed.
    """
    from .connectivity import weak_components

    if n < 1 or d < 1:
        raise PreconditionError("need n >= 1 and d >= 1")
    rng = random.Random(seed)
    while True:
        half = [0] * n
        arcs: list[Arc] = []
        for _ in range(rng.randint(1, d)):
            available = [w for w in range(n) if half[w] < d]
            if not available:
                break
            k = rng.randint(1, len(available))
            cycle = rng.sample(available, k)
            for i in range(k):
                arcs.append(Arc(cycle[i], cycle[(i + 1) % k]))
            for w in cycle:
                half[w] += 1
        if min(half) < 1:
            continue
        H = Digraph(n, tuple(arcs))
        if len(weak_components(H)) == 1:
            return H


def generate_random_2regular(n: int, seed: int) -> Digraph:
    """Random connected 2-regular digraph: the arc-disjoint union of two
    random permutation digraphs, retried until connected. Loops and
    parallel arcs occur naturally. Deterministic for a fixed seed."""
    from .connectivity import weak_components

    if n < 1:
        raise PreconditionError("need n >= 1")
    rng = random.Random(seed)
    while True:
        arcs = [Arc(w, im) for p in (rng.sample(range(n), n), rng.sample(range(n), n))
                for w, im in enumerate(p)]
        H = Digraph(n, tuple(arcs))
        if len(weak_components(H)) == 1:
            return H


_FIXTURES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    # two vertices joined by a doubled digon
    "D2": (2, ((0, 1), (1, 0), (0, 1), (1, 0))),
    # doubled directed triangle; arcs 0,2,4 and 1,3,5 are the two copies
    "C3x2": (3, ((0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0))),
    # doubled directed 4-cycle
    "C4x2": (4, ((0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (2, 3), (3, 0), (3, 0))),
    # loop-digon-loop chain: the smallest 2-regular digraph with a 2-edge-cut
    "LOOPLINK": (2, ((0, 0), (0, 1), (1, 1), (1, 0))),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def medial_fixture(name: str) -> Digraph:
    """Named test digraphs used throughout the suite and the docs."""
    try:
        n, arcs = _FIXTURES[name]
    except KeyError:
        raise PreconditionError(
            f"unknown fixture {name!r}; known: {', '.join(_FIXTURES)}"
        ) from None
    return Digraph(n, tuple(Arc(*a) for a in arcs))
