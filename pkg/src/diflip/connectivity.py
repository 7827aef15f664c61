"""Weak and strong connectivity, strong k-edge-connectivity, and the
2-edge-cut machinery.

All functions accept a ``without_arcs`` keyword so callers can reason
about arc-deleted subgraphs without building new digraphs; vertices are
always kept, so deleting arcs can leave isolated vertices (which count as
their own components).

Cut detection is deliberately brute force: at the sizes this library
targets, enumerating arc pairs beats building cactus structures.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .digraph import Digraph, validate
from .errors import InternalError, PreconditionError


@dataclass(frozen=True)
class EdgeCut2:
    """A 2-edge-cut with an oriented reading relative to ``side``:
    ``out_arc`` has its tail inside ``side``, ``in_arc`` its head."""

    out_arc: int
    in_arc: int
    side: frozenset[int]

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset((self.out_arc, self.in_arc))


def _undirected_adjacency(H: Digraph, banned: frozenset[int]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(H.vertex_count)]
    for a, arc in enumerate(H.arcs):
        if a in banned or arc.is_loop:
            continue
        adj[arc.tail].append(arc.head)
        adj[arc.head].append(arc.tail)
    return adj


def weak_components(
    H: Digraph, *, without_arcs: Iterable[int] = ()
) -> tuple[tuple[int, ...], ...]:
    """Connected components of the underlying undirected graph, each as a
    sorted vertex tuple, ordered by smallest vertex."""
    banned = frozenset(without_arcs)
    adj = _undirected_adjacency(H, banned)
    seen = [False] * H.vertex_count
    comps: list[tuple[int, ...]] = []
    for s in range(H.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            w = queue.popleft()
            for x in adj[w]:
                if not seen[x]:
                    seen[x] = True
                    comp.append(x)
                    queue.append(x)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _reachable(H: Digraph, start: int, banned: frozenset[int], forward: bool) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        arcs = H.out_arcs(w) if forward else H.in_arcs(w)
        for a in arcs:
            if a in banned:
                continue
            x = H.arcs[a].head if forward else H.arcs[a].tail
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return seen


def is_strongly_connected(H: Digraph, *, without_arcs: Iterable[int] = ()) -> bool:
    """A single vertex (and the empty digraph) count as strongly connected."""
    n = H.vertex_count
    if n <= 1:
        return True
    banned = frozenset(without_arcs)
    return (
        len(_reachable(H, 0, banned, True)) == n
        and len(_reachable(H, 0, banned, False)) == n
    )


def strong_components(
    H: Digraph, *, without_arcs: Iterable[int] = ()
) -> tuple[tuple[int, ...], ...]:
    """Strongly connected components (Kosaraju), each as a sorted vertex
    tuple, ordered by smallest vertex."""
    banned = frozenset(without_arcs)
    n = H.vertex_count
    order: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        # iterative DFS recording finish order
        stack: list[tuple[int, int]] = [(s, 0)]
        seen[s] = True
        while stack:
            w, i = stack[-1]
            outs = H.out_arcs(w)
            advanced = False
            while i < len(outs):
                a = outs[i]
                i += 1
                if a in banned:
                    continue
                x = H.arcs[a].head
                if not seen[x]:
                    stack[-1] = (w, i)
                    stack.append((x, 0))
                    seen[x] = True
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                order.append(w)
    comps: list[tuple[int, ...]] = []
    assigned = [False] * n
    for s in reversed(order):
        if assigned[s]:
            continue
        comp = [s]
        assigned[s] = True
        queue = deque([s])
        while queue:
            w = queue.popleft()
            for a in H.in_arcs(w):
                if a in banned:
                    continue
                x = H.arcs[a].tail
                if not assigned[x]:
                    assigned[x] = True
                    comp.append(x)
                    queue.append(x)
        comps.append(tuple(sorted(comp)))
    return tuple(sorted(comps))


def is_strongly_k_edge_connected(H: Digraph, k: int) -> bool:
    """True iff H minus any fewer than k arcs stays strongly connected.

    Checked by enumeration over arc subsets of size < k; only k in
    {1, 2, 3} is supported, which is all the flip machinery needs.
    """
    if k not in (1, 2, 3):
        raise PreconditionError("k must be 1, 2 or 3")
    if not is_strongly_connected(H):
        return False
    for size in range(1, k):
        for rm in combinations(range(H.arc_count), size):
            if not is_strongly_connected(H, without_arcs=rm):
                return False
    return True


def _classify_cut(H: Digraph, pair: tuple[int, int], side: frozenset[int]) -> EdgeCut2:
    outs = [a for a in pair if H.arcs[a].tail in side]
    ins = [a for a in pair if H.arcs[a].head in side]
    if len(outs) != 1 or len(ins) != 1 or outs[0] == ins[0]:
        raise InternalError(
            f"cut {pair} is not oriented one-in-one-out across {sorted(side)}"
        )
    return EdgeCut2(outs[0], ins[0], side)


def enumerate_2cuts(H: Digraph) -> tuple[EdgeCut2, ...]:
    """All 2-edge-cuts of a connected Eulerian digraph.

    Each unordered arc pair whose removal disconnects the underlying
    graph is reported once, with the canonical side being the one that
    does not contain vertex 0. In an Eulerian digraph every such cut has
    one arc in each direction.
    """
    report = validate(H)
    if not (report.is_connected and report.is_eulerian):
        raise PreconditionError("2-cut enumeration needs a connected Eulerian digraph")
    cuts: list[EdgeCut2] = []
    for i, j in combinations(range(H.arc_count), 2):
        comps = weak_components(H, without_arcs=(i, j))
        if len(comps) == 1:
            continue
        if len(comps) != 2:
            # removing two edges from a connected even-degree graph can
            # split it into at most two pieces
            raise InternalError(f"removing arcs {i},{j} left {len(comps)} components")
        side = frozenset(comps[1] if 0 in comps[0] else comps[0])
        outdeg = sum(1 for arc in H.arcs if arc.tail in side and arc.head not in side)
        indeg = sum(1 for arc in H.arcs if arc.head in side and arc.tail not in side)
        if outdeg != indeg:
            raise InternalError("Eulerian side with unbalanced boundary")
        cuts.append(_classify_cut(H, (i, j), side))
    cuts.sort(key=lambda c: (c.out_arc, c.in_arc))
    return tuple(cuts)


def check_cut(H: Digraph, cut: EdgeCut2) -> None:
    """Raise unless ``cut`` is a genuine oriented 2-edge-cut of H."""
    n = H.vertex_count
    side = cut.side
    if not side or not side <= set(range(n)) or len(side) >= n:
        raise PreconditionError(f"cut side {sorted(side)} is not a proper vertex subset")
    crossing_out = [a for a, arc in enumerate(H.arcs)
                    if arc.tail in side and arc.head not in side]
    crossing_in = [a for a, arc in enumerate(H.arcs)
                   if arc.head in side and arc.tail not in side]
    if crossing_out != [cut.out_arc] or crossing_in != [cut.in_arc]:
        raise PreconditionError(
            f"arcs ({cut.out_arc}, {cut.in_arc}) are not the boundary of {sorted(side)}"
        )


def minimal_one_out_set(H: Digraph) -> EdgeCut2 | None:
    """A smallest vertex set X with exactly one arc leaving it, or None
    when H is strongly 2-edge-connected.

    Ties are broken by the lexicographically smallest sorted vertex list,
    so the answer is deterministic.
    """
    best: tuple[int, tuple[int, ...]] | None = None
    best_cut: EdgeCut2 | None = None
    everything = frozenset(range(H.vertex_count))
    for cut in enumerate_2cuts(H):
        for side in (cut.side, everything - cut.side):
            key = (len(side), tuple(sorted(side)))
            if best is None or key < best:
                best = key
                best_cut = _classify_cut(H, (cut.out_arc, cut.in_arc), frozenset(side))
    return best_cut
