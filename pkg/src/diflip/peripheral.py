"""Peripheral cycles and the peripheral-cycle planar embedder.

A directed cycle C is peripheral when deleting its arcs (keeping all
vertices) leaves the digraph strongly connected. In any sphere embedding
every peripheral cycle bounds a face, and in a strongly 2-edge-connected
Eulerian digraph every arc lies on at least two peripheral cycles; the
embedder below turns those two facts into an algorithm: collect two
peripheral cycles per arc, and either they assemble into the unique
sphere embedding or the digraph has none.

The two cycles through an arc e = (u, v) are built constructively. The
first is e plus a directed v->u path P chosen by a local improvement
loop that lexicographically grows the component sizes of the digraph
minus (P and e); the second is e plus a path Q arc-disjoint from P,
improved under the modified objective that first grows the component
containing P. Each reroute moves the path through the smallest offending
component, which is always Eulerian and hence strongly connected. If the
loop ever stalls (no strict lexicographic gain) it falls back to
exhaustive path search and logs a warning; the test corpus is expected to
never trigger the fallback.
"""

from __future__ import annotations

import logging

from .connectivity import (
    enumerate_2cuts,
    is_strongly_connected,
    is_strongly_k_edge_connected,
    weak_components,
)
from .digraph import Digraph, validate
from .embedding import (
    FaceSet,
    RotationSystem,
    alternating_rotations,
    canonical_walk,
    euler_genus,
    faces_to_rotation,
    trace_faces,
)
from .errors import (
    InternalError,
    NotStronglyTwoEdgeConnectedError,
    PreconditionError,
)

log = logging.getLogger(__name__)


def is_directed_cycle(H: Digraph, arcs: tuple[int, ...]) -> bool:
    """Vertex-simple directed cycle test for a cyclic arc sequence."""
    if not arcs or len(set(arcs)) != len(arcs):
        return False
    if any(not 0 <= a < H.arc_count for a in arcs):
        return False
    k = len(arcs)
    if any(H.arcs[arcs[i]].head != H.arcs[arcs[(i + 1) % k]].tail for i in range(k)):
        return False
    tails = [H.arcs[a].tail for a in arcs]
    return len(set(tails)) == k


def is_peripheral(H: Digraph, cycle: tuple[int, ...]) -> bool:
    """True iff H minus the cycle's arcs (vertices kept) is strongly connected."""
    if not is_directed_cycle(H, cycle):
        raise PreconditionError(f"{cycle} is not a directed cycle of the digraph")
    return is_strongly_connected(H, without_arcs=cycle)


def directed_cycles(H: Digraph) -> tuple[tuple[int, ...], ...]:
    """All vertex-simple directed cycles, canonicalized and sorted.

    Exhaustive backtracking, meant for small instances.
    """
    found: set[tuple[int, ...]] = set()

    def extend(base: int, w: int, path: list[int], visited: set[int]) -> None:
        for a in H.out_arcs(w):
            h = H.arcs[a].head
            if h == base:
                found.add(canonical_walk(tuple(path) + (a,)))
            elif h > base and h not in visited:
                visited.add(h)
                path.append(a)
                extend(base, h, path, visited)
                path.pop()
                visited.remove(h)

    for s in range(H.vertex_count):
        extend(s, s, [], {s})
    return tuple(sorted(found))


def peripheral_cycles(H: Digraph) -> tuple[tuple[int, ...], ...]:
    """All peripheral cycles, by full cycle enumeration (small instances)."""
    return tuple(c for c in directed_cycles(H) if is_peripheral(H, c))


def _bfs_arc_path(
    H: Digraph, src: int, dst: int, banned: frozenset[int]
) -> tuple[int, ...] | None:
    """Shortest directed arc path src -> dst avoiding ``banned``; arcs are
    explored in ascending id order so the result is deterministic."""
    if src == dst:
        return ()
    prev: dict[int, tuple[int, int] | None] = {src: None}
    queue = [src]
    while queue:
        nxt: list[int] = []
        for w in queue:
            for a in H.out_arcs(w):
                if a in banned:
                    continue
                h = H.arcs[a].head
                if h in prev:
                    continue
                prev[h] = (w, a)
                if h == dst:
                    path: list[int] = []
                    cur = dst
                    while prev[cur] is not None:
                        w2, a2 = prev[cur]
                        path.append(a2)
                        cur = w2
                    return tuple(reversed(path))
                nxt.append(h)
        queue = nxt
    return None


def _all_simple_arc_paths(
    H: Digraph, src: int, dst: int, banned: frozenset[int]
) -> list[tuple[int, ...]]:
    paths: list[tuple[int, ...]] = []
    stack: list[int] = []
    visited = {src}

    def go(w: int) -> None:
        for a in H.out_arcs(w):
            if a in banned:
                continue
            h = H.arcs[a].head
            if h == dst:
                paths.append(tuple(stack) + (a,))
            elif h not in visited:
                visited.add(h)
                stack.append(a)
                go(h)
                stack.pop()
                visited.remove(h)

    if src != dst:
        go(src)
    return paths


def _path_vertices(H: Digraph, path: tuple[int, ...]) -> list[int]:
    verts = [H.arcs[path[0]].tail]
    verts += [H.arcs[a].head for a in path]
    return verts


def require_strongly_2ec(H: Digraph) -> None:
    """Raise with a violating 2-cut certificate unless H is strongly
    2-edge-connected."""
    if is_strongly_k_edge_connected(H, 2):
        return
    cuts = enumerate_2cuts(H)
    if not cuts:
        raise InternalError("connected Eulerian digraph lost strong connectivity without a 2-cut")
    raise NotStronglyTwoEdgeConnectedError(
        f"digraph is not strongly 2-edge-connected; witness cut "
        f"({cuts[0].out_arc}, {cuts[0].in_arc}) around {sorted(cuts[0].side)}",
        cut=cuts[0],
    )


def _component_profile(
    H: Digraph, deleted: frozenset[int], protected: int | None
) -> tuple:
    """Improvement objective: descending component sizes of H minus the
    deleted arcs; with ``protected`` set, the size of the component holding
    that vertex comes first and the rest follow."""
    comps = weak_components(H, without_arcs=deleted)
    if protected is None:
        return tuple(sorted((len(c) for c in comps), reverse=True))
    main = next(len(c) for c in comps if protected in c)
    rest = sorted((len(c) for c in comps if protected not in c), reverse=True)
    return (main, tuple(rest))


def _assert_eulerian_strong(H: Digraph, comp: tuple[int, ...], deleted: frozenset[int]) -> None:
    comp_set = set(comp)
    for w in comp:
        indeg = sum(1 for a in H.in_arcs(w) if a not in deleted)
        outdeg = sum(1 for a in H.out_arcs(w) if a not in deleted)
        if indeg != outdeg:
            raise InternalError(f"component {comp} is not Eulerian at vertex {w}")
    if len(comp) > 1:
        start = comp[0]
        seen = {start}
        queue = [start]
        while queue:
            w = queue.pop()
            for a in H.out_arcs(w):
                if a in deleted:
                    continue
                h = H.arcs[a].head
                if h in comp_set and h not in seen:
                    seen.add(h)
                    queue.append(h)
        if seen != comp_set:
            raise InternalError(f"Eulerian component {comp} is not strongly connected")


def _improve_path(
    H: Digraph,
    e: int,
    path: tuple[int, ...],
    protect_arcs: tuple[int, ...] | None,
) -> tuple[int, ...] | None:
    """One run of the lexicographic improvement loop; returns the improved
    path, or None if it stalled and the caller should fall back."""
    protected = H.arcs[protect_arcs[0]].tail if protect_arcs else None
    profile = _component_profile(H, frozenset(path) | {e}, protected)
    limit = (H.vertex_count + H.arc_count) ** 2 + 10
    for _ in range(limit):
        deleted = frozenset(path) | {e}
        comps = weak_components(H, without_arcs=deleted)
        if len(comps) == 1:
            return path
        if protected is None:
            candidates = list(comps)
        else:
            candidates = [c for c in comps if protected not in c]
        smallest = min(candidates, key=lambda c: (len(c), c))
        _assert_eulerian_strong(H, smallest, deleted)
        comp_set = set(smallest)
        verts = _path_vertices(H, path)
        hits = [i for i, w in enumerate(verts) if w in comp_set]
        if not hits:
            raise InternalError("component of the cycle complement misses the path")
        i0, i1 = hits[0], hits[-1]
        x, y = verts[i0], verts[i1]
        if any(w not in comp_set for w in verts[i0 + 1 : i1]):
            reroute = _bfs_arc_path(H, x, y, deleted)
            if reroute is None:
                raise InternalError("strongly connected component has no internal path")
            candidate = path[:i0] + reroute + path[i1:]
            new_profile = _component_profile(H, frozenset(candidate) | {e}, protected)
            if not new_profile > profile:
                log.warning(
                    "improvement stalled (%s -> %s); using exhaustive path search",
                    profile,
                    new_profile,
                )
                return None
            log.debug("component profile improved %s -> %s", profile, new_profile)
            path, profile = candidate, new_profile
        else:
            # the minimal subpath covering this component sits entirely
            # inside it, so two arcs separate it from the rest: that is a
            # 2-cut, which the precondition check already excluded
            raise InternalError(
                "derived a 2-edge-cut from a strongly 2-edge-connected digraph"
            )
    raise InternalError("improvement loop exceeded its iteration budget")


def _exhaustive_best_path(
    H: Digraph,
    e: int,
    banned: frozenset[int],
    protect_arcs: tuple[int, ...] | None,
) -> tuple[int, ...]:
    u, v = H.arcs[e]
    protected = H.arcs[protect_arcs[0]].tail if protect_arcs else None
    candidates = _all_simple_arc_paths(H, v, u, banned)
    if not candidates:
        raise InternalError("no candidate path despite strong 2-edge-connectivity")
    best_profile = max(
        _component_profile(H, frozenset(p) | {e}, protected) for p in candidates
    )
    return min(
        p
        for p in candidates
        if _component_profile(H, frozenset(p) | {e}, protected) == best_profile
    )


def two_peripheral_cycles(
    H: Digraph, e: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two distinct peripheral cycles through arc e, sharing only e.

    Needs a connected Eulerian digraph that is strongly 2-edge-connected,
    and a non-loop arc (the only directed cycle through a loop is its own
    monogon, so no second cycle can exist).
    """
    if not 0 <= e < H.arc_count:
        raise PreconditionError(f"arc id {e} out of range")
    report = validate(H)
    if not (report.is_eulerian and report.is_connected):
        raise PreconditionError("peripheral cycle search needs a connected Eulerian digraph")
    if H.arcs[e].is_loop:
        raise PreconditionError(
            f"arc {e} is a loop; a loop lies on exactly one directed cycle"
        )
    require_strongly_2ec(H)
    u, v = H.arcs[e]

    start = _bfs_arc_path(H, v, u, frozenset((e,)))
    if start is None:
        raise InternalError("strongly 2-edge-connected digraph lost a return path")
    path = _improve_path(H, e, start, None)
    if path is None:
        path = _exhaustive_best_path(H, e, frozenset((e,)), None)
    first = canonical_walk((e,) + path)

    banned = frozenset(path) | {e}
    start_q = _bfs_arc_path(H, v, u, banned)
    if start_q is None:
        raise InternalError("peripheral first cycle left no arc-disjoint return path")
    path_q = _improve_path(H, e, start_q, path)
    if path_q is None:
        path_q = _exhaustive_best_path(H, e, banned, path)
    second = canonical_walk((e,) + path_q)

    for cycle in (first, second):
        if e not in cycle or not is_peripheral(H, cycle):
            raise InternalError(f"constructed cycle {cycle} is not peripheral through {e}")
    if first == second:
        raise InternalError("the two constructed peripheral cycles coincide")
    return first, second


def peripheral_embedder(H: Digraph) -> tuple[RotationSystem, FaceSet] | None:
    """Sphere embedding of a strongly 2-edge-connected 2-regular digraph
    assembled from peripheral cycles, or None when it has none.

    Peripheral cycles must bound faces, so collecting two per arc either
    yields exactly V + 2 candidates covering every arc twice (the faces of
    the unique sphere embedding) or proves there is no sphere embedding.
    """
    report = validate(H)
    if not (report.is_2regular and report.is_connected):
        raise PreconditionError("the embedder needs a connected 2-regular digraph")
    require_strongly_2ec(H)
    if H.vertex_count == 1:
        # two loops at one vertex: both alternating systems are mirror
        # images and always embed in the sphere
        rho = RotationSystem((alternating_rotations(H, 0)[0],))
        faces = trace_faces(H, rho)
        if euler_genus(H, rho) != 0:
            raise InternalError("one-vertex 2-regular digraph failed to embed")
        return rho, faces

    candidates: set[tuple[int, ...]] = set()
    for e in range(H.arc_count):
        c1, c2 = two_peripheral_cycles(H, e)
        candidates.add(c1)
        candidates.add(c2)
    if len(candidates) != H.vertex_count + 2:
        return None
    counts: dict[int, int] = {}
    for walk in candidates:
        for a in walk:
            counts[a] = counts.get(a, 0) + 1
    if any(counts.get(a, 0) != 2 for a in range(H.arc_count)):
        return None
    faces = FaceSet(tuple(candidates))
    rho = faces_to_rotation(H, faces)
    if rho is None:
        return None
    if euler_genus(H, rho) != 0:
        return None
    return rho, faces
