"""Alternating rotation systems and the combinatorics of directed faces.

An embedding of an Eulerian digraph is stored as a rotation system: a
cyclic order of the incident arc-ends at each vertex in which in-ends
and out-ends alternate. Faces are the orbits of the next-end map (arrive
at an end, take its rotation successor, traverse that arc away from the
vertex). Alternation forces every orbit to traverse its arcs uniformly
forward or uniformly backward; backward orbits are reversed, so every
facial walk comes out directed and two embeddings are equivalent exactly
when their face multisets are equal. The orientable surface itself never
appears: the Euler genus computed from the face count stands in for it.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .connectivity import weak_components
from .digraph import HEAD, TAIL, ArcEnd, Digraph, validate
from .errors import InternalError, PreconditionError, StructuralError


def canonical_walk(arcs: Iterator[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative of a cyclic arc sequence: the rotation
    starting at the smallest arc id, ties broken lexicographically."""
    t = tuple(arcs)
    if not t:
        return t
    m = min(t)
    return min(t[i:] + t[:i] for i, a in enumerate(t) if a == m)


def _min_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic orders of incident arc-ends.

    Each vertex's cycle is stored rotated to start at its smallest end,
    so structural equality coincides with cyclic equality.
    """

    rotations: tuple[tuple[ArcEnd, ...], ...]

    def __post_init__(self):
        canon = tuple(
            _min_rotation(tuple(ArcEnd(*e) for e in rot)) for rot in self.rotations
        )
        object.__setattr__(self, "rotations", canon)

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    def at(self, v: int) -> tuple[ArcEnd, ...]:
        return self.rotations[v]

    def mirror(self) -> "RotationSystem":
        """Reverse every vertex's cyclic order."""
        return RotationSystem(tuple(tuple(reversed(r)) for r in self.rotations))


@dataclass(frozen=True)
class FaceSet:
    """Multiset of directed facial walks, canonicalized and sorted."""

    walks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        walks = tuple(sorted(canonical_walk(w) for w in self.walks))
        if any(not w for w in walks):
            raise StructuralError("facial walks must be nonempty")
        object.__setattr__(self, "walks", walks)

    def __len__(self) -> int:
        return len(self.walks)

    def __iter__(self):
        return iter(self.walks)

    def arc_multiset(self) -> Counter:
        return Counter(a for w in self.walks for a in w)


def equivalent(f1: FaceSet, f2: FaceSet) -> bool:
    """Embedding equivalence: equality of the facial-walk multisets."""
    return f1.walks == f2.walks


def validate_rotation(H: Digraph, rho: RotationSystem) -> bool:
    """True iff in-ends and out-ends alternate at every vertex.

    Raises when the system does not cover exactly the ends of H, since
    that is a structural defect rather than a failed predicate.
    """
    if rho.vertex_count != H.vertex_count:
        raise StructuralError(
            f"rotation covers {rho.vertex_count} vertices, digraph has {H.vertex_count}"
        )
    for v in range(H.vertex_count):
        rot = rho.at(v)
        expected = H.ends_at(v)
        if len(rot) != len(expected) or set(rot) != set(expected):
            raise StructuralError(f"rotation at vertex {v} does not cover its arc-ends")
    for v in range(H.vertex_count):
        rot = rho.at(v)
        k = len(rot)
        if any(rot[i].is_in == rot[(i + 1) % k].is_in for i in range(k)):
            return False
    return True


def _require_valid(H: Digraph, rho: RotationSystem) -> None:
    if not validate_rotation(H, rho):
        raise PreconditionError("rotation system is not alternating")


def _opposite(end: ArcEnd) -> ArcEnd:
    return ArcEnd(end.arc, HEAD if end.side == TAIL else TAIL)


def trace_faces(H: Digraph, rho: RotationSystem) -> FaceSet:
    """Directed facial walks of an alternating rotation system.

    Orbits of arrivals at head-ends walk their arcs forward; orbits of
    arrivals at tail-ends walk them backward and are reversed before
    inclusion. Every arc appears exactly twice in the result, once from
    each kind of orbit.
    """
    _require_valid(H, rho)
    succ: dict[ArcEnd, ArcEnd] = {}
    for rot in rho.rotations:
        k = len(rot)
        for i, end in enumerate(rot):
            succ[end] = rot[(i + 1) % k]
    walks: list[tuple[int, ...]] = []
    visited: set[ArcEnd] = set()
    for a in range(H.arc_count):
        for side in (HEAD, TAIL):
            start = ArcEnd(a, side)
            if start in visited:
                continue
            forward = start.side == HEAD
            cur = start
            arcs: list[int] = []
            while cur not in visited:
                visited.add(cur)
                if (cur.side == HEAD) != forward:
                    raise InternalError("face orbit mixes forward and backward arrivals")
                nxt = succ[cur]
                arcs.append(nxt.arc)
                cur = _opposite(nxt)
            walks.append(tuple(arcs) if forward else tuple(reversed(arcs)))
    faces = FaceSet(tuple(walks))
    if any(c != 2 for c in faces.arc_multiset().values()):
        raise InternalError("face trace did not cover every arc exactly twice")
    return faces


def euler_genus(H: Digraph, rho: RotationSystem) -> int:
    """Orientable genus g with V - E + F = 2 - 2g; needs a connected digraph."""
    if H.vertex_count == 0 or len(weak_components(H)) != 1:
        raise PreconditionError("Euler genus is defined for connected digraphs only")
    F = len(trace_faces(H, rho))
    value = 2 - H.vertex_count + H.arc_count - F
    if value % 2 or value < 0:
        raise InternalError(f"impossible Euler count V-E+F gave 2-2g = {2 - value}")
    return value // 2


def alternating_rotations(H: Digraph, v: int) -> tuple[tuple[ArcEnd, ...], ...]:
    """All alternating cyclic orders of the ends at ``v``, as tuples fixed
    to start at the smallest in-end. A degree-(2,2) vertex has exactly two."""
    ends = H.ends_at(v)
    ins = sorted(e for e in ends if e.is_in)
    outs = sorted(e for e in ends if e.is_out)
    if len(ins) != len(outs):
        raise PreconditionError(f"vertex {v} is not balanced; no alternating order exists")
    if not ins:
        return ((),)
    first, rest = ins[0], ins[1:]
    result = []
    for rest_perm in itertools.permutations(rest):
        in_seq = (first,) + rest_perm
        for out_perm in itertools.permutations(outs):
            seq: list[ArcEnd] = []
            for i, o in zip(in_seq, out_perm):
                seq.append(i)
                seq.append(o)
            result.append(tuple(seq))
    return tuple(result)


def all_rotation_systems(H: Digraph) -> Iterator[RotationSystem]:
    """Every alternating rotation system of H, in deterministic order."""
    per_vertex = [alternating_rotations(H, v) for v in range(H.vertex_count)]
    for combo in itertools.product(*per_vertex):
        yield RotationSystem(combo)


class EmbeddingClass(NamedTuple):
    faces: FaceSet
    genus: int
    count: int


def enumerate_embeddings(H: Digraph, bound: int = 12) -> tuple[EmbeddingClass, ...]:
    """Group all alternating rotation systems by face-set equivalence.

    This is the exhaustive oracle the rest of the library is tested
    against; it iterates 2^V systems for a 2-regular digraph, so the
    vertex count is guarded by ``bound``.
    """
    report = validate(H)
    if not (report.is_connected and report.is_2regular):
        raise PreconditionError("embedding enumeration needs a connected 2-regular digraph")
    if H.vertex_count > bound:
        raise PreconditionError(
            f"{H.vertex_count} vertices exceeds the enumeration bound {bound}"
        )
    classes: dict[FaceSet, list[int]] = {}
    for rho in all_rotation_systems(H):
        faces = trace_faces(H, rho)
        entry = classes.setdefault(faces, [euler_genus(H, rho), 0])
        entry[1] += 1
    result = [EmbeddingClass(f, g, c) for f, (g, c) in classes.items()]
    result.sort(key=lambda ec: (ec.genus, ec.faces.walks))
    return tuple(result)


def _check_faces(H: Digraph, faces: FaceSet) -> None:
    counts = faces.arc_multiset()
    if set(counts) != set(range(H.arc_count)) or any(c != 2 for c in counts.values()):
        raise StructuralError("face multiset must contain every arc exactly twice")
    for walk in faces:
        k = len(walk)
        for i in range(k):
            if H.arcs[walk[i]].head != H.arcs[walk[(i + 1) % k]].tail:
                raise StructuralError(f"walk {walk} is not a directed closed walk")


def faces_to_rotation(H: Digraph, faces: FaceSet) -> RotationSystem | None:
    """Reconstruct a rotation system whose trace is ``faces``, or None.

    Two faces sharing an arc must have traversed it in opposite
    directions, so the face-adjacency structure is 2-colored into
    forward/backward faces; the corners of the colored walks then dictate
    each vertex's rotation, and the candidate is verified by re-tracing.
    Any contradiction along the way means no rotation system realizes the
    multiset.
    """
    _check_faces(H, faces)
    occurrences: dict[int, list[int]] = defaultdict(list)
    for fi, walk in enumerate(faces):
        for a in walk:
            occurrences[a].append(fi)
    adjacency: dict[int, list[int]] = defaultdict(list)
    for a, (f1, f2) in occurrences.items():
        if f1 == f2:
            return None  # one face would need to run both ways over this arc
        adjacency[f1].append(f2)
        adjacency[f2].append(f1)
    color: dict[int, bool] = {}
    for start in range(len(faces.walks)):
        if start in color:
            continue
        color[start] = True
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g in adjacency[f]:
                if g not in color:
                    color[g] = not color[f]
                    queue.append(g)
                elif color[g] == color[f]:
                    return None

    succ: dict[ArcEnd, ArcEnd] = {}
    for fi, walk in enumerate(faces):
        k = len(walk)
        for i in range(k):
            a, b = walk[i], walk[(i + 1) % k]
            if color[fi]:
                key, val = ArcEnd(a, HEAD), ArcEnd(b, TAIL)
            else:
                key, val = ArcEnd(b, TAIL), ArcEnd(a, HEAD)
            if key in succ:
                return None
            succ[key] = val

    rotations: list[tuple[ArcEnd, ...]] = []
    for v in range(H.vertex_count):
        ends = set(H.ends_at(v))
        if not ends:
            rotations.append(())
            continue
        start = min(ends)
        cycle = [start]
        cur = succ.get(start)
        while cur is not None and cur != start and len(cycle) <= len(ends):
            if cur not in ends:
                return None
            cycle.append(cur)
            cur = succ.get(cur)
        if cur != start or len(cycle) != len(ends):
            return None  # corners at v split into several cycles
        rotations.append(tuple(cycle))

    rho = RotationSystem(tuple(rotations))
    if not validate_rotation(H, rho):
        return None
    if not equivalent(trace_faces(H, rho), faces):
        return None
    return rho
