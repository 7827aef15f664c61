"""Immersion containment and planarity with certificates.

A small target digraph is immersed in a host when an injective branch
map sends target vertices to host vertices and every target arc is
realized by a directed host path between the mapped endpoints, all paths
pairwise arc-disjoint. The doubled directed triangle is the unique
obstruction to sphere embeddability of a 2-regular digraph, so
:func:`planar_or_obstruction` always produces either a genus-0 rotation
system or an immersion certificate for it, and runs both searches so the
two answers cross-check each other on every call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .connectivity import is_strongly_k_edge_connected, minimal_one_out_set
from .digraph import Digraph, medial_fixture, validate
from .embedding import RotationSystem, euler_genus, validate_rotation
from .errors import InternalError, PreconditionError
from .peripheral import peripheral_embedder
from .whitney import contract_at_cut, splice_rotation

_MAX_TARGET_VERTICES = 4
_MAX_TARGET_ARCS = 8


@dataclass(frozen=True)
class ImmersionCertificate:
    """Witness that a target digraph is immersed in a host.

    ``branch_map[x]`` is the host vertex carrying target vertex x;
    ``paths[t]`` is the directed host arc path realizing target arc t.
    The certificate is verifiable without re-running the search.
    """

    branch_map: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def verify_immersion(H: Digraph, T: Digraph, cert: ImmersionCertificate) -> bool:
    """Independent certificate check: injectivity, path validity,
    endpoint agreement, and pairwise arc-disjointness."""
    if len(cert.branch_map) != T.vertex_count or len(cert.paths) != T.arc_count:
        return False
    if len(set(cert.branch_map)) != T.vertex_count:
        return False
    if any(not 0 <= w < H.vertex_count for w in cert.branch_map):
        return False
    used: set[int] = set()
    for t, path in enumerate(cert.paths):
        src = cert.branch_map[T.arcs[t].tail]
        dst = cert.branch_map[T.arcs[t].head]
        if not path:
            return False
        at = src
        for a in path:
            if not 0 <= a < H.arc_count or a in used:
                return False
            if H.arcs[a].tail != at:
                return False
            used.add(a)
            at = H.arcs[a].head
        if at != dst:
            return False
    return True


def _paths_between(
    H: Digraph, src: int, dst: int, used: set[int]
) -> list[tuple[int, ...]]:
    """Candidate realizations of one target arc: vertex-simple directed
    paths (or, for a loop target, simple cycles through src), shortest
    first, then lexicographic."""
    results: list[tuple[int, ...]] = []
    if src == dst:
        for a in H.out_arcs(src):
            if a in used:
                continue
            h = H.arcs[a].head
            if h == src:
                results.append((a,))
            else:
                for tail in _simple_paths(H, h, src, used | {a}):
                    results.append((a,) + tail)
    else:
        results = _simple_paths(H, src, dst, used)
    results.sort(key=lambda p: (len(p), p))
    return results


def _simple_paths(H: Digraph, src: int, dst: int, used: set[int]) -> list[tuple[int, ...]]:
    paths: list[tuple[int, ...]] = []
    stack: list[int] = []
    visited = {src}

    def go(w: int) -> None:
        for a in H.out_arcs(w):
            if a in used:
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

    go(src)
    return paths


def immerses(H: Digraph, T: Digraph) -> ImmersionCertificate | None:
    """Search for an immersion of T in H; None when there is none.

    Backtracks over injective branch maps (ordered by vertex-id sum, then
    lexicographically) and over arc-disjoint path systems (shortest
    candidates first), returning the first certificate found.
    """
    if T.vertex_count > _MAX_TARGET_VERTICES or T.arc_count > _MAX_TARGET_ARCS:
        raise PreconditionError(
            f"target too large: at most {_MAX_TARGET_VERTICES} vertices "
            f"and {_MAX_TARGET_ARCS} arcs"
        )
    if T.vertex_count > H.vertex_count:
        return None

    branch_maps = sorted(
        itertools.permutations(range(H.vertex_count), T.vertex_count),
        key=lambda bm: (sum(bm), bm),
    )
    order = sorted(range(T.arc_count))

    for bm in branch_maps:
        if any(
            H.outdegree(bm[x]) < T.outdegree(x) or H.indegree(bm[x]) < T.indegree(x)
            for x in range(T.vertex_count)
        ):
            continue

        paths: dict[int, tuple[int, ...]] = {}
        used: set[int] = set()

        def place(i: int) -> bool:
            if i == len(order):
                return True
            t = order[i]
            src, dst = bm[T.arcs[t].tail], bm[T.arcs[t].head]
            for path in _paths_between(H, src, dst, used):
                paths[t] = path
                used.update(path)
                if place(i + 1):
                    return True
                used.difference_update(path)
                del paths[t]
            return False

        if place(0):
            cert = ImmersionCertificate(bm, tuple(paths[t] for t in range(T.arc_count)))
            if not verify_immersion(H, T, cert):
                raise InternalError("search produced an unverifiable immersion certificate")
            return cert
    return None


@dataclass(frozen=True)
class PlanarityResult:
    is_planar: bool
    rotation: RotationSystem | None
    obstruction: ImmersionCertificate | None


def _embed_recursive(H: Digraph) -> RotationSystem | None:
    if is_strongly_k_edge_connected(H, 2):
        embedded = peripheral_embedder(H)
        return None if embedded is None else embedded[0]
    cut = minimal_one_out_set(H)
    if cut is None:
        raise InternalError("no 2-cut in a digraph that is not strongly 2-edge-connected")
    pair = contract_at_cut(H, cut)
    inner = _embed_recursive(pair.inner)
    if inner is None:
        return None
    outer = _embed_recursive(pair.outer)
    if outer is None:
        return None
    rho = splice_rotation(pair, inner, outer)
    if not validate_rotation(H, rho) or euler_genus(H, rho) != 0:
        raise InternalError("splicing sphere embeddings did not give a sphere embedding")
    return rho


def planar_or_obstruction(H: Digraph) -> PlanarityResult:
    """Sphere embedding or doubled-triangle immersion certificate.

    Strongly 2-edge-connected digraphs go straight to the peripheral
    embedder; otherwise the digraph is cut at a minimal one-out side, the
    two contractions are embedded recursively, and the rotations are
    spliced back together at the cut. The obstruction search runs
    unconditionally as well: exactly one of the two must succeed, and a
    disagreement is reported as an internal error rather than an answer.
    """
    report = validate(H)
    if not (report.is_connected and report.is_2regular):
        raise PreconditionError("planarity needs a connected 2-regular digraph")
    rho = _embed_recursive(H)
    cert = immerses(H, medial_fixture("C3x2"))
    if (rho is None) == (cert is None):
        raise InternalError(
            "embedding search and obstruction search agreed on both or neither"
        )
    return PlanarityResult(is_planar=rho is not None, rotation=rho, obstruction=cert)
