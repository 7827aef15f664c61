"""Combinatorial Whitney flips and flip-sequence synthesis.

A Whitney flip re-embeds one side of a 2-edge-cut mirror-reversed. In
rotation-system terms that is simply: reverse the cyclic order at every
vertex on one side of the cut. Flipping a side or its complement yields
equivalent face sets, so emitted moves are normalized to the side not
containing vertex 0.

Flip sequences between two sphere embeddings are synthesized by
induction: contract a minimal one-out side X to a single shortcut arc,
recurse on the outside piece, lift the returned moves back (cuts that use
the bridge arc are re-expressed through the original cut arc entering X,
absorbing X into the flipped side), and finish with at most one flip of X
itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import (
    EdgeCut2,
    check_cut,
    is_strongly_k_edge_connected,
    minimal_one_out_set,
)
from .digraph import HEAD, TAIL, Arc, ArcEnd, Digraph, validate
from .embedding import (
    RotationSystem,
    equivalent,
    euler_genus,
    trace_faces,
    validate_rotation,
)
from .errors import InternalError, PreconditionError


@dataclass(frozen=True)
class FlipMove:
    """A Whitney flip: reverse all rotations on ``cut.side``.

    The degenerate disc meeting a single edge twice is never represented;
    it fixes every face set, so no synthesized sequence needs it.
    """

    cut: EdgeCut2


def canonical_move(H: Digraph, out_arc: int, in_arc: int, side) -> FlipMove:
    """Build a move normalized to the side not containing vertex 0."""
    side = frozenset(side)
    if 0 in side:
        side = frozenset(range(H.vertex_count)) - side
        out_arc, in_arc = in_arc, out_arc
    cut = EdgeCut2(out_arc, in_arc, side)
    check_cut(H, cut)
    return FlipMove(cut)


def whitney_flip(H: Digraph, rho: RotationSystem, move: FlipMove) -> RotationSystem:
    """Reverse the rotation at every vertex of the flipped side."""
    check_cut(H, move.cut)
    if not validate_rotation(H, rho):
        raise PreconditionError("rotation system is not alternating")
    side = move.cut.side
    return RotationSystem(
        tuple(
            tuple(reversed(rho.at(v))) if v in side else rho.at(v)
            for v in range(H.vertex_count)
        )
    )


def apply_moves(H: Digraph, rho: RotationSystem, moves) -> RotationSystem:
    for move in moves:
        rho = whitney_flip(H, rho, move)
    return rho


@dataclass(frozen=True)
class ContractionPair:
    """The two digraphs obtained by contracting each side of a 2-cut.

    ``inner`` keeps the cut side X plus a shortcut arc u->v standing in
    for the outside journey; ``outer`` keeps the complement plus a bridge
    arc a->b standing in for the passage through X. Arc id maps tie every
    piece arc back to its host arc (None marks the new arc).
    """

    cut: EdgeCut2
    inner: Digraph
    outer: Digraph
    inner_vertex: dict[int, int]
    outer_vertex: dict[int, int]
    inner_arc_host: tuple[int | None, ...]
    outer_arc_host: tuple[int | None, ...]

    @property
    def inner_new_arc(self) -> int:
        return len(self.inner_arc_host) - 1

    @property
    def outer_new_arc(self) -> int:
        return len(self.outer_arc_host) - 1


def contract_at_cut(H: Digraph, cut: EdgeCut2) -> ContractionPair:
    check_cut(H, cut)
    u = H.arcs[cut.out_arc].tail
    b = H.arcs[cut.out_arc].head
    a = H.arcs[cut.in_arc].tail
    v = H.arcs[cut.in_arc].head

    xs = sorted(cut.side)
    ys = sorted(set(range(H.vertex_count)) - cut.side)
    inner_vertex = {w: i for i, w in enumerate(xs)}
    outer_vertex = {w: i for i, w in enumerate(ys)}

    inner_arcs: list[Arc] = []
    inner_host: list[int | None] = []
    outer_arcs: list[Arc] = []
    outer_host: list[int | None] = []
    for i, arc in enumerate(H.arcs):
        if i in (cut.out_arc, cut.in_arc):
            continue
        if arc.tail in cut.side:
            inner_arcs.append(Arc(inner_vertex[arc.tail], inner_vertex[arc.head]))
            inner_host.append(i)
        else:
            outer_arcs.append(Arc(outer_vertex[arc.tail], outer_vertex[arc.head]))
            outer_host.append(i)
    inner_arcs.append(Arc(inner_vertex[u], inner_vertex[v]))
    inner_host.append(None)
    outer_arcs.append(Arc(outer_vertex[a], outer_vertex[b]))
    outer_host.append(None)

    return ContractionPair(
        cut=cut,
        inner=Digraph(len(xs), tuple(inner_arcs)),
        outer=Digraph(len(ys), tuple(outer_arcs)),
        inner_vertex=inner_vertex,
        outer_vertex=outer_vertex,
        inner_arc_host=tuple(inner_host),
        outer_arc_host=tuple(outer_host),
    )


def _piece_rotation(
    rho: RotationSystem,
    vertex_map: dict[int, int],
    arc_to_piece: dict[int, int],
    substitutions: dict[ArcEnd, ArcEnd],
) -> RotationSystem:
    rotations: list[tuple[ArcEnd, ...]] = [()] * len(vertex_map)
    for host_v, piece_v in vertex_map.items():
        converted = []
        for end in rho.at(host_v):
            if end in substitutions:
                converted.append(substitutions[end])
            else:
                converted.append(ArcEnd(arc_to_piece[end.arc], end.side))
        rotations[piece_v] = tuple(converted)
    return RotationSystem(tuple(rotations))


def induce_rotation(
    pair: ContractionPair, rho: RotationSystem
) -> tuple[RotationSystem, RotationSystem]:
    """Rotations the host system induces on the two contraction pieces:
    the new arcs' ends take the places of the old cut-arc ends."""
    cut = pair.cut
    inner_map = {h: i for i, h in enumerate(pair.inner_arc_host) if h is not None}
    outer_map = {h: i for i, h in enumerate(pair.outer_arc_host) if h is not None}
    inner = _piece_rotation(
        rho,
        pair.inner_vertex,
        inner_map,
        {
            ArcEnd(cut.out_arc, TAIL): ArcEnd(pair.inner_new_arc, TAIL),
            ArcEnd(cut.in_arc, HEAD): ArcEnd(pair.inner_new_arc, HEAD),
        },
    )
    outer = _piece_rotation(
        rho,
        pair.outer_vertex,
        outer_map,
        {
            ArcEnd(cut.in_arc, TAIL): ArcEnd(pair.outer_new_arc, TAIL),
            ArcEnd(cut.out_arc, HEAD): ArcEnd(pair.outer_new_arc, HEAD),
        },
    )
    return inner, outer


def splice_rotation(
    pair: ContractionPair, inner_rho: RotationSystem, outer_rho: RotationSystem
) -> RotationSystem:
    """Inverse of :func:`induce_rotation`: reassemble a host rotation
    system from rotations of the two pieces."""
    cut = pair.cut
    n = len(pair.inner_vertex) + len(pair.outer_vertex)
    rotations: list[tuple[ArcEnd, ...]] = [()] * n
    inner_subs = {
        ArcEnd(pair.inner_new_arc, TAIL): ArcEnd(cut.out_arc, TAIL),
        ArcEnd(pair.inner_new_arc, HEAD): ArcEnd(cut.in_arc, HEAD),
    }
    outer_subs = {
        ArcEnd(pair.outer_new_arc, TAIL): ArcEnd(cut.in_arc, TAIL),
        ArcEnd(pair.outer_new_arc, HEAD): ArcEnd(cut.out_arc, HEAD),
    }
    for host_v, piece_v in pair.inner_vertex.items():
        rotations[host_v] = tuple(
            inner_subs.get(end, ArcEnd(pair.inner_arc_host[end.arc], end.side))
            for end in inner_rho.at(piece_v)
        )
    for host_v, piece_v in pair.outer_vertex.items():
        rotations[host_v] = tuple(
            outer_subs.get(end, ArcEnd(pair.outer_arc_host[end.arc], end.side))
            for end in outer_rho.at(piece_v)
        )
    return RotationSystem(tuple(rotations))


def _lift_move(H: Digraph, pair: ContractionPair, move: FlipMove) -> FlipMove:
    """Re-express a flip of the outer piece as a flip of the host."""
    oc = move.cut
    bridge = pair.outer_new_arc
    host_of = {i: w for w, i in pair.outer_vertex.items()}
    outer_vertices = set(pair.outer_vertex)
    a_host = H.arcs[pair.cut.in_arc].tail
    b_host = H.arcs[pair.cut.out_arc].head

    if oc.out_arc != bridge and oc.in_arc != bridge:
        out_h = pair.outer_arc_host[oc.out_arc]
        in_h = pair.outer_arc_host[oc.in_arc]
        side_host = {host_of[y] for y in oc.side}
        if a_host in side_host or b_host in side_host:
            # keep the contracted side with the bridge endpoints
            side_host = outer_vertices - side_host
            out_h, in_h = in_h, out_h
        return canonical_move(H, out_h, in_h, side_host)

    other = oc.in_arc if oc.out_arc == bridge else oc.out_arc
    f_host = pair.outer_arc_host[other]
    b_piece = pair.outer_vertex[b_host]
    piece_side = oc.side if b_piece in oc.side else frozenset(range(pair.outer.vertex_count)) - oc.side
    side_host = {host_of[y] for y in piece_side} | set(pair.cut.side)
    boundary = []
    for cand in (pair.cut.in_arc, f_host):
        tail_in = H.arcs[cand].tail in side_host
        head_in = H.arcs[cand].head in side_host
        if tail_in == head_in:
            raise InternalError(f"lifted arc {cand} does not cross the lifted side")
        boundary.append((cand, tail_in))
    outs = [c for c, tail_in in boundary if tail_in]
    ins = [c for c, tail_in in boundary if not tail_in]
    if len(outs) != 1 or len(ins) != 1:
        raise InternalError("lifted cut is not oriented one-in-one-out")
    return canonical_move(H, outs[0], ins[0], side_host)


def flip_sequence(
    H: Digraph, rho1: RotationSystem, rho2: RotationSystem
) -> list[FlipMove]:
    """Whitney flips turning the first sphere embedding into one
    equivalent to the second.

    Implements the inductive argument directly: if the digraph is
    strongly 2-edge-connected the embeddings are already equivalent;
    otherwise contract a minimal one-out side X, solve the outside piece,
    lift its moves, and fix the orientation of X with one final flip if
    needed. The move list is at most one per contraction level, hence at
    most the vertex count.
    """
    report = validate(H)
    if not (report.is_connected and report.is_2regular):
        raise PreconditionError("flip synthesis needs a connected 2-regular digraph")
    if euler_genus(H, rho1) != 0 or euler_genus(H, rho2) != 0:
        raise PreconditionError("flip sequences connect sphere embeddings only")
    target = trace_faces(H, rho2)
    if equivalent(trace_faces(H, rho1), target):
        return []
    if is_strongly_k_edge_connected(H, 2):
        raise InternalError(
            "two inequivalent sphere embeddings of a strongly 2-edge-connected digraph"
        )
    cut = minimal_one_out_set(H)
    if cut is None:
        raise InternalError("no 2-cut in a digraph that is not strongly 2-edge-connected")
    pair = contract_at_cut(H, cut)
    _, outer1 = induce_rotation(pair, rho1)
    _, outer2 = induce_rotation(pair, rho2)
    moves = [_lift_move(H, pair, mv) for mv in flip_sequence(pair.outer, outer1, outer2)]
    current = apply_moves(H, rho1, moves)
    if not equivalent(trace_faces(H, current), target):
        final = canonical_move(H, cut.out_arc, cut.in_arc, cut.side)
        current = whitney_flip(H, current, final)
        moves.append(final)
        if not equivalent(trace_faces(H, current), target):
            raise InternalError("flip sequence failed to reach the target embedding")
    if len(moves) > H.vertex_count:
        raise InternalError(f"flip sequence of length {len(moves)} exceeds the vertex count")
    return moves
