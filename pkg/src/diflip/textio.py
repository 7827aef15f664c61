"""Line-based text formats shared by the library and the CLI.

Digraphs:   ``v <count>`` then one ``a <id> <tail> <head>`` line per arc,
            ids consecutive from 0.
Rotations:  one ``rot <vertex> <end>...`` line per vertex, ends like
            ``3h``/``0t`` in cyclic order.
Face sets:  one ``face <arcid>...`` line per face, canonical rotation,
            sorted.
Moves:      one ``flip <out_arc> <in_arc> X=<v1,v2,...>`` line per flip.

``#`` starts a comment in every format, and parse(serialize(x)) == x.
"""

from __future__ import annotations

import re

from .connectivity import EdgeCut2
from .digraph import Arc, ArcEnd, Digraph
from .embedding import FaceSet, RotationSystem
from .errors import FormatError
from .whitney import FlipMove

_END_RE = re.compile(r"^(\d+)([ht])$")


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    return lines


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: expected {what}, got {token!r}") from None


def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    if not lines or lines[0][1][0] != "v":
        raise FormatError("line 1: digraph input must start with a 'v <count>' line")
    lineno, header = lines[0]
    if len(header) != 2:
        raise FormatError(f"line {lineno}: expected 'v <count>'")
    n = _int(header[1], lineno, "a vertex count")
    arcs: list[Arc] = []
    for lineno, tokens in lines[1:]:
        if tokens[0] != "a" or len(tokens) != 4:
            raise FormatError(f"line {lineno}: expected 'a <id> <tail> <head>'")
        aid = _int(tokens[1], lineno, "an arc id")
        if aid != len(arcs):
            raise FormatError(f"line {lineno}: arc id {aid}, expected {len(arcs)}")
        tail = _int(tokens[2], lineno, "a tail vertex")
        head = _int(tokens[3], lineno, "a head vertex")
        if not (0 <= tail < n and 0 <= head < n):
            raise FormatError(f"line {lineno}: arc {aid} endpoints out of range")
        arcs.append(Arc(tail, head))
    return Digraph(n, tuple(arcs))


def serialize_digraph(H: Digraph) -> str:
    lines = [f"v {H.vertex_count}"]
    lines += [f"a {i} {arc.tail} {arc.head}" for i, arc in enumerate(H.arcs)]
    return "\n".join(lines) + "\n"


def _parse_end(token: str, lineno: int) -> ArcEnd:
    m = _END_RE.match(token)
    if not m:
        raise FormatError(f"line {lineno}: bad arc-end token {token!r}")
    return ArcEnd(int(m.group(1)), m.group(2))


def parse_rotation(text: str) -> RotationSystem:
    lines = _content_lines(text)
    seen: dict[int, tuple[ArcEnd, ...]] = {}
    for lineno, tokens in lines:
        if tokens[0] != "rot" or len(tokens) < 2:
            raise FormatError(f"line {lineno}: expected 'rot <vertex> <end>...'")
        v = _int(tokens[1], lineno, "a vertex id")
        if v in seen:
            raise FormatError(f"line {lineno}: duplicate rotation for vertex {v}")
        seen[v] = tuple(_parse_end(t, lineno) for t in tokens[2:])
    if sorted(seen) != list(range(len(seen))):
        raise FormatError("rotation lines must cover vertices 0..n-1 exactly once")
    return RotationSystem(tuple(seen[v] for v in range(len(seen))))


def serialize_rotation(rho: RotationSystem) -> str:
    lines = []
    for v, rot in enumerate(rho.rotations):
        lines.append(" ".join(["rot", str(v)] + [e.token() for e in rot]).rstrip())
    return "\n".join(lines) + "\n"


def parse_faces(text: str) -> FaceSet:
    walks = []
    for lineno, tokens in _content_lines(text):
        if tokens[0] != "face" or len(tokens) < 2:
            raise FormatError(f"line {lineno}: expected 'face <arcid>...'")
        walks.append(tuple(_int(t, lineno, "an arc id") for t in tokens[1:]))
    return FaceSet(tuple(walks))


def serialize_faces(faces: FaceSet) -> str:
    lines = ["face " + " ".join(str(a) for a in walk) for walk in faces]
    return "\n".join(lines) + "\n"


def parse_moves(text: str) -> tuple[FlipMove, ...]:
    moves = []
    for lineno, tokens in _content_lines(text):
        if tokens[0] != "flip" or len(tokens) != 4 or not tokens[3].startswith("X="):
            raise FormatError(
                f"line {lineno}: expected 'flip <out_arc> <in_arc> X=<v1,v2,...>'"
            )
        out_arc = _int(tokens[1], lineno, "an arc id")
        in_arc = _int(tokens[2], lineno, "an arc id")
        try:
            side = frozenset(int(t) for t in tokens[3][2:].split(","))
        except ValueError:
            raise FormatError(f"line {lineno}: bad vertex list {tokens[3][2:]!r}") from None
        moves.append(FlipMove(EdgeCut2(out_arc, in_arc, side)))
    return tuple(moves)


def serialize_moves(moves) -> str:
    lines = []
    for move in moves:
        cut = move.cut
        side = ",".join(str(v) for v in sorted(cut.side))
        lines.append(f"flip {cut.out_arc} {cut.in_arc} X={side}")
    return "\n".join(lines) + "\n" if lines else ""
