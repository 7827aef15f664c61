"""Command-line surface: every library operation over the text formats.

Exit codes: 0 success, 1 for a domain "no" (nonplanar, not equivalent,
no immersion), 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import textio
from .connectivity import is_strongly_k_edge_connected
from .digraph import (
    Digraph,
    generate_random_eulerian,
    split_choices,
    split_vertex,
    validate,
)
from .embedding import enumerate_embeddings, equivalent, euler_genus, trace_faces
from .errors import DiflipError, InternalError
from .immersion import planar_or_obstruction
from .peripheral import two_peripheral_cycles
from .whitney import apply_moves, flip_sequence

DEFAULT_ENUM_BOUND = 12


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DiflipError(f"cannot read {path}: {exc}") from None


def _load_digraph(path: str) -> Digraph:
    return textio.parse_digraph(_read(path))


def _cmd_check(args) -> int:
    H = _load_digraph(args.digraph)
    report = validate(H)
    flags = [
        ("2-regular", report.is_2regular),
        ("eulerian", report.is_eulerian),
        ("connected", report.is_connected),
        ("strongly-2ec", is_strongly_k_edge_connected(H, 2)),
    ]
    print(" ".join(name if ok else f"not-{name}" for name, ok in flags))
    return 0


def _cmd_embed(args) -> int:
    H = _load_digraph(args.digraph)
    result = planar_or_obstruction(H)
    if result.is_planar:
        sys.stdout.write(textio.serialize_rotation(result.rotation))
        return 0
    print("obstruction")
    cert = result.obstruction
    for x, w in enumerate(cert.branch_map):
        print(f"branch {x} {w}")
    for t, path in enumerate(cert.paths):
        print(f"path {t} " + " ".join(str(a) for a in path))
    return 1


def _cmd_faces(args) -> int:
    H = _load_digraph(args.digraph)
    rho = textio.parse_rotation(_read(args.rotation))
    sys.stdout.write(textio.serialize_faces(trace_faces(H, rho)))
    return 0


def _cmd_genus(args) -> int:
    H = _load_digraph(args.digraph)
    rho = textio.parse_rotation(_read(args.rotation))
    print(euler_genus(H, rho))
    return 0


def _cmd_equiv(args) -> int:
    H = _load_digraph(args.digraph)
    f1 = trace_faces(H, textio.parse_rotation(_read(args.rotation1)))
    f2 = trace_faces(H, textio.parse_rotation(_read(args.rotation2)))
    if equivalent(f1, f2):
        print("equivalent")
        return 0
    print("not-equivalent")
    return 1


def _cmd_peripheral(args) -> int:
    H = _load_digraph(args.digraph)
    c1, c2 = two_peripheral_cycles(H, args.arc)
    for cycle in (c1, c2):
        print("cycle " + " ".join(str(a) for a in cycle))
    return 0


def _cmd_flipseq(args) -> int:
    H = _load_digraph(args.digraph)
    rho1 = textio.parse_rotation(_read(args.rotation1))
    rho2 = textio.parse_rotation(_read(args.rotation2))
    sys.stdout.write(textio.serialize_moves(flip_sequence(H, rho1, rho2)))
    return 0


def _cmd_apply(args) -> int:
    H = _load_digraph(args.digraph)
    rho = textio.parse_rotation(_read(args.rotation))
    moves = textio.parse_moves(_read(args.moves))
    sys.stdout.write(textio.serialize_rotation(apply_moves(H, rho, moves)))
    return 0


def _cmd_enumerate(args) -> int:
    H = _load_digraph(args.digraph)
    if args.bound > DEFAULT_ENUM_BOUND:
        print(
            f"warning: enumeration bound raised to {args.bound}; "
            f"expect 2^{args.bound} rotation systems",
            file=sys.stderr,
        )
    for cls in enumerate_embeddings(H, bound=args.bound):
        print(f"class genus={cls.genus} count={cls.count}")
        sys.stdout.write(textio.serialize_faces(cls.faces))
    return 0


def _cmd_immerse(args) -> int:
    from .immersion import immerses

    H = _load_digraph(args.digraph)
    T = _load_digraph(args.target)
    cert = immerses(H, T)
    if cert is None:
        print("no-immersion")
        return 1
    print("immersion")
    for x, w in enumerate(cert.branch_map):
        print(f"branch {x} {w}")
    for t, path in enumerate(cert.paths):
        print(f"path {t} " + " ".join(str(a) for a in path))
    return 0


def _cmd_split(args) -> int:
    H = _load_digraph(args.digraph)
    straight, crossed = split_choices(H, args.vertex)
    choice = crossed if args.pairing == "crossed" else straight
    sys.stdout.write(textio.serialize_digraph(split_vertex(H, choice)))
    return 0


def _cmd_gen(args) -> int:
    H = generate_random_eulerian(args.n, args.d, args.seed)
    sys.stdout.write(textio.serialize_digraph(H))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diflip",
        description="Sphere embeddings, peripheral cycles and Whitney flips "
        "of 2-regular digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="degree and connectivity report")
    p.add_argument("digraph")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("embed", help="sphere embedding or obstruction certificate")
    p.add_argument("digraph")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("faces", help="trace the facial walks of a rotation system")
    p.add_argument("digraph")
    p.add_argument("rotation")
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("genus", help="Euler genus of a rotation system")
    p.add_argument("digraph")
    p.add_argument("rotation")
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("equiv", help="face-set equivalence of two rotation systems")
    p.add_argument("digraph")
    p.add_argument("rotation1")
    p.add_argument("rotation2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("peripheral", help="two peripheral cycles through an arc")
    p.add_argument("digraph")
    p.add_argument("--arc", type=int, required=True)
    p.set_defaults(func=_cmd_peripheral)

    p = sub.add_parser("flipseq", help="Whitney flips from one sphere embedding to another")
    p.add_argument("digraph")
    p.add_argument("rotation1")
    p.add_argument("rotation2")
    p.set_defaults(func=_cmd_flipseq)

    p = sub.add_parser("apply", help="replay a flip-move file on a rotation system")
    p.add_argument("digraph")
    p.add_argument("rotation")
    p.add_argument("moves")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("enumerate", help="all embedding classes (exhaustive oracle)")
    p.add_argument("digraph")
    p.add_argument("--bound", type=int, default=DEFAULT_ENUM_BOUND)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("immerse", help="immersion certificate of a small target digraph")
    p.add_argument("digraph")
    p.add_argument("target")
    p.set_defaults(func=_cmd_immerse)

    p = sub.add_parser("split", help="split a degree-(2,2) vertex")
    p.add_argument("digraph")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--pairing", choices=("straight", "crossed"), default="straight")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("gen", help="seeded random connected Eulerian digraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    return parser


def run(argv) -> int:
    """Parse and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except DiflipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
