"""Shared oracle helpers for the test suite.

These deliberately take independent routes from the implementation under
test: isomorphism by brute force over vertex bijections, 2-cut detection
by vertex-subset boundaries, cyclic-order enumeration from first
principles.
"""

from __future__ import annotations

import itertools
import random

from diflip import (
    Digraph,
    RotationSystem,
    alternating_rotations,
    all_rotation_systems,
    euler_genus,
    generate_random_2regular,
    generate_random_eulerian,
    is_strongly_k_edge_connected,
    trace_faces,
)


def isomorphic(A: Digraph, B: Digraph) -> bool:
    """Digraph isomorphism by exhausting vertex bijections."""
    if A.vertex_count != B.vertex_count or A.arc_count != B.arc_count:
        return False
    target = sorted((t, h) for t, h in B.arcs)
    for perm in itertools.permutations(range(A.vertex_count)):
        if sorted((perm[t], perm[h]) for t, h in A.arcs) == target:
            return True
    return False


def boundary_2cut_pairs(H: Digraph) -> set[frozenset[int]]:
    """All unordered arc pairs forming a 2-cut, found by enumerating every
    proper vertex subset and reading off its boundary."""
    n = H.vertex_count
    pairs = set()
    for bits in range(1, 2**n - 1):
        side = {v for v in range(n) if bits >> v & 1}
        boundary = [
            a for a, arc in enumerate(H.arcs) if (arc.tail in side) != (arc.head in side)
        ]
        if len(boundary) == 2:
            pairs.add(frozenset(boundary))
    return pairs


def all_cyclic_orders(ends):
    """Every cyclic order of the given ends, one representative each."""
    ends = sorted(ends)
    if not ends:
        return [()]
    first, rest = ends[0], ends[1:]
    return [(first,) + perm for perm in itertools.permutations(rest)]


def rotation_from_bits(H: Digraph, bits: int) -> RotationSystem:
    """Pick one of the 2^V alternating systems of a 2-regular digraph."""
    rots = []
    for v in range(H.vertex_count):
        options = alternating_rotations(H, v)
        rots.append(options[(bits >> v) & (len(options) - 1)])
    return RotationSystem(tuple(rots))


def genus0_reps(H: Digraph) -> dict:
    """One rotation system per genus-0 equivalence class."""
    reps = {}
    for rho in all_rotation_systems(H):
        if euler_genus(H, rho) == 0:
            reps.setdefault(trace_faces(H, rho), rho)
    return reps


def random_2regular_corpus(count: int, max_n: int, base_seed: int) -> list[Digraph]:
    rng = random.Random(base_seed)
    return [
        generate_random_2regular(rng.randint(1, max_n), seed=base_seed + 1000 + i)
        for i in range(count)
    ]


def random_s2ec_eulerian(count: int, max_n: int = 10, d: int = 3, base_seed: int = 1):
    """Connected, loop-free, strongly 2-edge-connected Eulerian digraphs."""
    found = []
    seed = base_seed
    while len(found) < count:
        seed += 1
        n = random.Random(seed).randint(2, max_n)
        H = generate_random_eulerian(n, d, seed=seed)
        if any(arc.is_loop for arc in H.arcs):
            continue
        if not is_strongly_k_edge_connected(H, 2):
            continue
        found.append(H)
    return found
