#!/usr/bin/env python3
"""Whitney flips: moving between sphere embeddings.

Reversing all rotations on one side of a 2-edge-cut re-embeds that side
mirror-imaged; this is the only move needed to connect any two sphere
embeddings of a connected 2-regular digraph. The synthesizer works by
contracting a minimal one-out side to a single arc, recursing on the
rest, lifting the moves back, and correcting the contracted side with at
most one final flip.
"""

import random

from diflip import (
    all_rotation_systems,
    apply_moves,
    enumerate_2cuts,
    equivalent,
    euler_genus,
    flip_sequence,
    generate_random_2regular,
    medial_fixture,
    trace_faces,
    whitney_flip,
)

L = medial_fixture("LOOPLINK")
print("LOOPLINK has one 2-edge-cut and two sphere classes:")
cut = enumerate_2cuts(L)[0]
print(f"  cut: arcs ({cut.out_arc}, {cut.in_arc}) around side {sorted(cut.side)}")

spheres = [rho for rho in all_rotation_systems(L) if euler_genus(L, rho) == 0]
classes = {}
for rho in spheres:
    classes.setdefault(trace_faces(L, rho), rho)
(f1, r1), (f2, r2) = classes.items()
print(f"  class A faces: {f1.walks}")
print(f"  class B faces: {f2.walks}\n")

moves = flip_sequence(L, r1, r2)
print(f"flip sequence from A to B: {len(moves)} move(s)")
for mv in moves:
    print(f"  flip ({mv.cut.out_arc}, {mv.cut.in_arc}) side {sorted(mv.cut.side)}")
landed = apply_moves(L, r1, moves)
print(f"application lands in class B: {equivalent(trace_faces(L, landed), f2)}")
flipped_twice = whitney_flip(L, whitney_flip(L, r1, moves[0]), moves[0])
print(f"a flip is an involution: {flipped_twice == r1}\n")

print("random planar digraphs with several sphere classes:")
rng = random.Random(5)
shown = 0
seed = 0
while shown < 3:
    seed += 1
    H = generate_random_2regular(rng.randint(3, 6), seed)
    reps = {}
    for rho in all_rotation_systems(H):
        if euler_genus(H, rho) == 0:
            reps.setdefault(trace_faces(H, rho), rho)
    if len(reps) < 2:
        continue
    shown += 1
    faces = list(reps)
    src, dst = faces[0], faces[-1]
    moves = flip_sequence(H, reps[src], reps[dst])
    ok = equivalent(trace_faces(H, apply_moves(H, reps[src], moves)), dst)
    print(
        f"  {H.vertex_count} vertices, {len(reps)} sphere classes: "
        f"{len(moves)} flips connect the extremes (verified: {ok})"
    )
