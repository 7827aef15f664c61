import itertools

import pytest
from hypothesis import given, strategies as st

from diflip import (
    Arc,
    ArcEnd,
    Digraph,
    FIXTURE_NAMES,
    FaceSet,
    PreconditionError,
    RotationSystem,
    StructuralError,
    all_rotation_systems,
    alternating_rotations,
    canonical_walk,
    enumerate_embeddings,
    equivalent,
    euler_genus,
    faces_to_rotation,
    generate_random_2regular,
    medial_fixture,
    trace_faces,
    validate,
    validate_rotation,
)
from helpers import all_cyclic_orders, rotation_from_bits

D2_ROT = RotationSystem((
    (ArcEnd(1, "h"), ArcEnd(0, "t"), ArcEnd(3, "h"), ArcEnd(2, "t")),
    (ArcEnd(0, "h"), ArcEnd(1, "t"), ArcEnd(2, "h"), ArcEnd(3, "t")),
))
D2_PLANAR_FACES = FaceSet(((0, 1), (1, 2), (2, 3), (3, 0)))

small_2regular = st.builds(generate_random_2regular, st.integers(1, 6), st.integers(0, 10**6))


def test_validate_rotation_alternating(d2):
    assert validate_rotation(d2, D2_ROT)


def test_validate_rotation_rejects_adjacent_in_ends(d2):
    bad = RotationSystem((
        (ArcEnd(1, "h"), ArcEnd(3, "h"), ArcEnd(0, "t"), ArcEnd(2, "t")),
        (ArcEnd(0, "h"), ArcEnd(1, "t"), ArcEnd(2, "h"), ArcEnd(3, "t")),
    ))
    assert not validate_rotation(d2, bad)


def test_validate_rotation_coverage_error(d2):
    wrong = RotationSystem((
        (ArcEnd(1, "h"), ArcEnd(0, "t"), ArcEnd(3, "h"), ArcEnd(2, "t")),
        (ArcEnd(0, "h"), ArcEnd(1, "t"), ArcEnd(2, "h"), ArcEnd(2, "t")),
    ))
    with pytest.raises(StructuralError, match="vertex 1"):
        validate_rotation(d2, wrong)


def test_exactly_two_alternating_orders_per_vertex(d2):
    # among all cyclic orders of four ends, exactly two alternate, so the
    # digraph has exactly 2^V valid systems
    per_vertex = [all_cyclic_orders(d2.ends_at(v)) for v in range(2)]
    accepted = sum(
        validate_rotation(d2, RotationSystem(combo))
        for combo in itertools.product(*per_vertex)
    )
    assert accepted == 2 ** d2.vertex_count
    assert all(len(alternating_rotations(d2, v)) == 2 for v in range(2))


def test_trace_faces_d2(d2):
    faces = trace_faces(d2, D2_ROT)
    assert faces == D2_PLANAR_FACES
    assert euler_genus(d2, D2_ROT) == 0


def test_trace_faces_two_loops():
    H = Digraph(1, (Arc(0, 0), Arc(0, 0)))
    rho = RotationSystem(((ArcEnd(0, "h"), ArcEnd(0, "t"), ArcEnd(1, "h"), ArcEnd(1, "t")),))
    faces = trace_faces(H, rho)
    assert faces.walks == ((0,), (0, 1), (1,))
    assert faces.arc_multiset() == {0: 2, 1: 2}
    assert euler_genus(H, rho) == 0


def test_face_count_parity():
    for name in FIXTURE_NAMES:
        H = medial_fixture(name)
        for rho in all_rotation_systems(H):
            F = len(trace_faces(H, rho))
            assert (F - (H.arc_count - H.vertex_count)) % 2 == 0


def test_c3x2_minimum_genus_is_one(c3x2):
    genera = [euler_genus(c3x2, rho) for rho in all_rotation_systems(c3x2)]
    assert min(genera) == 1


def test_c4x2_has_no_sphere_system(c4x2):
    assert min(euler_genus(c4x2, rho) for rho in all_rotation_systems(c4x2)) >= 1


def test_equivalent_examples():
    assert equivalent(D2_PLANAR_FACES, D2_PLANAR_FACES)
    rotated = FaceSet(((1, 0), (2, 1), (3, 2), (0, 3)))
    assert equivalent(D2_PLANAR_FACES, rotated)
    torus = FaceSet(((0, 1, 2, 3), (0, 3, 2, 1)))
    assert not equivalent(D2_PLANAR_FACES, torus)


def test_canonical_walk():
    assert canonical_walk((3, 0)) == (0, 3)
    assert canonical_walk((2, 1, 2, 0)) == (0, 2, 1, 2)
    assert canonical_walk(()) == ()


def test_enumerate_embeddings_d2(d2):
    classes = enumerate_embeddings(d2)
    assert [(c.genus, c.count) for c in classes] == [(0, 2), (1, 2)]
    assert classes[0].faces == D2_PLANAR_FACES


def test_enumerate_embeddings_c3x2(c3x2):
    classes = enumerate_embeddings(c3x2)
    assert all(c.genus == 1 for c in classes)
    assert sum(c.count for c in classes) == 2 ** c3x2.vertex_count


def test_enumerate_embeddings_looplink(looplink):
    classes = enumerate_embeddings(looplink)
    assert [(c.genus, c.count) for c in classes] == [(0, 2), (0, 2)]
    assert {c.faces.walks for c in classes} == {
        ((0,), (0, 1, 2, 3), (1, 3), (2,)),
        ((0,), (0, 1, 3), (1, 2, 3), (2,)),
    }


def test_enumerate_embeddings_bound(c4x2):
    with pytest.raises(PreconditionError):
        enumerate_embeddings(c4x2, bound=3)


def test_faces_to_rotation_round_trip(d2):
    rho = faces_to_rotation(d2, D2_PLANAR_FACES)
    assert rho is not None
    assert trace_faces(d2, rho) == D2_PLANAR_FACES


def test_faces_to_rotation_unrealizable(d2):
    assert faces_to_rotation(d2, FaceSet(((0, 1), (0, 1), (2, 3), (2, 3)))) is None
    # cross-check: no rotation system at all yields that multiset
    bad = FaceSet(((0, 1), (0, 1), (2, 3), (2, 3)))
    assert all(trace_faces(d2, rho) != bad for rho in all_rotation_systems(d2))


def test_faces_to_rotation_checks_structure(d2):
    with pytest.raises(StructuralError):
        faces_to_rotation(d2, FaceSet(((0, 1), (0, 1), (2, 3))))
    with pytest.raises(StructuralError):
        faces_to_rotation(d2, FaceSet(((0, 2), (1, 3), (0, 1), (2, 3))))


@given(small_2regular, st.integers(0, 2**12 - 1))
def test_round_trip_law(H, bits):
    rho = rotation_from_bits(H, bits)
    faces = trace_faces(H, rho)
    rho2 = faces_to_rotation(H, faces)
    assert rho2 is not None
    assert trace_faces(H, rho2) == faces


@given(small_2regular, st.integers(0, 2**12 - 1))
def test_face_trace_invariants(H, bits):
    rho = rotation_from_bits(H, bits)
    faces = trace_faces(H, rho)
    assert all(count == 2 for count in faces.arc_multiset().values())
    for walk in faces:
        k = len(walk)
        for i in range(k):
            assert H.arcs[walk[i]].head == H.arcs[walk[(i + 1) % k]].tail
    assert euler_genus(H, rho) >= 0


@given(small_2regular, st.integers(0, 2**12 - 1))
def test_mirror_has_same_faces(H, bits):
    rho = rotation_from_bits(H, bits)
    assert trace_faces(H, rho.mirror()) == trace_faces(H, rho)


@given(small_2regular, st.integers(0, 2**12 - 1))
def test_sphere_systems_have_v_plus_2_faces(H, bits):
    rho = rotation_from_bits(H, bits)
    faces = trace_faces(H, rho)
    assert (euler_genus(H, rho) == 0) == (len(faces) == H.vertex_count + 2)


def test_equivalence_relation_on_sampled_face_sets(looplink):
    sets = [trace_faces(looplink, rho) for rho in all_rotation_systems(looplink)]
    for a in sets:
        assert equivalent(a, a)
    for a, b in itertools.product(sets, repeat=2):
        assert equivalent(a, b) == equivalent(b, a)
    for a, b, c in itertools.product(sets, repeat=3):
        if equivalent(a, b) and equivalent(b, c):
            assert equivalent(a, c)


def test_euler_genus_requires_connected(d2):
    two = Digraph(4, d2.arcs + tuple(Arc(t + 2, h + 2) for t, h in d2.arcs))
    rho = RotationSystem(tuple(D2_ROT.rotations) + tuple(
        tuple(ArcEnd(e.arc + 4, e.side) for e in rot) for rot in D2_ROT.rotations
    ))
    with pytest.raises(PreconditionError):
        euler_genus(two, rho)


def test_enumerate_requires_2regular():
    with pytest.raises(PreconditionError):
        enumerate_embeddings(Digraph(1, (Arc(0, 0),)))
    assert validate(Digraph(1, (Arc(0, 0),))).is_eulerian
