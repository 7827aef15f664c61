import random

import pytest

from diflip import (
    Arc,
    Digraph,
    ImmersionCertificate,
    PreconditionError,
    enumerate_embeddings,
    euler_genus,
    generate_random_2regular,
    immerses,
    medial_fixture,
    planar_or_obstruction,
    split_choices,
    split_vertex,
    trace_faces,
    validate_rotation,
    verify_immersion,
    weak_components,
)


def test_self_immersion(c3x2):
    cert = immerses(c3x2, c3x2)
    assert cert.branch_map == (0, 1, 2)
    assert cert.paths == ((0,), (1,), (2,), (3,), (4,), (5,))
    assert verify_immersion(c3x2, c3x2, cert)


def test_c4x2_hosts_doubled_triangle(c4x2, c3x2):
    cert = immerses(c4x2, c3x2)
    assert cert is not None
    assert verify_immersion(c4x2, c3x2, cert)
    # one parallel pair must detour through the fourth vertex
    assert sorted(len(p) for p in cert.paths) == [1, 1, 1, 1, 2, 2]


def test_d2_too_small_for_triangle(d2, c3x2):
    assert immerses(d2, c3x2) is None


def test_verify_rejects_tampering(c4x2, c3x2):
    cert = immerses(c4x2, c3x2)
    assert not verify_immersion(c4x2, c3x2, ImmersionCertificate((0, 0, 2), cert.paths))
    assert not verify_immersion(
        c4x2, c3x2, ImmersionCertificate(cert.branch_map, cert.paths[:-1] + (cert.paths[0],))
    )
    assert not verify_immersion(
        c4x2, c3x2, ImmersionCertificate(cert.branch_map, ((4,),) + cert.paths[1:])
    )
    assert not verify_immersion(
        c4x2, c3x2, ImmersionCertificate(cert.branch_map, cert.paths[:-1] + ((7, 4),))
    )


def test_target_size_guard(c4x2):
    big = Digraph(5, tuple(Arc(i, (i + 1) % 5) for i in range(5)))
    with pytest.raises(PreconditionError):
        immerses(c4x2, big)


def test_loop_target_needs_cycle():
    host = Digraph(2, (Arc(0, 0), Arc(0, 1), Arc(1, 1), Arc(1, 0)))
    target = Digraph(1, (Arc(0, 0),))
    cert = immerses(host, target)
    assert cert is not None and verify_immersion(host, target, cert)


def test_planarity_fixtures(d2, c3x2, c4x2, looplink):
    res = planar_or_obstruction(d2)
    assert res.is_planar and euler_genus(d2, res.rotation) == 0

    res = planar_or_obstruction(c3x2)
    assert not res.is_planar
    assert verify_immersion(c3x2, medial_fixture("C3x2"), res.obstruction)

    res = planar_or_obstruction(c4x2)
    assert not res.is_planar
    assert verify_immersion(c4x2, medial_fixture("C3x2"), res.obstruction)

    # LOOPLINK is planar but not strongly 2-edge-connected, so this
    # exercises the cut-decomposition and splice path
    res = planar_or_obstruction(looplink)
    assert res.is_planar
    assert validate_rotation(looplink, res.rotation)
    assert euler_genus(looplink, res.rotation) == 0


def test_planarity_single_vertex():
    H = Digraph(1, (Arc(0, 0), Arc(0, 0)))
    res = planar_or_obstruction(H)
    assert res.is_planar and euler_genus(H, res.rotation) == 0


def test_planarity_requires_connected_2regular(d2):
    two = Digraph(4, d2.arcs + tuple(Arc(t + 2, h + 2) for t, h in d2.arcs))
    with pytest.raises(PreconditionError):
        planar_or_obstruction(two)
    with pytest.raises(PreconditionError):
        planar_or_obstruction(Digraph(1, (Arc(0, 0),)))


def test_oracle_agreement_small_sample():
    target = medial_fixture("C3x2")
    for seed in range(40):
        H = generate_random_2regular(random.Random(seed).randint(1, 5), seed)
        res = planar_or_obstruction(H)
        oracle = any(c.genus == 0 for c in enumerate_embeddings(H))
        assert res.is_planar == oracle
        if res.is_planar:
            assert trace_faces(H, res.rotation)  # valid system
        else:
            assert verify_immersion(H, target, res.obstruction)


def test_split_monotonicity():
    # sphere embeddability survives vertex splitting
    rng = random.Random(7)
    hosts = [
        H
        for H in (generate_random_2regular(rng.randint(2, 5), 3000 + i) for i in range(60))
        if planar_or_obstruction(H).is_planar
    ]
    sequences = 0
    while sequences < 100:
        H = rng.choice(hosts)
        cur = H
        for _ in range(rng.randint(1, max(1, H.vertex_count - 1))):
            if cur.vertex_count <= 1:
                break
            options = []
            for v in range(cur.vertex_count):
                for choice in split_choices(cur, v):
                    S = split_vertex(cur, choice)
                    if len(weak_components(S)) == 1:
                        options.append(S)
            if not options:
                break
            cur = rng.choice(options)
            assert planar_or_obstruction(cur).is_planar
        sequences += 1
