import pytest
from hypothesis import given, strategies as st

from diflip import (
    Arc,
    Digraph,
    FIXTURE_NAMES,
    PreconditionError,
    SplitChoice,
    StructuralError,
    generate_random_2regular,
    generate_random_eulerian,
    medial_fixture,
    split_choices,
    split_vertex,
    split_vertex_maps,
    validate,
    weak_components,
)
from helpers import isomorphic


def test_validate_d2(d2):
    report = validate(d2)
    assert report.is_2regular and report.is_eulerian and report.is_connected
    assert report.indegree == (2, 2) and report.outdegree == (2, 2)


def test_validate_c3x2(c3x2):
    report = validate(c3x2)
    assert report.is_2regular and report.is_eulerian and report.is_connected


def test_validate_single_loop():
    report = validate(Digraph(1, (Arc(0, 0),)))
    assert report.is_eulerian and not report.is_2regular
    assert report.is_connected


def test_malformed_arc_named_in_error():
    with pytest.raises(StructuralError, match="arc 1"):
        Digraph(2, (Arc(0, 1), Arc(1, 5)))


def test_fixture_table(d2, looplink, c3x2):
    assert d2.vertex_count == 2 and d2.arc_count == 4
    assert looplink.arcs == (Arc(0, 0), Arc(0, 1), Arc(1, 1), Arc(1, 0))
    assert c3x2.vertex_count == 3 and c3x2.arc_count == 6
    # doubled triangle: every arc has a parallel twin
    assert sorted(c3x2.arcs) == sorted([Arc(0, 1), Arc(0, 1), Arc(1, 2), Arc(1, 2), Arc(2, 0), Arc(2, 0)])


def test_unknown_fixture():
    with pytest.raises(PreconditionError):
        medial_fixture("nope")


def test_split_c4x2_isomorphic_to_c3x2(c4x2, c3x2):
    for choice in split_choices(c4x2, 3):
        assert isomorphic(split_vertex(c4x2, choice), c3x2)


def test_split_d2_two_parallel_loops(d2):
    result = split_vertex(d2, SplitChoice(1, ((0, 1), (2, 3))))
    assert result.vertex_count == 1
    assert result.arcs == (Arc(0, 0), Arc(0, 0))


def test_split_counting():
    for name in FIXTURE_NAMES:
        H = medial_fixture(name)
        for v in range(H.vertex_count):
            for choice in split_choices(H, v):
                S = split_vertex(H, choice)
                assert S.vertex_count == H.vertex_count - 1
                assert S.arc_count == H.arc_count - 2


def test_split_arc_identity_via_maps(c4x2):
    choice = split_choices(c4x2, 3)[0]
    S, vmap, amap = split_vertex_maps(c4x2, choice)
    for old, new in amap.items():
        assert S.arcs[new] == Arc(vmap[c4x2.arcs[old].tail], vmap[c4x2.arcs[old].head])
    # untouched arcs are exactly those not incident to vertex 3
    assert sorted(amap) == [0, 1, 2, 3]


def test_split_requires_degree_22():
    H = Digraph(1, (Arc(0, 0),))
    with pytest.raises(PreconditionError):
        split_vertex(H, SplitChoice(0, ((0, 0), (0, 0))))


def test_split_bad_pairing_rejected(d2):
    with pytest.raises(PreconditionError):
        split_vertex(d2, SplitChoice(1, ((0, 0), (2, 3))))


@given(st.integers(1, 6), st.integers(0, 500), st.data())
def test_split_sequences_stay_2regular(n, seed, data):
    H = generate_random_2regular(n, seed)
    while H.vertex_count > 1:
        v = data.draw(st.integers(0, H.vertex_count - 1))
        choice = data.draw(st.sampled_from(split_choices(H, v)))
        H = split_vertex(H, choice)
        report = validate(H)
        assert report.is_2regular


def test_generate_eulerian_single_vertex():
    H = generate_random_eulerian(1, 1, seed=3)
    assert H.vertex_count == 1 and H.arcs == (Arc(0, 0),)


def test_generate_eulerian_contract():
    H = generate_random_eulerian(4, 2, seed=7)
    report = validate(H)
    assert report.is_eulerian and report.is_connected
    assert all(d <= 2 for d in report.indegree)


def test_generate_eulerian_deterministic():
    assert generate_random_eulerian(5, 3, seed=11) == generate_random_eulerian(5, 3, seed=11)


def test_generate_2regular_contract():
    for seed in range(5):
        H = generate_random_2regular(5, seed)
        report = validate(H)
        assert report.is_2regular and report.is_connected
    assert generate_random_2regular(5, 2) == generate_random_2regular(5, 2)


def test_split_can_disconnect_but_stays_eulerian():
    # figure-eight: two triangles sharing vertex 0; splitting 0 along the
    # triangles yields two disjoint triangles
    H = Digraph(
        5,
        (Arc(0, 1), Arc(1, 2), Arc(2, 0), Arc(0, 3), Arc(3, 4), Arc(4, 0)),
    )
    choice = SplitChoice(0, ((2, 0), (5, 3)))
    S = split_vertex(H, choice)
    assert validate(S).is_eulerian
    assert len(weak_components(S)) == 2
