import pytest

from cubicmaps import (
    COLOURS,
    InconsistentLabelling,
    InvalidRotation,
    OUTER,
    RotationMap,
    all_proper_labellings,
    blow_up,
    dual_adjacency,
    euler_check,
    face_colouring_from_labelling,
    pull_back_colouring,
    validate_face_colouring,
    validate_map,
    validate_pulled_back,
)
from cubicmaps.fixtures import (
    tetrahedron_labelling,
    tetrahedron_map,
    tetrahedron_rotation,
    wheel_rotation,
)
from cubicmaps.fourcolour import _CLASS_FLIPS, BlowUpMapping


def test_dual_adjacency_cube(cube):
    dual = dual_adjacency(cube)
    external = [e for e, pair in dual.items() if OUTER in pair]
    assert sorted(external) == [1, 2, 3, 12]
    for e, pair in dual.items():
        if OUTER not in pair:
            assert len(cube.face_edge_sets[pair[0]]) == 4
            assert len(cube.face_edge_sets[pair[1]]) == 4


def test_dual_adjacency_theta(theta):
    assert dual_adjacency(theta) == {1: (1, OUTER), 2: (1, 2), 3: (2, OUTER)}


def test_tetrahedron_colouring():
    m = tetrahedron_map()
    fc = face_colouring_from_labelling(m, tetrahedron_labelling())
    assert validate_face_colouring(m, fc)
    assert fc[OUTER] == "++"
    assert len(set(fc.values())) == 4  # K4 needs all four colours


def test_theta_colouring_three_distinct(theta):
    fc = face_colouring_from_labelling(theta, ((1,), (2,), (3,)))
    assert validate_face_colouring(theta, fc)
    assert len(set(fc.values())) == 3


def test_cube_colourings_for_every_labelling(cube):
    for lab in all_proper_labellings(cube):
        fc = face_colouring_from_labelling(cube, lab)
        assert validate_face_colouring(cube, fc)
        assert len(set(fc.values())) <= 4


def test_validate_rejects_bad_colourings(theta):
    constant = {OUTER: "++", 1: "++", 2: "++"}
    assert not validate_face_colouring(theta, constant)
    fc = face_colouring_from_labelling(theta, ((1,), (2,), (3,)))
    fc[1] = fc[OUTER]  # faces 1 and outer share edge 1
    assert not validate_face_colouring(theta, fc)
    assert not validate_face_colouring(theta, {OUTER: "++", 1: "-+"})  # not total


def test_improper_labelling_is_caught(theta):
    with pytest.raises(InconsistentLabelling):
        face_colouring_from_labelling(theta, ((1, 2), (3,), ()))


def test_flip_algebra_is_klein_four_group(cube):
    flips = set(_CLASS_FLIPS) | {0}
    assert {a ^ b for a in flips for b in flips} == flips
    # around any vertex the three incident classes flip once each: identity
    for lab in all_proper_labellings(cube):
        flip_of = {}
        for i, cls in enumerate(lab):
            for e in cls:
                flip_of[e] = _CLASS_FLIPS[i]
        for v, edges in cube.vertex_edges.items():
            acc = 0
            for e in edges:
                acc ^= flip_of[e]
            assert acc == 0


@pytest.mark.parametrize("degree", [4, 5])
def test_blow_up_wheel(degree):
    rmap = wheel_rotation(degree)
    cubic, mapping = blow_up(rmap)
    assert validate_map(cubic) == []
    assert euler_check(cubic)
    assert cubic.n_vertices == sum(len(r) for r in rmap.rotations.values())
    assert cubic.n_edges == len(rmap.endpoints) + cubic.n_vertices
    # the hub becomes a face bounded by `degree` ring edges
    hub_face = mapping.vertex_ring_face[degree + 1]
    assert len(cubic.face_edge_sets[hub_face]) == degree
    assert set(mapping.face_to_new) == set(mapping.original_faces)
    assert OUTER in mapping.face_to_new


def test_blow_up_of_cubic_map_makes_triangles():
    rmap = tetrahedron_rotation()
    cubic, mapping = blow_up(rmap)
    assert cubic.n_vertices == 3 * len(rmap.rotations)
    assert cubic.n_edges == len(rmap.endpoints) + cubic.n_vertices
    assert validate_map(cubic) == []
    for v in rmap.rotations:
        ring = mapping.vertex_ring_face[v]
        assert len(cubic.face_edge_sets[ring]) == 3


@pytest.mark.parametrize("degree", [4, 5])
def test_blow_up_colouring_pipeline(degree):
    cubic, mapping = blow_up(wheel_rotation(degree))
    lab = all_proper_labellings(cubic)[0]
    fc = face_colouring_from_labelling(cubic, lab)
    assert validate_face_colouring(cubic, fc)
    back = pull_back_colouring(fc, mapping)
    assert validate_pulled_back(mapping, back)
    assert set(back) == set(mapping.face_to_new)


def test_pull_back_identity_mapping():
    cubic, mapping = blow_up(wheel_rotation(4))
    fc = face_colouring_from_labelling(cubic, all_proper_labellings(cubic)[0])
    back = pull_back_colouring(fc, mapping)
    identity = BlowUpMapping(
        face_to_new={k: k for k in back},
        vertex_ring_face={},
        original_faces=mapping.original_faces,
        original_edge_faces=mapping.original_edge_faces,
    )
    assert pull_back_colouring(back, identity) == back


def test_corrupted_pull_back_is_detected():
    cubic, mapping = blow_up(wheel_rotation(4))
    fc = face_colouring_from_labelling(cubic, all_proper_labellings(cubic)[0])
    back = pull_back_colouring(fc, mapping)
    edge, (fa, fb) = next(iter(mapping.original_edge_faces.items()))
    back[fa] = back[fb]
    assert not validate_pulled_back(mapping, back)


def test_invalid_rotations_are_rejected():
    with pytest.raises(InvalidRotation):  # edge 9 listed once
        blow_up(RotationMap({1: (1, 2, 9), 2: (1, 2, 3), 3: (3, 4, 5)}, {}))
    with pytest.raises(InvalidRotation):  # loop
        blow_up(
            RotationMap(
                {1: (1, 1, 2), 2: (2, 3, 3)},
                {1: (1, 1), 2: (1, 2), 3: (2, 2)},
            )
        )
    with pytest.raises(InvalidRotation):  # degree 2
        blow_up(RotationMap({1: (1, 2), 2: (1, 2)}, {1: (1, 2), 2: (1, 2)}))
    with pytest.raises(InvalidRotation):  # two components
        blow_up(
            RotationMap(
                {1: (1, 2, 3), 2: (3, 2, 1), 3: (4, 5, 6), 4: (6, 5, 4)},
                {1: (1, 2), 2: (1, 2), 3: (1, 2), 4: (3, 4), 5: (3, 4), 6: (3, 4)},
            )
        )
    with pytest.raises(InvalidRotation):  # not a sphere embedding
        blow_up(
            RotationMap(
                rotations={1: (1, 3, 4), 2: (2, 1, 5), 3: (3, 2, 6), 4: (4, 5, 6)},
                endpoints={
                    1: (1, 2), 2: (2, 3), 3: (1, 3),
                    4: (1, 4), 5: (2, 4), 6: (3, 4),
                },
            )
        )


def test_colour_constants():
    assert COLOURS == ("++", "+-", "-+", "--")
    assert len(set(COLOURS)) == 4
