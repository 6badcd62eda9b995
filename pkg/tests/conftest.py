import random

import pytest

from cubicmaps import check_cover, insert_edge
from cubicmaps.fixtures import cube_map, cube_seed, theta_map, theta_seed


@pytest.fixture
def cube():
    return cube_map()


@pytest.fixture
def theta():
    return theta_map()


@pytest.fixture
def cube_cover(cube):
    return check_cover(cube, cube_seed())


@pytest.fixture
def theta_cover(theta):
    return check_cover(theta, theta_seed())


def random_insertion_walk(m, steps, rng: random.Random):
    """Apply ``steps`` random insertions without any cover bookkeeping.

    Cheap way to produce arbitrary grown maps for structural property
    tests (validity does not depend on covers).
    """
    events = []
    for _ in range(steps):
        faces = m.face_ids
        face = faces[rng.randrange(len(faces))]
        edges = sorted(m.face_edge_sets[face])
        e1 = edges[rng.randrange(len(edges))]
        e2 = edges[rng.randrange(len(edges))]
        m, event = insert_edge(m, face, e1, e2)
        events.append(event)
    return m, events
