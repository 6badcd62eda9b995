"""Random edge insertion that keeps a compatible even cycle cover.

An insertion picks one internal face and two of its edges (possibly the
same edge), subdivides each target with a new vertex, and joins the two
new vertices by a new edge across the face.  Both incidence matrices are
rebuilt, the chosen cover is rewritten onto the new map, and the closure
is recomputed, so after every step the map again carries its full set of
covers, labellings and Hamiltonian cycles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .closure import cover_closure
from .errors import (
    EdgeNotOnFace,
    IncompatibleCover,
    NoCompatibleInsertion,
    NoHamiltonian,
)
from .incidence import (
    Cover,
    CubicMap,
    NextIds,
    canonical_cover,
    check_cover,
    face_boundary_walk,
    order_cycle,
)
from .labelling import Labelling, closure_labellings, hamiltonian_covers


@dataclass(frozen=True)
class InsertionEvent:
    """Record of one edge insertion: ids are in the new map's id space,
    except ``face`` and ``targets`` which name the old map's objects."""

    face: int
    targets: tuple[int, int]
    new_vertices: tuple[int, int]
    new_edge: int
    split_edges: dict[int, tuple[int, ...]]
    new_face: int


@dataclass(frozen=True)
class GrowthStep:
    """One entry of a growth trace: the map after ``event`` (None for the
    seed map) together with its full enumeration."""

    map: CubicMap
    cover: Cover
    covers: tuple[Cover, ...]
    labellings: tuple[Labelling, ...]
    hamiltonian: tuple[Cover, ...]
    event: InsertionEvent | None = None


def choose_insertion(m: CubicMap, rng: random.Random) -> tuple[int, int, int]:
    """Draw (face, edge, edge): face uniform over internal faces, then two
    edges uniform with replacement from that face's boundary.

    Draw order is fixed (face, first edge, second edge) so traces are
    reproducible from the generator seed.
    """
    faces = m.face_ids
    face = faces[rng.randrange(len(faces))]
    edges = sorted(m.face_edge_sets[face])
    e1 = edges[rng.randrange(len(edges))]
    e2 = edges[rng.randrange(len(edges))]
    return face, e1, e2


def insert_edge(
    m: CubicMap, face: int, e1: int, e2: int
) -> tuple[CubicMap, InsertionEvent]:
    """Insert a new edge across ``face`` between targets ``e1`` and ``e2``.

    Distinct targets: each splits in two at a new vertex (H-insertion) and
    the face splits along the new edge.  Equal targets: the edge splits in
    three and the new edge cuts off a bigon face.  Old target ids retire;
    every segment gets a fresh id.
    """
    walk = face_boundary_walk(m, face)
    walk_edges = [e for _, e in walk]
    if e1 not in walk_edges:
        raise EdgeNotOnFace(f"edge {e1} not on face {face}")
    if e2 not in walk_edges:
        raise EdgeNotOnFace(f"edge {e2} not on face {face}")
    k = len(walk)
    x = m.next_ids.vertex
    y = x + 1
    new_face = m.next_ids.face

    vertex_edges = {v: set(es) for v, es in m.vertex_edges.items()}
    face_sets = {f: set(es) for f, es in m.face_edge_sets.items()}

    if e1 != e2:
        i, j = walk_edges.index(e1), walk_edges.index(e2)
        p1, q1 = walk[i][0], walk[(i + 1) % k][0]
        p2, q2 = walk[j][0], walk[(j + 1) % k][0]
        e1a, e1b, e2a, e2b, g = range(m.next_ids.edge, m.next_ids.edge + 5)
        split = {e1: (e1a, e1b), e2: (e2a, e2b)}

        for vertex, old, new in ((p1, e1, e1a), (q1, e1, e1b), (p2, e2, e2a), (q2, e2, e2b)):
            vertex_edges[vertex].remove(old)
            vertex_edges[vertex].add(new)
        vertex_edges[x] = {e1a, e1b, g}
        vertex_edges[y] = {e2a, e2b, g}

        for f in face_sets:
            if f == face:
                continue
            if e1 in face_sets[f]:
                face_sets[f].remove(e1)
                face_sets[f].update(split[e1])
            if e2 in face_sets[f]:
                face_sets[f].remove(e2)
                face_sets[f].update(split[e2])
        arc_fwd = [walk_edges[t % k] for t in range(i + 1, i + 1 + (j - i - 1) % k)]
        arc_bwd = [walk_edges[t % k] for t in range(j + 1, j + 1 + (i - j - 1) % k)]
        face_sets[face] = {e1a, e2b, g, *arc_bwd}
        face_sets[new_face] = {e1b, e2a, g, *arc_fwd}
        next_edge = g + 1
    else:
        i = walk_edges.index(e1)
        p, q = walk[i][0], walk[(i + 1) % k][0]
        s1, s2, s3, g = range(m.next_ids.edge, m.next_ids.edge + 4)
        split = {e1: (s1, s2, s3)}

        for vertex, new in ((p, s1), (q, s3)):
            vertex_edges[vertex].remove(e1)
            vertex_edges[vertex].add(new)
        vertex_edges[x] = {s1, s2, g}
        vertex_edges[y] = {s2, s3, g}

        for f in face_sets:
            if f != face and e1 in face_sets[f]:
                face_sets[f].remove(e1)
                face_sets[f].update((s1, s2, s3))
        face_sets[face] = (face_sets[face] - {e1}) | {s1, s3, g}
        face_sets[new_face] = {s2, g}
        next_edge = g + 1

    new_vertex_ids = m.vertex_ids + (x, y)
    minted = set(range(m.next_ids.edge, next_edge))
    new_edge_ids = tuple(sorted((set(m.edge_ids) - {e1, e2}) | minted))
    new_face_ids = m.face_ids + (new_face,)
    ve = _matrix(new_vertex_ids, new_edge_ids, vertex_edges)
    fe = _matrix(new_face_ids, new_edge_ids, face_sets)
    new_map = CubicMap(
        ve,
        fe,
        vertex_ids=new_vertex_ids,
        edge_ids=new_edge_ids,
        face_ids=new_face_ids,
        next_ids=NextIds(vertex=y + 1, edge=next_edge, face=new_face + 1),
    )
    event = InsertionEvent(
        face=face,
        targets=(e1, e2),
        new_vertices=(x, y),
        new_edge=g,
        split_edges=split,
        new_face=new_face,
    )
    return new_map, event


def _matrix(row_ids, col_ids, incidence):
    col_of = {e: j for j, e in enumerate(col_ids)}
    mat = np.zeros((len(row_ids), len(col_ids)), dtype=np.uint8)
    for i, r in enumerate(row_ids):
        for e in incidence[r]:
            mat[i, col_of[e]] = 1
    return mat


def compatible_cover(covers: Iterable[Cover], e1: int, e2: int) -> Cover | None:
    """First cover (canonical order) with a single cycle through both
    targets, or None."""
    for cover in sorted(covers):
        for cycle in cover:
            if e1 in cycle and e2 in cycle:
                return cover
    return None


def rewrite_cover(cover: Cover, event: InsertionEvent, new_map: CubicMap) -> Cover:
    """Rewrite a cover of the old map onto the post-insertion map.

    Each split target edge is replaced by all of its segments, so the
    host cycle grows by exactly two vertices and stays even; the inserted
    edge joins two host-cycle vertices and becomes an off-cover edge.
    """
    e1, e2 = event.targets
    host = [c for c in cover if e1 in c or e2 in c]
    if len(host) != 1 or e1 not in host[0] or e2 not in host[0]:
        raise IncompatibleCover(
            f"targets {event.targets} do not lie on a single cycle of the cover"
        )
    cycles = []
    for cycle in cover:
        edges = set(cycle)
        for old, segments in event.split_edges.items():
            if old in edges:
                edges.remove(old)
                edges.update(segments)
        cycles.append(order_cycle(new_map, edges))
    return canonical_cover(cycles)


def _insertion_pairs(m: CubicMap):
    for face in m.face_ids:
        edges = sorted(m.face_edge_sets[face])
        for a_idx, a in enumerate(edges):
            for b in edges[a_idx:]:
                yield face, a, b


def _draw_insertion(m, covers, rng, step):
    """Redraw until the drawn pair has a compatible cover.

    Only when an exhaustive scan shows that *no* face/edge pair of the
    current map admits one does the run halt: that map is a candidate
    counterexample to the shared-cycle conjecture and is serialized as a
    witness.
    """
    scanned = False
    while True:
        face, e1, e2 = choose_insertion(m, rng)
        host = compatible_cover(covers, e1, e2)
        if host is not None:
            return face, e1, e2, host
        if not scanned:
            scanned = True
            if not any(
                compatible_cover(covers, a, b) is not None
                for _, a, b in _insertion_pairs(m)
            ):
                from .serialize import map_to_document

                first_face, a, b = next(iter(_insertion_pairs(m)))
                raise NoCompatibleInsertion(
                    "no face/edge pair admits a compatible cover",
                    witness={
                        "step": step,
                        "map": map_to_document(m),
                        "failing_pair": {"face": first_face, "edges": [a, b]},
                    },
                )


def grow(
    m: CubicMap,
    seed_cover: Cover,
    iterations: int,
    rng_seed: int,
) -> list[GrowthStep]:
    """Run ``iterations`` random insertions starting from a covered map.

    Every step records the current map, its cover closure, the distinct
    labellings, the Hamiltonian subset and the insertion that produced
    the map (None for step 0).  Fully reproducible from ``rng_seed``.
    """
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    rng = random.Random(rng_seed)
    cover = check_cover(m, seed_cover)
    event: InsertionEvent | None = None
    steps: list[GrowthStep] = []
    for step in range(iterations + 1):
        covers = cover_closure(m, cover)
        labellings = closure_labellings(m, covers)
        try:
            hams = hamiltonian_covers(m, covers)
        except NoHamiltonian:
            # A step with no Hamiltonian cover is a noteworthy event, but
            # aborting would hide the rest of the run from the conjecture
            # sweeps; it is recorded as an empty subset instead.
            hams = ()
        steps.append(GrowthStep(m, cover, covers, labellings, hams, event))
        if step == iterations:
            break
        face, e1, e2, host = _draw_insertion(m, covers, rng, step)
        m, event = insert_edge(m, face, e1, e2)
        cover = rewrite_cover(host, event, m)
    return steps
