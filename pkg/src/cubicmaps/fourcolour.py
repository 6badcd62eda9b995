"""Face four-colouring from a proper edge labelling, and vertex blow-up
of arbitrary planar maps down to cubic ones.

Colours are sign pairs.  Crossing an edge flips signs according to the
edge's class: first index, second index, or both.  The three flips plus
identity form the Klein four-group (xor on two bits), which is exactly
why propagation around any closed dual walk is consistent when the
labelling is proper.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InconsistentLabelling, InvalidRotation
from .incidence import CubicMap
from .labelling import canonical_labelling

OUTER = "outer"

COLOURS = ("++", "+-", "-+", "--")
_COLOUR_BITS = {c: i for i, c in enumerate(COLOURS)}
# canonical class 1 flips the first index, class 2 the second, class 3 both
_CLASS_FLIPS = (0b10, 0b01, 0b11)

FaceKey = int | str
FaceColouring = dict[FaceKey, str]


def dual_adjacency(m: CubicMap) -> dict[int, tuple[FaceKey, FaceKey]]:
    """Edge id -> the two faces it separates (external edges pair their
    internal face with the outer face)."""
    out: dict[int, tuple[FaceKey, FaceKey]] = {}
    for e, faces in m.edge_internal_faces.items():
        if len(faces) == 2:
            out[e] = (faces[0], faces[1])
        else:
            out[e] = (faces[0], OUTER)
    return out


def face_colouring_from_labelling(m: CubicMap, lab) -> FaceColouring:
    """Propagate sign-pair colours over the dual from the outer face.

    The outer face takes (+,+); each crossed edge applies its class flip.
    After the spanning propagation every remaining dual edge is checked,
    so an improper labelling cannot slip through.
    """
    lab = canonical_labelling(lab)
    flip_of = {}
    for i, cls in enumerate(lab):
        for e in cls:
            flip_of[e] = _CLASS_FLIPS[i]
    if set(flip_of) != m.all_edges:
        raise InconsistentLabelling("labelling classes do not partition the edges")
    dual = dual_adjacency(m)
    neighbours: dict[FaceKey, list[tuple[FaceKey, int]]] = {OUTER: []}
    for f in m.face_ids:
        neighbours[f] = []
    for e, (a, b) in sorted(dual.items()):
        neighbours[a].append((b, flip_of[e]))
        neighbours[b].append((a, flip_of[e]))

    bits: dict[FaceKey, int] = {OUTER: 0}
    queue: deque[FaceKey] = deque([OUTER])
    while queue:
        f = queue.popleft()
        for g, flip in neighbours[f]:
            if g not in bits:
                bits[g] = bits[f] ^ flip
                queue.append(g)
    for e, (a, b) in dual.items():
        if bits[a] ^ flip_of[e] != bits[b]:
            raise InconsistentLabelling(
                f"edge {e}: colour flip inconsistent between faces {a} and {b}"
            )
    return {f: COLOURS[v] for f, v in bits.items()}


def validate_face_colouring(m: CubicMap, fc: FaceColouring) -> bool:
    """True iff the colouring is total (all faces plus outer) and every
    edge separates two different colours."""
    expected = set(m.face_ids) | {OUTER}
    if set(fc) != expected or not all(c in COLOURS for c in fc.values()):
        return False
    return all(fc[a] != fc[b] for a, b in dual_adjacency(m).values())


# ---------------------------------------------------------------------
# Rotation maps and vertex blow-up
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class RotationMap:
    """Arbitrary bridgeless planar map as a rotation system: each vertex
    lists its incident edges in cyclic order."""

    rotations: dict[int, tuple[int, ...]]
    endpoints: dict[int, tuple[int, int]]

    def other_endpoint(self, edge: int, vertex: int) -> int:
        a, b = self.endpoints[edge]
        return b if vertex == a else a


def validate_rotation(rmap: RotationMap) -> None:
    """Raise InvalidRotation unless the rotation system is a connected
    loop-free map with every vertex of degree >= 3."""
    seen: dict[int, list[int]] = {}
    for v, rot in rmap.rotations.items():
        if len(rot) < 3:
            raise InvalidRotation(f"vertex {v} has degree {len(rot)} (< 3)")
        for e in rot:
            seen.setdefault(e, []).append(v)
    for e, vs in sorted(seen.items()):
        if len(vs) != 2:
            raise InvalidRotation(f"edge {e} appears {len(vs)} times in rotations")
        if vs[0] == vs[1]:
            raise InvalidRotation(f"edge {e} is a loop at vertex {vs[0]}")
        if e not in rmap.endpoints or set(vs) != set(rmap.endpoints[e]):
            raise InvalidRotation(f"edge {e} rotations disagree with endpoints")
    extra = set(rmap.endpoints) - set(seen)
    if extra:
        raise InvalidRotation(f"endpoints list unknown edges {sorted(extra)}")

    vertices = sorted(rmap.rotations)
    reached = {vertices[0]}
    queue = deque(reached)
    while queue:
        v = queue.popleft()
        for e in rmap.rotations[v]:
            w = rmap.other_endpoint(e, v)
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if reached != set(vertices):
        raise InvalidRotation("rotation map is not connected")


def _face_orbits(rotations: dict[int, tuple[int, ...]], other) -> list[tuple]:
    """Orbits of darts (vertex, outgoing edge) under face traversal: after
    crossing an edge, leave along its predecessor in the arrival rotation."""
    darts = [(v, e) for v in sorted(rotations) for e in rotations[v]]
    pending = set(darts)
    orbits = []
    for start in darts:
        if start not in pending:
            continue
        orbit = []
        cur = start
        while True:
            orbit.append(cur)
            pending.discard(cur)
            v, e = cur
            w = other(e, v)
            rot = rotations[w]
            cur = (w, rot[rot.index(e) - 1])
            if cur == start:
                break
        orbits.append(tuple(orbit))
    return orbits


def _orbit_key(orbit) -> tuple[int, ...]:
    return tuple(sorted(e for _, e in orbit))


@dataclass(frozen=True)
class BlowUpMapping:
    """Face correspondence of a blow-up.

    ``face_to_new`` sends each original face key (int id or OUTER) to the
    blown-up face carrying the same region; ``vertex_ring_face`` gives the
    small face each original vertex becomes.  ``original_edge_faces``
    records which original faces every original edge separates, which is
    all a pulled-back colouring needs for validation.
    """

    face_to_new: dict[FaceKey, FaceKey]
    vertex_ring_face: dict[int, int]
    original_faces: dict[FaceKey, tuple[int, ...]]
    original_edge_faces: dict[int, tuple[FaceKey, FaceKey]]


def blow_up(rmap: RotationMap) -> tuple[CubicMap, BlowUpMapping]:
    """Replace every degree-d vertex by a d-cycle of degree-3 vertices in
    rotation order; original edges reattach to the matching ring vertex.

    Returns the cubic map plus the face mapping.  The original face with
    the smallest boundary key becomes the outer face, and so does its
    blown-up counterpart.
    """
    validate_rotation(rmap)
    orig_orbits = _face_orbits(rmap.rotations, rmap.other_endpoint)
    n_edges = len(rmap.endpoints)
    n_vertices = len(rmap.rotations)
    if len(orig_orbits) != n_edges - n_vertices + 2:
        raise InvalidRotation("rotation system is not a sphere embedding")
    for orbit in orig_orbits:
        edges = [e for _, e in orbit]
        if len(edges) != len(set(edges)):
            raise InvalidRotation("map has a bridge (an edge borders one face twice)")

    orig_orbits.sort(key=_orbit_key)
    orbit_face: list[FaceKey] = [OUTER] + list(range(1, len(orig_orbits)))
    dart_to_orig: dict[tuple[int, int], FaceKey] = {}
    original_faces = {}
    for face, orbit in zip(orbit_face, orig_orbits):
        original_faces[face] = _orbit_key(orbit)
        for dart in orbit:
            dart_to_orig[dart] = face
    original_edge_faces = {}
    for e, (p, q) in rmap.endpoints.items():
        original_edge_faces[e] = (dart_to_orig[(p, e)], dart_to_orig[(q, e)])

    # corners and ring edges, minted in sorted vertex / rotation order
    corner: dict[tuple[int, int], int] = {}
    counter = 1
    for v in sorted(rmap.rotations):
        for i in range(len(rmap.rotations[v])):
            corner[(v, i)] = counter
            counter += 1
    ring: dict[tuple[int, int], int] = {}
    next_edge = max(rmap.endpoints) + 1
    for v in sorted(rmap.rotations):
        for i in range(len(rmap.rotations[v])):
            ring[(v, i)] = next_edge
            next_edge += 1

    position = {}
    for v, rot in rmap.rotations.items():
        for i, e in enumerate(rot):
            position[(v, e)] = i

    new_rotations: dict[int, tuple[int, ...]] = {}
    new_endpoints: dict[int, tuple[int, int]] = {}
    for v in sorted(rmap.rotations):
        d = len(rmap.rotations[v])
        for i, e in enumerate(rmap.rotations[v]):
            c = corner[(v, i)]
            new_rotations[c] = (e, ring[(v, i)], ring[(v, (i - 1) % d)])
        for i in range(d):
            new_endpoints[ring[(v, i)]] = (corner[(v, i)], corner[(v, (i + 1) % d)])
    for e, (p, q) in rmap.endpoints.items():
        new_endpoints[e] = (corner[(p, position[(p, e)])], corner[(q, position[(q, e)])])

    def new_other(e, v):
        a, b = new_endpoints[e]
        return b if v == a else a

    new_orbits = _face_orbits(new_rotations, new_other)
    dart_to_new_orbit = {}
    for idx, orbit in enumerate(new_orbits):
        for dart in orbit:
            dart_to_new_orbit[dart] = idx

    # counterpart of an original face: follow any of its darts into the ring
    orig_to_orbit_idx = {}
    for face, orbit in zip(orbit_face, orig_orbits):
        v, e = orbit[0]
        orig_to_orbit_idx[face] = dart_to_new_orbit[(corner[(v, position[(v, e)])], e)]
    outer_idx = orig_to_orbit_idx[OUTER]

    internal = [i for i in range(len(new_orbits)) if i != outer_idx]
    internal.sort(key=lambda i: _orbit_key(new_orbits[i]))
    face_id_of_orbit: dict[int, FaceKey] = {outer_idx: OUTER}
    for fid, idx in enumerate(internal, start=1):
        face_id_of_orbit[idx] = fid

    face_to_new = {face: face_id_of_orbit[idx] for face, idx in orig_to_orbit_idx.items()}
    vertex_ring_face = {}
    for v in sorted(rmap.rotations):
        idx = dart_to_new_orbit[(corner[(v, 0)], ring[(v, 0)])]
        vertex_ring_face[v] = face_id_of_orbit[idx]

    vertex_ids = tuple(range(1, counter))
    edge_ids = tuple(sorted(new_endpoints))
    col = {e: j for j, e in enumerate(edge_ids)}
    ve = np.zeros((len(vertex_ids), len(edge_ids)), dtype=np.uint8)
    for c, rot in new_rotations.items():
        for e in rot:
            ve[c - 1, col[e]] = 1
    fe = np.zeros((len(internal), len(edge_ids)), dtype=np.uint8)
    for fid, idx in enumerate(internal):
        for e in _orbit_key(new_orbits[idx]):
            fe[fid, col[e]] = 1
    cubic = CubicMap(ve, fe, vertex_ids=vertex_ids, edge_ids=edge_ids)

    mapping = BlowUpMapping(
        face_to_new=face_to_new,
        vertex_ring_face=vertex_ring_face,
        original_faces=original_faces,
        original_edge_faces=original_edge_faces,
    )
    return cubic, mapping


def pull_back_colouring(fc: FaceColouring, mapping: BlowUpMapping) -> FaceColouring:
    """Colour each original face like its blown-up counterpart.

    Collapsing the rings removes neighbours and adds none, so properness
    survives; ring faces are simply dropped.
    """
    return {face: fc[new] for face, new in mapping.face_to_new.items()}


def validate_pulled_back(mapping: BlowUpMapping, fc: FaceColouring) -> bool:
    """Properness of a colouring on the original (pre-blow-up) map."""
    if set(fc) != set(mapping.face_to_new):
        return False
    return all(fc[a] != fc[b] for a, b in mapping.original_edge_faces.values())
