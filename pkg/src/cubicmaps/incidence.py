"""Incidence-matrix model of cubic planar maps.

A map is stored as two 0/1 matrices: ``vertex_edge`` (rows = vertices,
columns = edges) and ``face_edge`` (rows = internal faces only; the outer
face has no row, so columns of external edges carry a single 1).  Parallel
edges are first class (identical columns); loops are inexpressible and
rejected.  All adjacency queries are edge-id based, never endpoint based,
so parallel edges never collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidCover, MalformedFace, NotACycle, NotTwoRegular

Cycle = tuple[int, ...]
Cover = tuple[Cycle, ...]


@dataclass(frozen=True)
class NextIds:
    """Counters for fresh vertex/edge/face ids."""

    vertex: int
    edge: int
    face: int


class CubicMap:
    """A cubic planar map with opaque positive integer ids.

    Matrix row/column order is id-sorted.  Instances are immutable after
    construction (the arrays are write-protected); every operation that
    changes the map returns a new instance, so values can be shared freely
    across threads.
    """

    def __init__(
        self,
        vertex_edge,
        face_edge,
        vertex_ids: Sequence[int] | None = None,
        edge_ids: Sequence[int] | None = None,
        face_ids: Sequence[int] | None = None,
        next_ids: NextIds | None = None,
    ):
        ve = np.array(vertex_edge, dtype=np.uint8)
        fe = np.array(face_edge, dtype=np.uint8)
        if ve.ndim != 2 or fe.ndim != 2:
            raise ValueError("incidence matrices must be two-dimensional")
        ve.setflags(write=False)
        fe.setflags(write=False)
        self.vertex_edge = ve
        self.face_edge = fe
        self.vertex_ids = self._ids(vertex_ids, ve.shape[0], "vertex")
        self.edge_ids = self._ids(edge_ids, ve.shape[1], "edge")
        self.face_ids = self._ids(face_ids, fe.shape[0], "face")
        if next_ids is None:
            next_ids = NextIds(
                vertex=(max(self.vertex_ids) + 1) if self.vertex_ids else 1,
                edge=(max(self.edge_ids) + 1) if self.edge_ids else 1,
                face=(max(self.face_ids) + 1) if self.face_ids else 1,
            )
        self.next_ids = next_ids

    @staticmethod
    def _ids(ids, count, kind) -> tuple[int, ...]:
        if ids is None:
            return tuple(range(1, count + 1))
        ids = tuple(int(i) for i in ids)
        if len(ids) != count:
            raise ValueError(f"{kind} id count {len(ids)} != matrix dimension {count}")
        if sorted(ids) != list(ids) or len(set(ids)) != count:
            raise ValueError(f"{kind} ids must be strictly increasing")
        return ids

    # -- sizes ---------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    @property
    def n_internal_faces(self) -> int:
        return len(self.face_ids)

    # -- derived adjacency (valid maps only) ---------------------------

    @cached_property
    def _edge_col(self) -> dict[int, int]:
        return {e: j for j, e in enumerate(self.edge_ids)}

    @cached_property
    def _vertex_row(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}

    @cached_property
    def edge_vertices(self) -> dict[int, tuple[int, int]]:
        """Edge id -> its two endpoint vertex ids (sorted)."""
        out = {}
        for j, e in enumerate(self.edge_ids):
            rows = np.flatnonzero(self.vertex_edge[:, j])
            if len(rows) != 2:
                raise ValueError(f"edge {e} has {len(rows)} endpoints")
            out[e] = (self.vertex_ids[rows[0]], self.vertex_ids[rows[1]])
        return out

    @cached_property
    def vertex_edges(self) -> dict[int, tuple[int, ...]]:
        """Vertex id -> its incident edge ids (sorted)."""
        out = {}
        for i, v in enumerate(self.vertex_ids):
            cols = np.flatnonzero(self.vertex_edge[i])
            out[v] = tuple(self.edge_ids[j] for j in cols)
        return out

    @cached_property
    def face_edge_sets(self) -> dict[int, frozenset[int]]:
        """Internal face id -> the set of edges on its boundary."""
        out = {}
        for i, f in enumerate(self.face_ids):
            cols = np.flatnonzero(self.face_edge[i])
            out[f] = frozenset(self.edge_ids[j] for j in cols)
        return out

    @cached_property
    def edge_internal_faces(self) -> dict[int, tuple[int, ...]]:
        """Edge id -> internal face ids containing it (1 for external edges)."""
        out = {e: [] for e in self.edge_ids}
        for f, edges in sorted(self.face_edge_sets.items()):
            for e in edges:
                out[e].append(f)
        return {e: tuple(fs) for e, fs in out.items()}

    @cached_property
    def external_edges(self) -> frozenset[int]:
        """Edges on the outer boundary (face-edge column sum 1)."""
        sums = self.face_edge.sum(axis=0)
        return frozenset(e for j, e in enumerate(self.edge_ids) if sums[j] == 1)

    @cached_property
    def all_edges(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def other_endpoint(self, edge: int, vertex: int) -> int:
        a, b = self.edge_vertices[edge]
        return b if vertex == a else a

    def __repr__(self):
        return (
            f"CubicMap(V={self.n_vertices}, E={self.n_edges}, "
            f"F_internal={self.n_internal_faces})"
        )


# ---------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------

def validate_map(m: CubicMap) -> list[str]:
    """Check every structural invariant and report each violation.

    An empty report means the map is valid.  Nothing is raised: a report
    is data, not a failure.
    """
    report: list[str] = []
    ve, fe = m.vertex_edge, m.face_edge
    if ve.size == 0 or fe.size == 0:
        return ["incidence matrices must be non-empty"]
    if not np.isin(ve, (0, 1)).all():
        report.append("vertex-edge matrix has entries outside {0,1}")
    if not np.isin(fe, (0, 1)).all():
        report.append("face-edge matrix has entries outside {0,1}")
    if fe.shape[1] != ve.shape[1]:
        report.append(
            f"face-edge matrix has {fe.shape[1]} columns, vertex-edge has {ve.shape[1]}"
        )
    if report:
        return report

    for i, v in enumerate(m.vertex_ids):
        k = int(ve[i].sum())
        if k != 3:
            report.append(f"vertex row {v} has {k} ones (expected 3)")
    col_sums = ve.sum(axis=0)
    for j, e in enumerate(m.edge_ids):
        k = int(col_sums[j])
        if k != 2:
            report.append(f"edge column {e} has {k} ones in vertex-edge (expected 2)")
    face_col_sums = fe.sum(axis=0)
    for j, e in enumerate(m.edge_ids):
        k = int(face_col_sums[j])
        if k not in (1, 2):
            report.append(f"edge column {e} has {k} ones in face-edge (expected 1 or 2)")
    if not euler_check(m):
        report.append(
            f"Euler check failed: V={m.n_vertices} - E={m.n_edges} + "
            f"F={m.n_internal_faces}+1 != 2"
        )
    if report:
        return report

    # Outer boundary: every vertex lies on 0 or 2 external edges.
    external = m.external_edges
    for v, edges in sorted(m.vertex_edges.items()):
        k = sum(1 for e in edges if e in external)
        if k not in (0, 2):
            report.append(f"vertex {v} touches {k} external edges (expected 0 or 2)")
    for f in m.face_ids:
        try:
            face_boundary(m, f)
        except MalformedFace:
            report.append(f"face {f} edges do not form one closed boundary")
    return report


def euler_check(m: CubicMap) -> bool:
    """V - E + (F_internal + 1) == 2, counting the rowless outer face."""
    return m.n_vertices - m.n_edges + m.n_internal_faces + 1 == 2


# ---------------------------------------------------------------------
# Cycle walking and canonical forms
# ---------------------------------------------------------------------

def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Canonical form of a cyclic edge sequence.

    Rotate so the minimum edge id comes first, then orient so the second
    entry is the smaller of the first edge's two cyclic neighbours.
    """
    seq = tuple(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def _walk_closed(m: CubicMap, edges: frozenset[int]) -> list[int]:
    """Order ``edges`` into one closed walk; every touched vertex must have
    induced degree exactly 2.  Raises NotACycle otherwise."""
    if not edges:
        raise NotACycle("empty edge set")
    unknown = edges - m.all_edges
    if unknown:
        raise NotACycle(f"unknown edge ids {sorted(unknown)}")
    inc: dict[int, list[int]] = {}
    for e in edges:
        for v in m.edge_vertices[e]:
            inc.setdefault(v, []).append(e)
    for v, es in inc.items():
        if len(es) != 2:
            raise NotACycle(f"vertex {v} has induced degree {len(es)}")

    start = min(edges)
    p, q = m.edge_vertices[start]
    seq = [start]
    cur = q
    while cur != p:
        a, b = inc[cur]
        nxt = b if a == seq[-1] else a
        seq.append(nxt)
        cur = m.other_endpoint(nxt, cur)
    if len(seq) != len(edges):
        raise NotACycle("edge set is disconnected")
    return seq


def order_cycle(m: CubicMap, edge_set: Iterable[int]) -> Cycle:
    """Order an unordered edge set into its canonical closed-walk sequence."""
    return canonical_cycle(_walk_closed(m, frozenset(edge_set)))


def face_boundary(m: CubicMap, face: int) -> Cycle:
    """Edges of an internal face in canonical boundary order."""
    edges = m.face_edge_sets.get(face)
    if edges is None:
        raise MalformedFace(f"face {face} is not a row of the face-edge matrix")
    try:
        return canonical_cycle(_walk_closed(m, edges))
    except NotACycle as exc:
        raise MalformedFace(f"face {face}: {exc}") from exc


def face_boundary_walk(m: CubicMap, face: int) -> list[tuple[int, int]]:
    """Boundary of ``face`` as (entry vertex, edge) pairs in walk order.

    Edge ``i`` runs from the i-th entry vertex to the (i+1)-th; needed by
    edge insertion, which must know walk direction through each target.
    """
    cyc = face_boundary(m, face)
    if len(cyc) == 2:
        a, b = sorted(m.edge_vertices[cyc[0]])
        return [(a, cyc[0]), (b, cyc[1])]
    pairs = []
    for i, e in enumerate(cyc):
        prev = cyc[i - 1]
        shared = set(m.edge_vertices[e]) & set(m.edge_vertices[prev])
        pairs.append((min(shared) if len(shared) > 1 else shared.pop(), e))
    return pairs


# ---------------------------------------------------------------------
# Covers (sets of vertex-disjoint even cycles spanning all vertices)
# ---------------------------------------------------------------------

def cycle_vertices(m: CubicMap, cycle: Sequence[int]) -> frozenset[int]:
    out = set()
    for e in cycle:
        out.update(m.edge_vertices[e])
    return frozenset(out)


def off_edges(m: CubicMap, cover: Cover) -> frozenset[int]:
    """Edges on no cycle of the cover: exactly V/2 of them for a valid cover."""
    on = set()
    for cycle in cover:
        on.update(cycle)
    return m.all_edges - on


def decompose_two_factor(m: CubicMap, on_edges: Iterable[int]) -> Cover:
    """Partition a 2-regular spanning edge set into its cycles.

    Every vertex of the map must have exactly two incident edges in the
    set (NotTwoRegular otherwise).  Cycles come out canonical, sorted by
    (length, sequence).
    """
    on = frozenset(on_edges)
    degree = {v: 0 for v in m.vertex_ids}
    for e in on:
        if e not in m.all_edges:
            raise NotTwoRegular(f"unknown edge id {e}")
        for v in m.edge_vertices[e]:
            degree[v] += 1
    bad = {v: d for v, d in degree.items() if d != 2}
    if bad:
        v, d = min(bad.items())
        raise NotTwoRegular(f"vertex {v} has degree {d} (expected 2)")

    remaining = set(on)
    cycles = []
    while remaining:
        walk = _component(m, remaining)
        cycles.append(canonical_cycle(walk))
        remaining.difference_update(walk)
    return tuple(sorted(cycles, key=lambda c: (len(c), c)))


def _component(m: CubicMap, remaining: set[int]) -> list[int]:
    # The cycle through the lowest remaining edge; degree-2 at every vertex
    # makes the walk deterministic.
    start = min(remaining)
    seq = [start]
    p, q = m.edge_vertices[start]
    cur, prev_e = q, start
    while cur != p:
        nxt = None
        for e in m.vertex_edges[cur]:
            if e != prev_e and e in remaining:
                nxt = e
                break
        if nxt is None:
            raise NotTwoRegular(f"walk stuck at vertex {cur}")
        seq.append(nxt)
        prev_e = nxt
        cur = m.other_endpoint(nxt, cur)
    return seq


def canonical_cover(cover: Iterable[Sequence[int]]) -> Cover:
    """Canonicalize each cycle, then sort by (length, first edge id)."""
    cycles = [canonical_cycle(c) for c in cover]
    return tuple(sorted(cycles, key=lambda c: (len(c), c)))


def check_cover(m: CubicMap, cover: Iterable[Sequence[int]]) -> Cover:
    """Validate the cover invariants; return the canonical form.

    Raises InvalidCover unless the cycles are pairwise vertex-disjoint
    even closed walks whose vertices together cover the whole map.
    """
    cover = tuple(tuple(c) for c in cover)
    if not cover:
        raise InvalidCover("cover has no cycles")
    seen_vertices: set[int] = set()
    cycles = []
    for cyc in cover:
        if len(set(cyc)) != len(cyc):
            raise InvalidCover(f"cycle {cyc} repeats an edge")
        try:
            ordered = order_cycle(m, cyc)
        except NotACycle as exc:
            raise InvalidCover(f"cycle {cyc}: {exc}") from exc
        if len(ordered) % 2 != 0:
            raise InvalidCover(f"cycle {ordered} has odd length {len(ordered)}")
        verts = cycle_vertices(m, ordered)
        if verts & seen_vertices:
            raise InvalidCover("cycles are not vertex-disjoint")
        seen_vertices |= verts
        cycles.append(ordered)
    if seen_vertices != set(m.vertex_ids):
        missing = sorted(set(m.vertex_ids) - seen_vertices)
        raise InvalidCover(f"vertices {missing} lie on no cycle")
    return canonical_cover(cycles)
