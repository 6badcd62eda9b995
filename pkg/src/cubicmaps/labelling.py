"""Proper 3-edge-labellings derived from even cycle covers.

A labelling is stored as three unordered edge classes: around every
vertex the three incident edges must fall in three different classes.
Role names carry no meaning, so two labellings are equal exactly when
their class sets coincide; the canonical form sorts the three classes.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .closure import alternating_halves
from .errors import NoHamiltonian
from .incidence import Cover, CubicMap, check_cover, off_edges

Labelling = tuple[tuple[int, ...], ...]


def canonical_labelling(classes: Iterable[Iterable[int]]) -> Labelling:
    """Quotient by role permutation: the three classes sorted."""
    return tuple(sorted(tuple(sorted(c)) for c in classes))


def labelling_from_cover(m: CubicMap, cover: Cover) -> Labelling:
    """The labelling induced by a cover with its canonical half split.

    One class per alternating half (unioned across cycles), the third
    class being the off-cover edges.  Proper by construction: every
    vertex meets one edge of each half of its cycle plus its off edge.
    """
    cover = check_cover(m, cover)
    a: set[int] = set()
    b: set[int] = set()
    for cycle in cover:
        ha, hb = alternating_halves(cycle)
        a |= ha
        b |= hb
    return canonical_labelling([a, b, off_edges(m, cover)])


def labellings_from_cover(m: CubicMap, cover: Cover) -> set[Labelling]:
    """Every distinct labelling a cover induces.

    Each cycle's halves may be assigned to the two cycle classes
    independently, so a cover with n cycles yields up to 2**(n-1)
    distinct labellings after the role quotient.
    """
    cover = check_cover(m, cover)
    halves = [alternating_halves(c) for c in cover]
    c_class = off_edges(m, cover)
    out: set[Labelling] = set()
    for choice in product((0, 1), repeat=len(halves)):
        a: set[int] = set()
        b: set[int] = set()
        for (ha, hb), pick in zip(halves, choice):
            a |= hb if pick else ha
            b |= ha if pick else hb
        out.add(canonical_labelling([a, b, c_class]))
    return out


def closure_labellings(m: CubicMap, covers: Iterable[Cover]) -> tuple[Labelling, ...]:
    """All distinct labellings induced by a set of covers, sorted."""
    out: set[Labelling] = set()
    for cover in covers:
        out |= labellings_from_cover(m, cover)
    return tuple(sorted(out))


def validate_labelling(m: CubicMap, lab: Sequence[Iterable[int]]) -> bool:
    """True iff the classes partition the edges and every vertex sees
    three distinct classes."""
    classes = [frozenset(c) for c in lab]
    if len(classes) != 3:
        return False
    if sum(len(c) for c in classes) != m.n_edges:
        return False
    union = classes[0] | classes[1] | classes[2]
    if union != m.all_edges:
        return False
    class_of = {}
    for i, c in enumerate(classes):
        for e in c:
            class_of[e] = i
    for v, edges in m.vertex_edges.items():
        if len({class_of[e] for e in edges}) != len(edges):
            return False
    return True


def dedup_labellings(labs: Iterable[Sequence[Iterable[int]]]) -> tuple[Labelling, ...]:
    """Distinct labellings up to role permutation, canonically sorted.

    Idempotent and order-independent.
    """
    return tuple(sorted({canonical_labelling(lab) for lab in labs}))


def hamiltonian_covers(m: CubicMap, covers: Iterable[Cover]) -> tuple[Cover, ...]:
    """Covers consisting of a single cycle through every vertex.

    Raises NoHamiltonian when none is found; callers that only report
    should catch it, growth runs treat it as a hard stop.
    """
    hams = tuple(
        sorted(c for c in covers if len(c) == 1 and len(c[0]) == m.n_vertices)
    )
    if not hams:
        raise NoHamiltonian("no Hamiltonian cycle among the given covers")
    return hams
