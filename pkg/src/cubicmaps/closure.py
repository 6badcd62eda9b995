"""Even-cycle-cover closure: from one seed cover, find all covers reachable
by the alternate-halves reselection step.

One step on a cover with ``n`` cycles: split every cycle into its two
alternating halves, pick one half per cycle (``2**n`` selections), keep the
chosen halves plus every off-cover edge, and read the resulting 2-regular
edge set off as a new cover.  Iterating to a fixed point converges onto a
finite set of covers; the conjecture that this set is *all* even cycle
covers of the map is machine-checked in :mod:`cubicmaps.oracles`.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable

from .errors import IterationLimit, NotTwoRegular
from .incidence import (
    Cover,
    Cycle,
    CubicMap,
    canonical_cover,
    canonical_cycle,
    check_cover,
)

DEFAULT_CLOSURE_LIMIT = 10**6


def alternating_halves(cycle: Cycle) -> tuple[frozenset[int], frozenset[int]]:
    """Split a canonical even cycle into its two alternating edge halves.

    The a-half holds the edges at even positions of the canonical
    sequence, the b-half those at odd positions.  Which half is called
    "a" is an arbitrary anchor; the selection enumeration makes it
    irrelevant to the closure.
    """
    if len(cycle) % 2 != 0:
        raise ValueError(f"cycle {cycle} has odd length")
    return frozenset(cycle[0::2]), frozenset(cycle[1::2])


def half_choices(n: int) -> list[tuple[str, ...]]:
    """All 2**n ways of picking one half per cycle, lexicographic, a < b."""
    if n < 1:
        raise ValueError("need at least one cycle")
    return list(product("ab", repeat=n))


class _Engine:
    """Bitmask walker over one map's edge set (internal fast path)."""

    def __init__(self, m: CubicMap):
        self.edge_pos = {e: i for i, e in enumerate(m.edge_ids)}
        self.pos_edge = list(m.edge_ids)
        self.vert_edges = m.vertex_edges
        self.edge_verts = m.edge_vertices
        self.full_mask = (1 << m.n_edges) - 1

    def mask(self, edges: Iterable[int]) -> int:
        pos = self.edge_pos
        out = 0
        for e in edges:
            out |= 1 << pos[e]
        return out

    def decompose(self, on_mask: int) -> Cover:
        """Cycles of a 2-regular edge set given as a bitmask."""
        pos = self.edge_pos
        edge_verts = self.edge_verts
        remaining = on_mask
        cycles = []
        while remaining:
            bit = remaining & -remaining
            e0 = self.pos_edge[bit.bit_length() - 1]
            remaining ^= bit
            seq = [e0]
            p, q = edge_verts[e0]
            cur, prev = q, e0
            while cur != p:
                nxt = 0
                for e2 in self.vert_edges[cur]:
                    if e2 != prev and (on_mask >> pos[e2]) & 1:
                        nxt = e2
                        break
                if not nxt:
                    raise NotTwoRegular(f"walk stuck at vertex {cur}")
                seq.append(nxt)
                remaining &= ~(1 << pos[nxt])
                prev = nxt
                a, b = edge_verts[nxt]
                cur = a if b == cur else b
            cycles.append(canonical_cycle(seq))
        return tuple(sorted(cycles, key=lambda c: (len(c), c)))

    def halves(self, cover: Cover) -> tuple[list[tuple[int, int]], int]:
        """Per-cycle (a-half, b-half) masks and the off-edge mask."""
        pairs = []
        covered = 0
        for cycle in cover:
            a, b = alternating_halves(cycle)
            am, bm = self.mask(a), self.mask(b)
            pairs.append((am, bm))
            covered |= am | bm
        return pairs, self.full_mask ^ covered

    def successors(self, cover: Cover) -> dict[frozenset[int], Cover]:
        """New covers from every half selection, keyed by edge-set form."""
        pairs, off = self.halves(cover)
        out: dict[frozenset[int], Cover] = {}
        for choice in product((0, 1), repeat=len(pairs)):
            on = off
            for (am, bm), pick in zip(pairs, choice):
                on |= bm if pick else am
            new = self.decompose(on)
            key = frozenset(self.mask(c) for c in new)
            out.setdefault(key, new)
        return out


def successor_covers(m: CubicMap, cover: Cover) -> set[Cover]:
    """All covers produced by one reselection step, deduplicated."""
    cover = check_cover(m, cover)
    return set(_Engine(m).successors(cover).values())


def cover_closure(
    m: CubicMap, seed: Cover, limit: int = DEFAULT_CLOSURE_LIMIT
) -> tuple[Cover, ...]:
    """Closure of the seed cover under the reselection step.

    Worklist iteration with a canonical seen-set; stops when no new cover
    appears.  The result contains the seed and is sorted canonically, so
    it is independent of traversal schedule.  Raises IterationLimit if
    the closure exceeds ``limit`` covers (pathological input, far beyond
    anything a desk-scale map produces).
    """
    seed = check_cover(m, seed)
    eng = _Engine(m)
    seed_key = frozenset(eng.mask(c) for c in seed)
    seen: dict[frozenset[int], Cover] = {seed_key: seed}
    queue: deque[Cover] = deque([seed])
    while queue:
        cover = queue.popleft()
        for key, new in eng.successors(cover).items():
            if key not in seen:
                seen[key] = new
                queue.append(new)
                if len(seen) > limit:
                    raise IterationLimit(f"closure exceeded {limit} covers")
    return tuple(sorted(seen.values()))


__all__ = [
    "DEFAULT_CLOSURE_LIMIT",
    "alternating_halves",
    "canonical_cover",
    "cover_closure",
    "half_choices",
    "successor_covers",
]
