"""Grow a random cubic planar map from the smallest possible seed.

Each step inserts one edge across a randomly chosen face, splits the two
target edges at new vertices, rewrites the chosen cover onto the new map
and re-enumerates covers, labellings and Hamiltonian cycles.  The whole
run is reproducible from the generator seed, and the trace serializes to
JSON lines.
"""

import sys

from cubicmaps import grow
from cubicmaps.fixtures import theta_map, theta_seed
from cubicmaps.serialize import write_trace

iterations = int(sys.argv[1]) if len(sys.argv) > 1 else 10
rng_seed = int(sys.argv[2]) if len(sys.argv) > 2 else 1

steps = grow(theta_map(), theta_seed(), iterations=iterations, rng_seed=rng_seed)

print(f"{'step':>4} {'V':>4} {'E':>4} {'faces':>5} {'covers':>6} "
      f"{'labellings':>10} {'hamiltonian':>11}  insertion")
for i, st in enumerate(steps):
    ins = "-"
    if st.event is not None:
        e1, e2 = st.event.targets
        kind = "same-edge" if e1 == e2 else "two-edge"
        ins = f"{kind} on face {st.event.face}"
    print(f"{i:>4} {st.map.n_vertices:>4} {st.map.n_edges:>4} "
          f"{st.map.n_internal_faces:>5} {len(st.covers):>6} "
          f"{len(st.labellings):>10} {len(st.hamiltonian):>11}  {ins}")
    if not st.hamiltonian:
        print("     ^ this map has no Hamiltonian cover in its closure")

write_trace(steps, "growth_trace.jsonl")
print(f"\ntrace written to growth_trace.jsonl ({len(steps)} records)")
