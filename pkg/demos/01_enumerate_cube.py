"""Walk through the core enumeration on the cube map.

Starting from a single even cycle cover (two opposite quad faces), one
reselection step already yields four new covers; iterating to the fixed
point finds all nine even cycle covers of the cube, six of which are
Hamiltonian cycles, inducing four distinct proper 3-edge-labellings.
"""

from cubicmaps import (
    cover_closure,
    hamiltonian_covers,
    labelling_from_cover,
    off_edges,
    successor_covers,
)
from cubicmaps.fixtures import cube_map, cube_seed
from cubicmaps.labelling import closure_labellings

m = cube_map()
seed = cube_seed()
print(f"cube: {m}")
print(f"seed cover: {seed}")
print(f"off-cover edges (class c of the induced labelling): {sorted(off_edges(m, seed))}")
print(f"induced labelling: {labelling_from_cover(m, seed)}")

print("\none reselection step produces:")
for cover in sorted(successor_covers(m, seed)):
    kind = "Hamiltonian cycle" if len(cover) == 1 else f"{len(cover)} cycles"
    print(f"  {cover}  ({kind})")

closure = cover_closure(m, seed)
hams = hamiltonian_covers(m, closure)
labellings = closure_labellings(m, closure)
print(f"\nfixed point: {len(closure)} covers, {len(hams)} Hamiltonian,"
      f" {len(labellings)} distinct labellings")
print("\nall covers:")
for cover in closure:
    print(f"  {cover}")
print("\nall labellings (three unordered classes each):")
for lab in labellings:
    print(f"  {lab}")
