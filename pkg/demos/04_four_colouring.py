"""From a proper edge labelling to a four-colouring of the faces.

Crossing an edge flips a sign pair according to the edge's class (first
index, second index, or both), so a proper labelling propagates to a
proper colouring of all faces including the outer background.  Arbitrary
planar maps join the game through vertex blow-up: every vertex of degree
d becomes a small d-cycle, the blown-up cubic map gets coloured, and the
colouring pulls back.
"""

from cubicmaps import (
    all_proper_labellings,
    blow_up,
    face_colouring_from_labelling,
    pull_back_colouring,
    validate_face_colouring,
    validate_pulled_back,
)
from cubicmaps.fixtures import (
    tetrahedron_labelling,
    tetrahedron_map,
    wheel_rotation,
)

m = tetrahedron_map()
lab = tetrahedron_labelling()
print(f"tetrahedron labelling (classes): {lab}")
fc = face_colouring_from_labelling(m, lab)
print(f"face colouring: {fc}")
print(f"proper: {validate_face_colouring(m, fc)}, "
      f"colours used: {len(set(fc.values()))}")

for degree in (4, 5):
    print(f"\nwheel with a degree-{degree} hub:")
    rmap = wheel_rotation(degree)
    cubic, mapping = blow_up(rmap)
    print(f"  blow-up: {cubic}")
    print(f"  hub became face {mapping.vertex_ring_face[degree + 1]} "
          f"(a {degree}-gon of ring edges)")
    lab = all_proper_labellings(cubic)[0]
    fc = face_colouring_from_labelling(cubic, lab)
    back = pull_back_colouring(fc, mapping)
    print(f"  pulled-back colouring of the original map: {back}")
    print(f"  proper on the original map: {validate_pulled_back(mapping, back)}")
