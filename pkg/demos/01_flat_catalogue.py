"""Tour of the closed surfaces gridded in the cubical lattices.

Every surface here is a set of unit squares from the face grid of Z^3 or
Z^4, encoded by doubled barycenters: a square centered at (1/2, 1/2, 0)
is stored as (1, 1, 0).  The validator checks the two manifold conditions
(every edge in exactly two squares, every vertex link a single circle) and
the classifier computes orientability, Euler characteristic and genus or
crosscap number from the square cycles alone.
"""

from gridforge.constructors import (
    closed_surface, crosscap_z4, frame_torus, klein_bottle, sphere_cube,
)
from gridforge.surface import classify


def show(title, complex_):
    rep = classify(complex_)
    print(f"{title:<28} {len(complex_.squares):>3} squares  "
          f"chi={rep.euler_characteristic:>2}  {rep.class_name}")


print("The basic catalogue")
print("-------------------")
show("cube boundary", sphere_cube())
show("frame torus", frame_torus())
show("crosscap (needs Z^4)", crosscap_z4())
show("Klein bottle", klein_bottle())

print()
print("Chaining connected sums gives every closed surface class:")
for genus in range(4):
    show(f"orientable, genus {genus}", closed_surface(True, genus))
for crosscaps in range(1, 4):
    show(f"nonorientable, {crosscaps} crosscap(s)",
         closed_surface(False, crosscaps))

print()
print("The same builds are available from the command line, e.g.")
print("  gridforge build torus-paper -o torus.json")
print("  gridforge classify torus.json")
print("  gridforge build closed-surface --crosscaps 3 -o surface.json")
