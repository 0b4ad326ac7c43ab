"""Surfaces in the cubic honeycomb {4,3,5} of hyperbolic 3-space.

In flat space four cubes fit around an edge; the hyperbolic honeycomb
{4,3,5} fits five.  The extra room changes which unions of cubes have
surface boundaries: twelve cubes can close into a solid ring whose
boundary is a torus, and a T-shaped block of four cubes gives a pair of
pants.  Cells are cosets of the reflection group of the honeycomb, handled
with exact arithmetic in Z[sqrt(2), golden ratio], so two cells collide
exactly when their cosets coincide.
"""

from gridforge.coxeter import build_system, incidence_counts
from gridforge.export import to_off, vertex_coordinates
from gridforge.honeycombs import (
    closed_orientable_435, hyperbolic_pants_435, hyperbolic_torus_435,
    tree_of_life_435,
)
from gridforge.surface import classify

print("Cubes around an edge: {4,3,4} has "
      f"{incidence_counts(build_system('{4,3,4}'), 1)[1]}, {{4,3,5}} has "
      f"{incidence_counts(build_system('{4,3,5}'), 1)[1]}")

print()
torus = hyperbolic_torus_435()
rep = classify(torus)
print(f"Solid ring of {torus.meta['cube_count']} cubes: boundary has "
      f"{len(torus.squares)} squares, {rep.class_name}")
print(f"  (catalogued square count: {torus.meta['catalogued_square_count']};"
      " the build keeps both numbers in its metadata)")

pants = hyperbolic_pants_435()
rep = classify(pants)
print(f"T-block pair of pants: {len(pants.squares)} squares, "
      f"{rep.class_name}")

print()
print("Gluing pants along their mouths builds a tree of pants, still a"
      " sphere:")
for depth in (1, 2, 3):
    tree = tree_of_life_435(depth)
    rep = classify(tree)
    print(f"  depth {depth}: {tree.meta['pants_count']} pants, "
          f"{len(tree.squares)} squares, {rep.class_name}")

print()
print("Mirror copies of the solid ring chain into any genus:")
for genus in (2, 3):
    rep = classify(closed_orientable_435(genus))
    print(f"  genus {genus}: {rep.class_name}")

print()
coords = vertex_coordinates(torus)
radius = max(sum(x * x for x in p) ** 0.5 for p in coords.values())
off = to_off(torus)
print("Vertices embed in the Klein ball model (straight edges, unit ball):")
print(f"  {len(coords)} vertices, farthest at |x| = {radius:.3f}")
print(f"  to_off(...) writes a {off.splitlines()[1].split()[0]}-vertex OFF"
      " mesh for any viewer")
