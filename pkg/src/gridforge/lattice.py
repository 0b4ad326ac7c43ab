"""Cells of the cubical tiling of Z^n, addressed by doubled coordinates.

Every cell of the unit-cube tiling has a barycenter with half-integer
coordinates, so twice the barycenter is an integer vector that pins the
cell down uniquely.  A key's parity pattern tells its dimension:

    vertex  (0 odd coordinates)   e.g. (0, 0, 0)
    edge    (1 odd coordinate)    e.g. (1, 0, 0)
    square  (2 odd coordinates)   e.g. (1, 1, 0)
    cube    (3 odd coordinates)   e.g. (1, 1, 1)

and so on in higher rank.  Face and coface enumeration are pure parity
bookkeeping: a face keeps a subset of the odd coordinates odd and rounds
the rest to a neighbouring even value, a coface does the reverse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb


def cell_dim(key):
    """Dimension of the cell with the given doubled-coordinate key."""
    return sum(1 for x in key if x % 2)


def _odd_positions(key):
    return [i for i, x in enumerate(key) if x % 2]


def faces(key, k):
    """All k-dimensional faces of a cell, sorted.

    Includes the cell itself when k equals its dimension.  A d-cell has
    binom(d, k) * 2^(d-k) faces of dimension k.
    """
    odd = _odd_positions(key)
    d = len(odd)
    if k > d or k < 0:
        return ()
    out = []
    for keep in itertools.combinations(odd, k):
        collapse = [i for i in odd if i not in keep]
        for signs in itertools.product((-1, 1), repeat=len(collapse)):
            face = list(key)
            for i, s in zip(collapse, signs):
                face[i] = key[i] + s
            out.append(tuple(face))
    return tuple(sorted(out))


def cofaces(key, k):
    """All k-dimensional cells of the full tiling having this cell as a face."""
    d = cell_dim(key)
    n = len(key)
    if k < d or k > n:
        return ()
    even = [i for i, x in enumerate(key) if x % 2 == 0]
    out = []
    for grow in itertools.combinations(even, k - d):
        for signs in itertools.product((-1, 1), repeat=len(grow)):
            cell = list(key)
            for i, s in zip(grow, signs):
                cell[i] = key[i] + s
            out.append(tuple(cell))
    return tuple(sorted(out))


def coface_count(d, k, n):
    """Number of k-cofaces of a d-cell in the tiling of Z^n, in closed form."""
    if k < d or k > n:
        return 0
    return comb(n - d, k - d) * 2 ** (k - d)


def corners_cyclic(square):
    """The 4 vertices of a square in cyclic order around its perimeter."""
    odd = _odd_positions(square)
    if len(odd) != 2:
        raise ValueError(f"not a square key: {square}")
    u, v = odd
    out = []
    for du, dv in ((-1, -1), (1, -1), (1, 1), (-1, 1)):
        c = list(square)
        c[u] = square[u] + du
        c[v] = square[v] + dv
        out.append(tuple(c))
    return tuple(out)


def translate(squares, vec):
    """Translate cell keys by a doubled-coordinate vector.

    The vector must have all even entries, i.e. be a genuine lattice
    translation; odd entries would scramble cell dimensions.
    """
    vec = tuple(vec)
    if any(x % 2 for x in vec):
        raise ValueError(f"translation vector must be even in doubled coords: {vec}")
    return frozenset(tuple(a + b for a, b in zip(s, vec)) for s in squares)


def embed_higher(squares, n):
    """Pad keys with trailing zeros so they live in Z^n."""
    squares = frozenset(squares)
    for s in squares:
        if len(s) > n:
            raise ValueError(f"cell {s} already has more than {n} coordinates")
    return frozenset(s + (0,) * (n - len(s)) for s in squares)


def cube_union_boundary(cells):
    """Boundary of a union of same-dimension cells.

    Given solid d-cells, returns the (d-1)-faces that belong to exactly one
    of them.  For a finite union of unit cubes in Z^3 this is the usual
    boundary surface.
    """
    cells = list(cells)
    if not cells:
        return frozenset()
    d = cell_dim(cells[0])
    for c in cells:
        if cell_dim(c) != d:
            raise ValueError("cells must all have the same dimension")
    if len(set(cells)) != len(cells):
        raise ValueError("duplicate cells in union")
    count = {}
    for c in cells:
        for f in faces(c, d - 1):
            count[f] = count.get(f, 0) + 1
    return frozenset(f for f, m in count.items() if m == 1)


def ambient_dim(ambient):
    """Coordinate dimension for a lattice ambient tag like "Z3"."""
    if ambient.startswith("Z") and ambient[1:].isdigit():
        return int(ambient[1:])
    raise ValueError(f"not a lattice ambient: {ambient!r}")


def is_lattice_ambient(ambient):
    return ambient.startswith("Z") and ambient[1:].isdigit()


@dataclass(frozen=True)
class GriddedComplex:
    """A set of squares of a cubical tiling, tagged with its ambient space.

    For lattice ambients ("Z2", "Z3", "Z4") the squares are doubled integer
    keys.  For the curved honeycombs ("{4,3,5}", "{4,3,3,5}") they are coset
    keys from gridforge.coxeter.  meta carries construction notes and does
    not take part in equality.
    """

    ambient: str
    squares: frozenset
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "squares", frozenset(self.squares))
        if is_lattice_ambient(self.ambient):
            n = ambient_dim(self.ambient)
            for s in self.squares:
                if len(s) != n or cell_dim(s) != 2:
                    raise ValueError(f"not a square of {self.ambient}: {s}")

    def __len__(self):
        return len(self.squares)
