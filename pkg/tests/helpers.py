"""Shared brute-force oracles for the test suite.

Everything here recomputes answers by definitions as blunt as possible, so
the library can be checked against code that shares none of its logic.
"""

from __future__ import annotations

import itertools
import random

# Lines appended by the acceptance tests; conftest echoes them after the run.
ACCEPTANCE_LINES = []


def is_face_of(a, c):
    """Face relation between doubled-coordinate cells, straight from the
    definition: a face agrees with the cell on even coordinates and deviates
    by at most 1 on odd ones."""
    for x, y in zip(a, c):
        if y % 2 == 0:
            if x != y:
                return False
        elif x not in (y - 1, y, y + 1):
            return False
    return True


def cell_dim(key):
    return sum(1 for x in key if x % 2)


def brute_faces(key, k):
    """Enumerate the +-1 box around the cell and keep the k-faces."""
    ranges = [(x - 1, x, x + 1) for x in key]
    out = set()
    for cand in itertools.product(*ranges):
        if cell_dim(cand) == k and is_face_of(cand, key):
            out.add(cand)
    return out


def brute_cofaces(key, k):
    ranges = [(x - 1, x, x + 1) for x in key]
    out = set()
    for cand in itertools.product(*ranges):
        if cell_dim(cand) == k and is_face_of(key, cand):
            out.add(cand)
    return out


def gf2_rank(rows):
    """Rank over GF(2) of a list of int bitmasks."""
    rank = 0
    pivots = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
            pivots.sort(reverse=True)
            rank += 1
    return rank


def solid_betti_numbers(cubes):
    """GF(2) Betti numbers b0, b1, b2 of a union of solid unit cubes.

    Builds the full cubical chain complex (vertices, edges, squares, cubes
    of the union) and row-reduces the boundary matrices.
    """
    from gridforge.lattice import faces

    cubes = set(cubes)
    squares = sorted({f for c in cubes for f in faces(c, 2)})
    edges = sorted({f for s in squares for f in faces(s, 1)})
    verts = sorted({f for e in edges for f in faces(e, 0)})
    v_idx = {v: i for i, v in enumerate(verts)}
    e_idx = {e: i for i, e in enumerate(edges)}
    s_idx = {s: i for i, s in enumerate(squares)}

    d1 = [sum(1 << v_idx[v] for v in faces(e, 0)) for e in edges]
    d2 = [sum(1 << e_idx[x] for x in faces(s, 1)) for s in squares]
    d3 = [sum(1 << s_idx[x] for x in faces(c, 2)) for c in sorted(cubes)]
    r1, r2, r3 = gf2_rank(d1), gf2_rank(d2), gf2_rank(d3)
    b0 = len(verts) - r1
    b1 = (len(edges) - r1) - r2
    b2 = (len(squares) - r2) - r3
    return b0, b1, b2


def random_polyomino(rng, n_cubes):
    """Grow a random face-connected set of unit cubes in Z^3."""
    cubes = {(1, 1, 1)}
    steps = [(2, 0, 0), (-2, 0, 0), (0, 2, 0), (0, -2, 0), (0, 0, 2), (0, 0, -2)]
    while len(cubes) < n_cubes:
        base = rng.choice(sorted(cubes))
        d = rng.choice(steps)
        cubes.add((base[0] + d[0], base[1] + d[1], base[2] + d[2]))
    return cubes


def solid_is_well_composed(cubes):
    """True when no diagonal edge or antipodal vertex configuration occurs.

    A union of cubes has a manifold boundary exactly when, around every
    lattice edge, the four surrounding cubes are not filled in a checker
    pattern, and around every lattice vertex the filled octants are not
    exactly an antipodal pair (nor all but an antipodal pair).
    """
    cubes = set(cubes)
    edges = {e for c in cubes for e in brute_faces(c, 1)}
    for e in edges:
        u, v = [i for i, x in enumerate(e) if x % 2 == 0]
        pattern = []
        for du, dv in ((-1, -1), (1, -1), (1, 1), (-1, 1)):
            q = list(e)
            q[u] += du
            q[v] += dv
            pattern.append(tuple(q) in cubes)
        if sum(pattern[i] != pattern[(i + 1) % 4] for i in range(4)) == 4:
            return False
    verts = {w for c in cubes for w in brute_faces(c, 0)}
    for w in verts:
        octants = brute_cofaces(w, 3)
        present = [o for o in octants if o in cubes]
        absent = [o for o in octants if o not in cubes]
        for pair in (present, absent):
            if len(pair) == 2 and all(a != b for a, b in zip(*pair)):
                return False
    return True


def orientation_flip(cyc_a, cyc_b):
    """+1 if the shared edge is traversed oppositely (orientations agree),
    -1 if traversed the same way; None if no shared edge."""
    def directed(cyc):
        return [(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]

    for u, v in directed(cyc_a):
        if (u, v) in directed(cyc_b):
            return -1
        if (v, u) in directed(cyc_b):
            return +1
    return None
