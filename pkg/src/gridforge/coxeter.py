"""Reflection groups of the cubical honeycombs, with exact arithmetic.

A honeycomb with Schlafli symbol {4,3,...,c} is governed by the Coxeter
group W generated by reflections s_0..s_{r-1} in the walls of a simplex
chamber.  Cells of the honeycomb correspond to cosets of the maximal
standard parabolic subgroups: a d-dimensional cell is a coset w P_d where
P_d is generated by all reflections except s_d.  Vertices omit s_0, top
cells omit s_{r-1}.

Everything is computed exactly.  Reflection matrices live in the subring
Z[sqrt2, phi] (see gridforge.field), so group elements are tuples of
integer 4-tuples and never suffer rounding.  Cosets are identified either
by an exact fixed-point vector (hyperbolic systems, where the bilinear
form is invertible) or by the lexicographically least matrix in the coset
(degenerate Euclidean systems, whose parabolics are small).
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from gridforge.field import (
    QF, RONE, RZERO, cos_pi, qf_from_ring, ring_from_qf, ring_key, radd,
    rmul, rneg,
)

SYSTEM_LABELS = {
    "{4,4}": (4, 4),
    "{4,3,4}": (4, 3, 4),
    "{4,3,3,4}": (4, 3, 3, 4),
    "{4,3,5}": (4, 3, 5),
    "{4,3,3,5}": (4, 3, 3, 5),
}

_TWO_COS_RING = {2: RZERO, 3: RONE, 4: (0, 1, 0, 0), 5: (0, 0, 1, 0)}


def _mat_mul(a, b):
    cols = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = RZERO
            for x, y in zip(row, col):
                if x != RZERO and y != RZERO:
                    acc = radd(acc, rmul(x, y))
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def _mat_vec(m, v):
    out = []
    for row in m:
        acc = RZERO
        for x, y in zip(row, v):
            if x != RZERO and y != RZERO:
                acc = radd(acc, rmul(x, y))
        out.append(acc)
    return tuple(out)


def _transpose(m):
    return tuple(zip(*m))


def _identity(rank):
    return tuple(tuple(RONE if i == j else RZERO for j in range(rank))
                 for i in range(rank))


def matrix_key(m):
    """Entry-lexicographic key: coefficients in the order (1, sqrt2,
    sqrt5, sqrt10), row-major."""
    return tuple(ring_key(e) for row in m for e in row)


def _qf_matrix(m):
    return [[qf_from_ring(e) for e in row] for row in m]


def _qf_mat_inverse(m):
    """Exact inverse of a square QF matrix by Gauss-Jordan elimination."""
    n = len(m)
    a = [list(row) + [QF(1) if i == j else QF(0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_inverse(m):
    """Inverse of a group element, returned in ring coordinates."""
    inv = _qf_mat_inverse(_qf_matrix(m))
    return tuple(tuple(ring_from_qf(x) for x in row) for row in inv)


def _qf_det(m):
    n = len(m)
    a = [list(row) for row in m]
    det = QF(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return QF(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


class CoxeterSystem:
    """A linear-diagram Coxeter system with verified exact matrices."""

    def __init__(self, name):
        if name not in SYSTEM_LABELS:
            raise ValueError(f"unknown system {name!r}; known: "
                             + ", ".join(sorted(SYSTEM_LABELS)))
        labels = SYSTEM_LABELS[name]
        rank = len(labels) + 1
        self.name = name
        self.labels = labels
        self.rank = rank

        def m_of(i, j):
            if i == j:
                return 1
            if abs(i - j) == 1:
                return labels[min(i, j)]
            return 2

        self.bilinear = tuple(
            tuple(-cos_pi(m_of(i, j)) for j in range(rank)) for i in range(rank))
        # 4B has all entries in the integer ring, enabling exact
        # B-preservation checks on ring matrices
        self.bilinear4 = tuple(
            tuple(ring_from_qf(4 * self.bilinear[i][j]) for j in range(rank))
            for i in range(rank))

        gens = []
        for i in range(rank):
            rows = []
            for j in range(rank):
                if j != i:
                    rows.append(tuple(RONE if k == j else RZERO
                                      for k in range(rank)))
                else:
                    row = []
                    for k in range(rank):
                        if k == i:
                            row.append((-1, 0, 0, 0))
                        else:
                            row.append(_TWO_COS_RING[m_of(i, k)])
                    rows.append(tuple(row))
            gens.append(tuple(rows))
        self.generators = tuple(gens)

        self._verify()
        det = _qf_det([list(r) for r in self.bilinear])
        self.affine = not det
        if not self.affine:
            sig = self._signature()
            if sig != (rank - 1, 1):
                raise AssertionError(f"{name}: expected signature "
                                     f"({rank - 1}, 1), got {sig}")
            self.fixed_vectors = tuple(self._fixed_vector(i)
                                       for i in range(rank))
        else:
            self.fixed_vectors = None

    def _verify(self):
        ident = _identity(self.rank)
        b4 = self.bilinear4
        for i, g in enumerate(self.generators):
            if _mat_mul(g, g) != ident:
                raise AssertionError(f"generator {i} is not an involution")
            if _mat_mul(_mat_mul(_transpose(g), b4), g) != b4:
                raise AssertionError(f"generator {i} does not preserve the form")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = 2 if abs(i - j) > 1 else self.labels[i]
                prod = _mat_mul(self.generators[i], self.generators[j])
                power = prod
                order = 1
                while power != ident:
                    power = _mat_mul(power, prod)
                    order += 1
                    if order > m:
                        raise AssertionError(f"(s{i} s{j}) exceeds order {m}")
                if order != m:
                    raise AssertionError(
                        f"(s{i} s{j}) has order {order}, expected {m}")

    def _signature(self):
        """(positives, negatives) of B via leading principal minors."""
        prev = QF(1)
        pos = neg = 0
        for k in range(1, self.rank + 1):
            minor = _qf_det([list(row[:k]) for row in self.bilinear[:k]])
            if not minor:
                raise AssertionError("unexpected zero principal minor")
            if (minor.sign() > 0) == (prev.sign() > 0):
                pos += 1
            else:
                neg += 1
            prev = minor
        return (pos, neg)

    def _fixed_vector(self, i):
        """Primitive ring vector spanning the intersection of the kernels
        of B(e_j, .) for j != i; its stabiliser in W is exactly P_i."""
        rows = [list(self.bilinear[j]) for j in range(self.rank) if j != i]
        n = self.rank
        # Gauss elimination to row echelon form
        pivots = []
        r = 0
        for c in range(n):
            pivot = next((k for k in range(r, len(rows)) if rows[k][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for k in range(len(rows)):
                if k != r and rows[k][c]:
                    f = rows[k][c]
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
            pivots.append(c)
            r += 1
        if r != n - 1:
            raise AssertionError("fixed-point system is degenerate")
        free = next(c for c in range(n) if c not in pivots)
        x = [QF(0)] * n
        x[free] = QF(1)
        for row, c in zip(rows, pivots):
            x[c] = -row[free]
        # clear denominators, making every entry a ring integer
        denom = 1
        for v in x:
            for coeff in (v.a, v.b, v.c, v.d):
                k = coeff.denominator
                denom = denom * k // _gcd(denom, k)
        vec = [ring_from_qf(QF(2 * denom) * v) for v in x]
        g = 0
        for e in vec:
            for t in e:
                g = _gcd(g, abs(t))
        vec = tuple(tuple(t // g for t in e) for e in vec)
        pairing = sum((self.bilinear[i][k] * qf_from_ring(vec[k])
                       for k in range(n)), QF(0))
        if not pairing:
            raise AssertionError("fixed vector degenerate against its wall")
        if pairing.sign() < 0:
            vec = tuple(rneg(e) for e in vec)
        return vec

    def parabolic_gens(self, d):
        """Generator indices of the parabolic fixing a d-cell."""
        if not 0 <= d < self.rank:
            raise ValueError(f"no {d}-cells in rank {self.rank}")
        return frozenset(range(self.rank)) - {d}

    def __repr__(self):
        return f"CoxeterSystem({self.name!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def build_system(name):
    return CoxeterSystem(name)


_ENUM_CACHE = {}

ENUM_CAP_ENV = "GRIDFORGE_ENUM_CAP"
DEFAULT_ENUM_CAP = 2_000_000


def enumerate_parabolic(system, gens):
    """All elements of the standard parabolic <s_i : i in gens>, sorted.

    Breadth-first closure over the generator matrices.  Aborts with
    RuntimeError if the subgroup exceeds the cap in GRIDFORGE_ENUM_CAP
    (default 2,000,000), which guards against asking for an infinite
    parabolic of an affine or hyperbolic system.
    """
    gens = frozenset(gens)
    cache_key = (system.name, gens)
    hit = _ENUM_CACHE.get(cache_key)
    if hit is not None:
        return hit
    cap = int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))
    mats = [system.generators[i] for i in sorted(gens)]
    ident = _identity(system.rank)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in mats:
                wg = _mat_mul(w, g)
                if wg not in seen:
                    seen.add(wg)
                    nxt.append(wg)
                    if len(seen) > cap:
                        raise RuntimeError(
                            f"parabolic {sorted(gens)} of {system.name} "
                            f"exceeds {cap} elements; raise {ENUM_CAP_ENV} "
                            "if this is intended")
        frontier = nxt
    result = tuple(sorted(seen, key=matrix_key))
    _ENUM_CACHE[cache_key] = result
    return result


def parabolic_order(system, gens):
    return len(enumerate_parabolic(system, gens))


class CosetKey:
    """A cell of the honeycomb: the coset rep * P_d of a maximal parabolic.

    Two keys are equal iff the cosets agree.  Hyperbolic systems decide
    this through the exact fixed-point vector rep * x_d (a one-matrix-vector
    operation); Euclidean systems fall back to the lexicographically least
    matrix of the coset.  min_rep() gives that canonical matrix either way.
    """

    __slots__ = ("system", "gens", "rep", "dim", "vec", "_key", "_minrep")

    def __init__(self, system, gens, rep):
        gens = frozenset(gens)
        missing = sorted(set(range(system.rank)) - gens)
        if len(missing) != 1:
            raise ValueError("cells correspond to maximal parabolics; "
                             f"got generator set {sorted(gens)}")
        self.system = system
        self.gens = gens
        self.rep = rep
        self.dim = missing[0]
        self._minrep = None
        if system.fixed_vectors is not None:
            self.vec = _mat_vec(rep, system.fixed_vectors[self.dim])
            self._key = tuple(ring_key(e) for e in self.vec)
        else:
            self.vec = None
            self._minrep = min(
                (_mat_mul(rep, p) for p in enumerate_parabolic(system, gens)),
                key=matrix_key)
            self._key = matrix_key(self._minrep)

    def min_rep(self):
        """Lexicographically least matrix of the coset (canonical form)."""
        if self._minrep is None:
            self._minrep = min(
                (_mat_mul(self.rep, p)
                 for p in enumerate_parabolic(self.system, self.gens)),
                key=matrix_key)
        return self._minrep

    def _ident(self):
        return (self.system.name, self.dim, self._key)

    def __eq__(self, other):
        if not isinstance(other, CosetKey):
            return NotImplemented
        return self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __lt__(self, other):
        if not isinstance(other, CosetKey):
            return NotImplemented
        return self._ident() < other._ident()

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __repr__(self):
        return f"<{self.system.name} {self.dim}-cell {self._key}>"


def identity_cell(system, d):
    return CosetKey(system, system.parabolic_gens(d), _identity(system.rank))


_TRANSVERSAL_CACHE = {}


def _transversal(system, d, j):
    """Coset reps t such that the j-cells incident to a d-cell w P_d are
    exactly the w t P_j, each exactly once."""
    key = (system.name, d, j)
    hit = _TRANSVERSAL_CACHE.get(key)
    if hit is not None:
        return hit
    gens_j = system.parabolic_gens(j)
    seen = set()
    reps = []
    for p in enumerate_parabolic(system, system.parabolic_gens(d)):
        k = CosetKey(system, gens_j, p)
        if k not in seen:
            seen.add(k)
            reps.append(p)
    reps = tuple(reps)
    _TRANSVERSAL_CACHE[key] = reps
    return reps


def cell_faces(cell, j):
    """Cells of dimension j incident to the given cell (faces when j is
    lower, cofaces when higher), as a sorted tuple of keys."""
    system = cell.system
    if j == cell.dim:
        return (cell,)
    gens_j = system.parabolic_gens(j)
    out = [CosetKey(system, gens_j, _mat_mul(cell.rep, t))
           for t in _transversal(system, cell.dim, j)]
    return tuple(sorted(out))


def neighbor(top_cell, face):
    """The other top-dimensional cell sharing the given facet."""
    system = top_cell.system
    tops = cell_faces(face, system.rank - 1)
    others = [c for c in tops if c != top_cell]
    if len(others) != len(tops) - 1:
        raise ValueError("cell is not incident to the facet")
    if len(others) != 1:
        raise ValueError(f"facet has {len(tops)} top cells, expected 2")
    return others[0]


def transform(g, cell):
    """Apply a group element (ring matrix) to a cell."""
    return CosetKey(cell.system, cell.gens, _mat_mul(g, cell.rep))


def stabilizer(cell):
    """Elements of W fixing the cell, as ring matrices."""
    w_inv = mat_inverse(cell.rep)
    return tuple(_mat_mul(_mat_mul(cell.rep, p), w_inv)
                 for p in enumerate_parabolic(cell.system, cell.gens))


def square_vertex_cycle(square):
    """The 4 vertices of a square cell in cyclic order.

    Corners are the orbit of the base vertex under the rotation s_0 s_1,
    which turns the square by a quarter; the starting corner depends on
    the coset representative, so the cycle is canonical up to rotation
    and reflection, which is all a gluing pattern needs.
    """
    system = square.system
    if square.dim != 2:
        raise ValueError("not a square cell")
    gens0 = system.parabolic_gens(0)
    rot = _mat_mul(system.generators[0], system.generators[1])
    out = []
    rep = square.rep
    for _ in range(4):
        out.append(CosetKey(system, gens0, rep))
        rep = _mat_mul(rep, rot)
    if len(set(out)) != 4:
        raise AssertionError("square corners are not distinct")
    return tuple(out)


def incidence_counts(system, d):
    """Numbers of k-cells incident to a d-cell, for k = d+1 .. rank-1.

    Computed from parabolic subgroup orders: the count is
    |P_d| / |P_d intersect P_k|, and the intersection is the standard
    parabolic omitting both d and k.
    """
    all_gens = frozenset(range(system.rank))
    out = []
    big = parabolic_order(system, all_gens - {d})
    for k in range(d + 1, system.rank):
        small = parabolic_order(system, all_gens - {d, k})
        count, rem = divmod(big, small)
        if rem:
            raise AssertionError("parabolic order does not divide")
        out.append(count)
    return tuple(out)


# Incidence numbers as claimed in the source catalogue of these honeycombs.
# Two of the edge rows disagree with the group-theoretic computation (and
# with a direct lattice count, for the Euclidean system); the stats report
# marks them as differing rather than silently adopting either side.
CLAIMED_INCIDENCE = {
    "{4,4}": {0: (4, 4)},
    "{4,3,4}": {0: (6, 12, 8), 1: (4, 4)},
    "{4,3,3,4}": {0: (8, 24, 32, 16), 1: (6, 32, 16), 2: (4, 4)},
    "{4,3,5}": {0: (12, 30, 20), 1: (5, 5)},
    "{4,3,3,5}": {0: (120, 720, 1200, 600), 1: (6, 32, 16), 2: (5, 5)},
}
