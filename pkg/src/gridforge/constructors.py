"""Catalogue of gridded surfaces in the cubical lattices Z^2, Z^3, Z^4.

The basic closed pieces are a cube-boundary sphere, a 32-square torus
(boundary of a 3x3x1 block of cubes with the middle cube removed) and a
30-square projective plane that needs a fourth coordinate to embed.  Larger
genus and crosscap numbers come from chaining copies with the gridded
connected sum.  The spiral-tree family thickens a plane binary tree into a
sphere whose shape supports pruning and decorating operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gridforge import lattice
from gridforge.lattice import GriddedComplex, cube_union_boundary, translate
from gridforge.surface import GridCollisionError, connected_sum_embedded


def sphere_cube():
    """The 6 faces of a single unit cube."""
    return GriddedComplex("Z3", lattice.faces((1, 1, 1), 2), meta={"kind": "sphere"})


# Torus: boundary of a 3x3x1 block of cubes with the centre cube removed.
# Doubled coordinates; the block occupies [0,6] x [0,6] x [0,2].
FRAME_TORUS_SQUARES = (
    # bottom z = 0 (the 3x3 cube footprint minus the middle)
    (1, 1, 0), (3, 1, 0), (5, 1, 0),
    (1, 3, 0), (5, 3, 0),
    (1, 5, 0), (3, 5, 0), (5, 5, 0),
    # top z = 2
    (1, 1, 2), (3, 1, 2), (5, 1, 2),
    (1, 3, 2), (5, 3, 2),
    (1, 5, 2), (3, 5, 2), (5, 5, 2),
    # outer walls normal to x
    (0, 1, 1), (0, 3, 1), (0, 5, 1),
    (6, 1, 1), (6, 3, 1), (6, 5, 1),
    # outer walls normal to y
    (1, 0, 1), (3, 0, 1), (5, 0, 1),
    (1, 6, 1), (3, 6, 1), (5, 6, 1),
    # walls of the middle hole
    (2, 3, 1), (4, 3, 1), (3, 2, 1), (3, 4, 1),
)


def frame_torus():
    """A 32-square torus: a square picture frame of cubes, hollow middle."""
    return GriddedComplex("Z3", FRAME_TORUS_SQUARES, meta={"kind": "torus"})


# Projective plane: 30 squares in Z^4.  The first 24 lie in the w = 0
# hyperplane; six squares use the fourth direction to let the surface pass
# through itself-free.  Every edge lies in exactly two squares.
CROSSCAP_Z4_SQUARES = (
    # squares spanning x,y
    (1, 1, 0, 0), (3, 1, 0, 0), (3, 3, 0, 0), (1, 3, 0, 0),
    (3, 1, 2, 0), (1, 3, 2, 0),
    (1, 1, 4, 0), (3, 3, 4, 0),
    # squares spanning x,z
    (1, 0, 1, 0), (1, 0, 3, 0), (3, 0, 1, 0),
    (1, 2, 3, 0), (3, 2, 3, 0),
    (1, 4, 1, 0), (3, 4, 1, 0), (3, 4, 3, 0),
    # squares spanning y,z
    (0, 1, 1, 0), (0, 1, 3, 0), (0, 3, 1, 0),
    (2, 1, 3, 2), (2, 3, 3, 2),
    (4, 1, 1, 0), (4, 3, 1, 0), (4, 3, 3, 0),
    # squares spanning y,w
    (2, 1, 2, 1), (2, 1, 4, 1), (2, 3, 2, 1), (2, 3, 4, 1),
    # squares spanning z,w
    (2, 0, 3, 1), (2, 4, 3, 1),
)


def crosscap_z4():
    """A 30-square projective plane in Z^4."""
    return GriddedComplex("Z4", CROSSCAP_Z4_SQUARES, meta={"kind": "crosscap"})


def _plane_square(complex_, axis, side):
    """Smallest axis-normal square in the extreme plane on the given side."""
    cand = [s for s in complex_.squares if s[axis] % 2 == 0]
    if not cand:
        raise ValueError(f"no squares normal to axis {axis}")
    plane = max(s[axis] for s in cand) if side > 0 else min(s[axis] for s in cand)
    return min(s for s in cand if s[axis] == plane)


def closed_surface(orientable, count):
    """Closed surface of genus `count` (orientable) or with `count`
    crosscaps (nonorientable), built by chaining copies along the x axis.

    count 0 is the cube sphere; the nonorientable family needs count >= 1
    and lives in Z^4.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if orientable:
        if count == 0:
            return sphere_cube()
        acc = frame_torus()
        piece = frame_torus
    else:
        if count == 0:
            raise ValueError("a closed nonorientable surface needs >= 1 crosscap")
        acc = crosscap_z4()
        piece = crosscap_z4
    for _ in range(count - 1):
        b = piece()
        acc = connected_sum_embedded(
            acc, _plane_square(acc, 0, +1), b, _plane_square(b, 0, -1), axis=0)
    kind = "genus" if orientable else "crosscaps"
    return GriddedComplex(acc.ambient, acc.squares, meta={kind: count})


def klein_bottle():
    """Connected sum of two crosscaps: 62 squares in Z^4."""
    return closed_surface(False, 2)


# ---------------------------------------------------------------------------
# Spiral trees in the plane and their thickenings.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneTree:
    """A tree of axis-parallel unit segments in Z^2.

    segments are pairs of adjacent lattice points, each pair sorted.  leaves
    are the degree-1 endpoints that hang off the final generation.
    """

    segments: frozenset
    leaves: tuple
    depth: int


def _seg(a, b):
    return (a, b) if a <= b else (b, a)


def _polyline_segments(points):
    segs = []
    for p, q in zip(points, points[1:]):
        dx = (q[0] > p[0]) - (q[0] < p[0])
        dy = (q[1] > p[1]) - (q[1] < p[1])
        if dx and dy:
            raise ValueError(f"polyline corner {p}->{q} is not axis-parallel")
        cur = p
        while cur != q:
            nxt = (cur[0] + dx, cur[1] + dy)
            segs.append(_seg(cur, nxt))
            cur = nxt
    return segs


def spiral_tree(depth):
    """A complete binary tree drawn in the plane with spiralling arms.

    The branch point numbered n sits at (n, 2n+1); its two outgoing arms
    wind once around everything built so far and end at the branch points
    2n+2 and 2n+3.  Arms never touch each other away from their endpoints,
    which lets the thickened version stay embedded.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    segs = []
    segs += _polyline_segments([(0, 0), (0, 1)])
    segs += _polyline_segments([(0, 0), (1, 0), (1, 3)])
    for n in range(depth):
        a = [(n, 2 * n + 1), (-2 * n - 1, 2 * n + 1), (-2 * n - 1, -2 * n - 1),
             (2 * n + 2, -2 * n - 1), (2 * n + 2, 4 * n + 5)]
        b = [(n, 2 * n + 1), (n, 2 * n + 2), (-2 * n - 2, 2 * n + 2),
             (-2 * n - 2, -2 * n - 2), (2 * n + 3, -2 * n - 2),
             (2 * n + 3, 4 * n + 7)]
        segs += _polyline_segments(a)
        segs += _polyline_segments(b)
    segments = frozenset(segs)
    if len(segments) != len(segs):
        raise AssertionError("spiral arms overlap")
    leaves = tuple((m, 2 * m + 1) for m in range(depth, 2 * depth + 2))
    return PlaneTree(segments=segments, leaves=leaves, depth=depth)


SCALE = 5  # lattice dilation applied before thickening


def _thicken(segments):
    """Cubes of the slab 0 <= z <= 1 around the scaled tree."""
    points = set()
    for (x1, y1), (x2, y2) in segments:
        a = (SCALE * x1, SCALE * y1)
        b = (SCALE * x2, SCALE * y2)
        dx = (b[0] > a[0]) - (b[0] < a[0])
        dy = (b[1] > a[1]) - (b[1] < a[1])
        cur = a
        points.add(cur)
        while cur != b:
            cur = (cur[0] + dx, cur[1] + dy)
            points.add(cur)
    if not segments:
        points.add((0, 0))
    cubes = set()
    for (a, b) in points:
        for i in (a - 1, a):
            for j in (b - 1, b):
                cubes.add((2 * i + 1, 2 * j + 1, 1))
    return cubes


def tree_of_life(depth):
    """Sphere obtained by thickening the scaled spiral tree in a slab."""
    tree = spiral_tree(depth)
    squares = cube_union_boundary(_thicken(tree.segments))
    stubs = tuple((2 * SCALE * m, 2 * SCALE * (2 * m + 1))
                  for m in range(depth, 2 * depth + 2))
    return GriddedComplex("Z3", squares, meta={
        "kind": "tree_of_life",
        "depth": depth,
        "tree": tree,
        "stubs": stubs,
    })


@dataclass(frozen=True)
class EndDecoration:
    """A truncated infinite end: kind is cylinder, ladder or crosscap_chain,
    truncation is how many repeating blocks of the infinite picture to keep."""

    kind: str
    truncation: int

    def __post_init__(self):
        if self.kind not in ("cylinder", "ladder", "crosscap_chain"):
            raise ValueError(f"unknown end kind {self.kind!r}")
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")


def box_column(height):
    """Boundary of a 1x1xheight column of cubes: a long sphere."""
    if height < 1:
        raise ValueError("height must be >= 1")
    cubes = [(1, 1, 2 * k + 1) for k in range(height)]
    return GriddedComplex("Z3", cube_union_boundary(cubes), meta={"kind": "column"})


def _prune(segments, count):
    """Remove `count` outermost leaf branches, each back to its junction."""
    segments = set(segments)
    for _ in range(count):
        degree = {}
        for s in segments:
            for v in s:
                degree[v] = degree.get(v, 0) + 1
        leaves = [v for v, d in degree.items() if d == 1 and v != (0, 0)]
        if not leaves:
            segments.clear()
            break
        cur = max(leaves)
        while True:
            inc = [s for s in segments if cur in s]
            if len(inc) != 1:
                break
            segments.remove(inc[0])
            cur = inc[0][0] if inc[0][1] == cur else inc[0][1]
    return segments


def _top_candidates(complex_, near):
    """z-normal squares on top of the base slab, nearest to `near` first."""
    out = []
    for s in complex_.squares:
        if s[0] % 2 and s[1] % 2 and s[2] == 2 and all(c == 0 for c in s[3:]):
            d = (s[0] - near[0]) ** 2 + (s[1] - near[1]) ** 2
            out.append((d, s))
    out.sort()
    return [s for _, s in out]


def _embed_complex(c, ambient):
    n = lattice.ambient_dim(ambient)
    return GriddedComplex(ambient, lattice.embed_higher(c.squares, n),
                          meta=dict(c.meta))


def _attach_above(acc, piece, near, open_end):
    """Sum a closed piece onto the slab top near a point, lowest key first.

    With open_end the far extreme square of the attached piece is removed
    afterwards, leaving one boundary circle.  Candidates that would overlap
    existing geometry are skipped.
    """
    axis = 2
    if lattice.ambient_dim(acc.ambient) > lattice.ambient_dim(piece.ambient):
        piece = _embed_complex(piece, acc.ambient)
    fb = _plane_square(piece, axis, -1)
    last = None
    for fa in _top_candidates(acc, near):
        try:
            out = connected_sum_embedded(acc, fa, piece, fb, axis=axis)
        except GridCollisionError as e:
            last = e
            continue
        if open_end:
            shift = tuple(fa[i] + (2 if i == axis else 0) - fb[i]
                          for i in range(len(fa)))
            moved = translate(piece.squares, shift)
            lid = max(s for s in moved if s in out.squares)
            out = GriddedComplex(out.ambient, out.squares - {lid},
                                 meta=out.meta)
        return out
    raise last or GridCollisionError("no room left on the slab top")


def prune_and_decorate(base, prune=0, handles=0, crosscaps=0, ends=()):
    """Prune leaf branches off a thickened spiral tree, then decorate.

    handles sums tori onto the top of the slab, crosscaps sums projective
    planes (lifting everything to Z^4 first), and each EndDecoration
    attaches a truncated infinite end near a surviving stub, left open with
    one boundary circle.
    """
    tree = base.meta.get("tree")
    if tree is None:
        raise ValueError("complex does not carry tree construction data")
    ends = tuple(ends)
    segments = _prune(tree.segments, prune)
    squares = cube_union_boundary(_thicken(segments))
    acc = GriddedComplex("Z3", squares, meta={})

    degree = {}
    for s in segments:
        for v in s:
            degree[v] = degree.get(v, 0) + 1
    stubs = sorted(v for v, d in degree.items() if d == 1) or [(0, 0)]
    stub_pts = [(2 * SCALE * x, 2 * SCALE * y) for x, y in stubs]

    origin = (2 * SCALE * 0, 0)
    for _ in range(handles):
        acc = _attach_above(acc, frame_torus(), origin, open_end=False)

    needs_z4 = crosscaps > 0 or any(e.kind == "crosscap_chain" for e in ends)
    if needs_z4:
        acc = _embed_complex(acc, "Z4")
    for _ in range(crosscaps):
        acc = _attach_above(acc, crosscap_z4(), origin, open_end=False)

    for i, end in enumerate(ends):
        near = stub_pts[i % len(stub_pts)]
        if end.kind == "cylinder":
            piece = box_column(end.truncation)
        elif end.kind == "ladder":
            piece = closed_surface(True, end.truncation)
        else:
            piece = closed_surface(False, end.truncation)
        acc = _attach_above(acc, piece, near, open_end=True)

    meta = {
        "kind": "pruned_tree",
        "depth": tree.depth,
        "pruned": prune,
        "handles": handles,
        "crosscaps": crosscaps,
        "ends": tuple((e.kind, e.truncation) for e in ends),
        "stubs": tuple(stub_pts),
    }
    return GriddedComplex(acc.ambient, acc.squares, meta=meta)
