"""Surfaces gridded in the curved cubical honeycombs {4,3,5} and {4,3,3,5}.

The same boundary-of-a-cube-union recipe that produces spheres, tori and
trees in Z^3 also works in the hyperbolic honeycombs, except that cube
bookkeeping runs on coset cells instead of integer coordinates.  Walking
"straight" is done cube by cube: exit through the face opposite the entry
face (and, in the 4-dimensional honeycomb, hand the walk from hypercube
to hypercube through their shared wall).
"""

from __future__ import annotations

from collections import Counter, deque

from gridforge.coxeter import (
    build_system, cell_faces, identity_cell, neighbor, square_vertex_cycle,
    stabilizer, transform,
)
from gridforge.lattice import GriddedComplex
from gridforge.surface import (
    AbstractSquareComplex, GridCollisionError, _cycle_key,
    connected_sum_abstract, to_abstract,
)


def union_boundary(cubes):
    """Squares lying in exactly one of the given 3-cells."""
    cubes = list(cubes)
    if len(set(cubes)) != len(cubes):
        raise ValueError("duplicate cube in union")
    counts = Counter()
    for c in cubes:
        counts.update(cell_faces(c, 2))
    return frozenset(s for s, m in counts.items() if m == 1)


def opposite_face(cell, face):
    """The face of `cell` sharing no vertex with `face`.

    In a cube or hypercube this picks out the unique parallel facet, and
    likewise the far edge of a square.
    """
    verts = set(cell_faces(face, 0))
    found = [f for f in cell_faces(cell, face.dim)
             if f != face and not verts & set(cell_faces(f, 0))]
    if len(found) != 1:
        raise ValueError(f"cell has {len(found)} faces opposite to {face!r}")
    return found[0]


def _edge_parallel_class(cube, edge):
    """Edges of the cube reachable by repeatedly jumping to the far side
    of a shared square: the 4 parallel edges of a combinatorial cube."""
    squares = cell_faces(cube, 2)
    seen = {edge}
    frontier = [edge]
    while frontier:
        e = frontier.pop()
        for sq in squares:
            if e in cell_faces(sq, 1):
                far = opposite_face(sq, e)
                if far not in seen:
                    seen.add(far)
                    frontier.append(far)
    return sorted(seen)


def hyperbolic_torus_435():
    """Torus bounding 12 cubes that wrap around 4 parallel edges.

    Take the base cube, the class of 4 mutually parallel edges through it,
    and every other cube touching one of those edges (each edge carries 5
    cubes here, against 4 in flat space; that extra room is what lets the
    ring close up around the base cube).  The union of those 12 cubes is a
    solid ring and its boundary is a genus-1 surface of 48 squares.  The
    source catalogue quotes 44 squares for this surface; the computed
    count is recorded next to the quoted one in the metadata.
    """
    system = build_system("{4,3,5}")
    base = identity_cell(system, 3)
    edges = _edge_parallel_class(base, identity_cell(system, 1))
    if len(edges) != 4:
        raise AssertionError("expected 4 parallel edges in a cube")
    ring = set()
    for e in edges:
        fan = cell_faces(e, 3)
        if len(fan) != 5 or base not in fan:
            raise AssertionError("expected 5 cubes around an edge")
        ring.update(c for c in fan if c != base)
    if len(ring) != 12:
        raise AssertionError(f"expected 12 ring cubes, got {len(ring)}")
    squares = union_boundary(ring)
    meta = {
        "kind": "hyperbolic_torus",
        "cube_count": len(ring),
        "square_count": len(squares),
        "catalogued_square_count": 44,
    }
    return GriddedComplex(system.name, squares, meta)


def hyperbolic_pants_435():
    """Three-holed sphere bounding a T of 4 cubes in {4,3,5}.

    A base cube grows a stem through its least face and two arms through
    an opposite pair of side faces.  The boundary of the 4-cube union is
    an 18-square sphere; puncturing it at the far face of the stem and of
    each arm leaves a 15-square pair of pants.
    """
    system = build_system("{4,3,5}")
    base = identity_cell(system, 3)
    faces = sorted(cell_faces(base, 2))
    f_stem = faces[0]
    f_back = opposite_face(base, f_stem)
    f_arm = min(f for f in faces if f not in (f_stem, f_back))
    f_arm2 = opposite_face(base, f_arm)
    stem = neighbor(base, f_stem)
    arms = (neighbor(base, f_arm), neighbor(base, f_arm2))
    outer = (stem,) + arms
    shared = (f_stem, f_arm, f_arm2)
    for i, a in enumerate(outer):
        for j in range(i + 1, 3):
            if set(cell_faces(a, 2)) & set(cell_faces(outer[j], 2)):
                raise AssertionError("outer cubes must not share a square")
    sphere = union_boundary((base,) + outer)
    if len(sphere) != 18:
        raise AssertionError(f"expected an 18-square sphere, got {len(sphere)}")
    holes = frozenset(opposite_face(c, f) for c, f in zip(outer, shared))
    meta = {
        "kind": "hyperbolic_pants",
        "cube_count": 4,
        "boundary_circles": 3,
    }
    return GriddedComplex(system.name, sphere - holes, meta)


def _transport_up(up, wall, next_cube):
    """Carry an "up" face marker through a shared wall into the next cube.

    The marker and the wall share one edge; of the two faces of the next
    cube along that edge, one is the wall itself and the other is the
    transported marker.
    """
    shared = set(cell_faces(up, 1)) & set(cell_faces(wall, 1))
    if len(shared) != 1:
        raise AssertionError("up marker must be adjacent to the wall")
    edge = shared.pop()
    found = [f for f in cell_faces(next_cube, 2)
             if f != wall and edge in cell_faces(f, 1)]
    if len(found) != 1:
        raise AssertionError("wall edge should lie in exactly 2 faces")
    return found[0]


def _pants_unit(stem, entry, up):
    """Grow one pants piece from its stem cube.

    Returns (cubes, arm holes): the 4 cubes of the piece and, for each
    arm, the (arm cube, far face, transported up marker) needed to hang
    a child piece beyond that hole.
    """
    exit_face = opposite_face(stem, entry)
    center = neighbor(stem, exit_face)
    up_c = _transport_up(up, exit_face, center)
    back = opposite_face(center, exit_face)
    down = opposite_face(center, up_c)
    arm_faces = sorted(f for f in cell_faces(center, 2)
                       if f not in (exit_face, back, up_c, down))
    if len(arm_faces) != 2:
        raise AssertionError("expected 2 arm directions")
    cubes = [stem, center]
    holes = []
    for f in arm_faces:
        arm = neighbor(center, f)
        cubes.append(arm)
        far = opposite_face(arm, f)
        holes.append((arm, far, _transport_up(up_c, f, arm)))
    return cubes, holes


def tree_of_life_435(depth):
    """Sphere bounding a binary tree of pants pieces in {4,3,5}.

    Each pants piece is the 4-cube T of hyperbolic_pants_435; the two arm
    holes of every piece down to the requested depth sprout child pieces
    whose stem continues straight through the hole.  Capping all remaining
    holes (which the boundary-of-union does by itself) yields a sphere.
    Raises GridCollisionError if two pieces would reuse a cube; the
    exponential volume of hyperbolic space keeps the tested depths clear.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    system = build_system("{4,3,5}")
    stem = identity_cell(system, 3)
    faces = sorted(cell_faces(stem, 2))
    entry = faces[0]
    back = opposite_face(stem, entry)
    up = min(f for f in faces if f not in (entry, back))

    cubes = []
    layer = [(stem, entry, up)]
    for level in range(depth):
        next_layer = []
        for s, f_in, f_up in layer:
            unit_cubes, holes = _pants_unit(s, f_in, f_up)
            cubes.extend(unit_cubes)
            if level + 1 < depth:
                for arm, far, arm_up in holes:
                    child = neighbor(arm, far)
                    next_layer.append(
                        (child, far, _transport_up(arm_up, far, child)))
        layer = next_layer

    dupes = [c for c, m in Counter(cubes).items() if m > 1]
    if dupes:
        raise GridCollisionError("pants pieces overlap", dupes)
    pieces = 2 ** depth - 1
    meta = {"kind": "tree_of_life_hyperbolic", "depth": depth,
            "pants_count": pieces, "cube_count": len(cubes)}
    return GriddedComplex(system.name, union_boundary(cubes), meta)


def _straight_path(start, entry, length, blocked):
    """March `length` cubes straight from `start`, whose entry face is
    `entry`.  Returns (cubes, entry faces, final exit face) or None if the
    path would run through a blocked cube."""
    cubes, entries = [], []
    cube, face = start, entry
    for _ in range(length):
        if cube in blocked or cube in cubes:
            return None
        cubes.append(cube)
        entries.append(face)
        face = opposite_face(cube, face)
        cube = neighbor(cube, face)
    return cubes, entries, face


def _mirror_through(cube, entry):
    """The symmetry of `cube` exchanging its entry and exit faces while
    holding each of the other 4 faces in place."""
    exit_face = opposite_face(cube, entry)
    sides = [f for f in cell_faces(cube, 2) if f not in (entry, exit_face)]
    found = []
    for g in stabilizer(cube):
        if (transform(g, entry) == exit_face
                and transform(g, exit_face) == entry
                and all(transform(g, f) == f for f in sides)):
            found.append(g)
    if len(found) != 1:
        raise AssertionError(f"expected a unique mirror, found {len(found)}")
    return found[0]


def closed_orientable_435(genus):
    """Closed orientable surface of the given genus gridded in {4,3,5}.

    Genus 0 is the boundary of one cube and genus 1 the 12-cube ring
    torus.  Higher genus chains mirror images of that torus: a straight
    tube of odd length leaves a free square of the last copy, and the
    reflection through the tube's middle cube maps the copy onto a fresh
    one on the far side, so the tube's far mouth lands exactly on the
    mirrored square.  Tube length and attachment square are retried until
    nothing collides.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    system = build_system("{4,3,5}")
    if genus == 0:
        cube = identity_cell(system, 3)
        return GriddedComplex(system.name, union_boundary([cube]),
                              {"kind": "closed_orientable", "genus": 0})
    base = hyperbolic_torus_435()
    surface = set(base.squares)
    if genus == 1:
        return GriddedComplex(system.name, frozenset(surface),
                              {"kind": "closed_orientable", "genus": 1})

    # the 12 ring cubes plus the enclosed base cube; squares facing any of
    # them are useless attachment sites, so a blocked tube is skipped early
    solid = set()
    for e in _edge_parallel_class(identity_cell(system, 3),
                                  identity_cell(system, 1)):
        solid.update(cell_faces(e, 3))
    # the latest torus copy: its full 48 squares, the one square already
    # spent as its entry hole, and the cubes it bounds
    copy_full = set(base.squares)
    copy_hole = None
    copy_solid = set(solid)
    tube_lengths = []

    for _ in range(genus - 1):
        attached = False
        for f in sorted(copy_full - {copy_hole}):
            outside = [c for c in cell_faces(f, 3) if c not in solid]
            if len(outside) != 1:
                continue
            for half in range(1, 5):
                path = _straight_path(outside[0], f, 2 * half - 1, solid)
                if path is None:
                    continue
                cubes, entries, far = path
                mirror = _mirror_through(cubes[half - 1], entries[half - 1])
                if transform(mirror, f) != far:
                    raise AssertionError("mirror does not map the hole "
                                         "to the tube's far mouth")
                new_copy = {transform(mirror, s) for s in copy_full}
                new_solid = {transform(mirror, c) for c in copy_solid}
                tube = set()
                for cube, entry in zip(cubes, entries):
                    ex = opposite_face(cube, entry)
                    tube.update(s for s in cell_faces(cube, 2)
                                if s not in (entry, ex))
                pieces = (surface - {f}, tube, new_copy - {far})
                total = sum(len(p) for p in pieces)
                if len(set().union(*pieces)) != total:
                    continue
                if new_solid & solid or new_solid & set(cubes):
                    continue
                surface = set().union(*pieces)
                solid.update(cubes)
                solid.update(new_solid)
                copy_full = new_copy
                copy_hole = far
                copy_solid = new_solid
                tube_lengths.append(2 * half - 1)
                attached = True
                break
            if attached:
                break
        if not attached:
            raise RuntimeError("could not attach a mirror copy without "
                               "collisions")
    meta = {"kind": "closed_orientable", "genus": genus,
            "tube_lengths": tuple(tube_lengths)}
    return GriddedComplex(system.name, frozenset(surface), meta)


def _hypercube_ring(hypercube, first=None, avoid=()):
    """Four of the 8 cells of a hypercube forming a closed ring.

    Opposite cells share no vertices; a ring is two such opposite pairs.
    `first` picks the starting cell (least by default) and cells whose
    square set meets `avoid` are not used as the second pair.
    """
    cells = sorted(cell_faces(hypercube, 3))
    a = first if first is not None else cells[0]
    a_op = opposite_face(hypercube, a)
    avoid = set(avoid)

    def clean(c):
        return not avoid & set(cell_faces(c, 2))

    rest = [c for c in cells if c not in (a, a_op)]
    for b in rest:
        b_op = opposite_face(hypercube, b)
        if clean(b) and clean(b_op):
            return (a, b, a_op, b_op)
    raise AssertionError("no usable ring partner in hypercube")


def torus_4335():
    """Torus of 16 squares: boundary of a 4-cell ring in one hypercube.

    The 8 cubical cells of a hypercube pair up into opposite cells;
    two pairs form a ring whose union is a solid torus, and the squares
    lying in exactly one ring cell form its genus-1 boundary.
    """
    system = build_system("{4,3,3,5}")
    ring = _hypercube_ring(identity_cell(system, 4))
    squares = union_boundary(ring)
    if len(squares) != 16:
        raise AssertionError(f"expected 16 squares, got {len(squares)}")
    meta = {"kind": "ring_torus", "cube_count": 4}
    return GriddedComplex(system.name, squares, meta)


def _straight_step_4335(cube, hypercube, square):
    """Continue a straight row of cubes in {4,3,3,5} through `square`.

    Within the current hypercube the square lies in one other cell; that
    cell is the wall to the next hypercube, and inside the next hypercube
    the square again lies in two cells, one of them the wall.  The other
    one is the continuation: the unique cube beyond the square that stays
    in the row's hyperplane.
    """
    walls = [c for c in cell_faces(hypercube, 3)
             if c != cube and square in cell_faces(c, 2)]
    if len(walls) != 1:
        raise AssertionError("square should lie in 2 cells of its hypercube")
    wall = walls[0]
    nxt_h = neighbor(hypercube, wall)
    nxt = [c for c in cell_faces(nxt_h, 3)
           if c != wall and square in cell_faces(c, 2)]
    if len(nxt) != 1:
        raise AssertionError("square should lie in 2 cells of the next "
                             "hypercube")
    return nxt[0], nxt_h


def _cube_row_4335(count):
    """A straight row of `count` cubes, with the squares shared by
    consecutive cubes and the hypercubes carrying the walk."""
    system = build_system("{4,3,3,5}")
    cube = identity_cell(system, 3)
    hyper = identity_cell(system, 4)
    cubes = [cube]
    hypers = [hyper]
    shared = []
    exit_face = min(cell_faces(cube, 2))
    for _ in range(count - 1):
        shared.append(exit_face)
        cube, hyper = _straight_step_4335(cube, hyper, exit_face)
        cubes.append(cube)
        hypers.append(hyper)
        exit_face = opposite_face(cube, shared[-1])
    if len(set(cubes)) != count:
        raise AssertionError("row of cubes doubled back")
    return cubes, shared, hypers


def hypercube_graph_distance(a, b, limit):
    """Length of the shortest wall-crossing path between two hypercubes,
    by breadth-first search; None if farther than `limit`."""
    if a == b:
        return 0
    seen = {a}
    queue = deque([(a, 0)])
    while queue:
        h, d = queue.popleft()
        if d == limit:
            continue
        for wall in cell_faces(h, 3):
            nxt = neighbor(h, wall)
            if nxt == b:
                return d + 1
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, d + 1))
    return None


def pants_4335():
    """Three-holed sphere of 11 squares over a straight row of 3 cubes.

    The row's union bounds a 14-square sphere; removing the two far end
    squares and the least side square of the middle cube leaves a pair of
    pants with one boundary circle per removed square.
    """
    cubes, shared, _ = _cube_row_4335(3)
    sphere = union_boundary(cubes)
    if len(sphere) != 14:
        raise AssertionError(f"expected a 14-square sphere, got {len(sphere)}")
    far_a = opposite_face(cubes[0], shared[0])
    far_b = opposite_face(cubes[2], shared[1])
    side = min(f for f in cell_faces(cubes[1], 2) if f not in shared)
    meta = {"kind": "hyperbolic_pants_4d", "cube_count": 3,
            "boundary_circles": 3}
    return GriddedComplex("{4,3,3,5}", sphere - {far_a, far_b, side}, meta)


def crosscap_abstract_34():
    """Projective plane from 34 squares of a 6x6 grid patch.

    Remove two opposite corner squares from a 6x6 sheet of squares and
    glue the 24-edge boundary circle to itself antipodally.  The result
    is a closed one-crosscap surface whose squares all come from the
    grid, the smallest such patch that avoids gluing any square to
    itself.
    """
    removed = {(0, 0), (5, 5)}
    squares = []
    for i in range(6):
        for j in range(6):
            if (i, j) in removed:
                continue
            squares.append(((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)))

    edge_count = Counter()
    for cyc in squares:
        for k in range(4):
            e = frozenset((cyc[k], cyc[(k + 1) % 4]))
            edge_count[e] += 1
    boundary = {e for e, m in edge_count.items() if m == 1}
    adj = {}
    for e in boundary:
        u, v = sorted(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    cycle = [start, sorted(adj[start])[0]]
    while True:
        nxt = [v for v in adj[cycle[-1]] if v != cycle[-2]]
        if nxt[0] == start:
            break
        cycle.append(nxt[0])
    if len(cycle) != 24:
        raise AssertionError(f"expected a 24-vertex boundary, got {len(cycle)}")

    ident = {cycle[k + 12]: cycle[k] for k in range(12)}
    glued = [tuple(ident.get(v, v) for v in cyc) for cyc in squares]
    return AbstractSquareComplex.from_squares(
        glued, {"kind": "crosscap_grid_patch", "square_count": 34})


def surface_4335(orientable, genus, boundary_circles=0):
    """Compact surface of any topological type over the {4,3,3,5} grid.

    A chain of pants pieces (straight rows of 3 cubes) provides one
    decoration site per piece plus the two row ends.  Handles come from
    hypercube rings seeded on a site square, which the global
    multiplicity-1 boundary glues on automatically; boundary circles come
    from removing end or site squares; crosscaps sew the 34-square
    projective patch onto a site abstractly, so nonorientable results are
    returned as abstract complexes (meta key "embedded" False) while
    orientable ones stay gridded.
    """
    if genus < 0 or boundary_circles < 0:
        raise ValueError("genus and boundary circle count must be >= 0")
    if not orientable and genus == 0:
        raise ValueError("a nonorientable surface needs at least 1 crosscap")
    pieces = max(1, genus, genus + boundary_circles - 2)
    cubes, shared, _ = _cube_row_4335(3 * pieces)
    row = set(cubes)
    boundary_counts = Counter()
    for c in cubes:
        boundary_counts.update(cell_faces(c, 2))
    row_boundary = {s for s, m in boundary_counts.items() if m == 1}

    sites = []
    for i in range(pieces):
        mid = cubes[3 * i + 1]
        off_row = [f for f in cell_faces(mid, 2)
                   if f not in (shared[3 * i], shared[3 * i + 1])]
        sites.append(min(off_row))

    ends = []
    if boundary_circles >= 1:
        ends.append(opposite_face(cubes[0], shared[0]))
    if boundary_circles >= 2:
        ends.append(opposite_face(cubes[-1], shared[-1]))
    # the first `genus` sites carry handles or crosscaps; later ones are
    # free to open up as boundary circles
    for i in range(boundary_circles - 2):
        ends.append(sites[genus + i])

    meta = {"kind": "surface_by_signature", "orientable": orientable,
            "boundary_circles": boundary_circles, "pants_count": pieces,
            "end_truncation": 0}
    name = "genus" if orientable else "crosscaps"
    meta[name] = genus

    if orientable:
        all_cubes = list(cubes)
        for i in range(genus):
            site = sites[i]
            host = min(c for c in cell_faces(site, 3) if c not in row)
            hyper = min(h for h in cell_faces(host, 4)
                        if all(c not in row for c in cell_faces(h, 3)))
            ring = _hypercube_ring(hyper, first=host, avoid={site})
            ring_boundary = union_boundary(ring)
            overlap = ring_boundary & row_boundary
            if overlap != {site}:
                raise AssertionError("ring must meet the chain exactly at "
                                     "its site square")
            if set(ring) & set(all_cubes):
                raise GridCollisionError("handle ring reuses a cube",
                                         sorted(set(ring) & set(all_cubes)))
            all_cubes.extend(ring)
        squares = union_boundary(all_cubes) - set(ends)
        return GriddedComplex("{4,3,3,5}", squares, meta)

    site_cycles = [square_vertex_cycle(sites[i]) for i in range(genus)]
    gridded = GriddedComplex("{4,3,3,5}", row_boundary - set(ends))
    result = to_abstract(gridded)
    for idx in range(genus):
        patch = crosscap_abstract_34()
        # each sum renames the vertices of `result` to 0..n-1 in sorted
        # order, so the cycles of the sites still waiting must follow
        relabel = {v: i for i, v in enumerate(sorted(result.vertices))}
        result = connected_sum_abstract(result, site_cycles[idx], patch,
                                        patch.squares[0])
        site_cycles = [tuple(relabel[v] for v in cyc) for cyc in site_cycles]
    meta["embedded"] = False
    return AbstractSquareComplex(result.vertices, result.squares, meta)
