"""Validation and topological classification of square complexes.

A square complex here is a set of quadrilaterals glued along vertices and
edges, given either combinatorially (AbstractSquareComplex) or as a set of
squares of a cubical tiling (GriddedComplex).  The functions below decide
whether such a complex is a compact surface, and if so classify it up to
homeomorphism by orientability, Euler characteristic and number of
boundary circles.

The manifold test is local: every edge must lie in at most two squares,
and the link of every vertex (the graph whose nodes are the edges at the
vertex, with one arc per incident square) must be a single cycle or a
single simple path.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from gridforge import lattice
from gridforge.lattice import GriddedComplex, corners_cyclic, is_lattice_ambient


class GridCollisionError(ValueError):
    """Raised when a gridded construction would overlap itself.

    The offending cells are kept on the .cells attribute so callers can
    report exactly where the clash happened.
    """

    def __init__(self, message, cells=()):
        super().__init__(message)
        self.cells = tuple(cells)


def _cycle_key(cyc):
    """Canonical form of a cyclic 4-tuple up to rotation and reflection."""
    a, b, c, d = cyc
    candidates = []
    for t in ((a, b, c, d), (a, d, c, b)):
        for r in range(4):
            candidates.append(t[r:] + t[:r])
    return min(candidates)


@dataclass(frozen=True)
class AbstractSquareComplex:
    """A purely combinatorial square complex.

    squares are cyclic 4-tuples of distinct vertices; they are stored in a
    canonical rotation so that structural equality works.  vertices may
    include points not used by any square (such a complex is never a
    surface, but it is representable).
    """

    vertices: frozenset
    squares: tuple
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        canon = []
        for s in self.squares:
            s = tuple(s)
            if len(s) != 4 or len(set(s)) != 4:
                raise ValueError(f"square needs 4 distinct vertices: {s}")
            for v in s:
                if v not in self.vertices:
                    raise ValueError(f"square vertex {v!r} not in vertex set")
            canon.append(_cycle_key(s))
        canon.sort()
        for prev, cur in zip(canon, canon[1:]):
            if prev == cur:
                raise ValueError(f"duplicate square: {cur}")
        object.__setattr__(self, "squares", tuple(canon))

    @classmethod
    def from_squares(cls, squares, meta=None):
        verts = set()
        for s in squares:
            verts.update(s)
        return cls(frozenset(verts), tuple(squares), meta or {})

    def __len__(self):
        return len(self.squares)


def square_cycles(obj):
    """The squares of a complex as cyclic vertex 4-tuples."""
    if isinstance(obj, AbstractSquareComplex):
        return list(obj.squares)
    if isinstance(obj, GriddedComplex):
        if is_lattice_ambient(obj.ambient):
            return [corners_cyclic(s) for s in sorted(obj.squares)]
        from gridforge.coxeter import square_vertex_cycle

        return [square_vertex_cycle(s) for s in sorted(obj.squares)]
    raise TypeError(f"not a square complex: {type(obj).__name__}")


def declared_vertices(obj):
    if isinstance(obj, AbstractSquareComplex):
        return set(obj.vertices)
    verts = set()
    for cyc in square_cycles(obj):
        verts.update(cyc)
    return verts


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def _cycle_edges(cyc):
    return [_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]


@dataclass(frozen=True)
class ComponentReport:
    vertex_count: int
    edge_count: int
    square_count: int
    euler_characteristic: int
    orientable: bool
    boundary_circles: int
    genus: int | None
    crosscaps: int | None
    class_name: str


@dataclass(frozen=True)
class SurfaceReport:
    is_surface: bool
    is_closed: bool
    vertex_count: int
    edge_count: int
    square_count: int
    euler_characteristic: int
    failures: tuple = ()
    orientable: bool | None = None
    boundary_circles: int | None = None
    components: tuple = ()
    class_name: str = "not a surface"
    genus: int | None = None
    crosscaps: int | None = None
    nonorientable_witness: tuple | None = None


def _plural(n, word):
    return f"{n} {word}" + ("" if n == 1 else "s")


def _component_name(orientable, genus, crosscaps, circles):
    if orientable:
        name = f"orientable genus {genus}"
    else:
        name = f"nonorientable, {_plural(crosscaps, 'crosscap')}"
    if circles:
        name += f", {_plural(circles, 'boundary circle')}"
    return name


def validate_surface(obj):
    """Check the manifold conditions; returns a SurfaceReport.

    The report carries V/E/F counts and the Euler characteristic whether or
    not the check passes; failures lists each violation with a witness cell.
    """
    cycles = square_cycles(obj)
    verts = declared_vertices(obj)

    edge_mult = Counter()
    for cyc in cycles:
        for e in _cycle_edges(cyc):
            edge_mult[e] += 1

    failures = []
    for e, m in sorted(edge_mult.items()):
        if m > 2:
            failures.append(f"edge {e} lies in {m} squares")

    used = set()
    for cyc in cycles:
        used.update(cyc)
    for v in sorted(verts - used):
        failures.append(f"vertex {v} is isolated")

    # vertex links: nodes are the edges at v, one arc per incident square
    at_vertex = defaultdict(list)
    for cyc in cycles:
        for i in range(4):
            v = cyc[i]
            e_prev = _edge(v, cyc[(i - 1) % 4])
            e_next = _edge(v, cyc[(i + 1) % 4])
            at_vertex[v].append((e_prev, e_next))
    for v in sorted(at_vertex):
        arcs = at_vertex[v]
        deg = Counter()
        adj = defaultdict(list)
        for e1, e2 in arcs:
            deg[e1] += 1
            deg[e2] += 1
            adj[e1].append(e2)
            adj[e2].append(e1)
        nodes = set(deg)
        if any(d > 2 for d in deg.values()):
            failures.append(f"vertex {v} link has an edge in more than 2 squares")
            continue
        start = next(iter(nodes))
        seen = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if seen != nodes:
            failures.append(f"vertex {v} link is disconnected")
            continue
        odd = sum(1 for d in deg.values() if d == 1)
        if odd not in (0, 2):
            failures.append(f"vertex {v} link is neither a cycle nor a path")

    V = len(verts)
    E = len(edge_mult)
    F = len(cycles)
    is_closed = bool(cycles) and all(m == 2 for m in edge_mult.values())
    return SurfaceReport(
        is_surface=not failures and bool(cycles),
        is_closed=is_closed and not failures,
        vertex_count=V,
        edge_count=E,
        square_count=F,
        euler_characteristic=V - E + F,
        failures=tuple(failures) if failures else
        (() if cycles else ("complex has no squares",)),
    )


def euler_characteristic(obj):
    cycles = square_cycles(obj)
    verts = declared_vertices(obj)
    edges = set()
    for cyc in cycles:
        edges.update(_cycle_edges(cyc))
    return len(verts) - len(edges) + len(cycles)


def _orient_components(cycles, comp_of_square, n_components):
    """Two-colour the dual graph; returns per-component orientability.

    A shared edge forces neighbouring squares to traverse it in opposite
    directions.  An inconsistency yields a witness loop of squares whose
    orientations cannot be reconciled.
    """
    by_edge = defaultdict(list)
    for idx, cyc in enumerate(cycles):
        for i in range(4):
            u, v = cyc[i], cyc[(i + 1) % 4]
            e = _edge(u, v)
            forward = e == (u, v)
            by_edge[e].append((idx, forward))

    sign = {}
    parent = {}
    orientable = [True] * n_components
    witness = [None] * n_components
    for root in range(len(cycles)):
        if root in sign:
            continue
        sign[root] = 1
        parent[root] = None
        stack = [root]
        while stack:
            cur = stack.pop()
            for i in range(4):
                u, v = cycles[cur][i], cycles[cur][(i + 1) % 4]
                e = _edge(u, v)
                cur_fwd = e == (u, v)
                for other, other_fwd in by_edge[e]:
                    if other == cur:
                        continue
                    need = -sign[cur] if other_fwd == cur_fwd else sign[cur]
                    if other not in sign:
                        sign[other] = need
                        parent[other] = cur
                        stack.append(other)
                    elif sign[other] != need:
                        comp = comp_of_square[cur]
                        if orientable[comp]:
                            orientable[comp] = False
                            witness[comp] = _dual_loop(parent, cur, other, cycles)
    return orientable, witness


def _dual_loop(parent, a, b, cycles):
    """Loop of squares through the dual-tree paths of a and b."""
    anc_a = []
    x = a
    while x is not None:
        anc_a.append(x)
        x = parent[x]
    in_a = set(anc_a)
    path_b = []
    x = b
    while x not in in_a:
        path_b.append(x)
        x = parent[x]
    meet = x
    loop = anc_a[: anc_a.index(meet) + 1] + list(reversed(path_b))
    return tuple(cycles[i] for i in loop)


def _boundary_circles(vertices, boundary_edges):
    """Decompose multiplicity-1 edges into closed vertex cycles."""
    adj = defaultdict(list)
    for u, v in boundary_edges:
        adj[u].append(v)
        adj[v].append(u)
    unused = set(boundary_edges)
    circles = []
    for start in sorted(adj):
        while True:
            first = None
            for w in adj[start]:
                e = _edge(start, w)
                if e in unused:
                    first = w
                    break
            if first is None:
                break
            circle = [start]
            unused.discard(_edge(start, first))
            prev, cur = start, first
            while cur != start:
                circle.append(cur)
                nxt = None
                for w in adj[cur]:
                    e = _edge(cur, w)
                    if e in unused:
                        nxt = w
                        break
                if nxt is None:
                    raise AssertionError("boundary walk left an open path")
                unused.discard(_edge(cur, nxt))
                prev, cur = cur, nxt
            circles.append(tuple(circle))
    return circles


def classify(obj):
    """Full pipeline: validate, then classify each connected component.

    For a valid compact surface the classification is exact: orientable
    components are reported by genus, nonorientable ones by crosscap
    number, each together with its count of boundary circles.
    """
    base = validate_surface(obj)
    if not base.is_surface:
        return base

    cycles = square_cycles(obj)
    verts = sorted(declared_vertices(obj))
    index = {v: i for i, v in enumerate(verts)}

    # connected components over the vertex-edge graph
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for cyc in cycles:
        for i in range(4):
            union(index[cyc[i]], index[cyc[(i + 1) % 4]])

    roots = sorted({find(i) for i in range(len(verts))})
    comp_id = {r: i for i, r in enumerate(roots)}
    n_comp = len(roots)
    comp_of_vertex = {v: comp_id[find(index[v])] for v in verts}
    comp_of_square = [comp_of_vertex[cyc[0]] for cyc in cycles]

    edge_mult = Counter()
    for cyc in cycles:
        for e in _cycle_edges(cyc):
            edge_mult[e] += 1

    V = [0] * n_comp
    E = [0] * n_comp
    F = [0] * n_comp
    for v in verts:
        V[comp_of_vertex[v]] += 1
    for e in edge_mult:
        E[comp_of_vertex[e[0]]] += 1
    for c in comp_of_square:
        F[c] += 1

    boundary_edges = [e for e, m in edge_mult.items() if m == 1]
    circles_by_comp = [0] * n_comp
    for circ in _boundary_circles(verts, boundary_edges):
        circles_by_comp[comp_of_vertex[circ[0]]] += 1

    orientable, witnesses = _orient_components(cycles, comp_of_square, n_comp)

    comps = []
    for i in range(n_comp):
        chi = V[i] - E[i] + F[i]
        b = circles_by_comp[i]
        capped = chi + b
        if orientable[i]:
            genus, crosscaps = (2 - capped) // 2, None
            if capped != 2 - 2 * genus:
                raise AssertionError(f"odd Euler characteristic {capped} on "
                                     "an orientable component")
        else:
            genus, crosscaps = None, 2 - capped
        comps.append(ComponentReport(
            vertex_count=V[i],
            edge_count=E[i],
            square_count=F[i],
            euler_characteristic=chi,
            orientable=orientable[i],
            boundary_circles=b,
            genus=genus,
            crosscaps=crosscaps,
            class_name=_component_name(orientable[i], genus, crosscaps, b),
        ))

    if n_comp == 1:
        name = comps[0].class_name
    else:
        name = f"{n_comp} components: " + "; ".join(c.class_name for c in comps)
    bad = next((w for w in witnesses if w is not None), None)
    return SurfaceReport(
        is_surface=True,
        is_closed=base.is_closed,
        vertex_count=base.vertex_count,
        edge_count=base.edge_count,
        square_count=base.square_count,
        euler_characteristic=base.euler_characteristic,
        failures=(),
        orientable=all(orientable),
        boundary_circles=sum(circles_by_comp),
        components=tuple(comps),
        class_name=name,
        genus=comps[0].genus if n_comp == 1 else None,
        crosscaps=comps[0].crosscaps if n_comp == 1 else None,
        nonorientable_witness=bad,
    )


def to_abstract(gridded):
    """Forget the embedding, keeping the combinatorial gluing pattern."""
    cycles = square_cycles(gridded)
    return AbstractSquareComplex.from_squares(cycles, meta=dict(gridded.meta))


def _relabelled(complex_, offset):
    order = sorted(complex_.vertices)
    mapping = {v: i + offset for i, v in enumerate(order)}
    squares = [tuple(mapping[v] for v in s) for s in complex_.squares]
    return mapping, squares


def connected_sum_abstract(a, square_a, b, square_b):
    """Connected sum of two abstract complexes along chosen squares.

    Each chosen square is removed and the two boundary circles left behind
    are joined by a tube of 4 new squares.  Both complexes are relabelled
    to disjoint integer ranges (a first, each in sorted vertex order), so
    the result's vertices are 0..len(a)+len(b)-1.
    """
    if _cycle_key(tuple(square_a)) not in a.squares:
        raise ValueError(f"square {square_a} not in first complex")
    if _cycle_key(tuple(square_b)) not in b.squares:
        raise ValueError(f"square {square_b} not in second complex")
    map_a, squares_a = _relabelled(a, 0)
    map_b, squares_b = _relabelled(b, len(a.vertices))
    ca = tuple(map_a[v] for v in square_a)
    cb = tuple(map_b[v] for v in square_b)

    keep = [s for s in squares_a if _cycle_key(s) != _cycle_key(ca)]
    keep += [s for s in squares_b if _cycle_key(s) != _cycle_key(cb)]

    def rot_to_min(cyc):
        i = cyc.index(min(cyc))
        return cyc[i:] + cyc[:i]

    ra = rot_to_min(ca)
    rb = rot_to_min(cb)
    rb = (rb[0], rb[3], rb[2], rb[1])  # reversed: the tube joins opposite sides
    for i in range(4):
        j = (i + 1) % 4
        keep.append((ra[i], ra[j], rb[j], rb[i]))
    return AbstractSquareComplex.from_squares(keep)


def connected_sum_embedded(a, face_a, b, face_b, axis=None):
    """Connected sum of two gridded complexes through a connecting cube.

    b is translated so that face_b lands on the far side of the cube Q
    sitting on face_a in the +axis direction; both chosen squares are
    removed and the 4 remaining faces of Q form the tube.  Raises
    GridCollisionError if the translated copy of b touches a anywhere, or
    if a side face of Q is already occupied.
    """
    if a.ambient != b.ambient or not is_lattice_ambient(a.ambient):
        raise ValueError("both complexes must live in the same lattice ambient")
    if face_a not in a.squares:
        raise ValueError(f"{face_a} is not a square of the first complex")
    if face_b not in b.squares:
        raise ValueError(f"{face_b} is not a square of the second complex")
    n = len(face_a)
    if axis is None:
        axis = next(i for i, x in enumerate(face_a) if x % 2 == 0)
    if face_a[axis] % 2:
        raise ValueError(f"axis {axis} is tangent to {face_a}, not normal")
    shift = tuple((face_a[i] + (2 if i == axis else 0)) - face_b[i] for i in range(n))
    if any(x % 2 for x in shift):
        raise ValueError("chosen squares are not parallel, cannot align them")

    moved = lattice.translate(b.squares, shift)
    far = tuple(face_a[i] + (2 if i == axis else 0) for i in range(n))
    if far not in moved:
        raise AssertionError("translated far face missing")

    cube = tuple(face_a[i] + (1 if i == axis else 0) for i in range(n))
    sides = [f for f in lattice.faces(cube, 2) if f not in (face_a, far)]

    rest_a = a.squares - {face_a}
    rest_b = moved - {far}
    clashes = sorted(rest_a & rest_b)
    verts_a = {v for s in rest_a for v in corners_cyclic(s)} | set(corners_cyclic(face_a))
    verts_b = {v for s in rest_b for v in corners_cyclic(s)} | set(corners_cyclic(far))
    clashes += sorted(verts_a & verts_b)
    clashes += sorted(f for f in sides if f in a.squares or f in moved)
    if clashes:
        raise GridCollisionError(
            f"translated complex collides with the base at {len(clashes)} cells",
            cells=clashes,
        )
    squares = rest_a | rest_b | set(sides)
    return GriddedComplex(a.ambient, squares, meta={"built_by": "connected_sum"})
