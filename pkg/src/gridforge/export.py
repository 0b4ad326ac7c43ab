"""Mesh export: OFF (any dimension) and Wavefront OBJ.

Lattice complexes use their integer coordinates halved (cells are keyed
by doubled barycenters).  Honeycomb complexes are drawn in the Klein ball
model: the bilinear form has signature (n, 1), so an orthogonal
eigenbasis splits into n spacelike directions and one timelike one, and a
vertex ray v maps to the point with coordinates B(v, s_i) / -B(v, t).
That keeps straight honeycomb edges straight at the cost of metric
distortion near the ball's rim.

Abstract complexes carry no embedding and cannot be exported as meshes.
"""

from __future__ import annotations

import numpy as np

from gridforge.lattice import GriddedComplex, is_lattice_ambient
from gridforge.surface import declared_vertices, square_cycles
from gridforge.field import qf_from_ring


def _klein_frame(system):
    b = np.array([[float(x) for x in row] for row in system.bilinear])
    vals, vecs = np.linalg.eigh(b)
    if not (vals[0] < 0 < vals[1]):
        raise ValueError(f"{system.name} has no Klein model")
    timelike = vecs[:, 0] / np.sqrt(-vals[0])
    spacelike = [vecs[:, i] / np.sqrt(vals[i]) for i in range(1, len(vals))]
    return b, timelike, spacelike


def _klein_coords(system, keys):
    b, timelike, spacelike = _klein_frame(system)
    out = {}
    for key in keys:
        x = np.array([float(qf_from_ring(e)) for e in key.vec])
        denom = -float(x @ b @ timelike)
        if denom < 0:
            x, denom = -x, -denom
        if denom == 0:
            raise ValueError("vertex on the ideal boundary")
        out[key] = tuple(float(x @ b @ s) / denom for s in spacelike)
    return out


def vertex_coordinates(obj):
    """Map each vertex of a gridded complex to a tuple of floats."""
    if not isinstance(obj, GriddedComplex):
        raise ValueError("only gridded complexes have coordinates")
    verts = declared_vertices(obj)
    if is_lattice_ambient(obj.ambient):
        return {v: tuple(c / 2.0 for c in v) for v in verts}
    from gridforge.coxeter import build_system

    return _klein_coords(build_system(obj.ambient), verts)


def _fmt(x):
    # normalize -0.0 so output bytes do not depend on rounding direction
    return f"{x + 0.0 if x else 0.0:.12f}"


def _mesh(obj):
    coords = vertex_coordinates(obj)
    verts = sorted(coords)
    index = {v: i for i, v in enumerate(verts)}
    faces = sorted(tuple(index[v] for v in cyc) for cyc in square_cycles(obj))
    return [coords[v] for v in verts], faces


def to_off(obj):
    """OFF text; complexes in 4 coordinates use the nOFF extension."""
    points, faces = _mesh(obj)
    dim = len(points[0]) if points else 3
    edges = set()
    for f in faces:
        for i in range(4):
            edges.add(frozenset((f[i], f[(i + 1) % 4])))
    lines = []
    if dim == 3:
        lines.append("OFF")
    else:
        lines.append("nOFF")
        lines.append(str(dim))
    lines.append(f"{len(points)} {len(faces)} {len(edges)}")
    for p in points:
        lines.append(" ".join(_fmt(c) for c in p))
    for f in faces:
        lines.append("4 " + " ".join(str(i) for i in f))
    return "\n".join(lines) + "\n"


def to_obj(obj):
    """Wavefront OBJ text; extra coordinates beyond 3 are dropped and 2D
    complexes get a zero third coordinate."""
    points, faces = _mesh(obj)
    lines = []
    if points and len(points[0]) > 3:
        lines.append(f"# first 3 of {len(points[0])} coordinates")
    for p in points:
        padded = (tuple(p) + (0.0, 0.0))[:3]
        lines.append("v " + " ".join(_fmt(c) for c in padded))
    for f in faces:
        lines.append("f " + " ".join(str(i + 1) for i in f))
    return "\n".join(lines) + "\n"
