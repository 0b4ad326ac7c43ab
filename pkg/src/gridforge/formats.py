"""Reading and writing square complexes as JSON.

Three document shapes, told apart by their "format" key:

- gridded lattice:  {"format": "gridded", "ambient": "Z3",
                     "squares": [[1, 1, 0], ...]}
- gridded honeycomb: same but the ambient is a Schlafli symbol and each
  square is {"mask": <parabolic generator bitmask>, "rep": <ring matrix
  as nested [p, q, r, s] integer quadruples>}
- abstract:         {"format": "abstract", "vertices": ["a", ...],
                     "squares": [["a", "b", "c", "d"], ...]}

Output is deterministic: squares and vertices are sorted, coset
representatives are canonicalized to the least matrix of their coset,
keys are sorted and the text always ends in one newline.  Abstract vertex
labels are stringified on write and stay strings on load.  In-memory
`meta` annotations are not serialized.

Loading validates shapes and, for honeycomb cells, checks that each
representative is a genuine symmetry (it must preserve the bilinear
form); bad documents raise ValueError.
"""

from __future__ import annotations

import json

from gridforge.coxeter import (CosetKey, _mat_mul, _transpose, build_system)
from gridforge.lattice import GriddedComplex, is_lattice_ambient
from gridforge.surface import AbstractSquareComplex


def complex_to_jsonable(obj):
    if isinstance(obj, GriddedComplex):
        if is_lattice_ambient(obj.ambient):
            squares = sorted(list(s) for s in obj.squares)
        else:
            squares = sorted(
                ({"mask": sum(1 << i for i in key.gens),
                  "rep": [[list(e) for e in row] for row in key.min_rep()]}
                 for key in obj.squares),
                key=lambda d: (d["mask"], d["rep"]))
        return {"format": "gridded", "ambient": obj.ambient,
                "squares": squares}
    if isinstance(obj, AbstractSquareComplex):
        names = {v: str(v) for v in obj.vertices}
        if len(set(names.values())) != len(names):
            raise ValueError("vertex labels collide when stringified")
        squares = sorted(min(
            (cyc[i:] + cyc[:i])[::d]
            for i in range(4) for d in (1, -1))
            for cyc in ([names[v] for v in s] for s in obj.squares))
        return {"format": "abstract",
                "vertices": sorted(names.values()),
                "squares": squares}
    raise TypeError(f"not a square complex: {type(obj).__name__}")


def dumps_complex(obj):
    return json.dumps(complex_to_jsonable(obj), sort_keys=True,
                      indent=2) + "\n"


def save_complex(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_complex(obj))


def _require(cond, message):
    if not cond:
        raise ValueError(message)


def _load_lattice_squares(ambient, raw):
    squares = []
    for i, s in enumerate(raw):
        _require(isinstance(s, list) and all(isinstance(x, int) for x in s),
                 f"squares[{i}]: expected a list of integers")
        squares.append(tuple(s))
    return GriddedComplex(ambient, frozenset(squares))


def _load_coset_squares(ambient, raw):
    system = build_system(ambient)
    rank = system.rank
    squares = []
    for i, entry in enumerate(raw):
        where = f"squares[{i}]"
        _require(isinstance(entry, dict) and {"mask", "rep"} <= set(entry),
                 f"{where}: expected an object with mask and rep")
        mask = entry["mask"]
        _require(isinstance(mask, int) and 0 <= mask < (1 << rank),
                 f"{where}: bad generator mask")
        gens = frozenset(i for i in range(rank) if mask >> i & 1)
        _require(len(gens) == rank - 1, f"{where}: mask must select all "
                 "generators but one")
        rep = entry["rep"]
        _require(isinstance(rep, list) and len(rep) == rank
                 and all(isinstance(row, list) and len(row) == rank
                         for row in rep),
                 f"{where}: rep must be a {rank}x{rank} matrix")
        rows = []
        for row in rep:
            cells = []
            for e in row:
                _require(isinstance(e, list) and len(e) == 4
                         and all(isinstance(t, int) for t in e),
                         f"{where}: entries must be integer quadruples")
                cells.append(tuple(e))
            rows.append(tuple(cells))
        mat = tuple(rows)
        if _mat_mul(_mat_mul(_transpose(mat), system.bilinear4),
                    mat) != system.bilinear4:
            raise ValueError(f"{where}: matrix does not preserve the "
                             "bilinear form")
        squares.append(CosetKey(system, gens, mat))
    return GriddedComplex(ambient, frozenset(squares))


def jsonable_to_complex(data):
    _require(isinstance(data, dict), "top level must be an object")
    fmt = data.get("format")
    if fmt == "gridded":
        ambient = data.get("ambient")
        _require(isinstance(ambient, str), "missing ambient")
        raw = data.get("squares")
        _require(isinstance(raw, list), "missing squares")
        if is_lattice_ambient(ambient):
            return _load_lattice_squares(ambient, raw)
        return _load_coset_squares(ambient, raw)
    if fmt == "abstract":
        verts = data.get("vertices")
        raw = data.get("squares")
        _require(isinstance(verts, list)
                 and all(isinstance(v, str) for v in verts),
                 "abstract vertices must be strings")
        _require(isinstance(raw, list), "missing squares")
        vset = set(verts)
        squares = []
        for i, s in enumerate(raw):
            _require(isinstance(s, list) and len(s) == 4
                     and all(isinstance(v, str) for v in s),
                     f"squares[{i}]: expected 4 vertex labels")
            _require(set(s) <= vset, f"squares[{i}]: unknown vertex")
            squares.append(tuple(s))
        return AbstractSquareComplex(frozenset(verts), tuple(squares))
    raise ValueError(f"unknown format {fmt!r}")


def load_complex(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return jsonable_to_complex(data)
