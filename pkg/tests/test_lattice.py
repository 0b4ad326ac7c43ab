import random
from math import comb

import pytest

from helpers import brute_cofaces, brute_faces
from gridforge.lattice import (
    GriddedComplex, cell_dim, coface_count, cofaces, corners_cyclic,
    cube_union_boundary, embed_higher, faces, translate,
)


def test_cell_dim_by_parity():
    assert cell_dim((0, 0, 0)) == 0
    assert cell_dim((1, 0, 0)) == 1
    assert cell_dim((1, 1, 0)) == 2
    assert cell_dim((1, 1, 1)) == 3
    assert cell_dim((1, 1, 1, 1)) == 4


def test_faces_of_unit_cube():
    cube = (1, 1, 1)
    assert len(faces(cube, 2)) == 6
    assert len(faces(cube, 1)) == 12
    assert len(faces(cube, 0)) == 8
    assert faces(cube, 3) == (cube,)
    assert faces(cube, 4) == ()
    assert (0, 1, 1) in faces(cube, 2)
    assert (0, 0, 0) in faces(cube, 0)


def test_faces_against_brute_force():
    rng = random.Random(4511)
    for _ in range(120):
        n = rng.randint(1, 4)
        key = tuple(rng.randint(-4, 4) for _ in range(n))
        d = cell_dim(key)
        for k in range(d + 1):
            got = faces(key, k)
            assert set(got) == brute_faces(key, k)
            assert list(got) == sorted(got)
            assert len(got) == comb(d, k) * 2 ** (d - k)


def test_cofaces_against_brute_force():
    rng = random.Random(4512)
    for _ in range(120):
        n = rng.randint(1, 4)
        key = tuple(rng.randint(-4, 4) for _ in range(n))
        d = cell_dim(key)
        for k in range(d, n + 1):
            got = cofaces(key, k)
            assert set(got) == brute_cofaces(key, k)
            assert len(got) == coface_count(d, k, n)


def test_coface_counts_closed_form():
    # a vertex of Z^3 meets 6 edges, 12 squares, 8 cubes
    assert coface_count(0, 1, 3) == 6
    assert coface_count(0, 2, 3) == 12
    assert coface_count(0, 3, 3) == 8
    # an edge of Z^3 meets 4 squares and 4 cubes
    assert coface_count(1, 2, 3) == 4
    assert coface_count(1, 3, 3) == 4
    # a vertex of Z^4 meets 8 edges, 24 squares, 32 cubes, 16 hypercubes
    assert coface_count(0, 1, 4) == 8
    assert coface_count(0, 2, 4) == 24
    assert coface_count(0, 3, 4) == 32
    assert coface_count(0, 4, 4) == 16
    # an edge of Z^4: 6 squares, 12 cubes, 8 hypercubes
    assert coface_count(1, 2, 4) == 6
    assert coface_count(1, 3, 4) == 12
    assert coface_count(1, 4, 4) == 8
    # a square: 4 cubes and 4 hypercubes in Z^4
    assert coface_count(2, 3, 4) == 4
    assert coface_count(2, 4, 4) == 4
    # and in Z^2 a vertex meets 4 edges and 4 squares
    assert coface_count(0, 1, 2) == 4
    assert coface_count(0, 2, 2) == 4


def test_corners_cyclic():
    assert corners_cyclic((1, 1, 0)) == (
        (0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0))
    rng = random.Random(88)
    for _ in range(60):
        n = rng.randint(2, 4)
        key = [2 * rng.randint(-3, 3) for _ in range(n)]
        u, v = sorted(rng.sample(range(n), 2))
        key[u] += 1
        key[v] += 1
        key = tuple(key)
        corners = corners_cyclic(key)
        assert set(corners) == set(faces(key, 0))
        for i in range(4):
            a, b = corners[i], corners[(i + 1) % 4]
            assert sum(abs(x - y) for x, y in zip(a, b)) == 2
    with pytest.raises(ValueError):
        corners_cyclic((1, 1, 1))


def test_translate_requires_even_vector():
    sq = {(1, 1, 0)}
    assert translate(sq, (2, 0, -4)) == {(3, 1, -4)}
    with pytest.raises(ValueError):
        translate(sq, (1, 0, 0))


def test_embed_higher():
    assert embed_higher({(1, 1)}, 4) == {(1, 1, 0, 0)}
    with pytest.raises(ValueError):
        embed_higher({(1, 1, 0)}, 2)


def test_cube_union_boundary_basics():
    one = cube_union_boundary([(1, 1, 1)])
    assert one == frozenset(faces((1, 1, 1), 2))
    two = cube_union_boundary([(1, 1, 1), (3, 1, 1)])
    assert len(two) == 10
    assert (2, 1, 1) not in two
    with pytest.raises(ValueError):
        cube_union_boundary([(1, 1, 1), (1, 1, 1)])
    with pytest.raises(ValueError):
        cube_union_boundary([(1, 1, 1), (1, 1, 0)])


def test_gridded_complex_checks_squares():
    GriddedComplex("Z3", {(1, 1, 0)})
    with pytest.raises(ValueError):
        GriddedComplex("Z3", {(1, 1, 1)})
    with pytest.raises(ValueError):
        GriddedComplex("Z2", {(1, 1, 0)})


def test_gridded_complex_equality_ignores_meta():
    a = GriddedComplex("Z3", {(1, 1, 0)}, meta={"kind": "a"})
    b = GriddedComplex("Z3", {(1, 1, 0)}, meta={"kind": "b"})
    assert a == b
    assert hash(a) == hash(b)
    assert len(a) == 1
