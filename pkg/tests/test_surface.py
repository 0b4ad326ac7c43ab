import random

import pytest

from helpers import (
    orientation_flip, random_polyomino, solid_betti_numbers,
    solid_is_well_composed,
)
from gridforge.constructors import box_column, frame_torus, sphere_cube
from gridforge.lattice import GriddedComplex, cube_union_boundary
from gridforge.surface import (
    AbstractSquareComplex, GridCollisionError, classify, connected_sum_abstract,
    connected_sum_embedded, euler_characteristic, to_abstract, validate_surface,
)


def grid_torus(n=3):
    """Abstract torus: the n x n grid with opposite sides identified."""
    squares = []
    for i in range(n):
        for j in range(n):
            squares.append(((i, j), ((i + 1) % n, j),
                            ((i + 1) % n, (j + 1) % n), (i, (j + 1) % n)))
    return AbstractSquareComplex.from_squares(squares)


def mobius_strip():
    squares = [(0, 1, 3, 2), (2, 3, 5, 4), (4, 5, 7, 6), (6, 7, 0, 1)]
    return AbstractSquareComplex.from_squares(squares)


def test_cube_is_a_sphere():
    rep = classify(sphere_cube())
    assert rep.is_surface and rep.is_closed
    assert rep.euler_characteristic == 2
    assert rep.orientable
    assert rep.genus == 0
    assert rep.boundary_circles == 0
    assert rep.class_name == "orientable genus 0"
    assert rep.vertex_count == 8 and rep.edge_count == 12 and rep.square_count == 6


def test_single_square_is_a_disk():
    rep = classify(GriddedComplex("Z2", {(1, 1)}))
    assert rep.is_surface and not rep.is_closed
    assert rep.boundary_circles == 1
    assert rep.class_name == "orientable genus 0, 1 boundary circle"


def test_three_squares_at_an_edge_fail():
    # all three contain the edge (1, 0, 0)
    squares = {(1, 1, 0), (1, 0, 1), (1, 0, -1)}
    rep = validate_surface(GriddedComplex("Z3", squares))
    assert not rep.is_surface
    assert any("3 squares" in f for f in rep.failures)


def test_cube_corner_is_fine():
    # three squares folding around a corner form a disk, not a pinch
    rep = classify(GriddedComplex("Z3", {(1, 1, 0), (1, 0, 1), (0, 1, 1)}))
    assert rep.is_surface
    assert rep.boundary_circles == 1


def test_two_squares_at_a_corner_fail():
    rep = validate_surface(GriddedComplex("Z2", {(1, 1), (3, 3)}))
    assert not rep.is_surface
    assert any("disconnected" in f for f in rep.failures)


def test_isolated_vertex_fails():
    c = AbstractSquareComplex(frozenset([0, 1, 2, 3, 9]), ((0, 1, 2, 3),))
    rep = validate_surface(c)
    assert not rep.is_surface
    assert any("isolated" in f for f in rep.failures)


def test_abstract_square_complex_rejects_bad_squares():
    with pytest.raises(ValueError):
        AbstractSquareComplex.from_squares([(0, 1, 2, 0)])
    with pytest.raises(ValueError):
        AbstractSquareComplex.from_squares([(0, 1, 2, 3), (1, 2, 3, 0)])
    with pytest.raises(ValueError):
        AbstractSquareComplex(frozenset([0, 1, 2]), ((0, 1, 2, 3),))


def test_abstract_torus():
    rep = classify(grid_torus())
    assert rep.is_closed and rep.orientable
    assert rep.euler_characteristic == 0
    assert rep.genus == 1
    assert rep.class_name == "orientable genus 1"


def test_mobius_strip():
    rep = classify(mobius_strip())
    assert rep.is_surface and not rep.is_closed
    assert not rep.orientable
    assert rep.euler_characteristic == 0
    assert rep.boundary_circles == 1
    assert rep.crosscaps == 1
    assert rep.class_name == "nonorientable, 1 crosscap, 1 boundary circle"


def test_nonorientable_witness_is_an_odd_dual_loop():
    rep = classify(mobius_strip())
    loop = rep.nonorientable_witness
    assert loop is not None and len(loop) >= 2
    product = 1
    for i in range(len(loop)):
        flip = orientation_flip(loop[i], loop[(i + 1) % len(loop)])
        assert flip is not None
        product *= flip
    assert product == -1


def test_two_components():
    far = GriddedComplex("Z3", {tuple(a + b for a, b in zip(s, (20, 0, 0)))
                                for s in sphere_cube().squares})
    both = GriddedComplex("Z3", sphere_cube().squares | far.squares)
    rep = classify(both)
    assert rep.is_surface and rep.is_closed
    assert len(rep.components) == 2
    assert rep.class_name == "2 components: orientable genus 0; orientable genus 0"
    assert rep.genus is None


def test_open_column_boundaries():
    col = box_column(3)
    top = (1, 1, 6)
    bottom = (1, 1, 0)
    one_open = GriddedComplex("Z3", col.squares - {top})
    rep = classify(one_open)
    assert rep.boundary_circles == 1
    assert rep.class_name == "orientable genus 0, 1 boundary circle"
    annulus = GriddedComplex("Z3", col.squares - {top, bottom})
    rep = classify(annulus)
    assert rep.boundary_circles == 2
    assert rep.genus == 0
    assert rep.class_name == "orientable genus 0, 2 boundary circles"


def test_euler_characteristic_function():
    assert euler_characteristic(sphere_cube()) == 2
    assert euler_characteristic(grid_torus()) == 0


def test_to_abstract_keeps_the_gluing():
    rep = classify(to_abstract(frame_torus()))
    assert rep.is_closed and rep.genus == 1


def test_connected_sum_abstract_genus_adds():
    t = grid_torus()
    s = t.squares[0]
    two = connected_sum_abstract(t, s, t, s)
    rep = classify(two)
    assert rep.is_closed and rep.orientable
    assert rep.genus == 2
    assert rep.class_name == "orientable genus 2"
    assert len(two) == 2 * len(t) - 2 + 4


def test_connected_sum_abstract_rejects_missing_square():
    t = grid_torus()
    with pytest.raises(ValueError):
        connected_sum_abstract(t, ((9, 9), (8, 8), (7, 7), (6, 6)), t, t.squares[0])


def test_connected_sum_embedded_stacks_spheres():
    # two cubes joined through a connecting cube: a 1x1x3 column
    a = sphere_cube()
    out = connected_sum_embedded(a, (1, 1, 2), sphere_cube(), (1, 1, 0), axis=2)
    assert out.squares == box_column(3).squares
    rep = classify(out)
    assert rep.genus == 0 and rep.is_closed


def test_connected_sum_embedded_detects_collision():
    a = frame_torus()
    # aiming into the hole: the translated sphere lands inside solid material
    with pytest.raises(GridCollisionError) as info:
        connected_sum_embedded(a, (2, 3, 1), sphere_cube(), (0, 1, 1), axis=0)
    assert info.value.cells


def test_connected_sum_embedded_rejects_mismatched_squares():
    a = sphere_cube()
    with pytest.raises(ValueError):
        connected_sum_embedded(a, (1, 1, 2), sphere_cube(), (1, 0, 1), axis=2)
    with pytest.raises(ValueError):
        connected_sum_embedded(a, (1, 1, 2), sphere_cube(), (1, 1, 0), axis=1)


def test_random_solid_boundaries_against_homology():
    """Boundary of a random connected solid: manifoldness is predicted by
    well-composedness, and for clean solids the component count and total
    genus are forced by the solid's GF(2) homology."""
    rng = random.Random(20260814)
    clean = pinched = 0
    for trial in range(20):
        cubes = random_polyomino(rng, 16)
        rep = classify(GriddedComplex("Z3", cube_union_boundary(cubes)))
        if not solid_is_well_composed(cubes):
            pinched += 1
            assert not rep.is_surface
            continue
        clean += 1
        b0, b1, b2 = solid_betti_numbers(cubes)
        assert b0 == 1
        assert rep.is_surface and rep.is_closed
        assert rep.orientable
        assert len(rep.components) == 1 + b2
        assert sum(c.genus for c in rep.components) == b1
    assert clean >= 3 and pinched >= 3


def test_known_solids_match_homology_oracle():
    frame = [(2 * i + 1, 2 * j + 1, 1) for i in range(3) for j in range(3)
             if (i, j) != (1, 1)]
    assert solid_betti_numbers(frame) == (1, 1, 0)
    rep = classify(GriddedComplex("Z3", cube_union_boundary(frame)))
    assert rep.genus == 1

    shell = [(2 * i + 1, 2 * j + 1, 2 * k + 1)
             for i in range(3) for j in range(3) for k in range(3)
             if (i, j, k) != (1, 1, 1)]
    assert solid_betti_numbers(shell) == (1, 0, 1)
    rep = classify(GriddedComplex("Z3", cube_union_boundary(shell)))
    assert len(rep.components) == 2
    assert all(c.genus == 0 for c in rep.components)
