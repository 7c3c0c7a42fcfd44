from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symsextic import toric
from symsextic.kmline import solve_class

LAM = toric.SubLattice.even_sum()
Z2 = toric.SubLattice.standard()
PI = toric.moduli_polygon()
P2 = toric.LatticePolygon(((0, 0), (1, 0), (0, 1)))
P1P1 = toric.LatticePolygon(((0, 0), (1, 0), (1, 1), (0, 1)))
GIT = toric.LatticePolygon(((0, 0), (-6, 0), (0, -6)), LAM)


def test_areas():
    assert toric.polygon_area(PI) == (18, 9)
    assert toric.polygon_area(P1P1) == (1, 1)
    assert toric.polygon_area(GIT) == (18, 9)


def test_edge_lengths_of_pi():
    v = toric.PI_VERTICES
    lengths = toric.edge_lattice_lengths(PI)
    assert lengths[PI.edge_index(v["O"], v["III"])] == 2
    assert lengths[PI.edge_index(v["O"], v["II"])] == 3
    assert toric.edge_lattice_lengths(P1P1) == [1, 1, 1, 1]


def test_orientation_is_normalized():
    cw = toric.LatticePolygon(tuple(reversed(P1P1.vertices)))
    assert toric.polygon_area(cw)[0] > 0


def test_invalid_polygons():
    with pytest.raises(ValueError):
        toric.LatticePolygon(((0, 0), (1, 0), (2, 0), (0, 1)))
    with pytest.raises(ValueError):
        toric.LatticePolygon(((0, 0), (2, 0), (1, 1), (2, 2), (0, 2)))
    with pytest.raises(ValueError):
        toric.LatticePolygon(((0, 0), (1, 0), (0, 1)), LAM)


def test_p2_and_p1p1_intersections():
    _, m = toric.fan_and_intersections(P2)
    assert all(x == 1 for row in m for x in row)
    _, m = toric.fan_and_intersections(P1P1)
    assert m[0][0] == m[1][1] == 0 and m[0][1] == 1


@pytest.mark.parametrize("poly", [P2, P1P1, PI, GIT])
def test_polarization_square_is_twice_normalized_area(poly):
    _, m = toric.fan_and_intersections(poly)
    assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))
    assert toric.polarization_square(poly) == 2 * toric.polygon_area(poly)[1]
    assert toric.polarization_pairings(poly) == toric.edge_lattice_lengths(poly)


def test_pi_has_orbifold_cones():
    fan, m = toric.fan_and_intersections(PI)
    assert sorted(fan.multiplicities()) == [2, 2, 3, 3]
    assert any(x.denominator > 1 for row in m for x in row)


def test_c1l2_square_via_matrix():
    m = toric.sub_intersection_matrix(PI)
    x = solve_class(m, (12, 8))
    assert sum(x[i] * m[i][j] * x[j] for i in range(2) for j in range(2)) == 288 == 16 * toric.polarization_square(PI)


def test_polygon_closes():
    for poly in (P2, P1P1, PI, GIT):
        lat = poly.lattice or Z2
        total = [0, 0]
        for (a, b), n in zip(poly.edges(), toric.edge_lattice_lengths(poly)):
            step = lat.lattice_coords((b[0] - a[0], b[1] - a[1]))
            total = [total[0] + step[0], total[1] + step[1]]
        assert total == [0, 0]


@given(st.integers(-10, 10), st.integers(-10, 10))
def test_translation_invariance(a, b):
    shift = (2 * a, 2 * b)
    moved = PI.translate(shift)
    assert toric.polygon_area(moved) == toric.polygon_area(PI)
    assert toric.edge_lattice_lengths(moved) == toric.edge_lattice_lengths(PI)
    assert toric.fan_and_intersections(moved) == toric.fan_and_intersections(PI)


def test_chart_cone_reproduces_pi():
    poly = toric.chart_cone(toric.SEXTIC_CHART_RELATIONS, toric.SEXTIC_CAPS)
    assert poly.vertex_set() == PI.vertex_set()
    assert poly.lattice == LAM


def test_chart_cone_other_cases():
    sq = toric.chart_cone(((1, 0), (0, 1)), (1, 1), parity=False)
    assert toric.polygon_area(sq) == (1, 1)
    free = toric.chart_cone(toric.SEXTIC_CHART_RELATIONS, toric.SEXTIC_CAPS, parity=False)
    assert free.vertex_set() == PI.vertex_set() and free.lattice == Z2
    with pytest.raises(ValueError):
        toric.chart_cone(((1, 0), (-1, 0)), (1, 1), parity=False)


def test_sublattice_coordinates():
    assert LAM.index == 2
    assert LAM.lattice_coords((-4, 0)) == (-2, -2)
    assert not LAM.contains((1, 0))
    with pytest.raises(ValueError):
        toric.SubLattice.from_generators((1, 1), (2, 2))
