"""Lattice polygons with a designated sublattice, their fans and intersection numbers.

Fan computations happen in coordinates of the sublattice, so primitivity and
cone multiplicities are measured against it rather than against Z^2.
Simplicial but non-smooth cones give rational intersection numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Point = tuple[int, int]


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def _primitive(v: Sequence[int]) -> tuple[int, int]:
    g = gcd(int(v[0]), int(v[1]))
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class SubLattice:
    """Sublattice of Z^2 generated by the columns of ``basis``."""

    basis: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        if self.det == 0:
            raise ValueError("sublattice basis is degenerate")

    @classmethod
    def from_generators(cls, e1: Sequence[int], e2: Sequence[int]) -> "SubLattice":
        return cls(((e1[0], e2[0]), (e1[1], e2[1])))

    @classmethod
    def standard(cls) -> "SubLattice":
        return cls.from_generators((1, 0), (0, 1))

    @classmethod
    def even_sum(cls) -> "SubLattice":
        """{(n, m) : n + m even}."""
        return cls.from_generators((1, 1), (1, -1))

    @property
    def generators(self) -> tuple[Point, Point]:
        (a, b), (c, d) = self.basis
        return (a, c), (b, d)

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.basis
        return a * d - b * c

    @property
    def index(self) -> int:
        return abs(self.det)

    def coords(self, v: Sequence[int]) -> tuple[Fraction, Fraction]:
        (a, b), (c, d) = self.basis
        det = Fraction(self.det)
        return ((d * v[0] - b * v[1]) / det, (a * v[1] - c * v[0]) / det)

    def contains(self, v: Sequence[int]) -> bool:
        return all(x.denominator == 1 for x in self.coords(v))

    def lattice_coords(self, v: Sequence[int]) -> Point:
        x, y = self.coords(v)
        if x.denominator != 1 or y.denominator != 1:
            raise ValueError(f"{tuple(v)} is not in the sublattice")
        return (int(x), int(y))


def _shoelace2(vertices: Sequence[Point]) -> int:
    n = len(vertices)
    return sum(_det(vertices[i], vertices[(i + 1) % n]) for i in range(n))


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon; vertices are stored counterclockwise."""

    vertices: tuple[Point, ...]
    lattice: Optional[SubLattice] = field(default=None, compare=False)

    def __post_init__(self):
        verts = tuple((int(x), int(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise ValueError("a polygon needs at least three vertices")
        if _shoelace2(verts) < 0:
            verts = (verts[0],) + tuple(reversed(verts[1:]))
        n = len(verts)
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            turn = _det((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1]))
            if turn == 0:
                raise ValueError(f"vertices {a}, {b}, {c} are collinear")
            if turn < 0:
                raise ValueError("polygon is not convex")
        if self.lattice is not None:
            bad = [v for v in verts if not self.lattice.contains(v)]
            if bad:
                raise ValueError(f"vertices {bad} are not in the sublattice")
        object.__setattr__(self, "vertices", verts)

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def translate(self, shift: Sequence[int]) -> "LatticePolygon":
        return LatticePolygon(tuple((x + shift[0], y + shift[1]) for x, y in self.vertices), self.lattice)

    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self.vertices)

    def edge_index(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Index of the edge joining vertices a and b (either direction)."""
        a, b = tuple(a), tuple(b)
        for i, (p, q) in enumerate(self.edges()):
            if {p, q} == {a, b}:
                return i
        raise KeyError(f"no edge joins {a} and {b}")


@dataclass(frozen=True)
class Fan:
    """Rays in sublattice coordinates, counterclockwise; cones are consecutive pairs."""

    rays: tuple[Point, ...]

    def __post_init__(self):
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("fan rays must be distinct")

    @property
    def cones(self) -> list[tuple[int, int]]:
        n = len(self.rays)
        return [(i, (i + 1) % n) for i in range(n)]

    def multiplicities(self) -> list[int]:
        return [abs(_det(self.rays[i], self.rays[j])) for i, j in self.cones]


def polygon_area(poly: LatticePolygon, lat: Optional[SubLattice] = None) -> tuple[Fraction, Fraction]:
    """(standard area, area in units of the sublattice's fundamental cell)."""
    lat = lat or poly.lattice or SubLattice.standard()
    std = Fraction(_shoelace2(poly.vertices), 2)
    return std, std / lat.index


def edge_lattice_lengths(poly: LatticePolygon, lat: Optional[SubLattice] = None) -> list[int]:
    lat = lat or poly.lattice or SubLattice.standard()
    out = []
    for p, q in poly.edges():
        x, y = lat.lattice_coords((q[0] - p[0], q[1] - p[1]))
        out.append(gcd(x, y))
    return out


def _in_lattice_coords(poly: LatticePolygon, lat: SubLattice) -> LatticePolygon:
    # a negative basis determinant flips orientation; the constructor re-normalizes
    return LatticePolygon(tuple(lat.lattice_coords(v) for v in poly.vertices))


def _edge_map(poly: LatticePolygon, lat: SubLattice) -> list[int]:
    """For each edge of ``poly``, the index of the matching edge in lattice coordinates."""
    q = _in_lattice_coords(poly, lat)
    return [q.edge_index(lat.lattice_coords(a), lat.lattice_coords(b)) for a, b in poly.edges()]


def fan_and_intersections(poly: LatticePolygon, lat: Optional[SubLattice] = None) -> tuple[Fan, list[list[Fraction]]]:
    """Normal fan (inward edge normals) and the boundary divisor intersection matrix.

    Rows and columns follow the edge order of ``poly``.  Adjacent divisors meet
    in 1/|det(u_i, u_j)|; self-intersections come from the linear relation
    sum_j <m, u_j> D_j ~ 0 with m = u_i.
    """
    lat = lat or poly.lattice or SubLattice.standard()
    q = _in_lattice_coords(poly, lat)
    rays_q = []
    for a, b in q.edges():
        e = (b[0] - a[0], b[1] - a[1])
        rays_q.append(_primitive((-e[1], e[0])))
    n = len(rays_q)
    if n < 3:
        raise ValueError("degenerate fan")
    fan_q = Fan(tuple(rays_q))
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, j in fan_q.cones:
        d = _det(rays_q[i], rays_q[j])
        if d <= 0:
            raise ValueError("degenerate fan: consecutive rays are not strictly convex")
        mat[i][j] = mat[j][i] = Fraction(1, d)
    for i in range(n):
        m = rays_q[i]
        s = sum(_dot(m, rays_q[j]) * mat[i][j] for j in ((i - 1) % n, (i + 1) % n))
        mat[i][i] = -s / _dot(m, m)
    # report in the caller's edge order
    perm = _edge_map(poly, lat)
    fan = Fan(tuple(rays_q[k] for k in perm))
    return fan, [[mat[perm[i]][perm[j]] for j in range(n)] for i in range(n)]


def support_numbers(poly: LatticePolygon, lat: Optional[SubLattice] = None) -> list[int]:
    """h_i with poly = {m : <m, u_i> >= -h_i}, in the caller's edge order."""
    lat = lat or poly.lattice or SubLattice.standard()
    fan, _ = fan_and_intersections(poly, lat)
    out = []
    for (a, _), u in zip(poly.edges(), fan.rays):
        out.append(-_dot(lat.lattice_coords(a), u))
    return out


def polarization_square(poly: LatticePolygon, lat: Optional[SubLattice] = None) -> Fraction:
    """D_P . D_P for D_P = sum h_i D_i; equals twice the normalized area."""
    _, mat = fan_and_intersections(poly, lat)
    h = support_numbers(poly, lat)
    n = len(h)
    return sum(h[i] * mat[i][j] * h[j] for i in range(n) for j in range(n))


def polarization_pairings(poly: LatticePolygon, lat: Optional[SubLattice] = None) -> list[Fraction]:
    """D_P . D_i for every edge; equals the lattice length of edge i."""
    _, mat = fan_and_intersections(poly, lat)
    h = support_numbers(poly, lat)
    return [sum(h[j] * mat[i][j] for j in range(len(h))) for i in range(len(h))]


def chart_cone(relations: Sequence[Sequence[int]], caps: tuple[int, int],
               parity: bool = True) -> LatticePolygon:
    """Polygon of allowed exponents (p, q) of A^-p B^-q, translated so (C1, C2) is the origin.

    ``relations[0]`` and ``relations[1]`` are the chart exponents of A^-1 and
    B^-1 in the chart coordinates (alpha, gamma).  The monomial A^-p B^-q is
    holomorphic when every chart exponent is non-negative; with ``parity`` it
    must also be invariant under alpha -> -alpha, which selects a sublattice.
    """
    (r00, r01), (r10, r11) = relations
    c1, c2 = caps
    # half-planes a . (p, q) <= b
    planes = [((-r00, -r10), 0), ((-r01, -r11), 0), ((1, 0), c1), ((0, 1), c2)]
    planes = [(a, b) for a, b in planes if a != (0, 0)]
    _check_bounded([a for a, _ in planes])
    verts = set()
    for i in range(len(planes)):
        for j in range(i + 1, len(planes)):
            (a1, b1), (a2, b2) = planes[i], planes[j]
            d = _det(a1, a2)
            if d == 0:
                continue
            x = Fraction(b1 * a2[1] - b2 * a1[1], d)
            y = Fraction(a1[0] * b2 - a2[0] * b1, d)
            if all(a[0] * x + a[1] * y <= b for a, b in planes):
                verts.add((x, y))
    if any(x.denominator != 1 or y.denominator != 1 for x, y in verts):
        raise ValueError("region has non-integral vertices")
    pts = sorted((int(x), int(y)) for x, y in verts)
    hull = _convex_hull(pts)
    lat = _parity_lattice(r00, r10) if parity else SubLattice.standard()
    start = hull.index((c1, c2)) if (c1, c2) in hull else 0
    hull = hull[start:] + hull[:start]
    moved = tuple((x - c1, y - c2) for x, y in hull)
    return LatticePolygon(moved, lat)


def _parity_lattice(a: int, b: int) -> SubLattice:
    """{(p, q) : a p + b q even}."""
    a, b = a % 2, b % 2
    if a and b:
        return SubLattice.even_sum()
    if a:
        return SubLattice.from_generators((2, 0), (0, 1))
    if b:
        return SubLattice.from_generators((1, 0), (0, 2))
    return SubLattice.standard()


def _check_bounded(normals: list[tuple[int, int]]):
    # the recession cone {d : a.d <= 0 for all a} is spanned by boundary directions
    for a in normals:
        for d in ((-a[1], a[0]), (a[1], -a[0])):
            if all(_dot(b, d) <= 0 for b in normals):
                raise ValueError(f"region is unbounded in direction {d}")


def _convex_hull(pts: list[Point]) -> list[Point]:
    """Andrew's monotone chain; counterclockwise, collinear points dropped."""
    if len(pts) < 3:
        raise ValueError("region is degenerate")

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and _det((out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                                         (p[0] - out[-1][0], p[1] - out[-1][1])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def parse_points(text: str) -> list[Point]:
    """'x,y;x,y;...' -> list of integer points."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        x, y = chunk.split(",")
        out.append((int(x), int(y)))
    return out


# the moduli polygon and its named vertices
PI_VERTICES = {"O": (0, 0), "II": (0, -6), "III": (-4, 0), "IV": (-2, -6)}
SEXTIC_CHART_RELATIONS = ((3, 0), (1, 1))
SEXTIC_CAPS = (2, 6)


def moduli_polygon() -> LatticePolygon:
    v = PI_VERTICES
    return LatticePolygon((v["O"], v["II"], v["IV"], v["III"]), SubLattice.even_sum())


def boundary_divisor_indices(poly: LatticePolygon) -> tuple[int, int]:
    """(D_II, D_III) = (edge O-II, edge O-III)."""
    v = PI_VERTICES
    return poly.edge_index(v["O"], v["II"]), poly.edge_index(v["O"], v["III"])


def sub_intersection_matrix(poly: LatticePolygon) -> list[list[Fraction]]:
    _, mat = fan_and_intersections(poly)
    ii, iii = boundary_divisor_indices(poly)
    return [[mat[ii][ii], mat[ii][iii]], [mat[iii][ii], mat[iii][iii]]]
