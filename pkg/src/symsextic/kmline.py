"""Knudsen-Mumford degree bookkeeping on the moduli line and its virtual-class pairings.

Writing pp = p - 1/2, the exponents in det pi_*(K^p) = L2^{N2(p)} (x) L0^{N0(p)}
are N2 = pp^3/3 - pp/12 and N0 = -2 pp.  Pairings are indexed by the divisor
basis (D_II, D_III) throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .hilbert import OddCubic

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class KMDegrees:
    deg_L0: Fraction
    deg_L2: Fraction


@dataclass(frozen=True)
class PairingVector:
    """Pairings against (D_II, D_III)."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != 2:
            raise ValueError("pairing vectors have length 2 (D_II, D_III)")


def n2(p) -> Fraction:
    pp = Fraction(p) - HALF
    return pp**3 / 3 - pp / 12


def n0(p) -> Fraction:
    return -2 * (Fraction(p) - HALF)


def km_degree(h: OddCubic, p: int) -> Fraction:
    """d_p = p H(p) - (p-1) H(p-1)."""
    if p < 1:
        raise ValueError("p must be at least 1")
    return p * h(p) - (p - 1) * h(p - 1)


def km_degree_closed(h: OddCubic, p) -> Fraction:
    pp = Fraction(p) - HALF
    return h.alpha * (4 * pp**3 + pp) + 2 * h.beta * pp


def km_pairings(h: OddCubic, cover_factor: int, check_range: range = range(1, 21)) -> KMDegrees:
    """Solve deg_L2 N2(p) + deg_L0 N0(p) = d_p / m identically in p.

    d_p is an odd polynomial in pp with pp^3 coefficient 4 alpha and pp
    coefficient alpha + 2 beta; matching against N2, N0 gives
    deg_L2 = 12 alpha / m and deg_L0 = -(alpha + beta) / m.
    """
    if cover_factor <= 0:
        raise ValueError("cover factor must be positive")
    m = Fraction(cover_factor)
    cubic = 4 * h.alpha
    linear = h.alpha + 2 * h.beta
    deg_l2 = 3 * cubic / m
    # pp coefficient: -deg_L2/12 - 2 deg_L0 = linear/m
    deg_l0 = -(linear / m + deg_l2 / 12) / 2
    for p in check_range:
        lhs = deg_l2 * n2(p) + deg_l0 * n0(p)
        if lhs != km_degree(h, p) / m:
            raise ArithmeticError(f"degree identity fails at p={p}")
    return KMDegrees(deg_l0, deg_l2)


def proportionality_ratio(u: PairingVector, v: PairingVector) -> Optional[Fraction]:
    """r with v = r u componentwise, or None."""
    if not any(u.values):
        raise ValueError("u must be nonzero")
    r = None
    for a, b in zip(u.values, v.values):
        if a == 0:
            if b != 0:
                return None
            continue
        q = b / a
        if r is None:
            r = q
        elif q != r:
            return None
    return r


def virtual_pairings(ratio_zeta_vs_L2, L2_square, L0_vs_L2) -> tuple[Fraction, Fraction]:
    r, s, t = Fraction(ratio_zeta_vs_L2), Fraction(L2_square), Fraction(L0_vs_L2)
    return r * s, r * t * s


def mmm_from_km(zeta_L2, zeta_L0) -> tuple[Fraction, Fraction]:
    """Convert via c1(L2) = -I(c1^3)/2 and c1(L0) = 24 I(c1 c2)."""
    return -2 * Fraction(zeta_L2), Fraction(zeta_L0) / 24


def pairing_vectors(h: OddCubic, cover_II: int = 4, cover_III: int = 6) -> tuple[PairingVector, PairingVector]:
    """(c1(L2), c1(L0)) pairing vectors on (D_II, D_III) from the two covering factors."""
    on_ii = km_pairings(h, cover_II)
    on_iii = km_pairings(h, cover_III)
    return (PairingVector((on_ii.deg_L2, on_iii.deg_L2)),
            PairingVector((on_ii.deg_L0, on_iii.deg_L0)))


def solve_class(intersection: Sequence[Sequence], pairings: Sequence) -> list[Fraction]:
    """Coefficients x with M x = pairings (2x2 exact solve)."""
    (a, b), (c, d) = [[Fraction(x) for x in row] for row in intersection]
    det = a * d - b * c
    if det == 0:
        raise ZeroDivisionError("intersection matrix is singular")
    e, f = map(Fraction, pairings)
    return [(d * e - b * f) / det, (a * f - c * e) / det]
