"""Section counts on weighted projective space and odd cubic Hilbert polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class InconsistentSamplesError(ValueError):
    pass


@dataclass(frozen=True)
class OddCubic:
    """H(p) = alpha p^3 + beta p."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    def __call__(self, p) -> Fraction:
        return self.alpha * p**3 + self.beta * p


@dataclass(frozen=True)
class HilbertSamples:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ps = [p for p, _ in self.pairs]
        if len(set(ps)) != len(ps):
            raise ValueError("sample points must be distinct")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "HilbertSamples":
        return cls(tuple((int(p), v) for p, v in pairs))


@lru_cache(maxsize=None)
def _weighted_count(weights: tuple[int, ...], degree: int) -> int:
    # coin-change DP over the variables
    table = [1] + [0] * degree
    for w in weights:
        for d in range(w, degree + 1):
            table[d] += table[d - w]
    return table[degree]


def weighted_sections_dim(weights: Sequence[int], degree: int) -> int:
    """Number of monomials of weighted degree ``degree``; zero for negative degree."""
    if degree < 0:
        return 0
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    return _weighted_count(tuple(weights), degree)


def hypersurface_hilbert(ambient_weights: Sequence[int], hyp_degree: int, twist_degree: int, p: int) -> int:
    """h^0 of O(twist*p) on a degree-``hyp_degree`` hypersurface, via the restriction sequence."""
    if p < 0:
        return 0
    if hyp_degree % twist_degree:
        raise ValueError("hypersurface degree must be a multiple of the twist degree")
    shift = hyp_degree // twist_degree
    n = lambda q: weighted_sections_dim(ambient_weights, twist_degree * q) if q >= 0 else 0
    return n(p) - n(p - shift)


def fit_odd_cubic(samples: HilbertSamples) -> OddCubic:
    """Interpolate H(p) = alpha p^3 + beta p; extra samples must agree.

    With at least three samples a full cubic is fitted first, and nonzero
    constant or quadratic terms are reported as a failure of oddness.
    """
    pts = [(Fraction(p), Fraction(v)) for p, v in samples.pairs]
    if len(pts) < 2:
        raise ValueError("need at least two samples")
    if len(pts) >= 4:
        c = _solve([[p**k for k in range(4)] for p, _ in pts[:4]], [v for _, v in pts[:4]])
        if c is not None and (c[0] or c[2]):
            raise InconsistentSamplesError(f"samples need even terms: constant {c[0]}, quadratic {c[2]}")
    sol = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            sol = _solve([[pts[i][0] ** 3, pts[i][0]], [pts[j][0] ** 3, pts[j][0]]], [pts[i][1], pts[j][1]])
            if sol is not None:
                break
        if sol is not None:
            break
    if sol is None:
        raise InconsistentSamplesError("sample points do not determine an odd cubic")
    h = OddCubic(*sol)
    for p, v in pts:
        if h(p) != v:
            raise InconsistentSamplesError(f"H({p}) = {h(p)} from the fit, sample says {v}")
    return h


def _solve(a: list[list[Fraction]], b: list[Fraction]):
    """Gauss-Jordan over Q for a square system; None if singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(x)] for row, x in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def n_closed(q: int) -> int:
    """Degree-2q monomials in four weight-1 variables: C(2q+3, 3)."""
    if q < 0:
        return 0
    return (2 * q + 1) * (2 * q + 2) * (2 * q + 3) // 6


def sextic_hilbert(p: int) -> int:
    return hypersurface_hilbert((1, 1, 1, 1, 2), 6, 2, p)
