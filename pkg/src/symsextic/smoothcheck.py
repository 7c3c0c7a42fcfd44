"""Discriminant of the sextic family S_AB and a numeric singular-point search.

S_AB : x1^6 + y1^6 + x2^6 + y2^6 + A Q+^3 + B Q+ Q-^2 = 0,  Q+- = x1 y1 +- x2 y2.

Two exact descriptions of the discriminant live here.  ``discriminant_eval``
is the sign-indexed quartic in F = 3A - B, G_i = 3A + 3B + 5 e_i.
``resultant_components`` is obtained by eliminating directly: writing
p = x1 y1, q = x2 y2 and Phi = A(p+q)^3 + B(p+q)(p-q)^2, a singular point with
pq != 0 has x_i^6 = y_i^6 and Phi_p = 6 e1 p^2, Phi_q = 6 e2 q^2, while p = 0
forces x1 = y1 = 0 and A + B = +-2.  The two disagree (see ``scripts/discriminant_scan.py``);
the numeric search sides with the resultant.

A search that returns nothing does not prove smoothness.
"""
from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .polyalg import Polynomial, parse_polynomial, poly_substitute

VARS = ("x1", "y1", "x2", "y2")
SIGN_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class SurfaceParams:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))

    def negated(self) -> "SurfaceParams":
        return SurfaceParams(-self.A, -self.B)


@dataclass(frozen=True)
class SingularHit:
    point: tuple[complex, complex, complex, complex]
    residual: float


def sextic_polynomial(params: SurfaceParams) -> Polynomial:
    x1, y1, x2, y2 = Polynomial.gens(VARS)
    qp, qm = x1 * y1 + x2 * y2, x1 * y1 - x2 * y2
    return x1**6 + y1**6 + x2**6 + y2**6 + params.A * qp**3 + params.B * qp * qm**2


# -- exact discriminant -------------------------------------------------------

def discriminant_eval(params: SurfaceParams, signs: tuple[int, int]) -> Fraction:
    """(F^2 - G1 G2)^2 - 4 F^2 (G1 - F)(G2 - F)."""
    e1, e2 = signs
    if {e1, e2} - {1, -1}:
        raise ValueError("signs must be +-1")
    a, b = params.A, params.B
    f = 3 * a - b
    g1 = 3 * a + 3 * b + 5 * e1
    g2 = 3 * a + 3 * b + 5 * e2
    return (f * f - g1 * g2) ** 2 - 4 * f * f * (g1 - f) * (g2 - f)


def resultant_components(params: SurfaceParams) -> dict[str, Fraction]:
    """Factors of the eliminated discriminant, keyed by how they arise."""
    a, b = params.A, params.B
    return {
        "equal-plus": (2 * a - 1) * (2 * b - 3) ** 3,
        "equal-minus": (2 * a + 1) * (2 * b + 3) ** 3,
        "mixed": 27 * a * a + 16 * a * b**3 - 54 * a * b - 9 * b * b + 27,
        "line-plus": a + b - 2,
        "line-minus": a + b + 2,
    }


def on_resultant_discriminant(params: SurfaceParams) -> bool:
    return any(v == 0 for v in resultant_components(params).values())


def quartic_to_resultant_scaling(params: SurfaceParams) -> SurfaceParams:
    """(A, B) -> -(6/5)(A, B); carries the quartic's zero set onto the resultant's curves."""
    k = Fraction(-6, 5)
    return SurfaceParams(k * params.A, k * params.B)


# -- numeric search -----------------------------------------------------------

def _phi_parts(a, b, p, q):
    s, d = p + q, p - q
    phi_p = 3 * a * s**2 + b * (d**2 + 2 * s * d)
    phi_q = 3 * a * s**2 + b * (d**2 - 2 * s * d)
    phi_pp = 6 * a * s + b * (4 * d + 2 * s)
    phi_pq = 6 * a * s - 2 * b * s
    phi_qq = 6 * a * s + b * (2 * s - 4 * d)
    return phi_p, phi_q, phi_pp, phi_pq, phi_qq


def sextic_value(a: complex, b: complex, z: np.ndarray) -> np.ndarray:
    x1, y1, x2, y2 = np.moveaxis(z, -1, 0)
    s, d = x1 * y1 + x2 * y2, x1 * y1 - x2 * y2
    return x1**6 + y1**6 + x2**6 + y2**6 + a * s**3 + b * s * d**2


def sextic_gradient(a: complex, b: complex, z: np.ndarray) -> np.ndarray:
    x1, y1, x2, y2 = np.moveaxis(z, -1, 0)
    phi_p, phi_q, *_ = _phi_parts(a, b, x1 * y1, x2 * y2)
    return np.stack([6 * x1**5 + phi_p * y1, 6 * y1**5 + phi_p * x1,
                     6 * x2**5 + phi_q * y2, 6 * y2**5 + phi_q * x2], axis=-1)


def sextic_hessian(a: complex, b: complex, z: np.ndarray) -> np.ndarray:
    x1, y1, x2, y2 = np.moveaxis(z, -1, 0)
    phi_p, phi_q, phi_pp, phi_pq, phi_qq = _phi_parts(a, b, x1 * y1, x2 * y2)
    zero = np.zeros_like(x1)
    u = np.stack([y1, x1, zero, zero], axis=-1)   # dp/dz
    v = np.stack([zero, zero, y2, x2], axis=-1)   # dq/dz
    outer = lambda a_, b_: a_[..., :, None] * b_[..., None, :]
    h = (phi_pp[..., None, None] * outer(u, u)
         + phi_pq[..., None, None] * (outer(u, v) + outer(v, u))
         + phi_qq[..., None, None] * outer(v, v))
    idx = np.arange(4)
    h[..., idx, idx] += 30 * z**4
    h[..., 0, 1] += phi_p
    h[..., 1, 0] += phi_p
    h[..., 2, 3] += phi_q
    h[..., 3, 2] += phi_q
    return h


def unit_residual(a: complex, b: complex, point) -> float:
    """max(|f|, |grad f|) at the representative with largest coordinate modulus 1."""
    z = np.asarray(point, dtype=complex)
    z = z / z[np.argmax(np.abs(z))]
    return float(max(abs(sextic_value(a, b, z)), np.max(np.abs(sextic_gradient(a, b, z)))))


def _newton(a, b, z, chart, steps, damping=1e-12):
    """Damped Gauss-Newton on grad f = 0 with coordinate ``chart`` fixed to 1."""
    free = [i for i in range(4) if i != chart]
    norm = lambda w: np.linalg.norm(sextic_gradient(a, b, w), axis=-1)
    cur = norm(z)
    eye = np.eye(3)
    for _ in range(steps):
        g = sextic_gradient(a, b, z)
        j = sextic_hessian(a, b, z)[..., :, free]
        jh = np.conj(np.swapaxes(j, -1, -2))
        lhs = jh @ j + damping * eye
        rhs = -(jh @ g[..., None])
        try:
            delta = np.linalg.solve(lhs, rhs)[..., 0]
        except np.linalg.LinAlgError:
            delta = np.linalg.lstsq(lhs.reshape(-1, 3), rhs.reshape(-1), rcond=None)[0].reshape(-1, 3)
        t = np.ones(len(z))
        active = np.ones(len(z), dtype=bool)
        new = z.copy()
        for _ in range(20):
            trial = z.copy()
            trial[:, free] += t[:, None] * delta
            val = norm(trial)
            ok = active & np.isfinite(val) & (val < cur)
            new[ok] = trial[ok]
            cur = np.where(ok, val, cur)
            active &= ~ok
            if not active.any():
                break
            t = np.where(active, t / 2, t)
        z = new
    return z


def _canonical(point: np.ndarray, digits: int = 6) -> tuple:
    z = point / point[np.argmax(np.round(np.abs(point), digits))]
    key = tuple((round(float(c.real), digits) + 0.0, round(float(c.imag), digits) + 0.0) for c in z)
    return key, z


def singular_points_search(params: SurfaceParams, attempts: int = 1000, tol: float = 1e-9,
                           seed: int = 0, steps: int = 40) -> list[SingularHit]:
    """Seeded Newton search for singular points across the four affine charts."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b = complex(params.A), complex(params.B)
    rng = np.random.default_rng(seed)
    starts = rng.standard_normal((attempts, 4)) + 1j * rng.standard_normal((attempts, 4))
    charts = np.arange(attempts) % 4
    found: dict[tuple, SingularHit] = {}
    for chart in range(4):
        sel = charts == chart
        if not sel.any():
            continue
        z = starts[sel].copy()
        z[:, chart] = 1.0
        with np.errstate(all="ignore"):
            z = _newton(a, b, z, chart, steps)
        for w in z:
            if not np.all(np.isfinite(w)) or np.max(np.abs(w)) == 0:
                continue
            r = unit_residual(a, b, w)
            if r < tol:
                key, rep = _canonical(w)
                if key not in found:
                    found[key] = SingularHit(tuple(complex(c) for c in rep), r)
    return [found[k] for k in sorted(found)]


# -- the curve pencil ---------------------------------------------------------

def f_ab(params: SurfaceParams, lam):
    a, b = params.A, params.B
    return (1 + lam) * (a * (1 + lam) ** 2 + b * (1 - lam) ** 2)


def lambda_roots(params: SurfaceParams) -> Optional[tuple[complex, complex]]:
    """lambda_+- = ((B - A) +- sqrt(-4AB)) / (A + B), or None when A + B = 0."""
    a, b = params.A, params.B
    if a + b == 0:
        return None
    root = cmath.sqrt(complex(-4 * a * b))
    plus = (complex(b - a) + root) / complex(a + b)
    minus = (complex(b - a) - root) / complex(a + b)
    # the roots multiply to 1; recover the smaller one from the larger to avoid cancellation
    if abs(plus) >= abs(minus) and plus != 0:
        minus = 1 / plus
    elif minus != 0:
        plus = 1 / minus
    return plus, minus


def pencil_normal_form(params: SurfaceParams, lam):
    """(P, Q, R) = (lam^3, 1, f_AB(lam)) for the pencil member x2 y2 = lam x1 y1."""
    if lam == 0:
        raise ValueError("lambda must be nonzero and finite")
    return lam**3, 1, f_ab(params, lam)


def lambda_root_residual(params: SurfaceParams) -> Optional[float]:
    roots = lambda_roots(params)
    if roots is None:
        return None
    a, b = complex(params.A), complex(params.B)
    return max(abs((1 + r) * (a * (1 + r) ** 2 + b * (1 - r) ** 2)) for r in roots)


def random_parameters(n: int, seed: int = 0) -> list[SurfaceParams]:
    """n parameter pairs with A, B uniform on [-1, 1] (as exact binary fractions), A + B != 0."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p = SurfaceParams(Fraction(rng.uniform(-1, 1)), Fraction(rng.uniform(-1, 1)))
        if p.A + p.B != 0:
            out.append(p)
    return out


def max_lambda_residual(n: int = 100, seed: int = 0) -> float:
    """Worst |f_AB(lambda_+-)| over random parameters.

    Not scale free: when A + B is small one root is about 2|A - B|/|A + B| and
    the float residual grows with its square.
    """
    return max(lambda_root_residual(p) for p in random_parameters(n, seed))


def pencil_curve(params: SurfaceParams) -> Polynomial:
    """S_AB restricted to x1 = s, y1 = t, x2 = s t, y2 = lam, in variables (s, t, lam)."""
    names = ("s", "t", "lam")
    s, t, lam = Polynomial.gens(names)
    return poly_substitute(sextic_polynomial(params), {"x1": s, "y1": t, "x2": s * t, "y2": lam}, names)


def pencil_identity_difference(params: SurfaceParams) -> Polynomial:
    """Difference between two expressions of the pencil curve; zero when the normal form holds.

    Scaling s, t by r with lam = r^2 turns the curve into
    r^6 [(s^6 + t^6) + r^6 (1 + s^6 t^6) + f(r^2) s^3 t^3].
    """
    names = ("s", "t", "r")
    s, t, r = Polynomial.gens(names)
    lam = r * r
    curve = poly_substitute(sextic_polynomial(params), {"x1": r * s, "y1": r * t, "x2": lam * s * t, "y2": lam}, names)
    f = f_ab(params, lam)
    target = r**6 * ((s**6 + t**6) + r**6 * (1 + s**6 * t**6) + f * s**3 * t**3)
    return curve - target


# -- the weighted complete intersection --------------------------------------

def weighted_substitution_difference() -> Polynomial:
    """8 * (sextic + h+^3 + h+ h-^2) at h+ = Q+ u, h- = Q- v, minus the cleared target.

    u and v stand for 1/(2 alpha) and 1/(2 beta), so alpha^-3 = 8 u^3 and
    alpha^-1 beta^-2 = 8 u v^2.
    """
    names = ("x1", "y1", "x2", "y2", "hp", "hm", "u", "v")
    eq = parse_polynomial("x1^6 + y1^6 + x2^6 + y2^6 + hp^3 + hp*hm^2", names)
    x1, y1, x2, y2, _, _, u, v = Polynomial.gens(names)
    qp, qm = x1 * y1 + x2 * y2, x1 * y1 - x2 * y2
    sub = poly_substitute(eq, {"hp": qp * u, "hm": qm * v})
    target = parse_polynomial(
        "8*(x1^6 + y1^6 + x2^6 + y2^6) + 8*u^3*(x1*y1 + x2*y2)^3"
        " + 8*u*v^2*(x1*y1 + x2*y2)*(x1*y1 - x2*y2)^2", names)
    return 8 * sub - target


def projected_parameters(alpha, beta) -> SurfaceParams:
    """8A = alpha^-3, 8B = alpha^-1 beta^-2."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    return SurfaceParams(1 / (8 * alpha**3), 1 / (8 * alpha * beta**2))
