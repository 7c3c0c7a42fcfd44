import random
from fractions import Fraction

import numpy as np
import pytest

from symsextic import smoothcheck as sc

F = Fraction
P = sc.SurfaceParams


def test_discriminant_examples():
    assert sc.discriminant_eval(P(0, F(-5, 4)), (1, 1)) == 0
    assert sc.discriminant_eval(P(F(-5, 12), 7), (1, 1)) == 0
    assert sc.discriminant_eval(P(1, 1), (1, 1)) == 12393


def test_discriminant_sign_symmetry():
    rng = random.Random(3)
    for _ in range(100):
        p = P(F(rng.randint(-30, 30), rng.randint(1, 9)), F(rng.randint(-30, 30), rng.randint(1, 9)))
        for e1, e2 in sc.SIGN_PAIRS:
            assert sc.discriminant_eval(p, (e1, e2)) == sc.discriminant_eval(p.negated(), (-e1, -e2))


def test_quartic_is_a_rescaled_resultant():
    # G + 3F = 0 is the line A = -5/12; it maps onto the (2A - 1) factor
    for b in (F(-2), F(0), F(7)):
        p = P(F(-5, 12), b)
        assert sc.discriminant_eval(p, (1, 1)) == 0
        assert sc.resultant_components(sc.quartic_to_resultant_scaling(p))["equal-plus"] == 0
    # F = G is the line B = -5/4; it maps onto the (2B - 3) factor
    for a in (F(-3), F(1, 7), F(5)):
        p = P(a, F(-5, 4))
        assert sc.discriminant_eval(p, (1, 1)) == 0
        assert sc.resultant_components(sc.quartic_to_resultant_scaling(p))["equal-plus"] == 0
    # the quartic has no factor matching the lines A + B = +-2
    assert sc.resultant_components(P(1, 1))["line-plus"] == 0
    assert sc.discriminant_eval(P(1, 1), (1, 1)) != 0


def test_derivatives_match_exact_polynomial():
    params = P(F(2, 3), F(-5, 7))
    poly = sc.sextic_polynomial(params)
    grads = [poly.diff(v) for v in sc.VARS]
    rng = np.random.default_rng(0)
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    vals = dict(zip(sc.VARS, z))
    a, b = complex(params.A), complex(params.B)
    assert abs(sc.sextic_value(a, b, z) - complex(poly.evaluate(vals))) < 1e-9
    g = sc.sextic_gradient(a, b, z)
    h = sc.sextic_hessian(a, b, z)
    for i, gi in enumerate(grads):
        assert abs(g[i] - complex(gi.evaluate(vals))) < 1e-9
        for j, v in enumerate(sc.VARS):
            assert abs(h[i, j] - complex(gi.diff(v).evaluate(vals))) < 1e-9


def _exact_residual(params, point):
    poly = sc.sextic_polynomial(params)
    vals = dict(zip(sc.VARS, point))
    return max([abs(complex(poly.evaluate(vals)))] + [abs(complex(poly.diff(v).evaluate(vals))) for v in sc.VARS])


@pytest.mark.parametrize("ab", [(F(1, 2), 0), (0, F(3, 2)), (1, F(3, 2))])
def test_hits_on_resultant_components(ab):
    params = P(*ab)
    assert sc.on_resultant_discriminant(params)
    hits = sc.singular_points_search(params, attempts=200, seed=1)
    assert hits
    for h in hits:
        assert h.residual < 1e-9
        # independent re-check through the exact polynomial, in a different affine chart
        z = np.array(h.point)
        k = int(np.argsort(-np.abs(z))[1])
        if abs(z[k]) > 1e-3:
            w = z / z[k]
            scale = np.max(np.abs(w))
            assert _exact_residual(params, list(w)) < 1e-9 * max(1.0, scale**5)
        assert _exact_residual(params, h.point) < 1e-9


def test_search_is_reproducible():
    a = sc.singular_points_search(P(F(1, 2), 0), attempts=100, seed=5)
    b = sc.singular_points_search(P(F(1, 2), 0), attempts=100, seed=5)
    assert a == b


def test_search_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        sc.singular_points_search(P(0, 0), tol=0)


def test_off_locus_point_has_no_hits():
    params = P(F(1, 3), F(1, 5))
    assert not sc.on_resultant_discriminant(params)
    assert sc.singular_points_search(params, attempts=400, seed=2) == []


def test_pencil_examples():
    roots = sc.lambda_roots(P(1, 1))
    assert abs(roots[0] - 1j) < 1e-15 and abs(roots[1] + 1j) < 1e-15
    assert sc.lambda_roots(P(1, 0)) == (-1, -1)
    assert sc.lambda_roots(P(1, -1)) is None
    for ab in [(1, 1), (F(2, 3), F(-1, 9)), (5, 0)]:
        assert sc.pencil_normal_form(P(*ab), 1)[2] == 8 * F(ab[0])
    assert sc.pencil_normal_form(P(1, 1), 2) == (8, 1, 3 * (9 + 1))
    with pytest.raises(ValueError):
        sc.pencil_normal_form(P(1, 1), 0)


def test_lambda_roots_are_backward_stable():
    # |f(lambda)| can only be small relative to the size of the terms being cancelled
    rng = random.Random(4)
    for _ in range(200):
        p = P(F(rng.randint(-40, 40), rng.randint(1, 9)), F(rng.randint(-40, 40), rng.randint(1, 9)))
        if p.A + p.B == 0:
            continue
        scale = max((abs(float(p.A)) + abs(float(p.B))) * (1 + abs(r)) ** 3 for r in sc.lambda_roots(p))
        assert sc.lambda_root_residual(p) < 1e-14 * scale
        plus, minus = sc.lambda_roots(p)
        assert abs(plus * minus - 1) < 1e-14


def test_pencil_curve_identities():
    params = P(F(2, 3), F(-5, 7))
    assert sc.pencil_identity_difference(params).is_zero()
    s, t, lam = sc.Polynomial.gens(("s", "t", "lam"))
    expected = s**6 + t**6 + s**6 * t**6 + lam**6 + sc.f_ab(params, lam) * s**3 * t**3
    assert sc.pencil_curve(params) == expected


def test_weighted_substitution_identity():
    assert sc.weighted_substitution_difference().is_zero()
    assert sc.projected_parameters(F(1, 2), 1) == P(1, F(1, 4))
