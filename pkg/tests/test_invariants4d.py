from fractions import Fraction

import pytest

from symsextic import invariants4d as inv


def test_selfdual_index():
    assert inv.selfdual_index(2, 4) == -1
    assert inv.selfdual_index(16, 24) == 52
    assert inv.selfdual_index(0, 0) == 0


def test_sextic_and_quintic_numbers():
    six = inv.surface_numbers(degree=6)
    assert (six.c1sq, six.c2, six.sigma, six.chi_hol, six.mu) == (24, 108, -64, 11, 124)
    five = inv.surface_numbers(degree=5)
    assert (five.chi_hol, five.c1sq, five.mu) == (5, 5, 80)
    zero = inv.surface_numbers("explicit", a=0, e=0)
    assert (zero.c1sq, zero.c2, zero.sigma, zero.chi_hol, zero.mu) == (0, 0, 0, 0, 0)


@pytest.mark.parametrize("d", range(1, 12))
def test_chern_numbers_agree_with_section_count(d):
    assert inv.surface_numbers(degree=d).chi_hol == inv.hypersurface_chi_oracle(d)


def test_bad_input():
    with pytest.raises(ValueError):
        inv.surface_numbers("explicit", a=1, e=0)
    with pytest.raises(ValueError):
        inv.adjunction_genus(inv.SurfaceLattice(((1,),), (0,)), (1,))


def test_index_identity_sweep():
    for a in range(-1000, 1001, 7):
        for e in range(-1000, 1001):
            if (a + e) % 12 == 0 and (a - 2 * e) % 3 == 0:
                chi = Fraction(a + e, 12)
                sigma = Fraction(a - 2 * e, 3)
                assert 2 * (10 * chi - 2 * a) == -(3 * e + 7 * sigma)


def test_mu_ab():
    assert inv.mu_ab(24, 11) == 124 == 2 * 62
    assert inv.mu_ab(5, 1) == 0 and inv.mu_ab(0, 0) == 0
    for d in range(4, 10):
        s = inv.surface_numbers(degree=d)
        assert inv.mu_ab(s.c1sq, int(s.chi_hol)) == s.mu


def test_graded_ring():
    gens = inv.u2_graded_generators(16)
    assert inv.graded_ring_dimension(gens, 8) == 30
    assert inv.graded_ring_dimension(gens, 2) == 2
    assert inv.graded_ring_dimension(inv.GradedGenerators((3, 5)), 0) == 1
    for t in range(17):
        assert inv.graded_ring_dimension(gens, t) == inv.graded_ring_dimension_bruteforce(gens, t)


def test_riemann_roch():
    assert inv.riemann_roch_curve(10, 54) == (45, 45)
    assert inv.riemann_roch_curve(0, 0) == (1, 1)
    assert inv.riemann_roch_curve(25, 12) == (-12, None)
    for g in range(31):
        for d in range(-100, 101, 3):
            assert inv.riemann_roch_curve(g, d)[0] - inv.riemann_roch_curve(g, 2 * g - 2 - d)[0] == 2 * d - (2 * g - 2)


def test_adjunction():
    assert inv.adjunction_genus(inv.CUBIC_SURFACE, (3,)) == 10
    assert inv.adjunction_genus(inv.QUADRIC_SURFACE, (6, 6)) == 25
    assert inv.adjunction_genus(inv.QUADRIC_SURFACE, (1, 1)) == 0
    # 2g - 2 = q(q+1) c1^2
    assert inv.adjunction_genus(inv.pluricanonical_lattice(24), (2,)) == 73


def test_dimension_ledger():
    entries = {e.id: e for e in inv.dimension_ledger(k=1)}
    assert all(e.ok for e in entries.values())
    assert entries["dim-gluing-match"].computed == 17
    assert entries["dim-sextic-actual"].computed == 68
    assert entries["dim-instanton-pairs"].computed == 0
    for k in range(1, 6):
        assert {e.id: e.computed for e in inv.dimension_ledger(k)}["dim-instanton-pairs"] == 8 * k - 8
