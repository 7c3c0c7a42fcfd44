import random

import pytest

from symsextic import grouprep as gr
from symsextic.exactnum import root_of_unity
from symsextic.polyalg import ExactMatrix

SPACES = {
    "sym6": gr.symmetric_power(4, 6),
    "wedge2": gr.exterior_square(4),
    "bideg66": gr.bihomogeneous_space((6, 6)),
    "mixed": gr.multidegree_space([[0, 1], [2, 3]], [(4, 2), (2, 4)]),
}


@pytest.fixture(scope="module")
def G():
    return gr.load_group("G")


@pytest.fixture(scope="module")
def H():
    return gr.load_group("H")


def test_group_orders(G, H):
    assert len(G) == 72 and len(H) == 72
    assert len(gr.group_closure([gr.MonomialMap.identity(4)])) == 1


def test_shipped_files_match_builtin_generators():
    assert gr.parse_group_file((gr.GROUP_DIR / "G.txt").read_text()) == gr.sextic_group_generators()
    assert gr.parse_group_file((gr.GROUP_DIR / "H.txt").read_text()) == gr.curve_group_generators()


def test_group_file_round_trip():
    gens = gr.curve_group_generators()
    assert gr.parse_group_file(gr.format_group_file(gens)) == gens
    with pytest.raises(ValueError):
        gr.parse_group_file("perm=[0,1] chars=(6,1)")


def test_closure_bound():
    gens = [gr.MonomialMap.from_chars((0, 1), [(12, 1), (12, 0)]), gr.MonomialMap.from_chars((0, 1), [(12, 0), (12, 1)])]
    with pytest.raises(gr.GroupTooLargeError):
        gr.group_closure(gens, bound=100)


def test_order_divides_ambient(G, H):
    for grp in (G, H):
        assert gr.ambient_monomial_group_order(4, grp.order_of_scalars) % len(grp) == 0


def test_mixed_orders_normalize_to_lcm():
    g = gr.MonomialMap.from_chars((0, 1), [(6, 1), (12, 1)])
    assert g.order == 12 and g.exps == (2, 1)


def test_non_closed_set_rejected():
    g = gr.MonomialMap.from_chars((0, 1), [(6, 1), (6, 0)])
    with pytest.raises(ValueError):
        gr.FiniteGroup((gr.MonomialMap.identity(2, 6), g))


def test_swap_on_wedge_square(G):
    swap = G.generators[2]
    m = gr.induced_action(swap, SPACES["wedge2"])
    basis = SPACES["wedge2"].basis()
    assert m[basis.index((2, 3)), basis.index((0, 1))] == 1


def test_first_generator_scales_monomials(G):
    g = G.generators[0]
    space = SPACES["sym6"]
    m = gr.induced_action(g, space)
    for k, (a, b, c, d) in enumerate(space.basis()):
        assert m[k, k] == root_of_unity(6, a - b)


def test_identity_acts_trivially():
    for space in SPACES.values():
        ident = gr.MonomialMap.identity(4, 6)
        assert gr.induced_action(ident, space) == ExactMatrix.identity(space.dimension, 6)


@pytest.mark.parametrize("name", ["sym6", "wedge2", "bideg66", "mixed"])
def test_representation_property(G, H, name):
    space = SPACES[name]
    rng = random.Random(name)
    for grp in (G, H):
        for _ in range(50):
            g, h = rng.choice(grp.elements), rng.choice(grp.elements)
            assert gr.induced_action(g.compose(h), space) == gr.induced_action(g, space) @ gr.induced_action(h, space)


@pytest.mark.parametrize("group,name,dim", [("G", "sym6", 4), ("G", "wedge2", 1), ("H", "bideg66", 5), ("H", "mixed", 2)])
def test_invariants_against_both_oracles(G, H, group, name, dim):
    grp = {"G": G, "H": H}[group]
    space = SPACES[name]
    basis = gr.invariant_basis(grp, space)
    assert len(basis) == dim == gr.character_average(grp, space)
    for g in grp.elements:
        m = gr.induced_action(g, space)
        for v in basis:
            assert m.apply(v) == list(v)


def test_trace_by_cycles_matches_matrix_trace(G, H):
    rng = random.Random(1)
    for name, space in SPACES.items():
        for grp in (G, H):
            for g in rng.sample(grp.elements, 10):
                m = gr.induced_action(g, space)
                tr = sum((m[i, i] for i in range(space.dimension)), root_of_unity(g.order, 0) * 0)
                assert tr == gr.trace_by_cycles(g, space)


def test_dimension_formula_matches_basis():
    for space in SPACES.values():
        assert space.dimension == len(space.basis())
    assert SPACES["sym6"].dimension == 84 and SPACES["bideg66"].dimension == 49


def test_sextic_invariants_are_the_paired_diagonals(G):
    space = SPACES["sym6"]
    polys = {str(gr.vector_to_polynomial(space, v, ["x1", "y1", "x2", "y2"])) for v in gr.invariant_basis(G, space)}
    assert polys == {"x1^6 + x2^6", "y1^6 + y2^6", "x1^3*y1^3 + x2^3*y2^3", "x1^2*y1^2*x2*y2 + x1*y1*x2^2*y2^2"}


def test_determinants(G):
    assert all(d == 1 for d in gr.determinant_character(G).values())
    assert gr.determinant(gr.MonomialMap.identity(3)) == 1
    assert gr.determinant(gr.MonomialMap((1, 0), (0, 0), 1)) == -1


def test_inverse_and_compose(H):
    for g in H.elements[:20]:
        assert g.compose(g.inverse()) == gr.MonomialMap.identity(4, 12)
