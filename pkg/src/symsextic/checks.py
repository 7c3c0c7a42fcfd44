"""Registry of verified values with their expected numbers and provenance.

Each check recomputes one number from scratch and compares it with the value
it is expected to have.  Ids on ``KNOWN_DISCREPANCIES`` carry the stated
value as expectation; a disagreement there is reported as
``known-discrepancy`` instead of a failure.
"""
from __future__ import annotations

import fnmatch
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional

from . import grouprep as gr
from . import hilbert, invariants4d as inv, kmline, smoothcheck as sc, toric
from .exactnum import is_rational, root_of_unity
from .polyalg import (Polynomial, cokernel_dimension, comultiplication_matrix, enumerate_bihomogeneous,
                      enumerate_monomials)
from .report import CheckReport, render_value

KNOWN_DISCREPANCIES = frozenset({
    # sign slips in the stated virtual-class values
    "km-pd-zeta-vs-L2",
    "km-pd-zeta-vs-L0",
    "km-mmm-c1c2",
    # stated divisor naming reversed against the computations
    "toric-divisor-naming",
    # chart monomial exponent stated as p+3q
    "toric-chart-exponent",
    # sign-indexed quartic does not describe the singular locus
    "smooth-search-quartic-zero",
    "smooth-search-quartic-nonzero",
    # stated pencil normal form breaks its own contact condition
    "smooth-pencil-contact",
})


@dataclass(frozen=True)
class Check:
    id: str
    section: str
    provenance: str
    expected: object
    compute: Callable[[int], object]
    tolerance: Optional[float] = None  # float checks: computed must be below this


def _status(check: Check, computed) -> str:
    if check.tolerance is not None:
        ok = computed is not None and computed < check.tolerance
    else:
        ok = computed == check.expected
    if ok:
        return "match"
    if check.id in KNOWN_DISCREPANCIES:
        return "known-discrepancy"
    if isinstance(computed, (int, Fraction)) and isinstance(check.expected, (int, Fraction)) \
            and check.expected != 0 and computed == -check.expected:
        return "sign-mismatch"
    return "mismatch"


def run_check(check: Check, seed: int = 0) -> CheckReport:
    computed = check.compute(seed)
    expected = f"< {check.tolerance:g}" if check.tolerance is not None else render_value(check.expected)
    return CheckReport(check.id, check.section, expected, render_value(computed),
                       check.provenance, _status(check, computed))


# -- cached heavy pieces ------------------------------------------------------

@lru_cache(maxsize=None)
def _group(name: str) -> gr.FiniteGroup:
    return gr.load_group(name)


SPACES = {
    "sym6": gr.symmetric_power(4, 6),
    "wedge2": gr.exterior_square(4),
    "bideg66": gr.bihomogeneous_space((6, 6)),
    "mixed": gr.multidegree_space([[0, 1], [2, 3]], [(4, 2), (2, 4)]),
}


@lru_cache(maxsize=None)
def _invariants(group: str, space: str):
    return tuple(tuple(v) for v in gr.invariant_basis(_group(group), SPACES[space]))


def _wedge_support(vectors) -> str:
    (v,) = vectors
    basis = SPACES["wedge2"].basis()
    names = ("x1", "y1", "x2", "y2")
    terms = []
    for (i, j), c in zip(basis, v):
        if c:
            r = is_rational(c)
            terms.append(f"{r}*d{names[i]}^d{names[j]}")
    lead = is_rational(next(c for c in v if c))
    return " + ".join(t.replace(f"{lead}*", "", 1) if lead == 1 else t for t in terms)


def _affine_monomials(vectors) -> frozenset[str]:
    """Invariant bidegree-(6,6) monomials in s = y1/x1, t = y2/x2."""
    out = set()
    basis = SPACES["bideg66"].basis()
    for v in vectors:
        support = [b for b, c in zip(basis, v) if c]
        if len(support) != 1:
            return frozenset({"non-monomial basis"})
        _, a, _, b = support[0]
        parts = [f"s^{a}" if a else "", f"t^{b}" if b else ""]
        out.add("*".join(p for p in parts if p) or "1")
    return frozenset(out)


H_BASIS = frozenset({"1", "s^6", "t^6", "s^6*t^6", "s^3*t^3"})
SEXTIC = hilbert.OddCubic(4, 7)
ZETA_PAIRINGS = kmline.PairingVector((Fraction(-1, 4), Fraction(-1, 6)))


def _l2_l0():
    return kmline.pairing_vectors(hilbert.fit_odd_cubic(
        hilbert.HilbertSamples.of((p, hilbert.sextic_hilbert(p)) for p in (1, 2, 3))))


def _zeta_ratio():
    l2, _ = _l2_l0()
    return kmline.proportionality_ratio(l2, ZETA_PAIRINGS)


def _l0_ratio():
    l2, l0 = _l2_l0()
    return kmline.proportionality_ratio(l2, l0)


def _c1l2_square():
    poly = toric.moduli_polygon()
    m = toric.sub_intersection_matrix(poly)
    l2, _ = _l2_l0()
    x = kmline.solve_class(m, l2.values)
    return sum(x[i] * m[i][j] * x[j] for i in range(2) for j in range(2))


def _virtual():
    return kmline.virtual_pairings(_zeta_ratio(), _c1l2_square(), _l0_ratio())


def _edge(a: str, b: str) -> int:
    poly = toric.moduli_polygon()
    v = toric.PI_VERTICES
    return toric.edge_lattice_lengths(poly)[poly.edge_index(v[a], v[b])]


def _naming() -> str:
    # D_II must pair to 12 with c1(L2) = 4 Omega, i.e. have lattice length 3
    poly = toric.moduli_polygon()
    lengths = toric.edge_lattice_lengths(poly)
    v = toric.PI_VERTICES
    for end in ("II", "III"):
        if lengths[poly.edge_index(v["O"], v[end])] * 4 == 12:
            return f"D_II = edge O-{end}"
    return "no edge of length 3"


def _chart_exponent() -> str:
    (r00, _), (r10, _) = toric.SEXTIC_CHART_RELATIONS
    return f"{r00}p+{r10}q".replace("1p", "p").replace("1q", "q")


def _zeta6_inverse() -> str:
    inv_z = 1 / root_of_unity(6, 1)
    return str(inv_z) if inv_z == root_of_unity(6, 5) else "not z6^5"


def _pencil_contact_order() -> int:
    """Order of vanishing at lambda = 0 of the Q-coordinate of the normal form."""
    lam = Polynomial.var("lam", ("lam",))
    _, q, _ = sc.pencil_normal_form(sc.SurfaceParams(1, 1), lam)
    q = Polynomial.constant(q, ("lam",)) if not isinstance(q, Polynomial) else q
    return min(e[0] for e in q.terms)


def _hits(a, b, seed) -> int:
    return len(sc.singular_points_search(sc.SurfaceParams(a, b), attempts=1000, tol=1e-9, seed=seed))


def _ledger_checks() -> list[Check]:
    out = []
    for e in inv.dimension_ledger(k=1):
        out.append(Check(e.id, e.anchor, e.provenance, e.expected, lambda _s, e=e: e.computed))
    return out


def _u2(target):
    return inv.graded_ring_dimension(inv.u2_graded_generators(target), target)


def build_registry() -> list[Check]:
    F = Fraction
    c = Check
    checks = [
        # exact scalars
        c("exact-zeta6-cubed", "sixth roots of unity", "trivial", -1, lambda s: is_rational(root_of_unity(6, 3))),
        c("exact-zeta6-squared", "sixth roots of unity", "derived", "-1 + z6", lambda s: str(root_of_unity(6, 2))),
        c("exact-zeta6-inverse", "sixth roots of unity", "derived", "1 - z6", lambda s: _zeta6_inverse()),
        c("exact-zeta6-trace", "sixth roots of unity", "derived", 1,
          lambda s: is_rational(root_of_unity(6, 1) + root_of_unity(6, 5))),
        # polynomials and linear algebra
        c("poly-sextic-monomials", "invariant sextics", "derived", 84, lambda s: len(enumerate_monomials(4, [1] * 4, 6))),
        c("poly-weighted-monomials", "weighted section counts", "derived", 11,
          lambda s: len(enumerate_monomials(5, [1, 1, 1, 1, 2], 2))),
        c("poly-bidegree-66", "curves of bidegree (6,6)", "paper", 49, lambda s: len(enumerate_bihomogeneous((6, 6)))),
        c("poly-substitution-identity", "weighted complete intersection", "paper", 0,
          lambda s: 0 if sc.weighted_substitution_difference().is_zero() else "nonzero"),
        c("poly-cokernel-d5", "hypersurface obstructions", "derived", 0,
          lambda s: cokernel_dimension(comultiplication_matrix(5))),
        c("poly-cokernel-d6", "hypersurface obstructions", "paper", 6,
          lambda s: cokernel_dimension(comultiplication_matrix(6))),
        c("poly-cokernel-d7", "hypersurface obstructions", "derived", 20,
          lambda s: cokernel_dimension(comultiplication_matrix(7))),
        # groups and invariants
        c("group-order-G", "invariant sextics", "derived", 72, lambda s: len(_group("G"))),
        c("group-order-H", "curves of bidegree (6,6)", "derived", 72, lambda s: len(_group("H"))),
        c("group-det-G", "invariant two-forms", "derived", True,
          lambda s: all(d == 1 for d in gr.determinant_character(_group("G")).values())),
        c("inv-G-sym6", "invariant sextics", "paper", 4, lambda s: len(_invariants("G", "sym6"))),
        c("inv-G-sym6-character", "invariant sextics", "derived", 4,
          lambda s: gr.character_average(_group("G"), SPACES["sym6"])),
        c("inv-G-wedge2", "invariant two-forms", "paper", 1, lambda s: len(_invariants("G", "wedge2"))),
        c("inv-G-wedge2-basis", "invariant two-forms", "paper", "dx1^dy1 + dx2^dy2",
          lambda s: _wedge_support(_invariants("G", "wedge2"))),
        c("inv-G-wedge2-character", "invariant two-forms", "derived", 1,
          lambda s: gr.character_average(_group("G"), SPACES["wedge2"])),
        c("inv-H-66", "curves of bidegree (6,6)", "paper", 5, lambda s: len(_invariants("H", "bideg66"))),
        c("inv-H-66-basis", "curves of bidegree (6,6)", "paper", "1, s^3*t^3, s^6, s^6*t^6, t^6",
          lambda s: ", ".join(sorted(_affine_monomials(_invariants("H", "bideg66"))))),
        c("inv-H-66-character", "curves of bidegree (6,6)", "derived", 5,
          lambda s: gr.character_average(_group("H"), SPACES["bideg66"])),
        c("inv-H-mixed", "H-invariant normal directions", "paper", 2, lambda s: len(_invariants("H", "mixed"))),
        c("inv-H-mixed-character", "H-invariant normal directions", "derived", 2,
          lambda s: gr.character_average(_group("H"), SPACES["mixed"])),
        # Hilbert polynomial
        c("hilbert-N-2", "weighted section counts", "derived", 11,
          lambda s: hilbert.weighted_sections_dim((1, 1, 1, 1, 2), 2)),
        c("hilbert-N-4", "weighted section counts", "derived", 46,
          lambda s: hilbert.weighted_sections_dim((1, 1, 1, 1, 2), 4)),
        c("hilbert-H-5", "restriction sequence", "derived", 535, lambda s: hilbert.sextic_hilbert(5)),
        c("hilbert-fit", "Hilbert polynomial of the sextic threefold", "paper", (4, 7),
          lambda s: (lambda h: (h.alpha, h.beta))(hilbert.fit_odd_cubic(hilbert.HilbertSamples.of(
              (p, hilbert.sextic_hilbert(p)) for p in range(1, 51))))),
        # Knudsen-Mumford
        c("km-d2", "Knudsen-Mumford degrees", "derived", 81, lambda s: kmline.km_degree(SEXTIC, 2)),
        c("km-cover6-L0", "pairings on D_III", "paper", F(-11, 6), lambda s: kmline.km_pairings(SEXTIC, 6).deg_L0),
        c("km-cover6-L2", "pairings on D_III", "paper", 8, lambda s: kmline.km_pairings(SEXTIC, 6).deg_L2),
        c("km-cover4-L0", "pairings on D_II", "paper", F(-11, 4), lambda s: kmline.km_pairings(SEXTIC, 4).deg_L0),
        c("km-cover4-L2", "pairings on D_II", "paper", 12, lambda s: kmline.km_pairings(SEXTIC, 4).deg_L2),
        c("km-ratio-L0-vs-L2", "proportional classes", "paper", F(-11, 48), lambda s: _l0_ratio()),
        c("km-ratio-zeta-vs-L2", "proportional classes", "derived", F(-1, 48), lambda s: _zeta_ratio()),
        c("km-pd-zeta-vs-L2", "proportional classes", "paper", F(1, 48), lambda s: _zeta_ratio()),
        c("km-pd-zeta-vs-L0", "proportional classes", "paper", F(-1, 11),
          lambda s: kmline.proportionality_ratio(_l2_l0()[1], ZETA_PAIRINGS)),
        c("km-zeta-L2", "virtual class pairings", "paper", -6, lambda s: _virtual()[0]),
        c("km-zeta-L0", "virtual class pairings", "paper", F(11, 8), lambda s: _virtual()[1]),
        c("km-mmm-c1cubed", "tautological class pairings", "paper", 12, lambda s: kmline.mmm_from_km(*_virtual())[0]),
        c("km-mmm-c1c2", "tautological class pairings", "paper", F(-11, 192),
          lambda s: kmline.mmm_from_km(*_virtual())[1]),
        # toric
        c("toric-area-standard", "moduli polygon", "derived", 18, lambda s: toric.polygon_area(toric.moduli_polygon())[0]),
        c("toric-area-lambda", "moduli polygon", "derived", 9, lambda s: toric.polygon_area(toric.moduli_polygon())[1]),
        c("toric-omega-square", "polarization", "paper", 18, lambda s: toric.polarization_square(toric.moduli_polygon())),
        c("toric-c1L2-square-area", "polarization", "paper", 288,
          lambda s: 16 * toric.polarization_square(toric.moduli_polygon())),
        c("toric-c1L2-square-matrix", "polarization", "paper", 288, lambda s: _c1l2_square()),
        c("toric-edge-O-III", "moduli polygon", "derived", 2, lambda s: _edge("O", "III")),
        c("toric-edge-O-II", "moduli polygon", "derived", 3, lambda s: _edge("O", "II")),
        c("toric-chart-cone", "chart monomials", "paper", "(-4, 0), (-2, -6), (0, -6), (0, 0)",
          lambda s: ", ".join(str(v) for v in sorted(toric.chart_cone(
              toric.SEXTIC_CHART_RELATIONS, toric.SEXTIC_CAPS).vertex_set()))),
        c("toric-git-triangle", "GIT quotient", "derived", (18, 9),
          lambda s: toric.polygon_area(toric.LatticePolygon(((0, 0), (-6, 0), (0, -6)), toric.SubLattice.even_sum()))),
        c("toric-divisor-naming", "boundary divisors", "paper", "D_II = edge O-III", lambda s: _naming()),
        c("toric-chart-exponent", "chart monomials", "paper", "p+3q", lambda s: _chart_exponent()),
        # index arithmetic
        c("index-cp2-sum", "self-dual index", "paper", -1, lambda s: inv.selfdual_index(2, 4)),
        c("index-k3-reversed", "self-dual index", "paper", 52, lambda s: inv.selfdual_index(16, 24)),
        c("index-mu-sextic", "real index of surface moduli", "derived", 124, lambda s: inv.mu_ab(24, 11)),
        c("surface-sextic-chi", "sextic surfaces", "derived", 11, lambda s: inv.surface_numbers(degree=6).chi_hol),
        c("surface-sextic-c1sq", "sextic surfaces", "derived", 24, lambda s: inv.surface_numbers(degree=6).c1sq),
        c("surface-sextic-chi-oracle", "sextic surfaces", "derived", 11, lambda s: inv.hypersurface_chi_oracle(6)),
        c("ring-u2-deg8", "characteristic classes of U(2) families", "paper", 30, lambda s: _u2(8)),
        c("ring-u2-deg2", "characteristic classes of U(2) families", "derived", 2, lambda s: _u2(2)),
        c("rr-normal-bundle", "normal bundle sections", "paper", (45, 45), lambda s: inv.riemann_roch_curve(10, 54)),
        c("adj-cubic-3H", "genus-ten curves on cubic surfaces", "paper", 10,
          lambda s: inv.adjunction_genus(inv.CUBIC_SURFACE, (3,))),
        c("adj-quadric-66", "curves of bidegree (6,6)", "paper", 25,
          lambda s: inv.adjunction_genus(inv.QUADRIC_SURFACE, (6, 6))),
    ]
    checks += _ledger_checks()
    P = sc.SurfaceParams
    checks += [
        c("smooth-disc-0-m5/4", "discriminant", "derived", 0, lambda s: sc.discriminant_eval(P(0, F(-5, 4)), (1, 1))),
        c("smooth-disc-m5/12-7", "discriminant", "derived", 0, lambda s: sc.discriminant_eval(P(F(-5, 12), 7), (1, 1))),
        c("smooth-disc-1-1", "discriminant", "derived", 12393, lambda s: sc.discriminant_eval(P(1, 1), (1, 1))),
        c("smooth-search-fermat", "discriminant", "trivial", 0, lambda s: _hits(0, 0, s)),
        c("smooth-search-quartic-zero", "discriminant", "derived", "at least 1 hit at (0, -5/4)",
          lambda s: f"{_hits(0, F(-5, 4), s)} hits at (0, -5/4)"),
        c("smooth-search-quartic-nonzero", "discriminant", "derived", "0 hits at (1, 1)",
          lambda s: f"{_hits(1, 1, s)} hits at (1, 1)"),
        c("smooth-resultant-1-1", "discriminant", "derived", 0,
          lambda s: sc.resultant_components(P(1, 1))["line-plus"]),
        c("smooth-lambda-roots", "curve pencil", "derived", "(1j, -1j)", lambda s: str(sc.lambda_roots(P(1, 1)))),
        c("smooth-lambda-residual", "curve pencil", "derived", None,
          lambda s: sc.max_lambda_residual(100, s), tolerance=1e-12),
        c("smooth-pencil-identity", "curve pencil", "derived", True,
          lambda s: sc.pencil_identity_difference(P(F(2, 3), F(-5, 7))).is_zero()),
        c("smooth-pencil-contact", "curve pencil", "paper", 3, lambda s: _pencil_contact_order()),
    ]
    return checks


REGISTRY = build_registry()


def registry_ids() -> list[str]:
    return [ch.id for ch in REGISTRY]


def shipped_manifest() -> list[str]:
    text = resources.files("symsextic").joinpath("data/manifest.txt").read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def select(pattern: Optional[str]) -> list[Check]:
    if pattern is None:
        return list(REGISTRY)
    return [ch for ch in REGISTRY if fnmatch.fnmatchcase(ch.id, pattern)]


def verify_paper(pattern: Optional[str] = None, seed: int = 0) -> tuple[list[CheckReport], int]:
    """Run the selected checks in registry order; exit code 0 ok, 1 failure, 2 empty selection."""
    chosen = select(pattern)
    if not chosen:
        return [], 2
    reports = [run_check(ch, seed) for ch in chosen]
    bad = any(r.status in ("mismatch", "sign-mismatch") for r in reports)
    return reports, 1 if bad else 0
