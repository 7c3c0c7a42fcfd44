"""Finite monomial groups and their actions on graded spaces.

A :class:`MonomialMap` sends variable ``i`` to ``zeta_N^k_i * x_perm[i]``.
It acts on polynomials (and on linear forms, i.e. the dual space U*) by this
substitution, so ``compose(g, h)`` is the substitution "apply h, then g" and
``induced_action`` is a genuine representation.
"""
from __future__ import annotations

import ast
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .exactnum import CyclotomicElement, is_rational, lcm, root_of_unity
from .polyalg import (ExactMatrix, Polynomial, enumerate_monomials, grlex_key,
                      matrix_rank_kernel)


class GroupTooLargeError(RuntimeError):
    pass


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class MonomialMap:
    perm: tuple[int, ...]
    exps: tuple[int, ...]  # exponent of zeta_order on each variable
    order: int = 1

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.exps) != len(self.perm):
            raise ValueError("one character per variable required")
        object.__setattr__(self, "exps", tuple(k % self.order for k in self.exps))

    @classmethod
    def from_chars(cls, perm: Sequence[int], chars: Sequence[tuple[int, int]],
                   order: Optional[int] = None) -> "MonomialMap":
        """Build from per-variable characters ``(n, k)`` meaning zeta_n^k."""
        n = order or 1
        for m, _ in chars:
            n = lcm(n, m)
        if order is not None and n != order:
            raise ValueError(f"character orders do not divide {order}")
        return cls(tuple(perm), tuple(k * (n // m) for m, k in chars), n)

    @classmethod
    def identity(cls, nvars: int, order: int = 1) -> "MonomialMap":
        return cls(tuple(range(nvars)), (0,) * nvars, order)

    @property
    def nvars(self) -> int:
        return len(self.perm)

    def with_order(self, order: int) -> "MonomialMap":
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        s = order // self.order
        return MonomialMap(self.perm, tuple(k * s for k in self.exps), order)

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """The substitution ``self o other``: x_i -> c_i(other) c_{other(i)}(self) x_{self(other(i))}."""
        n = lcm(self.order, other.order)
        a, b = self.with_order(n), other.with_order(n)
        perm = tuple(a.perm[b.perm[i]] for i in range(self.nvars))
        exps = tuple(b.exps[i] + a.exps[b.perm[i]] for i in range(self.nvars))
        return MonomialMap(perm, exps, n)

    def inverse(self) -> "MonomialMap":
        inv = [0] * self.nvars
        exps = [0] * self.nvars
        for i, j in enumerate(self.perm):
            inv[j] = i
            exps[j] = -self.exps[i]
        return MonomialMap(tuple(inv), tuple(exps), self.order)

    def char(self, i: int) -> CyclotomicElement:
        return root_of_unity(self.order, self.exps[i])

    def act_on_monomial(self, e: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        """Image of x^e as (zeta exponent, new exponent)."""
        new = [0] * self.nvars
        k = 0
        for i, a in enumerate(e):
            if a:
                new[self.perm[i]] += a
                k += a * self.exps[i]
        return k % self.order, tuple(new)

    def act_on_polynomial(self, p: Polynomial) -> Polynomial:
        terms: dict = {}
        for e, c in p.terms.items():
            k, e2 = self.act_on_monomial(e)
            z = root_of_unity(self.order, k)
            terms[e2] = terms.get(e2, 0) + c * z
        return Polynomial(terms, p.variables, p.weights)


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple[MonomialMap, ...]
    generators: tuple[MonomialMap, ...] = field(default=())

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a group has at least the identity")
        order = self.order_of_scalars
        els = tuple(g.with_order(order) for g in self.elements)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "generators", tuple(g.with_order(order) for g in self.generators))
        s = set(els)
        if MonomialMap.identity(els[0].nvars, order) not in s:
            raise ValueError("group does not contain the identity")
        for g in els:
            for h in els:
                if g.compose(h) not in s:
                    raise ValueError("element set is not closed under composition")

    @property
    def order_of_scalars(self) -> int:
        n = 1
        for g in self.elements:
            n = lcm(n, g.order)
        return n

    def __len__(self):
        return len(self.elements)

    @property
    def nvars(self) -> int:
        return self.elements[0].nvars


def group_closure(generators: Sequence[MonomialMap], bound: int = 10**6) -> FiniteGroup:
    """Breadth-first closure of the generators under composition."""
    if not generators:
        raise ValueError("need at least one generator")
    order = 1
    for g in generators:
        order = lcm(order, g.order)
    gens = [g.with_order(order) for g in generators]
    ident = MonomialMap.identity(gens[0].nvars, order)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g.compose(x)
            if y not in seen:
                seen.add(y)
                if len(seen) > bound:
                    raise GroupTooLargeError(f"closure exceeds {bound} elements")
                queue.append(y)
    els = sorted(seen, key=lambda m: (m.perm, m.exps))
    return FiniteGroup(tuple(els), tuple(gens))


def ambient_monomial_group_order(nvars: int, order: int) -> int:
    return order**nvars * factorial(nvars)


# -- graded spaces ------------------------------------------------------------

@dataclass(frozen=True)
class GradedSpace:
    """A finite-dimensional space on which monomial maps act.

    kinds:
      ``monomial``  span of monomials with given gradings: each variable carries
                    a grading vector ``gradings[i]``, and the space is the sum of
                    the slices whose grading equals one of ``targets``.
                    Symmetric powers, weighted slices and (sums of) tensor
                    products of symmetric powers of subspaces are all of this kind.
      ``wedge2``    exterior square of the space spanned by the variables.
    """

    kind: str
    nvars: int
    gradings: tuple[tuple[int, ...], ...] = ()
    targets: tuple[tuple[int, ...], ...] = ()

    def basis(self) -> list:
        if self.kind == "wedge2":
            return list(combinations(range(self.nvars), 2))
        out = []
        for t in self.targets:
            out.extend(_graded_monomials(self.gradings, t))
        out = sorted(set(out), key=grlex_key, reverse=True)
        return out

    @property
    def dimension(self) -> int:
        if self.kind == "wedge2":
            return comb(self.nvars, 2)
        # blocks of unit gradings have binomial counts
        if all(sum(g) == 1 and max(g) == 1 for g in self.gradings):
            total = 0
            for t in self.targets:
                prod = 1
                for b, d in enumerate(t):
                    size = sum(1 for g in self.gradings if g[b] == 1)
                    prod *= comb(d + size - 1, size - 1) if size else int(d == 0)
                total += prod
            return total
        return len(self.basis())


def _graded_monomials(gradings, target) -> list[tuple[int, ...]]:
    n = len(gradings)
    out = []

    def rec(i, remaining, prefix):
        if i == n:
            if not any(remaining):
                out.append(tuple(prefix))
            return
        g = gradings[i]
        a = 0
        while all(r - a * x >= 0 for r, x in zip(remaining, g)):
            rec(i + 1, tuple(r - a * x for r, x in zip(remaining, g)), prefix + [a])
            if not any(g):
                break
            a += 1

    rec(0, tuple(target), [])
    return out


def symmetric_power(nvars: int, degree: int, weights: Sequence[int] | None = None) -> GradedSpace:
    w = tuple(weights) if weights is not None else (1,) * nvars
    return GradedSpace("monomial", nvars, tuple((x,) for x in w), ((degree,),))


def exterior_square(nvars: int) -> GradedSpace:
    return GradedSpace("wedge2", nvars)


def multidegree_space(blocks: Sequence[Sequence[int]], multidegrees: Sequence[Sequence[int]]) -> GradedSpace:
    """Sum over ``multidegrees`` of tensor products of symmetric powers of variable blocks."""
    nvars = sum(len(b) for b in blocks)
    gradings = [None] * nvars
    for bi, block in enumerate(blocks):
        for v in block:
            g = [0] * len(blocks)
            g[bi] = 1
            gradings[v] = tuple(g)
    return GradedSpace("monomial", nvars, tuple(gradings), tuple(tuple(d) for d in multidegrees))


def bihomogeneous_space(degrees: tuple[int, int]) -> GradedSpace:
    return multidegree_space([[0, 1], [2, 3]], [degrees])


def induced_action(g: MonomialMap, space: GradedSpace) -> ExactMatrix:
    """Matrix of g on the canonical basis of ``space`` (columns are images)."""
    basis = space.basis()
    index = {b: i for i, b in enumerate(basis)}
    m = ExactMatrix.zeros(len(basis), len(basis), g.order)
    for col, b in enumerate(basis):
        if space.kind == "wedge2":
            i, j = b
            gi, gj = g.perm[i], g.perm[j]
            k = (g.exps[i] + g.exps[j]) % g.order
            sign = 1
            if gi > gj:
                gi, gj, sign = gj, gi, -1
            coeff = root_of_unity(g.order, k) * sign
            m.rows[index[(gi, gj)]][col] = coeff
        else:
            k, image = g.act_on_monomial(b)
            if image not in index:
                raise ValueError(f"space is not stable under {g}")
            m.rows[index[image]][col] = root_of_unity(g.order, k)
    return m


def invariant_basis(group: FiniteGroup, space: GradedSpace) -> list[list]:
    """Basis of the joint fixed space of the group's generators on ``space``."""
    gens = group.generators or group.elements
    n = space.dimension
    order = group.order_of_scalars
    ident = ExactMatrix.identity(n, order)
    stacked = None
    for g in gens:
        block = induced_action(g, space) - ident
        stacked = block if stacked is None else stacked.vstack(block)
    _, kernel = matrix_rank_kernel(stacked)
    return kernel


def trace_by_cycles(g: MonomialMap, space: GradedSpace):
    """Trace of g on ``space`` without building the matrix.

    Monomial spaces: each cycle C of the permutation contributes a factor
    1/(1 - chi_C t^grade_C) to the graded trace series, so the trace on a
    slice is a sum over cycle multiplicities.  Exterior square:
    (tr(g)^2 - tr(g^2)) / 2.
    """
    zero = CyclotomicElement.zero(g.order)
    if space.kind == "wedge2":
        t1 = sum((g.char(i) for i in range(g.nvars) if g.perm[i] == i), zero)
        g2 = g.compose(g)
        t2 = sum((g2.char(i) for i in range(g2.nvars) if g2.perm[i] == i), zero)
        return (t1 * t1 - t2) / 2
    cycles = _cycles(g.perm)
    cyc_grade = []
    cyc_char = []
    for cyc in cycles:
        grade = tuple(sum(space.gradings[i][b] for i in cyc) for b in range(len(space.gradings[0])))
        cyc_grade.append(grade)
        cyc_char.append(sum(g.exps[i] for i in cyc) % g.order)
    total = zero
    for target in space.targets:
        for mult in _graded_monomials(tuple(cyc_grade), target):
            k = sum(m * c for m, c in zip(mult, cyc_char))
            total = total + root_of_unity(g.order, k)
    return total


def character_average(group: FiniteGroup, space: GradedSpace) -> int:
    """(1/|G|) sum_g tr(g); must be a non-negative integer."""
    total = CyclotomicElement.zero(group.order_of_scalars)
    for g in group.elements:
        total = total + trace_by_cycles(g, space)
    value = is_rational(total)
    if value is None:
        raise ArithmeticError(f"character sum {total} is not rational")
    avg = value / len(group)
    if avg.denominator != 1 or avg < 0:
        raise ArithmeticError(f"character average {avg} is not a non-negative integer")
    return int(avg)


def determinant_character(group: FiniteGroup) -> dict[MonomialMap, CyclotomicElement]:
    return {g: determinant(g) for g in group.elements}


def determinant(g: MonomialMap) -> CyclotomicElement:
    return root_of_unity(g.order, sum(g.exps)) * _perm_sign(g.perm)


def vector_to_polynomial(space: GradedSpace, v: Sequence, variables: Sequence[str]) -> Polynomial:
    if space.kind != "monomial":
        raise ValueError("only monomial spaces correspond to polynomials")
    terms = {}
    for b, c in zip(space.basis(), v):
        if c:
            r = is_rational(c)
            terms[b] = r if r is not None else c
    return Polynomial(terms, variables)


def polynomial_to_vector(space: GradedSpace, p: Polynomial) -> list:
    basis = space.basis()
    index = {b: i for i, b in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for e, c in p.terms.items():
        if e not in index:
            raise ValueError(f"monomial {e} is not in the space")
        v[index[e]] = c
    return v


# -- the two groups -----------------------------------------------------------

def sextic_group_generators() -> list[MonomialMap]:
    """Generators of the order-72 group acting on (x1, y1, x2, y2)."""
    return [
        MonomialMap.from_chars((0, 1, 2, 3), [(6, 1), (6, 5), (6, 0), (6, 0)]),
        MonomialMap.from_chars((0, 1, 2, 3), [(6, 0), (6, 0), (6, 1), (6, 5)]),
        MonomialMap.from_chars((2, 3, 0, 1), [(6, 0)] * 4),
    ]


def curve_group_generators() -> list[MonomialMap]:
    """Generators of {(a, b) in Z/12 x Z/12 : a = b mod 2} on C^2 x C^2."""
    return [
        MonomialMap.from_chars((0, 1, 2, 3), [(12, 1), (12, 11), (12, 1), (12, 11)]),
        MonomialMap.from_chars((0, 1, 2, 3), [(12, 2), (12, 10), (12, 0), (12, 0)]),
    ]


_LINE = re.compile(r"^\s*perm\s*=\s*(\[[^\]]*\])\s+chars\s*=\s*(\[.*\])\s*$")


def parse_group_file(text: str) -> list[MonomialMap]:
    """Generators from lines ``perm=[...] chars=[(n,k),...]``; ``#`` starts a comment."""
    gens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected 'perm=[...] chars=[(n,k),...]'")
        perm = ast.literal_eval(m.group(1))
        chars = ast.literal_eval(m.group(2))
        gens.append(MonomialMap.from_chars(tuple(perm), [tuple(c) for c in chars]))
    return gens


def format_group_file(generators: Iterable[MonomialMap]) -> str:
    lines = []
    for g in generators:
        chars = ", ".join(f"({g.order},{k})" for k in g.exps)
        lines.append(f"perm=[{','.join(map(str, g.perm))}] chars=[{chars}]")
    return "\n".join(lines) + "\n"


GROUP_DIR = Path(__file__).parent / "groups"


def load_group(name: str) -> FiniteGroup:
    path = Path(name)
    if not path.exists():
        path = GROUP_DIR / f"{name}.txt"
    return group_closure(parse_group_file(path.read_text()))
