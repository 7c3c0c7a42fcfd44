"""Sparse multivariate polynomials and exact linear algebra.

Polynomials map exponent tuples to nonzero exact scalars (``Fraction`` or
:class:`~symsextic.exactnum.CyclotomicElement`).  Terms are always listed in
graded-lex order, highest first, so printing is deterministic.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

from .exactnum import CyclotomicElement, one_of, zero_of

Exponent = tuple[int, ...]


def grlex_key(e: Exponent):
    return (sum(e), e)


def enumerate_monomials(num_vars: int, weights: Sequence[int], degree: int) -> list[Exponent]:
    """All exponent vectors with sum(e_i * w_i) == degree, in descending grlex order."""
    if len(weights) != num_vars:
        raise ValueError("weights must have one entry per variable")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    out: list[Exponent] = []

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == num_vars - 1:
            if remaining % weights[i] == 0:
                out.append(tuple(prefix + [remaining // weights[i]]))
            return
        for a in range(remaining // weights[i], -1, -1):
            rec(i + 1, remaining - a * weights[i], prefix + [a])

    if num_vars == 0:
        return [()] if degree == 0 else []
    if degree < 0:
        return []
    rec(0, degree, [])
    out.sort(key=grlex_key, reverse=True)
    return out


def enumerate_bihomogeneous(degrees: tuple[int, int]) -> list[Exponent]:
    """Exponents (a, b, c, d) with a + b = degrees[0] and c + d = degrees[1]."""
    d1, d2 = degrees
    out = [(a, d1 - a, c, d2 - c) for a in range(d1, -1, -1) for c in range(d2, -1, -1)]
    out.sort(key=grlex_key, reverse=True)
    return out


class Polynomial:
    """Sparse polynomial over an exact field.

    ``variables`` names the ambient variables; ``weights`` their weighted
    degrees (all 1 unless given).  Zero coefficients are never stored.
    """

    __slots__ = ("variables", "weights", "terms")

    def __init__(self, terms: Mapping[Exponent, object] | None = None,
                 variables: Sequence[str] = (), weights: Sequence[int] | None = None):
        self.variables = tuple(variables)
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.variables)
        if len(self.weights) != len(self.variables):
            raise ValueError("weights must match variables")
        clean: dict[Exponent, object] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(self.variables):
                raise ValueError(f"exponent {e} has wrong length for {self.variables}")
            if c:
                clean[e] = c if isinstance(c, CyclotomicElement) else Fraction(c)
        self.terms = dict(sorted(clean.items(), key=lambda kv: grlex_key(kv[0]), reverse=True))

    # construction helpers
    @classmethod
    def constant(cls, value, variables: Sequence[str], weights=None) -> "Polynomial":
        return cls({(0,) * len(variables): value}, variables, weights)

    @classmethod
    def var(cls, name: str, variables: Sequence[str], weights=None) -> "Polynomial":
        i = list(variables).index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls({tuple(e): 1}, variables, weights)

    @classmethod
    def gens(cls, variables: Sequence[str], weights=None) -> list["Polynomial"]:
        return [cls.var(v, variables, weights) for v in variables]

    def _same_ring(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._same_ring(other)
            return other
        return Polynomial.constant(other, self.variables, self.weights)

    def __add__(self, other):
        o = self._lift(other)
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return Polynomial(terms, self.variables, self.weights)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.variables, self.weights)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.variables, self.weights)
        self._same_ring(other)
        terms: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return Polynomial(terms, self.variables, self.weights)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.variables, self.weights)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.variables, self.weights)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def weighted_degree(self) -> int:
        return max((sum(a * w for a, w in zip(e, self.weights)) for e in self.terms), default=-1)

    def is_weighted_homogeneous(self) -> bool:
        return len({sum(a * w for a, w in zip(e, self.weights)) for e in self.terms}) <= 1

    def coefficient(self, exponent: Exponent):
        return self.terms.get(tuple(exponent), Fraction(0))

    def diff(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                terms[tuple(e2)] = c * e[i]
        return Polynomial(terms, self.variables, self.weights)

    def evaluate(self, values: Mapping[str, object]):
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, a in zip(self.variables, e):
                if a:
                    term = term * values[name] ** a
            total = total + term
        return total

    def with_variables(self, variables: Sequence[str], weights=None) -> "Polynomial":
        """Re-embed in a larger (or reordered) variable list."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.variables]
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(variables)
            for i, a in zip(idx, e):
                e2[i] = a
            terms[tuple(e2)] = c
        return Polynomial(terms, variables, weights)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.variables})"

    def __str__(self):
        return format_polynomial(self)


def poly_substitute(target: Polynomial, assignments: Mapping[str, Polynomial],
                    variables: Sequence[str] | None = None) -> Polynomial:
    """Ring homomorphism sending each assigned variable to a polynomial.

    Unassigned variables are kept.  All images must live in the result ring
    ``variables`` (default: the ring of the first assigned image, or the
    target's ring when nothing is assigned).
    """
    if variables is None:
        variables = next(iter(assignments.values())).variables if assignments else target.variables
    variables = tuple(variables)
    images = []
    for name in target.variables:
        if name in assignments:
            img = assignments[name]
            if img.variables != variables:
                img = img.with_variables(variables)
        elif name in variables:
            img = Polynomial.var(name, variables)
        else:
            raise ValueError(f"variable {name!r} neither assigned nor present in the result ring")
        images.append(img)
    result = Polynomial({}, variables)
    powers: dict[tuple[int, int], Polynomial] = {}
    for e, c in target.terms.items():
        term = Polynomial.constant(c, variables)
        for i, a in enumerate(e):
            if a:
                if (i, a) not in powers:
                    powers[(i, a)] = images[i] ** a
                term = term * powers[(i, a)]
        result = result + term
    return result


# -- text format --------------------------------------------------------------

def _format_coeff(c) -> str:
    s = str(c)
    if isinstance(c, CyclotomicElement) and len([x for x in c.coefficients if x]) > 1:
        return f"({s})"
    return s


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms in grlex order, ``*`` between factors, ``^`` powers."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p.terms.items():
        mono = "*".join(v if a == 1 else f"{v}^{a}" for v, a in zip(p.variables, e) if a)
        if not mono:
            piece = _format_coeff(c)
        elif c == 1:
            piece = mono
        elif c == -1:
            piece = "-" + mono
        else:
            piece = f"{_format_coeff(c)}*{mono}"
        out.append(piece)
    text = out[0]
    for piece in out[1:]:
        text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
    return text


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                break
            pos = m.end()
            num, ident, sym = m.groups()
            if num is not None:
                self.tokens.append(("num", Fraction(num)))
            elif ident is not None:
                self.tokens.append(("var", ident))
            else:
                self.tokens.append(("sym", sym))
        self.i = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("sym", "+"):
            self.take()
        acc = self.term() * sign
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.power()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("sym", "*"):
                self.take()
                acc = acc * self.power()
            elif kind in ("num", "var") or (kind, val) == ("sym", "("):
                acc = acc * self.power()  # implicit multiplication
            else:
                return acc

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or val.denominator != 1:
                raise ValueError("exponents must be non-negative integers")
            base = base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return Polynomial.constant(val, self.variables)
        if kind == "var":
            if val not in self.variables:
                raise ValueError(f"unknown variable {val!r}")
            return Polynomial.var(val, self.variables)
        if (kind, val) == ("sym", "("):
            inner = self.expr()
            if self.take() != ("sym", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("sym", "-"):
            return -self.power()
        raise ValueError(f"unexpected token {val!r}")


def parse_polynomial(text: str, variables: Sequence[str], weights: Sequence[int] | None = None) -> Polynomial:
    """Parse ``text`` over the given variables (rational coefficients only)."""
    parser = _Parser(text, variables)
    p = parser.expr()
    if parser.i != len(parser.tokens):
        raise ValueError(f"trailing input in {text!r}")
    return Polynomial(p.terms, variables, weights)


# -- exact matrices -----------------------------------------------------------

class ExactMatrix:
    """Dense matrix of exact scalars; ``order`` is None for Q, else n for Q(zeta_n)."""

    __slots__ = ("rows", "nrows", "ncols", "order")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None, order: Optional[int] = None):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        self.order = order
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int, order: Optional[int] = None) -> "ExactMatrix":
        z = zero_of(order)
        return cls([[z] * ncols for _ in range(nrows)], ncols, order)

    @classmethod
    def identity(cls, n: int, order: Optional[int] = None) -> "ExactMatrix":
        m = cls.zeros(n, n, order)
        for i in range(n):
            m.rows[i][i] = one_of(order)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.rows)] if self.nrows else [],
                           self.nrows, self.order)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        z = zero_of(self.order if self.order is not None else other.order)
        out = [[z] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(other.rows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        return ExactMatrix(out, other.ncols, self.order if self.order is not None else other.order)

    def apply(self, vector: Sequence) -> list:
        z = zero_of(self.order)
        out = []
        for row in self.rows:
            acc = z
            for a, b in zip(row, vector):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                           self.ncols, self.order)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return ExactMatrix(self.rows + other.rows, self.ncols, self.order if self.order is not None else other.order)

    def rank(self) -> int:
        return matrix_rank_kernel(self)[0]

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, order={self.order})"


def _echelon(rows: list[dict[int, object]], ncols: int) -> list[tuple[int, dict[int, object]]]:
    """Fraction-free (Bareiss) forward elimination on sparse rows.

    Each working row is stored as ``(s, base)`` with true Bareiss value
    ``s * prev / base``; untouched rows therefore cost nothing per step, and an
    updated row is ``(p * s - a * pivot_row) / base`` exactly.
    """
    work = [(r, Fraction(1)) for r in rows if r]
    prev = Fraction(1)
    pivots: list[tuple[int, dict[int, object]]] = []
    for col in range(ncols):
        k = next((i for i, (r, _) in enumerate(work) if col in r), None)
        if k is None:
            continue
        prow, pbase = work.pop(k)
        if pbase != prev:
            f = prev / pbase
            prow = {j: v * f for j, v in prow.items()}
        p = prow[col]
        pivots.append((col, prow))
        nxt = []
        for row, base in work:
            a = row.get(col)
            if a is not None:
                new = {}
                for j in row.keys() | prow.keys():
                    if j == col:
                        continue
                    v = (p * row.get(j, 0) - a * prow.get(j, 0)) / base
                    if v:
                        new[j] = v
                row, base = new, p
            if row:
                nxt.append((row, base))
        work = nxt
        prev = p
    return pivots


def matrix_rank_kernel(m: ExactMatrix) -> tuple[int, list[list]]:
    """Rank and a kernel basis of ``m`` (vectors v with m v = 0), exactly."""
    rows = [{j: Fraction(v) if isinstance(v, int) else v for j, v in enumerate(r) if v} for r in m.rows]
    pivots = _echelon(rows, m.ncols)
    rank = len(pivots)
    # back substitution to reduced echelon form
    reduced: list[tuple[int, dict[int, object]]] = []
    for col, row in reversed(pivots):
        p = row[col]
        row = {j: v / p for j, v in row.items()}
        for c2, r2 in reduced:
            a = row.get(c2)
            if a:
                for j, v in r2.items():
                    nv = row.get(j, 0) - a * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        reduced.append((col, row))
    pivot_cols = {c for c, _ in reduced}
    zero, one = zero_of(m.order), one_of(m.order)
    kernel = []
    for free in range(m.ncols):
        if free in pivot_cols:
            continue
        v = [zero] * m.ncols
        v[free] = one
        for col, row in reduced:
            a = row.get(free)
            if a:
                v[col] = -a
        kernel.append(v)
    return rank, kernel


def comultiplication_matrix(d: int) -> ExactMatrix:
    """Matrix of s^(d-4)(U) -> s^(d-5)(U) (x) U for dim U = 4.

    A monomial x^a maps to sum_i a_i x^(a - e_i) (x) x_i.  Rows index the
    target basis (monomial of degree d-5, variable index), columns the source.
    """
    if d < 5:
        raise ValueError("comultiplication is defined here for d >= 5")
    src = enumerate_monomials(4, [1] * 4, d - 4)
    low = enumerate_monomials(4, [1] * 4, d - 5)
    tgt = [(m, i) for m in low for i in range(4)]
    index = {t: k for k, t in enumerate(tgt)}
    m = ExactMatrix.zeros(len(tgt), len(src))
    for col, e in enumerate(src):
        for i in range(4):
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                m.rows[index[(tuple(e2), i)]][col] = Fraction(e[i])
    return m


def cokernel_dimension(m: ExactMatrix) -> int:
    return m.nrows - m.rank()


def symmetric_power_dimension(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1) if d >= 0 else 0


def vectors_rank(vectors: Iterable[Sequence], order: Optional[int] = None) -> int:
    vs = [list(v) for v in vectors]
    if not vs:
        return 0
    return ExactMatrix(vs, len(vs[0]), order).rank()
