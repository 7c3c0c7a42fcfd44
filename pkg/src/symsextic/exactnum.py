"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` values.  A cyclotomic element
is stored as its reduced residue modulo the n-th cyclotomic polynomial, so two
elements are equal exactly when their coefficient tuples agree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "CyclotomicElement"]


class OrderMismatchError(ValueError):
    """Raised when elements of different cyclotomic fields are combined."""


# -- dense polynomial helpers over Q, coefficient lists low degree first ----------

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return _trim(out)


def _pdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = a[k + len(b) - 1] / lead
        q[k] = coef
        if coef:
            for j, bj in enumerate(b):
                a[k + j] -= coef * bj
    return _trim(q), _trim(a[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _pdivmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: Sequence, n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    # Phi_n is monic, so the top coefficient can be cancelled directly
    for k in range(len(c) - 1, deg - 1, -1):
        top = c[k]
        if top:
            base = k - deg
            for j in range(deg):
                if phi[j]:
                    c[base + j] -= top * phi[j]
        c[k] = Fraction(0)
    c = c[:deg] + [Fraction(0)] * (deg - len(c))
    return tuple(c)


class CyclotomicElement:
    """An element of Q(zeta_n), stored as a residue modulo Phi_n.

    Arithmetic with ``int`` and ``Fraction`` operands embeds them as constants.
    Combining two elements of different orders raises
    :class:`OrderMismatchError`; use :meth:`embed` first.
    """

    __slots__ = ("order", "coefficients", "_hash")

    def __init__(self, order: int, coefficients: Sequence = ()):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.coefficients = _reduce(coefficients, order)
        self._hash = None

    # constructors
    @classmethod
    def constant(cls, order: int, value) -> "CyclotomicElement":
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int) -> "CyclotomicElement":
        return cls(order, ())

    @classmethod
    def one(cls, order: int) -> "CyclotomicElement":
        return cls(order, [1])

    def _coerce(self, other) -> Optional["CyclotomicElement"]:
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.constant(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coefficients, o.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coefficients])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.order, [a - b for a, b in zip(self.coefficients, o.coefficients)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.order, [a * other for a in self.coefficients])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.order, _pmul(self.coefficients, o.coefficients))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: find u with u * self == 1 mod Phi_n
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.order)], _trim(list(self.coefficients))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            qs = _pmul(q, s1)
            n = max(len(s0), len(qs))
            s0, s1 = s1, _trim([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(n)])
        c = r1[0]
        return CyclotomicElement(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in a cyclotomic field")
            return CyclotomicElement(self.order, [a / other for a in self.coefficients])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CyclotomicElement.one(self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return self.order == other.order and self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == _reduce([other], self.order)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            r = is_rational(self)
            self._hash = hash(r) if r is not None else hash((self.order, self.coefficients))
        return self._hash

    def embed(self, order: int) -> "CyclotomicElement":
        """Image under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n)."""
        if order % self.order:
            raise OrderMismatchError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        coeffs = [Fraction(0)] * (step * len(self.coefficients) or 1)
        for i, c in enumerate(self.coefficients):
            coeffs[i * step] = c
        return CyclotomicElement(order, coeffs)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self.coefficients))

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {[str(c) for c in self.coefficients]})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mono = f"z{self.order}" + (f"^{i}" if i > 1 else "")
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def root_of_unity(n: int, k: int) -> CyclotomicElement:
    """zeta_n^k reduced modulo Phi_n."""
    if n < 1:
        raise ValueError("n must be positive")
    k %= n
    coeffs = [0] * k + [1]
    return CyclotomicElement(n, coeffs)


def cyclo_arith(a: CyclotomicElement, b: CyclotomicElement, op: str) -> CyclotomicElement:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_rational(a) -> Optional[Fraction]:
    """Rational value of ``a`` if it lies in Q, else ``None``."""
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    if any(a.coefficients[1:]):
        return None
    return a.coefficients[0] if a.coefficients else Fraction(0)


def multiplicative_order(a: CyclotomicElement, bound: int = 10_000) -> Optional[int]:
    one = CyclotomicElement.one(a.order)
    x = a
    for k in range(1, bound + 1):
        if x == one:
            return k
        x = x * a
    return None


def evaluate_cyclotomic_polynomial(m: int, x: CyclotomicElement) -> CyclotomicElement:
    """Phi_m(x) computed in the field of ``x``."""
    acc = CyclotomicElement.zero(x.order)
    for c in reversed(cyclotomic_polynomial(m)):
        acc = acc * x + c
    return acc


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def zero_of(order: Optional[int]):
    return Fraction(0) if order is None else CyclotomicElement.zero(order)


def one_of(order: Optional[int]):
    return Fraction(1) if order is None else CyclotomicElement.one(order)
