"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as a coordinate vector over Q in the
power basis 1, z, ..., z^(phi(N)-1), z = exp(2*pi*i/N), reduced modulo
the N-th cyclotomic polynomial.  Because the basis is reduced, equality
and zero tests are plain coefficient comparisons; exact zero testing is
the primitive that every order-of-vanishing computation in the rest of
the library leans on.  Multiplicative inverses are never needed
downstream and are not provided.

Integer polynomials appear only as plumbing and are represented as
tuples of coefficients, constant term first, so (-1, 0, 1) is x^2 - 1.
"""

from __future__ import annotations

import cmath
import functools
from fractions import Fraction

#: Exact scalar type used throughout the library.
Rational = Fraction


def _poly_divmod(num, den):
    """Divide integer coefficient tuples; ``den`` must be monic."""
    num = list(num)
    deg_d = len(den) - 1
    quot = [0] * (len(num) - deg_d)
    for shift in range(len(num) - deg_d - 1, -1, -1):
        c = num[shift + deg_d]
        if c:
            quot[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return tuple(quot), tuple(num)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Return the cyclotomic polynomial of the given order.

    Computed by dividing x^N - 1 by the cyclotomic polynomials of all
    proper divisors of N.  Coefficients are returned constant term
    first.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    poly = (-1,) + (0,) * (order - 1) + (1,)
    for d in range(1, order):
        if order % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem, "cyclotomic division must be exact"
    return poly


@functools.lru_cache(maxsize=None)
def field_degree(order: int) -> int:
    """Degree phi(N) of Q(zeta_N) over Q."""
    return len(cyclotomic_polynomial(order)) - 1


@functools.lru_cache(maxsize=None)
def _power_basis(order: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coordinates of zeta^k for 0 <= k <= max(N-1, 2*phi(N)-2).

    The table is long enough to reduce any product of two reduced
    elements and to embed any power zeta^k with 0 <= k < N.
    """
    phi_poly = cyclotomic_polynomial(order)
    deg = len(phi_poly) - 1
    top = tuple(Fraction(-c) for c in phi_poly[:-1])
    rows = [
        tuple(Fraction(1 if i == j else 0) for j in range(deg))
        for i in range(deg)
    ]
    for _ in range(deg, max(order, 2 * deg - 1)):
        prev = rows[-1]
        carry = prev[-1]
        shifted = (Fraction(0),) + prev[:-1]
        rows.append(tuple(s + carry * t for s, t in zip(shifted, top)))
    return tuple(rows)


class CyclotomicNumber:
    """An element of Q(zeta_N) in the reduced power basis.

    Values are immutable and arithmetic is exact.  Operands must share
    the same order N; use :meth:`lift` to move an element into a larger
    field Q(zeta_M) with N | M before mixing orders.

    >>> zeta(4) * zeta(4) == -1
    True
    >>> (zeta(12) ** 6).is_zero()
    False
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = field_degree(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(
                f"Q(zeta_{order}) has degree {deg}, got {len(coeffs)} coordinates"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_rational(cls, order: int, value) -> CyclotomicNumber:
        deg = field_degree(order)
        return cls(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, order: int) -> CyclotomicNumber:
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> CyclotomicNumber:
        return cls.from_rational(order, 1)

    def is_zero(self) -> bool:
        """Exact zero test; valid because coordinates are reduced."""
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def _coerced(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"incompatible field orders {self.order} and {other.order}; "
                    "lift to a common multiple first"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, (a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, (a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CyclotomicNumber(self.order, (-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, (c * other for c in self.coeffs))
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        deg = len(self.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        basis = _power_basis(self.order)
        out = list(prod[:deg])
        for k in range(deg, len(prod)):
            c = prod[k]
            if c:
                out = [o + c * r for o, r in zip(out, basis[k])]
        return CyclotomicNumber(self.order, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not supported (no inverses)")
        result = CyclotomicNumber.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        coerced = self._coerced(other) if isinstance(other, (int, Fraction)) else other
        if not isinstance(coerced, CyclotomicNumber):
            return NotImplemented
        return self.order == coerced.order and self.coeffs == coerced.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def to_complex(self) -> complex:
        """Numerical value; coordinates are summed in ascending power order."""
        w = 2j * cmath.pi / self.order
        total = 0j
        for j, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.exp(w * j)
        return total

    def lift(self, order: int) -> CyclotomicNumber:
        """Reinterpret the element inside Q(zeta_order); self.order must divide it."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(
                f"cannot lift from order {self.order} to non-multiple {order}"
            )
        step = order // self.order
        basis = _power_basis(order)
        deg = field_degree(order)
        out = [Fraction(0)] * deg
        for j, c in enumerate(self.coeffs):
            if c:
                row = basis[(j * step) % order]
                out = [o + c * r for o, r in zip(out, row)]
        return CyclotomicNumber(order, out)

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                var = "z" if j == 1 else f"z^{j}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, '{self}')"


def zeta(order: int, power: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_order**power as an exact field element.

    >>> zeta(6, 3) == -1
    True
    """
    row = _power_basis(order)[power % order]
    return CyclotomicNumber(order, row)
