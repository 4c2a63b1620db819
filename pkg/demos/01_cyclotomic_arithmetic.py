"""Exact arithmetic in cyclotomic fields.

All symbolic computation in the library happens over Q(zeta_N): the
coefficients of a branch, the roots of unity that conjugation
introduces, and every order-of-vanishing test.  The point of the
representation (coordinates modulo the cyclotomic polynomial) is that
equality with zero is decidable by looking at the coordinates rather
than at floating point values.
"""

from fractions import Fraction

from curvegerm import CyclotomicNumber, cyclotomic_polynomial, zeta


def show(label, value):
    print(f"{label:<42} {value}")


print("== cyclotomic polynomials ==")
for n in (1, 2, 3, 4, 6, 12):
    coeffs = cyclotomic_polynomial(n)
    pretty = " + ".join(
        f"{c}*x^{k}" for k, c in enumerate(coeffs) if c
    ).replace("+ -", "- ")
    show(f"order {n}:", pretty)

print()
print("== roots of unity as exact field elements ==")
z = zeta(12)
show("zeta_12:", z)
show("zeta_12^6 (should be -1):", z**6)
show("zeta_12^12 (should be 1):", z**12)
show("zeta_4 * zeta_4:", zeta(4) * zeta(4))

print()
print("== exact zero tests vs numerics ==")
relation = zeta(4) ** 2 + 1
show("zeta_4^2 + 1 is exactly zero:", relation.is_zero())
near = zeta(12) - zeta(12, 5)
show("zeta_12 - zeta_12^5 is zero:", near.is_zero())
show("  numeric magnitude (sqrt(3)):", abs(near.to_complex()))

print()
print("== mixing orders requires an explicit lift ==")
a = zeta(6)
b = zeta(4)
try:
    a + b
except ValueError as exc:
    show("zeta_6 + zeta_4 without lifting:", f"rejected ({exc})")
total = a.lift(12) + b.lift(12)
show("after lifting both into Q(zeta_12):", total)
show("  numeric check:", total.to_complex())

print()
print("== rational coordinates stay exact ==")
x = CyclotomicNumber(12, [Fraction(1, 3), 0, Fraction(-7, 2), 0])
y = CyclotomicNumber(12, [Fraction(2, 5), Fraction(1, 7), 0, 1])
show("x * y:", x * y)
show("(x + y) - y == x:", (x + y) - y == x)
