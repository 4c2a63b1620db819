"""Pairwise contact exponents and intersection multiplicities of branches.

The contact of two distinct analytic branches equals their coincidence
exponent: the largest order in x at which some pair of Newton-Puiseux
parametrizations agrees, maximized over conjugates.  The intersection
multiplicity is n1 times the sum of the difference orders against all n2
conjugates of the second branch; it is always a positive integer, and
integrality is asserted so truncation bugs fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from curvegerm.puiseux import (
    CurveGerm,
    PuiseuxBranch,
    TruncationExceeded,
    conjugate,
    difference_order,
)


def coincidence(b1: PuiseuxBranch, b2: PuiseuxBranch) -> Fraction:
    """Maximal order of agreement of the two branches over all conjugates.

    Raises TruncationExceeded when any conjugate comparison is
    inconclusive, since the true maximum might then be hidden beyond the
    truncation.
    """
    values: list[Fraction] = []
    blocked: list[tuple[int, Fraction | None]] = []
    for k in range(b2.n):
        try:
            values.append(difference_order(b1, conjugate(b2, k)))
        except TruncationExceeded as exc:
            blocked.append((k, exc.lower_bound))
    if blocked:
        bounds = [lb for _, lb in blocked if lb is not None]
        which = ", ".join(str(k) for k, _ in blocked)
        raise TruncationExceeded(
            f"contact inconclusive: conjugation(s) {which} agree within the known terms",
            lower_bound=max(bounds + values) if bounds else None,
        )
    return max(values)


def contact(b1: PuiseuxBranch, b2: PuiseuxBranch) -> Fraction:
    """Contact exponent of two distinct branches (their coincidence)."""
    return coincidence(b1, b2)


def intersection_multiplicity(b1: PuiseuxBranch, b2: PuiseuxBranch) -> int:
    """Local intersection number of two distinct branches at the origin."""
    orders = [difference_order(b1, conjugate(b2, k)) for k in range(b2.n)]
    total = b1.n * sum(orders)
    if total.denominator != 1 or total <= 0:
        raise RuntimeError(
            f"intersection multiplicity came out as {total}, not a positive "
            "integer: internal bug or insufficient truncation"
        )
    return int(total)


@dataclass(frozen=True)
class ContactReport:
    """Symmetric pairwise contact and intersection matrices of a germ.

    Diagonals are unset (None); contact entries are exact rationals in
    units of ord_x and are always at least 1.
    """

    branch_count: int
    contact: tuple[tuple[Fraction | None, ...], ...]
    intersection: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        r = self.branch_count
        for name, mat in (("contact", self.contact), ("intersection", self.intersection)):
            if len(mat) != r or any(len(row) != r for row in mat):
                raise ValueError(f"{name} matrix must be {r}x{r}")
            for i in range(r):
                if mat[i][i] is not None:
                    raise ValueError(f"{name} diagonal must be unset")
                for j in range(i + 1, r):
                    if mat[i][j] != mat[j][i]:
                        raise ValueError(f"{name} matrix must be symmetric")
        for i in range(r):
            for j in range(r):
                if i != j and self.contact[i][j] < 1:
                    raise ValueError(
                        f"contact[{i}][{j}] = {self.contact[i][j]} < 1; "
                        "branches do not share the parametrization form"
                    )

    def to_dict(self) -> dict:
        return {
            "branch_count": self.branch_count,
            "contact": [
                [None if v is None else str(v) for v in row] for row in self.contact
            ],
            "intersection": [list(row) for row in self.intersection],
        }


def contact_report(g: CurveGerm) -> ContactReport:
    """Fill both pairwise matrices for all distinct branch pairs of the germ."""
    r = len(g.branches)
    cont: list[list[Fraction | None]] = [[None] * r for _ in range(r)]
    inter: list[list[int | None]] = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            try:
                cont[i][j] = cont[j][i] = coincidence(g.branches[i], g.branches[j])
                inter[i][j] = inter[j][i] = intersection_multiplicity(
                    g.branches[i], g.branches[j]
                )
            except TruncationExceeded as exc:
                raise TruncationExceeded(
                    f"branch pair ({i}, {j}): {exc}", lower_bound=exc.lower_bound
                ) from None
    return ContactReport(
        r,
        tuple(tuple(row) for row in cont),
        tuple(tuple(row) for row in inter),
    )
