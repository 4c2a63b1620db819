"""Holder-exponent obstructions and the germ classifier.

Two plane branches whose characteristic exponent sequences differ admit
no bi-alpha-Holder homeomorphism once alpha**4 exceeds a computable
rational obstruction; two germs of two branches each admit none once
alpha**2 exceeds the ratio of their pairwise contacts.  The classifier
collects every such obstruction into a finite set E (which always
contains the baseline 1/2), takes k0 = max E < 1, and certifies that no
bi-alpha-Holder homeomorphism exists for any alpha in (k0**(1/4), 1).
When instead some bijection of branches preserves all characteristic
data and all pairwise contacts, the germs are topologically equivalent,
hence bi-Lipschitz equivalent, and the verdict says so.

All thresholds are exact rationals; the fourth root is applied only at
presentation time.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from curvegerm.contact import contact_report
from curvegerm.invariants import CharacteristicData, characteristic_data
from curvegerm.puiseux import CurveGerm

STATUS_EQUIVALENT = "equivalent_invariants"
STATUS_DISTINCT = "certified_distinct"

KIND_CHAR_EXPONENTS = "char_exponents"
KIND_CONTACT = "contact"
KIND_BASELINE = "baseline"

#: Constant member of every obstruction set; keeps it non-empty.
BASELINE = Fraction(1, 2)

#: Smooth branches enter the pair obstruction with this formal pair,
#: their only Puiseux exponent being 1.
FORMAL_SMOOTH_PAIR = ((1, 1),)


class PermutationCapExceeded(Exception):
    """Too many branches for the exhaustive bijection search."""


def pair_obstruction(pairs1, j: int, pairs2, i: int) -> Fraction:
    """Obstruction from the j-th characteristic pair of one branch against
    the i-th of another.

    With A = m_j * q_1...q_i and B = l_i * n_1...n_j (m, n from the first
    pair list, l, q from the second), returns min((A+B)/(2B), (A+B)/(2A)).
    The value lies in (0, 1] and equals 1 exactly when A = B, i.e. when
    the truncated exponent ratios m_j/(n_1...n_j) and l_i/(q_1...q_i)
    coincide.
    """
    if not 1 <= j <= len(pairs1):
        raise IndexError(f"pair index {j} out of range 1..{len(pairs1)}")
    if not 1 <= i <= len(pairs2):
        raise IndexError(f"pair index {i} out of range 1..{len(pairs2)}")
    a = pairs1[j - 1][0] * math.prod(q for _, q in pairs2[:i])
    b = pairs2[i - 1][0] * math.prod(n for _, n in pairs1[:j])
    return min(Fraction(a + b, 2 * b), Fraction(a + b, 2 * a))


def branch_obstruction(c1: CharacteristicData, c2: CharacteristicData) -> Fraction:
    """Sharpest pair obstruction separating two branches; 1 when none exists.

    Returns 1 iff the characteristic exponent sequences are identical.
    For equal genus the relevant diagonal obstructions are scanned; for
    different genus the scan runs over the index range that pins the
    larger genus against the last pair of the smaller one.  Values equal
    to 1 do not obstruct and are skipped (at most one index can produce
    them).
    """
    if c1.beta == c2.beta:
        return Fraction(1)
    p1 = c1.pairs or FORMAL_SMOOTH_PAIR
    p2 = c2.pairs or FORMAL_SMOOTH_PAIR
    g1, g2 = len(p1), len(p2)
    if g1 == g2:
        values = [pair_obstruction(p1, i, p2, i) for i in range(1, g1 + 1)]
    elif g1 > g2:
        values = [pair_obstruction(p1, j, p2, g2) for j in range(g2, g1 + 1)]
    else:
        values = [pair_obstruction(p1, g1, p2, i) for i in range(g1, g2 + 1)]
    obstructing = [v for v in values if v != 1]
    return max(obstructing)


def contact_obstruction(cont1: Fraction, cont2: Fraction) -> Fraction:
    """Obstruction from a pair of contact exponents; 1 when they agree."""
    if cont1 < 1 or cont2 < 1:
        raise ValueError("contact exponents are always at least 1")
    if cont1 == cont2:
        return Fraction(1)
    return min(Fraction(cont1, cont2), Fraction(cont2, cont1))


@dataclass(frozen=True)
class Obstruction:
    """One member of the obstruction set E, with a human-readable witness."""

    kind: str
    value: Fraction
    witness: str

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise ValueError(f"obstruction value {self.value} outside (0, 1]")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": str(self.value), "witness": self.witness}


@dataclass(frozen=True)
class HolderVerdict:
    """Classifier output.

    Either the invariants match under some branch bijection
    (status equivalent_invariants, with the bijection in ``matching``),
    or the germs are certifiably distinct with threshold k0 = max of the
    obstruction values and critical exponent alpha0 = k0**(1/4).
    """

    status: str
    matching: tuple[int, ...] | None = None
    k0: Fraction | None = None
    obstructions: tuple[Obstruction, ...] = ()

    def __post_init__(self):
        if self.status == STATUS_EQUIVALENT:
            if self.matching is None:
                raise ValueError("equivalent verdict needs the branch bijection")
        elif self.status == STATUS_DISTINCT:
            values = [o.value for o in self.obstructions]
            if not values or self.k0 != max(values) or not self.k0 < 1:
                raise ValueError("distinct verdict needs k0 = max obstruction < 1")
        else:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def alpha0(self) -> float | None:
        """Decimal value of the critical exponent k0**(1/4)."""
        return None if self.k0 is None else float(self.k0) ** 0.25

    @property
    def alpha0_exact(self) -> str | None:
        return None if self.k0 is None else f"({self.k0})^(1/4)"

    def to_dict(self) -> dict:
        if self.status == STATUS_EQUIVALENT:
            return {
                "status": self.status,
                "sigma": list(self.matching),
                "statement": (
                    "characteristic exponents and pairwise contacts match under "
                    "sigma; the germs are topologically, hence bi-Lipschitz, "
                    "equivalent"
                ),
            }
        return {
            "status": self.status,
            "k0": str(self.k0),
            "alpha0": self.alpha0_exact,
            "alpha0_decimal": self.alpha0,
            "obstructions": [o.to_dict() for o in self.obstructions],
            "statement": (
                "no bi-alpha-Holder homeomorphism exists for any alpha in "
                f"({self.alpha0:.6f}, 1)"
            ),
        }


def classify(germ1: CurveGerm, germ2: CurveGerm, permutation_cap: int = 8) -> HolderVerdict:
    """Decide whether the two germs are Holder-distinguishable.

    A homeomorphism of germs maps branches to branches, so differing
    branch counts are certified distinct with the baseline threshold.
    Otherwise every bijection of branches is tried; if one preserves the
    characteristic data branchwise and every pairwise contact, the germs
    are equivalent.  Failing that, the obstruction set is assembled from
    the baseline, all cross-germ branch obstructions below 1, and all
    contact obstructions below 1 over pairs of branch pairs.
    """
    r1, r2 = len(germ1.branches), len(germ2.branches)
    if r1 != r2:
        baseline = Obstruction(
            KIND_BASELINE,
            BASELINE,
            f"branch counts differ ({r1} vs {r2}); no homeomorphism matches them",
        )
        return HolderVerdict(STATUS_DISTINCT, k0=BASELINE, obstructions=(baseline,))
    if r1 > permutation_cap:
        raise PermutationCapExceeded(
            f"{r1} branches exceed the permutation cap {permutation_cap}; "
            "raise the cap explicitly to search all bijections"
        )

    data1 = [characteristic_data(b) for b in germ1.branches]
    data2 = [characteristic_data(b) for b in germ2.branches]
    rep1 = contact_report(germ1)
    rep2 = contact_report(germ2)

    for sigma in itertools.permutations(range(r1)):
        if all(data1[i].beta == data2[sigma[i]].beta for i in range(r1)) and all(
            rep1.contact[i][j] == rep2.contact[sigma[i]][sigma[j]]
            for i in range(r1)
            for j in range(i + 1, r1)
        ):
            return HolderVerdict(STATUS_EQUIVALENT, matching=tuple(sigma))

    obstructions = [
        Obstruction(KIND_BASELINE, BASELINE, "always present; keeps the set non-empty")
    ]
    for u in range(r1):
        for v in range(r2):
            value = branch_obstruction(data1[u], data2[v])
            if value < 1:
                obstructions.append(
                    Obstruction(
                        KIND_CHAR_EXPONENTS,
                        value,
                        f"branch {u} of the first germ vs branch {v} of the second",
                    )
                )
    for i in range(r1):
        for j in range(i + 1, r1):
            for u in range(r2):
                for v in range(u + 1, r2):
                    value = contact_obstruction(rep1.contact[i][j], rep2.contact[u][v])
                    if value < 1:
                        obstructions.append(
                            Obstruction(
                                KIND_CONTACT,
                                value,
                                f"contact of branches ({i},{j}) in the first germ vs "
                                f"({u},{v}) in the second",
                            )
                        )
    k0 = max(o.value for o in obstructions)
    return HolderVerdict(STATUS_DISTINCT, k0=k0, obstructions=tuple(obstructions))
