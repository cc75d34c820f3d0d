"""Tight contact structures on torus-knot complements.

The complement of the (p, q)-torus knot is Seifert fibred over the disc with
two multiple fibres. For the two families handled here, q = np + 1 and
q = -(np - 1), the normalised invariants are r1 = (p-1)/p and
r2 = n/(np +- 1), and a Legendrian realisation with Thurston-Bennequin
invariant tb gives the boundary slope s = 1/(tb - pq) + 1.

Counts that the implemented recipes do not determine come back as ``None``
together with a human-readable reason; they are not errors.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InfiniteSlope, InvalidParams, LegctlError, UnsupportedForm, UnsupportedInput, UnsupportedSlope
from .exact_arith import neg_cf_expand

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TorusKnotSpec:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise InvalidParams(f"torus knot needs p >= 2, got p = {self.p}")
        if self.q == 0 or math.gcd(self.p, abs(self.q)) != 1:
            raise InvalidParams(f"torus knot needs q != 0 coprime to p, got (p, q) = ({self.p}, {self.q})")

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


LHT = TorusKnotSpec(2, -3)
RHT = TorusKnotSpec(2, 3)


def max_tb(k: TorusKnotSpec) -> int:
    """Maximal tb of the torus knot in the standard tight S^3."""
    if k.q > 0:
        return k.p * k.q - k.p - k.q
    return k.p * k.q


@dataclass(frozen=True)
class SeifertComplement:
    p: int
    q: int
    n: int
    pprime: int
    qprime: int
    r1: Fraction
    r2: Fraction
    shift: int = 1

    @property
    def knot(self) -> TorusKnotSpec:
        return TorusKnotSpec(self.p, self.q)


def complement_of(k: TorusKnotSpec) -> SeifertComplement:
    """Normalised Seifert data M(D^2; r1, r2) of the knot complement.

    With p' = 1 the invariant -p'/p = -1/p is moved into (0, 1) by adding 1,
    which shifts the boundary slope by +1 as well.
    """
    p, q = k.p, k.q
    if q > 0 and (q - 1) % p == 0 and q > 1:
        n = (q - 1) // p
        pprime, qprime = 1, -n
    elif q < 0 and (-q + 1) % p == 0 and (-q + 1) // p >= 2:
        n = (-q + 1) // p
        pprime, qprime = 1, n
    else:
        raise UnsupportedForm(f"{k}: only q = np+1 (n >= 1) or q = -(np-1) (n >= 2) are normalised")
    assert p * qprime + pprime * q == 1
    r1 = Fraction(-pprime, p) + 1
    r2 = Fraction(-qprime, q)
    return SeifertComplement(p, q, n, pprime, qprime, r1, r2)


@dataclass(frozen=True)
class SlopeProblem:
    complement: SeifertComplement
    tb: int
    s: Fraction


def slope_of(c: SeifertComplement, tb: int) -> SlopeProblem:
    denom = tb - c.p * c.q
    if denom == 0:
        raise InfiniteSlope(f"tb = pq = {tb}: infinite slope, not covered")
    return SlopeProblem(c, tb, Fraction(1, denom) + c.shift)


class Case(enum.Enum):
    DLZ1 = "DLZ1"
    DLZ2 = "DLZ2"
    UNCLASSIFIED = "Unclassified"

    def __str__(self) -> str:
        return self.value


def classify_case(sp: SlopeProblem) -> Case:
    s = sp.s
    if s < 0 or s >= 2:
        return Case.DLZ1
    c = sp.complement
    if HALF <= c.r1 < 1 and HALF <= c.r2 < 1 and 0 <= s < 1:
        return Case.DLZ2
    return Case.UNCLASSIFIED


def _slope_recipe(s: Fraction) -> tuple[int, int, int]:
    """floor(s), a1, a2 from s - floor(s) = b/a; needs a/(a-b) integral."""
    fl = math.floor(s)
    frac = s - fl
    b, a = frac.numerator, frac.denominator
    if a % (a - b) != 0:
        raise UnsupportedSlope(f"s = {s}: a/(a-b) = {a}/{a - b} is not an integer, recipe undefined")
    return fl, a // (a - b) + 1, 1


def count_dlz1(sp: SlopeProblem) -> int:
    """Number of tight structures with zero Giroux torsion for case DLZ1.

    [s] * prod |a_j^i + 1| * (a1 - 1) * a2, the product running over the
    negative continued fraction coefficients of -1/r1 and -1/r2.
    """
    if classify_case(sp) is not Case.DLZ1:
        raise UnsupportedSlope(f"s = {sp.s} is not in the DLZ1 range")
    if sp.s < 2:
        raise UnsupportedSlope(f"s = {sp.s} < 0: counting recipe not available")
    fl, a1, a2 = _slope_recipe(sp.s)
    prod = 1
    for r in (sp.complement.r1, sp.complement.r2):
        for a in neg_cf_expand(-1 / r):
            prod *= abs(a + 1)
    return fl * prod * (a1 - 1) * a2


@dataclass(frozen=True)
class SmallSeifert:
    e0: int
    r1: Fraction
    r2: Fraction
    r3: Fraction

    def __str__(self) -> str:
        return f"M({self.e0}; {self.r1}, {self.r2}, {self.r3})"


def reduce_dlz2(sp: SlopeProblem) -> SmallSeifert:
    """Closed small Seifert manifold with the same number of tight structures."""
    if classify_case(sp) is not Case.DLZ2:
        raise UnsupportedSlope(f"s = {sp.s} is not in the DLZ2 range")
    fl, a1, a2 = _slope_recipe(sp.s)
    r3 = 1 / (a1 - Fraction(1, a2 + 1))
    return SmallSeifert(-1 - fl, sp.complement.r1, sp.complement.r2, r3)


def count_dlz2_lht(k: int) -> int:
    """Tight structures on M(-1; 1/2, 2/3, 2/(2k+1)), the reduction of the
    left-handed trefoil complement at tb = -6-k."""
    if k < 1:
        raise UnsupportedInput(f"k must be a positive integer, got {k}")
    return k + 4


def std_count(k: TorusKnotSpec, tb: int) -> tuple[Optional[int], Optional[frozenset]]:
    """Legendrian realisations in the standard tight S^3 with this tb.

    Known for the left-handed trefoil and above the maximal tb; otherwise
    (None, None).
    """
    if tb > max_tb(k):
        return 0, frozenset()
    if k == LHT and tb <= -6:
        j = -6 - tb
        return j + 2, frozenset(range(-(j + 1), j + 2, 2))
    return None, None


@dataclass(frozen=True)
class TightCount:
    knot: TorusKnotSpec
    tb: int
    case: Case
    s: Optional[Fraction] = None
    total: Optional[int] = None
    std_count: Optional[int] = None
    std_rots: Optional[frozenset] = None
    exceptional_upper_bound: Optional[int] = None
    reduction: Optional[SmallSeifert] = None
    reasons: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        def unknown(v, label):
            if v is not None:
                return v
            why = "; ".join(self.reasons) or f"{label} not determined"
            return f"unknown: {why}"

        return {
            "knot": {"p": self.knot.p, "q": self.knot.q},
            "tb": self.tb,
            "slope": self.s if self.s is not None else "infinite",
            "case": str(self.case),
            "total": unknown(self.total, "total"),
            "std_count": unknown(self.std_count, "standard count"),
            "std_rots": sorted(self.std_rots) if self.std_rots is not None else None,
            "exceptional_upper_bound": unknown(self.exceptional_upper_bound, "bound"),
            "reduction": str(self.reduction) if self.reduction is not None else None,
            "reasons": list(self.reasons),
        }


def exceptional_bound(k: TorusKnotSpec, tb: int) -> TightCount:
    """Upper bound on strongly exceptional realisations: tight structures on
    the complement minus realisations in the standard tight S^3."""
    std, rots = std_count(k, tb)
    reasons: list[str] = []
    if std is None:
        reasons.append(f"standard realisations of {k} at tb = {tb} not classified here")

    def partial(case=Case.UNCLASSIFIED, s=None, reduction=None, total=None):
        bound = total - std if total is not None and std is not None else None
        if bound is not None and bound < 0:
            raise LegctlError(f"inconsistent counts: total {total} < standard {std}")
        return TightCount(k, tb, case, s, total, std, rots, bound, reduction, tuple(reasons))

    try:
        sp = slope_of(complement_of(k), tb)
    except (UnsupportedForm, InfiniteSlope) as exc:
        reasons.insert(0, str(exc))
        return partial()
    case = classify_case(sp)
    if case is Case.UNCLASSIFIED:
        reasons.insert(0, f"s = {sp.s}: no case of the DLZ classification applies")
        return partial(case, sp.s)
    if case is Case.DLZ1:
        try:
            return partial(case, sp.s, total=count_dlz1(sp))
        except UnsupportedSlope as exc:
            reasons.insert(0, str(exc))
            return partial(case, sp.s)
    try:
        red = reduce_dlz2(sp)
    except UnsupportedSlope as exc:
        reasons.insert(0, str(exc))
        return partial(case, sp.s)
    if k == LHT:
        return partial(case, sp.s, red, count_dlz2_lht(-(tb - k.p * k.q)))
    reasons.insert(0, f"count of tight structures on {red} not implemented (small Seifert formula)")
    return partial(case, sp.s, red)
