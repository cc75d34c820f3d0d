"""Parametrised surgery diagrams of exceptional torus knots.

Families with diagrams:

* ``lht`` - left-handed trefoils with tb = m - 5 (a vertical chain of m
  extra unknots), m >= 0.
* ``pos`` - (p, np+1)-torus knots with tb = np^2 + p + 1, indexed by
  k + l = p - 1.
* ``neg`` - (p, -(np-1))-torus knots with tb = -np^2 + p + 1, indexed by
  k + l = p - 2 and u + v = n - 2.

Data-only families (no linking data is available, only tabulated values):

* ``rht-table`` - right-handed trefoils with tb = m + 7, variants a/b.
* ``lht-stab`` - negative stabilisations of the tb = -6 left-handed
  trefoil, tb = -6 - k.

Orientation +1 is the clockwise orientation used to write down the linking
matrices; -1 reverses the distinguished knot only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .diagram import DistinguishedKnot, SurgeryComponent, SurgeryDiagram
from .errors import InvalidParams
from .invariants import report
from .seifert import LHT, RHT, TorusKnotSpec


class FamilyId(enum.Enum):
    LHT_M = "lht"
    POS = "pos"
    NEG = "neg"
    RHT_TABLE = "rht-table"
    LHT_STAB = "lht-stab"

    def __str__(self) -> str:
        return self.value


class Source(enum.Enum):
    COMPUTED = "Computed"
    CLOSED_FORM = "ClosedForm"
    PAPER_TABLE = "PaperTable"

    def __str__(self) -> str:
        return self.value


DATA_ONLY = (FamilyId.RHT_TABLE, FamilyId.LHT_STAB)


@dataclass(frozen=True)
class RealizationRecord:
    family: FamilyId
    params: tuple[tuple[str, object], ...]
    orientation: int
    tb: int
    rot: int
    d3: Fraction
    source: Source

    @property
    def triple(self) -> tuple[int, int, Fraction]:
        return (self.tb, self.rot, self.d3)

    def param(self, name: str):
        return dict(self.params)[name]

    def as_dict(self) -> dict:
        return {
            "family": str(self.family),
            "params": dict(self.params),
            "orientation": self.orientation,
            "tb": self.tb,
            "rot": self.rot,
            "d3": self.d3,
            "source": str(self.source),
        }


def _symmetric(n: int, entries: dict[tuple[int, int], int]) -> list[list[int]]:
    rows = [[0] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = rows[j][i] = v
    return rows


def lht_base_diagram() -> SurgeryDiagram:
    """Left-handed trefoil with tb = -5, surgery knots L1..L4 ordered left
    to right. Same link as ``gen_lht(0)`` in a different order."""
    comps = (
        SurgeryComponent("L1", -1, 0, -1),
        SurgeryComponent("L2", -1, 0, -1),
        SurgeryComponent("L3", -2, 1, 1),
        SurgeryComponent("L4", -1, 0, -1),
    )
    offdiag = _symmetric(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1})
    return SurgeryDiagram(comps, offdiag, DistinguishedKnot(-2, 1, (0, 1, -2, 1)))


# gen_lht(0) component i (K, t1, t2, t3) is base-diagram knot L{perm[i] + 1}
BASE_TO_LHT_ORDER = (2, 3, 1, 0)


def gen_lht(m: int) -> SurgeryDiagram:
    """Left-handed trefoil with tb = m - 5.

    Order: the (+1)-surgered knot K at the bottom of the chain, the m chain
    unknots upward, then the three top knots starting at the right.
    """
    if m < 0:
        raise InvalidParams(f"lht family needs m >= 0, got {m}")
    comps = [SurgeryComponent("K", -2, 1, 1)]
    comps += [SurgeryComponent(f"c{i}", -1, 0, -1) for i in range(1, m + 1)]
    comps += [SurgeryComponent(f"t{i}", -1, 0, -1) for i in (1, 2, 3)]
    n = m + 4
    links = {(i, i + 1): -1 for i in range(m)}
    top = m
    t1, t2, t3 = m + 1, m + 2, m + 3
    links.update({(top, t1): 1, (top, t2): 1, (t2, t3): 1})
    if m == 0:
        # L links the top knots directly when the chain is empty
        lk = (-2, 1, 1, 0)
    else:
        lk = (-2, -1) + (0,) * (n - 2)
    return SurgeryDiagram(tuple(comps), _symmetric(n, links), DistinguishedKnot(-2, 1, lk))


def _check_pos(p, n, k, l):
    if p < 2 or n < 1 or k < 0 or l < 0 or k + l != p - 1:
        raise InvalidParams(f"pos family needs p >= 2, n >= 1, k, l >= 0, k + l = p - 1; got p={p}, n={n}, k={k}, l={l}")


def _check_neg(p, n, k, l, u, v):
    if p < 2 or n < 2 or min(k, l, u, v) < 0 or k + l != p - 2 or u + v != n - 2:
        raise InvalidParams(
            f"neg family needs p >= 2, n >= 2, k + l = p - 2, u + v = n - 2, all >= 0; got p={p}, n={n}, k={k}, l={l}, u={u}, v={v}"
        )


def gen_pos(p: int, n: int, k: int, l: int) -> SurgeryDiagram:
    """(p, np+1)-torus knot with tb = np^2 + p + 1.

    Components: the knot parallel to L, n push-offs of a (tb = -p) unknot,
    p - 1 push-offs of a tb = -1 unknot.
    """
    _check_pos(p, n, k, l)
    comps = [SurgeryComponent("shark", -2, 1, 1)]
    comps += [SurgeryComponent(f"top{i}", -p, l - k, -1) for i in range(1, n + 1)]
    comps += [SurgeryComponent(f"bot{i}", -1, 0, -1) for i in range(1, p)]
    size = 1 + n + (p - 1)
    tops = range(1, 1 + n)
    bots = range(1 + n, size)
    links = {}
    for i in tops:
        links[0, i] = -1
        for j in tops:
            if i < j:
                links[i, j] = -p
    for i in bots:
        links[0, i] = -1
        for j in bots:
            if i < j:
                links[i, j] = -1
    lk = (-2,) + (-1,) * (size - 1)
    groups = ((0,), tuple(tops), tuple(bots))
    return SurgeryDiagram(tuple(comps), _symmetric(size, links), DistinguishedKnot(-2, 1, lk), groups)


def gen_neg(p: int, n: int, k: int, l: int, u: int, v: int) -> SurgeryDiagram:
    """(p, -(np-1))-torus knot with tb = -np^2 + p + 1.

    Components: the knot parallel to L, p - 1 push-offs of a tb = -1
    unknot, then two knots with framings -p and -n.
    """
    _check_neg(p, n, k, l, u, v)
    comps = [SurgeryComponent("shark", -2, 1, 1)]
    comps += [SurgeryComponent(f"bot{i}", -1, 0, -1) for i in range(1, p)]
    comps += [SurgeryComponent("A", 1 - p, l - k, -1), SurgeryComponent("B", 1 - n, v - u, -1)]
    size = p + 2
    bots = range(1, p)
    a, b = p, p + 1
    links = {(0, a): -1, (a, b): -1}
    for i in bots:
        links[0, i] = -1
        for j in bots:
            if i < j:
                links[i, j] = -1
    lk = (-2,) + (-1,) * (p - 1) + (-1, 0)
    groups = ((0,), tuple(bots), (a,), (b,))
    return SurgeryDiagram(tuple(comps), _symmetric(size, links), DistinguishedKnot(-2, 1, lk), groups)


def knot_of(family: FamilyId, params: dict) -> TorusKnotSpec:
    if family in (FamilyId.LHT_M, FamilyId.LHT_STAB):
        return LHT
    if family is FamilyId.RHT_TABLE:
        return RHT
    p, n = params["p"], params["n"]
    return TorusKnotSpec(p, n * p + 1) if family is FamilyId.POS else TorusKnotSpec(p, -(n * p - 1))


def _rht_row(variant: str, m: int) -> tuple[int, Fraction]:
    odd = m % 2 == 1
    if (variant == "a") == odd:
        return m + 1, Fraction(-3, 2)
    return m - 3, Fraction(1, 2)


def closed_form(family: FamilyId, params: dict, orientation: int = 1) -> RealizationRecord:
    """Closed-form (tb, rot, d3); rot is given for `orientation` (+1 clockwise)."""
    if orientation not in (1, -1):
        raise InvalidParams(f"orientation must be +1 or -1, got {orientation}")
    source = Source.CLOSED_FORM
    if family is FamilyId.LHT_M:
        m = params["m"]
        if m < 0:
            raise InvalidParams(f"lht family needs m >= 0, got {m}")
        tb, rot, d3 = m - 5, 6 - m, Fraction(3, 2)
    elif family is FamilyId.POS:
        p, n, k, l = (params[x] for x in "pnkl")
        _check_pos(p, n, k, l)
        tb = n * p * p + p + 1
        rot = -(n * p * p + p - n * p * (l - k))
        d3 = Fraction(n * (1 - (p - l + k) ** 2), 4) + Fraction(1, 2)
    elif family is FamilyId.NEG:
        p, n, k, l, u, v = (params[x] for x in "pnkluv")
        _check_neg(p, n, k, l, u, v)
        t = p - l + k
        tb = -n * p * p + p + 1
        rot = n * p * p - p - n * p * (l - k) + p * (v - u)
        d3 = Fraction(n * t * t + 2 * t * (v - u), 4) - Fraction(1, 2)
    elif family is FamilyId.RHT_TABLE:
        m, variant = params["m"], params["variant"]
        if m < 0 or variant not in ("a", "b"):
            raise InvalidParams(f"rht-table needs m >= 0 and variant a or b; got m={m}, variant={variant!r}")
        # tabulated values, kept verbatim
        tb = m + 7
        rot, d3 = _rht_row(variant, m)
        source = Source.PAPER_TABLE
    elif family is FamilyId.LHT_STAB:
        k = params["k"]
        if k < 0:
            raise InvalidParams(f"lht-stab needs k >= 0, got {k}")
        tb, rot, d3 = -6 - k, -7 - k, Fraction(3, 2)
        source = Source.PAPER_TABLE
    else:
        raise InvalidParams(f"unknown family {family}")
    return RealizationRecord(family, tuple(sorted(params.items())), orientation, tb, orientation * rot, d3, source)


def generate(family: FamilyId, params: dict) -> SurgeryDiagram:
    if family is FamilyId.LHT_M:
        return gen_lht(params["m"])
    if family is FamilyId.POS:
        return gen_pos(params["p"], params["n"], params["k"], params["l"])
    if family is FamilyId.NEG:
        return gen_neg(params["p"], params["n"], params["k"], params["l"], params["u"], params["v"])
    raise InvalidParams(f"family {family} has no surgery diagram (tabulated data only)")


def computed(family: FamilyId, params: dict, orientation: int = 1) -> RealizationRecord:
    d = generate(family, params)
    if orientation == -1:
        d = d.reversed()
    r = report(d)
    return RealizationRecord(family, tuple(sorted(params.items())), orientation, r.tb, r.rot_plus, r.d3, Source.COMPUTED)


def parameter_sets(family: FamilyId, top: dict) -> Iterator[dict]:
    """Expand top-level parameters into every member of the family."""
    if family is FamilyId.POS:
        p, n = top["p"], top["n"]
        _check_pos(p, n, 0, p - 1)
        for k in range(p):
            yield {"p": p, "n": n, "k": k, "l": p - 1 - k}
    elif family is FamilyId.NEG:
        p, n = top["p"], top["n"]
        _check_neg(p, n, 0, p - 2, 0, n - 2)
        for k in range(p - 1):
            for u in range(n - 1):
                yield {"p": p, "n": n, "k": k, "l": p - 2 - k, "u": u, "v": n - 2 - u}
    elif family is FamilyId.LHT_M:
        yield {"m": top["m"]}
    elif family is FamilyId.LHT_STAB:
        yield {"k": top["k"]}
    elif family is FamilyId.RHT_TABLE:
        variants = [top["variant"]] if top.get("variant") else ["a", "b"]
        for var in variants:
            yield {"m": top["m"], "variant": var}
    else:
        raise InvalidParams(f"unknown family {family}")


@dataclass(frozen=True)
class Row:
    """One member and orientation: computed record (if a diagram exists)
    next to the closed-form one."""

    computed: Optional[RealizationRecord]
    closed: RealizationRecord

    @property
    def record(self) -> RealizationRecord:
        return self.computed if self.computed is not None else self.closed

    @property
    def agree(self) -> Optional[bool]:
        if self.computed is None:
            return None
        return self.computed.triple == self.closed.triple


def rows(family: FamilyId, top: dict) -> list[Row]:
    out = []
    for params in parameter_sets(family, top):
        for orientation in (1, -1):
            comp = None if family in DATA_ONLY else computed(family, params, orientation)
            out.append(Row(comp, closed_form(family, params, orientation)))
    return out


def enumerate_family(family: FamilyId, top: dict) -> list[RealizationRecord]:
    """Distinct realisations, deduplicated by (tb, rot, d3)."""
    seen = {}
    for row in rows(family, top):
        seen.setdefault(row.record.triple, row.record)
    return list(seen.values())


def lht_realizations(tb: int) -> list[RealizationRecord]:
    """Distinct exceptional left-handed trefoils at this tb across all
    families that contain them."""
    found: list[RealizationRecord] = []
    if tb >= -5:
        found += enumerate_family(FamilyId.LHT_M, {"m": tb + 5})
    if tb == -5:
        found += enumerate_family(FamilyId.NEG, {"p": 2, "n": 2})
    if tb <= -6:
        found += enumerate_family(FamilyId.LHT_STAB, {"k": -6 - tb})
    seen = {}
    for rec in found:
        seen.setdefault(rec.triple, rec)
    return list(seen.values())
