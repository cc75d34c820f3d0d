"""Reproduction checks for the published invariants and counts.

Each check returns a :class:`CheckResult`; failures carry the first few
mismatches so the output points at the broken formula.
"""

from __future__ import annotations

import contextlib
import io
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import families as fam
from . import invariants as inv
from . import seifert as sf
from .diagram import SurgeryDiagram, deflate
from .exact_arith import IntMatrix, determinant, neg_cf_expand, neg_cf_value, solve
from .families import FamilyId

HALF = Fraction(1, 2)
POS_SWEEP = [(p, n) for p in range(2, 6) for n in range(1, 5)]
NEG_SWEEP = [(p, n) for p in range(2, 6) for n in range(2, 5)]


@dataclass
class CheckResult:
    number: int
    name: str
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def equal(self, got, want, what: str) -> None:
        self.expect(got == want, f"{what}: got {got}, want {want}")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} [{self.number:2d}] {self.name} ({self.checked} checks)"
        if self.failures:
            shown = "; ".join(self.failures[:3])
            more = f" (+{len(self.failures) - 3} more)" if len(self.failures) > 3 else ""
            msg += f": {shown}{more}"
        return msg


def cofactor_determinant(rows) -> int:
    """Laplace expansion along the first row; the independent oracle."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * a * cofactor_determinant(minor)
    return total


def check_fig4() -> CheckResult:
    res = CheckResult(1, "left-handed trefoil base diagram, tb = -5")
    r = inv.report(fam.lht_base_diagram())
    res.equal(r.tb, -5, "tb")
    res.equal((r.rot_plus, r.rot_minus), (6, -6), "rot")
    res.equal(r.d3, Fraction(3, 2), "d3")
    res.equal(r.detM, -1, "det M")
    res.equal(r.detM0, 3, "det M_0")
    res.equal(r.sigma, -2, "signature")
    res.equal(r.chi, 5, "Euler characteristic")
    res.equal(r.c_squared, 6, "c^2")
    res.equal(r.x, (2, 4, 6, 3), "x")
    return res


def check_lht_sweep() -> CheckResult:
    res = CheckResult(2, "lht family m = 0..12")
    for m in range(13):
        r = inv.report(fam.gen_lht(m))
        res.equal(r.tb, m - 5, f"m={m} tb")
        res.equal((r.rot_plus, r.rot_minus), (6 - m, m - 6), f"m={m} rot")
        res.equal(r.d3, Fraction(3, 2), f"m={m} d3")
        res.equal(r.sigma, -2 - m, f"m={m} signature")
        res.equal(r.chi, m + 5, f"m={m} chi")
        res.equal(r.c_squared, 6 - m, f"m={m} c^2")
        res.equal(abs(r.detM), 1, f"m={m} |det M|")
    return res


def _family_sweep(res: CheckResult, family: FamilyId, p: int, n: int, det_m, det_m0, c2, count) -> None:
    rots = set()
    for row in fam.rows(family, {"p": p, "n": n}):
        params = dict(row.closed.params)
        tag = f"{family} {params} o={row.closed.orientation}"
        res.equal(row.computed.triple, row.closed.triple, f"{tag} (tb, rot, d3)")
        d = fam.generate(family, params)
        r = inv.report(d if row.closed.orientation == 1 else d.reversed())
        k, l = params["k"], params["l"]
        u, v = params.get("u", 0), params.get("v", 0)
        res.equal(r.detM, det_m, f"{tag} det M")
        res.equal(r.detM0, det_m0, f"{tag} det M_0")
        res.equal(r.c_squared, c2(k, l, u, v), f"{tag} c^2")
        res.expect(r.d3 != -HALF, f"{tag} d3 = -1/2")
        rots.add(r.rot_plus)
    res.equal(len(rots), count, f"{family} p={p} n={n} distinct rot values")
    res.equal(len(fam.enumerate_family(family, {"p": p, "n": n})), count, f"{family} p={p} n={n} distinct records")


def check_pos_sweep() -> CheckResult:
    res = CheckResult(3, "pos family (p,n) in [2..5]x[1..4]")
    for p, n in POS_SWEEP:
        s = (-1) ** (n + p)
        _family_sweep(
            res, FamilyId.POS, p, n, s, s * (n * p * p + p + 3),
            lambda k, l, u, v, p=p, n=n: -n * (p - l + k) ** 2 - p,
            2 * p,
        )
    return res


def check_neg_sweep() -> CheckResult:
    res = CheckResult(4, "neg family (p,n) in [2..5]x[2..4]")
    for p, n in NEG_SWEEP:
        _family_sweep(
            res, FamilyId.NEG, p, n, (-1) ** (p + 1), (-1) ** (p - 1) * (-n * p * p + p + 3),
            lambda k, l, u, v, p=p, n=n: n * (p - l + k) ** 2 + 2 * (p - l + k) * (v - u) - p,
            2 * (p - 1) * (n - 1),
        )
    return res


def check_rht7() -> CheckResult:
    res = CheckResult(5, "pos family (2,1): right-handed trefoils with tb = 7")
    got = {r.triple for r in fam.enumerate_family(FamilyId.POS, {"p": 2, "n": 1})}
    want = {(7, 4, HALF), (7, -4, HALF), (7, 8, Fraction(-3, 2)), (7, -8, Fraction(-3, 2))}
    res.equal(got, want, "realisations")
    return res


def check_counts() -> CheckResult:
    res = CheckResult(6, "tight structure counts")
    res.equal(sf.exceptional_bound(sf.LHT, -5).total, 2, "lht tb=-5 total")
    for k in range(1, 11):
        tc = sf.exceptional_bound(sf.LHT, -6 - k)
        res.equal((tc.total, tc.std_count, tc.exceptional_upper_bound), (k + 4, k + 2, 2), f"lht tb={-6 - k}")
    res.equal(sf.exceptional_bound(sf.RHT, 7).total, 4, "rht tb=7 total")
    for p, n in POS_SWEEP:
        knot = sf.TorusKnotSpec(p, n * p + 1)
        res.equal(sf.exceptional_bound(knot, n * p * p + p + 1).total, 2 * p, f"{knot} total")
    for p, n in NEG_SWEEP:
        knot = sf.TorusKnotSpec(p, -(n * p - 1))
        res.equal(sf.exceptional_bound(knot, -n * p * p + p + 1).total, 2 * (p - 1) * (n - 1), f"{knot} total")
    return res


def check_lht_classification() -> CheckResult:
    res = CheckResult(7, "lht: realisations found = upper bound = 2")
    for tb in [-5] + list(range(-16, -6)):
        found = len(fam.lht_realizations(tb))
        bound = sf.exceptional_bound(sf.LHT, tb).exceptional_upper_bound
        res.equal((found, bound), (2, 2), f"tb={tb} (found, bound)")
    return res


def _report_key(r: inv.InvariantReport) -> tuple:
    return (r.tb, r.rot_plus, r.d3, r.detM, r.detM0, r.sigma, r.chi, r.c_squared, r.q_plus)


def check_deflation() -> CheckResult:
    res = CheckResult(8, "deflated data reproduce full-matrix invariants")
    for family, sweep in ((FamilyId.POS, POS_SWEEP), (FamilyId.NEG, NEG_SWEEP)):
        for p, n in sweep:
            for params in fam.parameter_sets(family, {"p": p, "n": n}):
                d = fam.generate(family, params)
                for dd in (d, d.reversed()):
                    got = _report_key(inv.report_deflated(deflate(dd)))
                    res.equal(got, _report_key(inv.report(dd)), f"{family} {params} o={'+' if dd is d else '-'}")
    return res


def _corpus() -> list[SurgeryDiagram]:
    ds = [fam.lht_base_diagram()] + [fam.gen_lht(m) for m in range(13)]
    for p, n in POS_SWEEP:
        ds += [fam.generate(FamilyId.POS, prm) for prm in fam.parameter_sets(FamilyId.POS, {"p": p, "n": n})]
    for p, n in NEG_SWEEP:
        ds += [fam.generate(FamilyId.NEG, prm) for prm in fam.parameter_sets(FamilyId.NEG, {"p": p, "n": n})]
    return ds


def check_properties(seed: int = 20190401, samples: int = 240) -> CheckResult:
    res = CheckResult(9, "property suites")
    rng = random.Random(seed)
    for i in range(samples):
        n = 1 + i % 8
        rows = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                rows[a][b] = rows[b][a] = rng.randint(-5, 5)
        M = IntMatrix(rows)
        det = determinant(M)
        res.equal(det, cofactor_determinant(rows), f"det vs cofactor {rows}")
        if det != 0:
            v = [rng.randint(-5, 5) for _ in range(n)]
            x = solve(M, v)
            res.equal(M.matvec(x), v, f"residual {rows} {v}")
    for _ in range(samples):
        den = rng.randint(1, 400)
        r = Fraction(-rng.randint(den + 1, 50 * den), den)
        cf = neg_cf_expand(r)
        res.expect(all(a <= -2 for a in cf), f"cf entries of {r}: {cf}")
        res.equal(neg_cf_value(cf), r, f"cf round trip {r}")
    for d in _corpus():
        for dd in (d, d.reversed()):
            r = inv.report(dd)
            if abs(r.detM) == 1:
                res.equal(r.d3.denominator, 2, "d3 in Z + 1/2")
            res.expect((r.tb + r.rot_plus) % 2 == 1, f"tb + rot odd ({r.tb}, {r.rot_plus})")
        a, b = inv.report(d), inv.report(d.reversed())
        res.equal((b.tb, b.rot_plus, b.rot_minus, b.d3), (a.tb, -a.rot_plus, -a.rot_minus, a.d3), "orientation reversal")
    return res


def check_unclassified() -> CheckResult:
    from .cli import main

    res = CheckResult(10, "unclassified slope reports unknown, exit 0")
    tc = sf.exceptional_bound(sf.TorusKnotSpec(3, -5), -13)
    res.equal(tc.s, Fraction(3, 2), "slope")
    res.equal(tc.case, sf.Case.UNCLASSIFIED, "case")
    res.equal(tc.total, None, "total")
    with contextlib.redirect_stdout(io.StringIO()):
        code = main(["count", "--p", "3", "--q", "-5", "--tb", "-13"])
    res.equal(code, 0, "exit code")
    return res


CHECKS: list[Callable[[], CheckResult]] = [
    check_fig4,
    check_lht_sweep,
    check_pos_sweep,
    check_neg_sweep,
    check_rht7,
    check_counts,
    check_lht_classification,
    check_deflation,
    check_properties,
    check_unclassified,
]


def run_all() -> list[CheckResult]:
    results = []
    for number, check in enumerate(CHECKS, 1):
        try:
            results.append(check())
        except Exception as exc:  # a crash is a failed check, not an abort
            res = CheckResult(number, check.__name__)
            res.failures.append(f"raised {type(exc).__name__}: {exc}")
            results.append(res)
    return results
