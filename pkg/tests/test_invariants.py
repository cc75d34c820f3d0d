from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legctl import invariants as inv
from legctl.diagram import DistinguishedKnot, SurgeryComponent, SurgeryDiagram, deflate
from legctl.errors import NonIntegerResult, NotHomologySphere, SingularMatrix
from legctl.families import gen_lht, gen_neg, gen_pos, lht_base_diagram
from legctl.seifert import LHT, RHT, TorusKnotSpec


def _with_cancelling_pair(d: SurgeryDiagram) -> SurgeryDiagram:
    """Add a (+1)-surgery on a tb = -1 unknot and a (-1)-surgery on its
    push-off, unlinked from everything else. The pair cancels, so nothing
    about L may change."""
    n = d.n
    comps = d.components + (SurgeryComponent("U+", -1, 0, 1), SurgeryComponent("U-", -1, 0, -1))
    rows = [r + [0, 0] for r in d.offdiag.tolist()] + [[0] * (n + 2), [0] * (n + 2)]
    rows[n][n + 1] = rows[n + 1][n] = -1
    return SurgeryDiagram(comps, rows, DistinguishedKnot(d.L.tb0, d.L.rot0, d.L.lk + (0, 0)))


pos_params = st.integers(2, 5).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, 4), st.integers(0, p - 1)).map(lambda t: (t[0], t[1], t[2], t[0] - 1 - t[2]))
)
neg_params = st.tuples(st.integers(2, 5), st.integers(2, 4)).flatmap(
    lambda pn: st.tuples(st.just(pn[0]), st.just(pn[1]), st.integers(0, pn[0] - 2), st.integers(0, pn[1] - 2)).map(
        lambda t: (t[0], t[1], t[2], t[0] - 2 - t[2], t[3], t[1] - 2 - t[3])
    )
)


def test_base_diagram_report():
    r = inv.report(lht_base_diagram())
    assert r.triple() == (-5, 6, Fraction(3, 2))
    assert (r.detM, r.detM0, r.sigma, r.chi, r.q_plus) == (-1, 3, -2, 5, 1)
    assert r.c_squared == 6
    assert r.x == (2, 4, 6, 3)
    assert r.rot_minus == -6


def test_small_positive_example():
    r = inv.report(gen_pos(2, 1, 0, 1))
    assert r.triple() == (7, -4, Fraction(1, 2))
    assert (r.detM, r.detM0, r.sigma, r.c_squared) == (-1, -9, -3, -3)


def test_small_negative_example():
    r = inv.report(gen_neg(3, 2, 1, 0, 0, 0))
    assert r.triple() == (-14, 21, Fraction(15, 2))
    assert (r.detM, r.detM0, r.sigma, r.c_squared) == (1, -12, -3, 29)


def test_single_functions_agree_with_report():
    d = gen_lht(4)
    r = inv.report(d)
    assert inv.tb_of(d) == r.tb
    assert inv.rot_of(d) == (r.rot_plus, r.rot_minus)
    assert inv.d3_of(d) == r.d3


def test_d3_from_formula():
    assert inv.d3_from(Fraction(6), -2, 5, 1) == Fraction(3, 2)
    assert inv.d3_from(0, 0, 1, 0) == Fraction(-1, 2)


@pytest.mark.parametrize("d3, h", [(Fraction(-1, 2), 0), (Fraction(3, 2), -2), (Fraction(1, 2), -1)])
def test_d3_to_hopf(d3, h):
    assert inv.d3_to_hopf(d3) == h


def test_overtwisted_verdicts():
    V = inv.Verdict
    assert inv.overtwisted_verdict(-5, Fraction(3, 2)) is V.OVERTWISTED
    assert inv.overtwisted_verdict(-5, Fraction(-1, 2)) is V.INCONCLUSIVE
    assert inv.overtwisted_verdict(2, Fraction(-1, 2), RHT) is V.OVERTWISTED
    assert inv.overtwisted_verdict(1, Fraction(-1, 2), RHT) is V.INCONCLUSIVE
    assert inv.overtwisted_verdict(-6, Fraction(-1, 2), LHT) is V.INCONCLUSIVE
    assert inv.overtwisted_verdict(-5, Fraction(-1, 2), LHT) is V.OVERTWISTED
    assert str(V.OVERTWISTED) == "Overtwisted"


def test_singular_matrix():
    d = SurgeryDiagram((SurgeryComponent("U", -1, 0, 1),), [[0]], DistinguishedKnot(-1, 0, (1,)))
    with pytest.raises(SingularMatrix):
        inv.report(d)
    with pytest.raises(SingularMatrix):
        inv.tb_of(d)


def test_not_homology_sphere():
    d = SurgeryDiagram((SurgeryComponent("U", -1, 0, -1),), [[0]], DistinguishedKnot(-1, 0, (0,)))
    with pytest.raises(NotHomologySphere):
        inv.report(d)
    with pytest.raises(NotHomologySphere):
        inv.d3_of(d)
    r = inv.report(d, require_homology_sphere=False)
    assert r.d3 is None and r.detM == -2 and not r.is_homology_sphere
    assert r.tb == -1


def test_non_integral_tb_rejected():
    d = SurgeryDiagram((SurgeryComponent("U", -1, 0, -1),), [[0]], DistinguishedKnot(-1, 0, (1,)))
    with pytest.raises(NonIntegerResult):
        inv.report(d, require_homology_sphere=False)


def test_fractional_rot_is_kept_exact():
    # framing -9, lk 3: tb is integral (9 / 9) but rot = 0 - 1 * 3 / (-9)
    d = SurgeryDiagram((SurgeryComponent("U", -8, 1, -1),), [[0]], DistinguishedKnot(-1, 0, (3,)))
    r = inv.report(d, require_homology_sphere=False)
    assert r.tb == 0
    assert r.rot_plus == Fraction(1, 3)


@settings(max_examples=60, deadline=None)
@given(pos_params, st.booleans())
def test_deflation_matches_full_pos(params, rev):
    d = gen_pos(*params)
    if rev:
        d = d.reversed()
    full, defl = inv.report(d), inv.report_deflated(deflate(d))
    assert (defl.tb, defl.rot_plus, defl.d3, defl.sigma, defl.detM, defl.detM0, defl.c_squared, defl.chi, defl.q_plus) == (
        full.tb, full.rot_plus, full.d3, full.sigma, full.detM, full.detM0, full.c_squared, full.chi, full.q_plus,
    )


@settings(max_examples=60, deadline=None)
@given(neg_params, st.booleans())
def test_deflation_matches_full_neg(params, rev):
    d = gen_neg(*params)
    if rev:
        d = d.reversed()
    full, defl = inv.report(d), inv.report_deflated(deflate(d))
    assert (defl.tb, defl.rot_plus, defl.d3, defl.sigma, defl.detM, defl.detM0, defl.c_squared) == (
        full.tb, full.rot_plus, full.d3, full.sigma, full.detM, full.detM0, full.c_squared,
    )


@settings(max_examples=40, deadline=None)
@given(st.one_of(pos_params.map(lambda t: gen_pos(*t)), neg_params.map(lambda t: gen_neg(*t)), st.integers(0, 8).map(gen_lht)))
def test_reversal_and_parity(d):
    r, rr = inv.report(d), inv.report(d.reversed())
    assert rr.tb == r.tb and rr.d3 == r.d3
    assert rr.rot_plus == -r.rot_plus == r.rot_minus
    assert (r.tb + r.rot_plus) % 2 == 1
    assert (4 * r.d3).denominator == 1


@pytest.mark.parametrize("d", [lht_base_diagram(), gen_lht(2), gen_pos(3, 2, 1, 1), gen_neg(2, 2, 0, 0, 0, 0)])
def test_cancelling_pair_changes_nothing(d):
    before, after = inv.report(d), inv.report(_with_cancelling_pair(d))
    assert after.triple() == before.triple()
    # the pair is a block with determinant -1
    assert after.detM == -before.detM and after.detM0 == -before.detM0
    assert after.sigma == before.sigma


def test_verdict_uses_bennequin_bound_of_given_knot():
    k = TorusKnotSpec(3, 4)
    assert inv.overtwisted_verdict(5, Fraction(-1, 2), k) is inv.Verdict.INCONCLUSIVE
    assert inv.overtwisted_verdict(6, Fraction(-1, 2), k) is inv.Verdict.OVERTWISTED
