from fractions import Fraction

import pytest

from legctl import families as fam
from legctl.diagram import linking_matrix
from legctl.errors import InvalidParams
from legctl.exact_arith import solve
from legctl.families import FamilyId, Source
from legctl.invariants import report

HALF = Fraction(1, 2)


def e1(n):
    return [1] + [0] * (n - 1)


def test_base_diagram_is_lht_m0_reordered():
    base = linking_matrix(fam.lht_base_diagram())
    assert base.permuted(fam.BASE_TO_LHT_ORDER) == linking_matrix(fam.gen_lht(0))
    assert report(fam.lht_base_diagram()).triple() == report(fam.gen_lht(0)).triple()


def test_lht_inverse_column():
    M0 = linking_matrix(fam.gen_lht(0))
    assert solve(M0, e1(4)) == [6, 3, 4, 2]
    M3 = linking_matrix(fam.gen_lht(3))
    assert solve(M3, e1(7)) == [3, -4, 5, -6, -3, -4, -2]


@pytest.mark.parametrize("m", range(0, 13))
def test_lht_sweep_matches_closed_form(m):
    for orientation in (1, -1):
        c = fam.computed(FamilyId.LHT_M, {"m": m}, orientation)
        cf = fam.closed_form(FamilyId.LHT_M, {"m": m}, orientation)
        assert c.triple == cf.triple == (m - 5, orientation * (6 - m), Fraction(3, 2))


@pytest.mark.parametrize("p", range(2, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_pos_sweep(p, n):
    seen = set()
    for params in fam.parameter_sets(FamilyId.POS, {"p": p, "n": n}):
        for o in (1, -1):
            c = fam.computed(FamilyId.POS, params, o)
            assert c.triple == fam.closed_form(FamilyId.POS, params, o).triple
            assert c.tb == n * p * p + p + 1
            assert c.d3 != -HALF
            seen.add(c.triple)
        r = report(fam.generate(FamilyId.POS, params))
        # det M = (-1)^(n+p) and tb = tb0 + det M_0 / det M with tb0 = -2
        assert r.detM == (-1) ** (n + p)
        assert r.detM0 == r.detM * (r.tb + 2)
        assert r.sigma == -n - p
    assert len(seen) == 2 * p


@pytest.mark.parametrize("p", range(2, 6))
@pytest.mark.parametrize("n", range(2, 6))
def test_neg_sweep(p, n):
    seen = set()
    for params in fam.parameter_sets(FamilyId.NEG, {"p": p, "n": n}):
        for o in (1, -1):
            c = fam.computed(FamilyId.NEG, params, o)
            assert c.triple == fam.closed_form(FamilyId.NEG, params, o).triple
            assert c.tb == -n * p * p + p + 1
            assert c.d3 != -HALF
            seen.add(c.triple)
        r = report(fam.generate(FamilyId.NEG, params))
        assert r.sigma == -p
        assert r.detM == (-1) ** (p + 1)
        assert r.detM0 == r.detM * (r.tb + 2)
    assert len(seen) == 2 * (p - 1) * (n - 1)


def test_closed_form_examples():
    assert fam.closed_form(FamilyId.POS, dict(p=2, n=1, k=0, l=1)).triple == (7, -4, HALF)
    assert fam.closed_form(FamilyId.NEG, dict(p=3, n=2, k=1, l=0, u=0, v=0)).triple == (-14, 21, Fraction(15, 2))
    assert fam.closed_form(FamilyId.LHT_STAB, {"k": 0}).triple == (-6, -7, Fraction(3, 2))
    rec = fam.closed_form(FamilyId.RHT_TABLE, {"m": 0, "variant": "a"})
    assert rec.tb == 7 and rec.source is Source.PAPER_TABLE


def test_rht_table_rows():
    rows = {var: [fam.closed_form(FamilyId.RHT_TABLE, {"m": m, "variant": var}) for m in range(4)] for var in "ab"}
    # the two variants alternate between the two d3 values
    for m in range(4):
        assert {rows["a"][m].d3, rows["b"][m].d3} == {Fraction(-3, 2), HALF}
        assert rows["a"][m].tb == rows["b"][m].tb == m + 7


@pytest.mark.parametrize(
    "family, params",
    [
        (FamilyId.LHT_M, {"m": -1}),
        (FamilyId.POS, dict(p=2, n=1, k=1, l=1)),
        (FamilyId.POS, dict(p=1, n=1, k=0, l=0)),
        (FamilyId.NEG, dict(p=3, n=1, k=1, l=0, u=0, v=0)),
        (FamilyId.RHT_TABLE, {"m": 0, "variant": "c"}),
        (FamilyId.LHT_STAB, {"k": -1}),
    ],
)
def test_closed_form_rejects_bad_params(family, params):
    with pytest.raises(InvalidParams):
        fam.closed_form(family, params)


def test_bad_orientation():
    with pytest.raises(InvalidParams):
        fam.closed_form(FamilyId.LHT_M, {"m": 0}, orientation=0)


def test_data_only_families_have_no_diagrams():
    for f in fam.DATA_ONLY:
        with pytest.raises(InvalidParams):
            fam.generate(f, {"m": 0, "k": 0, "variant": "a"})


@pytest.mark.parametrize(
    "family, top, count",
    [
        (FamilyId.LHT_M, {"m": 3}, 2),
        (FamilyId.LHT_M, {"m": 6}, 1),  # rot = 0: both orientations coincide
        (FamilyId.POS, {"p": 3, "n": 2}, 6),
        (FamilyId.NEG, {"p": 3, "n": 3}, 8),
        (FamilyId.NEG, {"p": 2, "n": 2}, 2),
        (FamilyId.RHT_TABLE, {"m": 2}, 4),
        (FamilyId.LHT_STAB, {"k": 2}, 2),
    ],
)
def test_enumerate_counts(family, top, count):
    assert len(fam.enumerate_family(family, top)) == count


def test_rows_agree_and_sources():
    for row in fam.rows(FamilyId.POS, {"p": 3, "n": 1}):
        assert row.agree is True
        assert row.record.source is Source.COMPUTED
    for row in fam.rows(FamilyId.LHT_STAB, {"k": 1}):
        assert row.agree is None
        assert row.record.source is Source.PAPER_TABLE


def test_knot_of():
    assert str(fam.knot_of(FamilyId.POS, {"p": 3, "n": 2})) == "(3,7)"
    assert str(fam.knot_of(FamilyId.NEG, {"p": 3, "n": 2})) == "(3,-5)"
    assert fam.knot_of(FamilyId.LHT_M, {"m": 0}) == fam.knot_of(FamilyId.LHT_STAB, {"k": 0})


@pytest.mark.parametrize("k", range(0, 6))
def test_lht_realizations_below_max_tb(k):
    recs = fam.lht_realizations(-6 - k)
    assert sorted(r.rot for r in recs) == [-7 - k, 7 + k]
    assert all(r.d3 == Fraction(3, 2) for r in recs)


def test_lht_realizations_at_minus_five():
    # the lht m = 0 and neg (2, 2) diagrams give the same two knots
    recs = fam.lht_realizations(-5)
    assert sorted(r.triple for r in recs) == [(-5, -6, Fraction(3, 2)), (-5, 6, Fraction(3, 2))]


def test_record_as_dict():
    d = fam.computed(FamilyId.LHT_M, {"m": 1}).as_dict()
    assert d["tb"] == -4 and d["rot"] == 5 and d["d3"] == Fraction(3, 2)
    assert d["source"] == "Computed"


@pytest.mark.parametrize(
    "m, variant, triple",
    [(1, "a", (8, 2, Fraction(-3, 2))), (2, "b", (9, 3, Fraction(-3, 2))), (2, "a", (9, -1, HALF))],
)
def test_rht_table_values(m, variant, triple):
    rec = fam.closed_form(FamilyId.RHT_TABLE, {"m": m, "variant": variant})
    assert rec.triple == triple
    assert fam.closed_form(FamilyId.RHT_TABLE, {"m": m, "variant": variant}, -1).rot == -triple[1]
