"""legctl command-line interface.

    legctl invariants FILE [--reverse] [--p P --q Q] [--format table|json]
    legctl count --p P --q Q --tb TB [--format table|json]
    legctl family {lht,pos,neg,rht-table,lht-stab} [--p --n --m --k --variant] [--emit DIR]
    legctl verify-paper

Exit codes: 0 success, 2 input/validation error, 3 mathematical precondition
failure, 4 verification failure.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import diagram as dg
from . import families as fam
from . import invariants as inv
from . import seifert as sf
from .errors import InvalidParams, LegctlError

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_VERIFY = 0, 2, 3, 4


def _plain(obj):
    """JSON-ready copy: rationals become "num/den" strings."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, enum.Enum):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    return obj


def _fmt(v) -> str:
    if v is None:
        return "unknown"
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    if isinstance(v, (set, frozenset)):
        return "{" + ", ".join(_fmt(x) for x in sorted(v)) + "}"
    return str(v)


def _emit_json(payload) -> None:
    print(json.dumps(_plain(payload), indent=2))


def _table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [[_fmt(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _knot(args) -> Optional[sf.TorusKnotSpec]:
    if args.p is None and args.q is None:
        return None
    if args.p is None or args.q is None:
        raise InvalidParams("--p and --q must be given together")
    return sf.TorusKnotSpec(args.p, args.q)


def cmd_invariants(args) -> int:
    d = dg.load(args.file)
    if args.reverse:
        d = d.reversed()
    knot = _knot(args)
    r = inv.report(d)
    verdict = inv.overtwisted_verdict(r.tb, r.d3, knot)
    payload = dict(r.as_dict())
    payload["hopf"] = inv.d3_to_hopf(r.d3)
    payload["overtwisted"] = verdict
    if d.groups is not None:
        rd = inv.report_deflated(dg.deflate(d))
        payload["deflation_agrees"] = (rd.tb, rd.rot_plus, rd.d3, rd.sigma) == (r.tb, r.rot_plus, r.d3, r.sigma)
    if args.format == "json":
        _emit_json(payload)
        return EXIT_OK
    rows = [
        ("tb", r.tb),
        ("rot (as given / reversed)", f"{r.rot_plus} / {r.rot_minus}"),
        ("d3", r.d3),
        ("det M", r.detM),
        ("det M_0", r.detM0),
        ("signature", r.sigma),
        ("Euler characteristic", r.chi),
        ("c^2", r.c_squared),
        ("(+1)-surgeries", r.q_plus),
        ("homology sphere", "yes" if r.is_homology_sphere else "no"),
        ("overtwisted", verdict),
    ]
    if "deflation_agrees" in payload:
        rows.append(("deflated cross-check", "agrees" if payload["deflation_agrees"] else "DISAGREES"))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k.ljust(width)}  {_fmt(v)}")
    return EXIT_OK


def cmd_count(args) -> int:
    tc = sf.exceptional_bound(sf.TorusKnotSpec(args.p, args.q), args.tb)
    payload = tc.as_dict()
    if args.format == "json":
        _emit_json(payload)
        return EXIT_OK
    for key in ("knot", "tb", "slope", "case", "total", "std_count", "std_rots", "exceptional_upper_bound", "reduction"):
        value = payload[key]
        if key == "knot":
            value = str(tc.knot)
        if value is None:
            continue
        print(f"{key.ljust(24)}  {_fmt(_plain(value))}")
    for reason in tc.reasons:
        print(f"{'note'.ljust(24)}  {reason}")
    return EXIT_OK


def _family_params(family: fam.FamilyId, args) -> dict:
    need = {
        fam.FamilyId.LHT_M: ("m",),
        fam.FamilyId.POS: ("p", "n"),
        fam.FamilyId.NEG: ("p", "n"),
        fam.FamilyId.RHT_TABLE: ("m",),
        fam.FamilyId.LHT_STAB: ("k",),
    }[family]
    top = {}
    for name in need:
        value = getattr(args, name)
        if value is None:
            raise InvalidParams(f"family {family} needs --{name}")
        top[name] = value
    if family is fam.FamilyId.RHT_TABLE and args.variant:
        top["variant"] = args.variant
    return top


def cmd_family(args) -> int:
    family = fam.FamilyId(args.family)
    top = _family_params(family, args)
    rows = fam.rows(family, top)
    distinct = {}
    for row in rows:
        distinct.setdefault(row.record.triple, []).append(row)
    if args.emit:
        if family in fam.DATA_ONLY:
            raise InvalidParams(f"family {family} has no surgery diagrams to emit")
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for params in fam.parameter_sets(family, top):
            name = "_".join([str(family)] + [f"{k}{v}" for k, v in sorted(params.items())])
            dg.dump(fam.generate(family, params), out / f"{name}.json")
    records = []
    for triple, group in distinct.items():
        rec = group[0].record
        notes = []
        if len(group) > 1 and rec.rot == 0:
            notes.append("orientations coincide (rot = 0)")
        elif len(group) > 1:
            notes.append(f"{len(group)} members share these invariants")
        records.append((group[0], notes))
    all_agree = all(row.agree is not False for row in rows)
    caveat = None
    if family is fam.FamilyId.LHT_M:
        caveat = "conjecture: these are all strongly exceptional realisations at this tb (completeness not proven)"
    if args.format == "json":
        _emit_json(
            {
                "family": family,
                "params": top,
                "count": len(records),
                "records": [
                    dict(row.record.as_dict(), closed_form=row.closed.as_dict(), agree=row.agree, notes=notes)
                    for row, notes in records
                ],
                "all_agree": all_agree,
                "caveat": caveat,
            }
        )
    else:
        table = []
        for row, notes in records:
            rec = row.record
            params = ",".join(f"{k}={v}" for k, v in rec.params if k not in top)
            agree = "-" if row.agree is None else ("yes" if row.agree else "NO")
            table.append((params or "-", rec.orientation, rec.tb, rec.rot, rec.d3, rec.source, agree, "; ".join(notes)))
        print(_table(["params", "orient", "tb", "rot", "d3", "source", "closed form agrees", "note"], table))
        print(f"{len(records)} distinct realisations")
        if caveat:
            print(caveat)
    return EXIT_OK if all_agree else EXIT_VERIFY


def cmd_verify_paper(args) -> int:
    from .verify import run_all

    results = run_all()
    if args.format == "json":
        _emit_json([{"number": r.number, "name": r.name, "passed": r.passed, "checks": r.checked, "failures": r.failures} for r in results])
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legctl", description="Exact invariants of Legendrian knots in contact surgery diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("invariants", help="tb, rot, d3 and friends for a diagram file")
    p.add_argument("file")
    p.add_argument("--reverse", action="store_true", help="reverse the orientation of the distinguished knot")
    p.add_argument("--p", type=int, help="torus knot type of L, for the max-tb criterion")
    p.add_argument("--q", type=int)
    add_format(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("count", help="tight structures on a torus-knot complement")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--tb", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("family", help="enumerate a family of exceptional realisations")
    p.add_argument("family", choices=[f.value for f in fam.FamilyId])
    for name in ("p", "n", "m", "k"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--variant", choices=("a", "b"))
    p.add_argument("--emit", metavar="DIR", help="write one diagram file per family member")
    add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify-paper", help="run every reproduction check")
    add_format(p)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except LegctlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
