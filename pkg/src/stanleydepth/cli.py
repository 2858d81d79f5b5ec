"""Command line front end.

    stanleydepth analyze --ideal "x1^3*x2^4*x3^5, x1^10*x2^2"
    stanleydepth verify --ideal x2 --mod "x1^2*x2, x1*x2^2" --json
    stanleydepth fuzz --seed 1 --count 200 > report.jsonl

Exit codes: 0 all checks passed or were skipped, 1 a conclusion failed,
2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .checks import Analysis, FuzzConfig, fuzz, run_battery, serialize
from .depth import DEFAULT_CAPS, ResourceCap
from .golden import run_golden
from .linalg import FieldSpec
from .monomials import EqualIdeals, MonomialParseError, NotContained, format_ideal, format_monomial, parse_factor
from .sdepth import DEFAULT_NODE_BUDGET
from .transforms import polarize


def _parse_caps(text: str):
    caps, budget = DEFAULT_CAPS, DEFAULT_NODE_BUDGET
    if not text:
        return caps, budget
    for item in text.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key == "node_budget":
            budget = int(value)
        elif key in ("max_vars", "max_box", "max_taylor_gens"):
            caps = replace(caps, **{key: int(value)})
        else:
            raise ValueError(f"unknown cap {key!r}")
    return caps, budget


def _factor(args):
    if not args.ideal:
        raise ValueError("--ideal is required")
    return parse_factor(args.ideal, args.mod, args.n)


def _base_record(A: Analysis):
    inv = A.invariants
    return {
        "input": serialize(A.F),
        "n": A.F.n,
        "field": str(A.field),
        "e": list(inv.e_per_var),
        "e_total": inv.e_total,
        "d": inv.d_min,
        "t": inv.index_t,
        "r_prime": inv.r_prime,
        "depth": None,
        "sdepth": None,
        "witness": None,
        "checks": [],
    }


def _analyze(A: Analysis, rec):
    inv = A.invariants
    P, pmap = polarize(A.F)
    rec["canonical"] = {"I": format_ideal(inv.canonical.I), "J": format_ideal(inv.canonical.J),
                        "d_prime": inv.d_prime, "e_prime": inv.e_prime}
    rec["polarization"] = {"I": format_ideal(P.I, pmap.names), "J": format_ideal(P.J, pmap.names),
                           "n": P.n, "map": pmap.to_json(), "names": list(pmap.names)}
    rec["b_set"] = [format_monomial(b) for b in inv.b_set]


def _fill_depth(A, rec):
    rec["depth"] = A.depth
    rec["betti"] = A.betti.to_json()["entries"]


def _fill_sdepth(A, rec):
    res = A.sdepth_result
    rec["sdepth"] = res.value
    rec["witness"] = res.witness.to_text()


def _print_human(rec, out):
    inp = rec["input"]
    print(f"I/J = ({inp['I']})/({inp['J']}) in {rec['n']} variables over {rec['field']}", file=out)
    print(f"  e = {rec['e']}  e_total = {rec['e_total']}  d = {rec['d']}  t = {rec['t']}  r' = {rec['r_prime']}", file=out)
    if "canonical" in rec:
        c, p = rec["canonical"], rec["polarization"]
        print(f"  canonical form: ({c['I']})/({c['J']})  d' = {c['d_prime']}  e' = {c['e_prime']}", file=out)
        print(f"  polarization:   ({p['I']})/({p['J']}) in {p['n']} variables", file=out)
    if rec["depth"] is not None:
        print(f"  depth = {rec['depth']}", file=out)
    if rec["sdepth"] is not None:
        print(f"  sdepth = {rec['sdepth']}  witness: "
              + "; ".join(f"[{c}, {d}]" for c, d in rec["witness"]), file=out)
    for chk in rec["checks"]:
        tag = "" if chk["asserted"] else " (reported)"
        print(f"  {chk['check_id']:<22} {chk['status']}{tag}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stanleydepth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in ("analyze", "depth", "sdepth", "verify", "golden", "fuzz"):
        p = sub.add_parser(verb)
        p.add_argument("--ideal", help="generators of I, e.g. 'x1^2*x2, x3'")
        p.add_argument("--mod", default="0", help="generators of J, or 0")
        p.add_argument("--n", type=int, help="number of variables (default: largest index used)")
        p.add_argument("--field", type=int, default=0, help="characteristic: 0 or a prime")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=200)
        p.add_argument("--caps", default="", help="e.g. max_vars=14,max_box=200000,node_budget=2000000")
        p.add_argument("--json", action="store_true", help="emit JSON lines")
        p.add_argument("--workers", type=int, default=1, help="fuzz: worker processes (output order is unchanged)")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        field = FieldSpec(args.field)
        caps, budget = _parse_caps(args.caps)
        if args.verb == "golden":
            return _golden(args, out)
        if args.verb == "fuzz":
            return _fuzz(args, field, caps, budget, out)
        F = _factor(args)
    except (MonomialParseError, NotContained, EqualIdeals, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    A = Analysis(F, field, caps, budget)
    rec = _base_record(A)
    status = 0
    try:
        if args.verb == "analyze":
            _analyze(A, rec)
        if args.verb in ("depth", "verify"):
            _fill_depth(A, rec)
        if args.verb in ("sdepth", "verify"):
            _fill_sdepth(A, rec)
        if args.verb == "verify":
            outcomes = run_battery(F, A)
            rec["checks"] = [o.to_json() for o in outcomes]
            status = 1 if any(o.failed for o in outcomes) else 0
    except ResourceCap as exc:
        rec["unknown"] = str(exc)
    if args.json:
        print(json.dumps(rec, sort_keys=True), file=out)
    else:
        _print_human(rec, out)
        if "unknown" in rec:
            print(f"  unknown: {rec['unknown']}", file=out)
    return status


def _golden(args, out) -> int:
    rows = run_golden()
    for r in rows:
        if args.json:
            print(json.dumps({"fixture": r.name, "expected": repr(r.expected), "actual": repr(r.actual),
                              "passed": r.passed}, sort_keys=True), file=out)
        else:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: expected {r.expected!r}, got {r.actual!r}", file=out)
    return 0 if all(r.passed for r in rows) else 1


def _fuzz(args, field, caps, budget, out) -> int:
    config = FuzzConfig(seed=args.seed, instance_count=args.count, caps=caps, node_budget=budget)
    failed = False
    for rec in fuzz(config, field, workers=args.workers):
        failed |= rec["asserted"] and rec["status"] == "fail"
        print(json.dumps(rec, sort_keys=True), file=out)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
