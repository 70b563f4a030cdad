"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .cutsets import CutPolicy
from .errors import FinsertError
from .insertion import Mode, NoWitness, PremiseError, Preset, insert
from .oracle import OracleQuery, TargetClass, search
from .realfn import classify, to_rational
from .relations import RelationKind
from .spacegen import enumerate_topologies
from .sweeps import CHECKS, run_sweep
from .topology import (
    cor3_separation,
    cor4_separation,
    is_extremally_disconnected,
    is_normal,
    lambda_sets_open,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _emit(args, text_lines: list[str], data: dict) -> None:
    if args.format == "structured":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _parse_grid(raw: str | None):
    if not raw:
        return None
    try:
        return [to_rational(v) for v in raw.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise formats.FormatError(f"bad --grid value: {exc}") from exc


def cmd_check_space(args) -> int:
    t = formats.load_space(args.space)
    checks = {
        "lambda_sets_open": lambda_sets_open(t),
        "extremally_disconnected": is_extremally_disconnected(t),
        "normal": is_normal(t),
        "cor3_separation": cor3_separation(t),
        "cor4_separation": cor4_separation(t),
    }
    lines = [f"{k}: {_verdict(v)}" for k, v in checks.items()]
    _emit(args, lines, {"n": t.n, "checks": checks})
    return EXIT_OK


def cmd_classify(args) -> int:
    t = formats.load_space(args.space)
    f = formats.load_function(args.function)
    flags = classify(t, f).as_dict()
    lines = [f"{k}: {'true' if v else 'false'}" for k, v in flags.items()]
    _emit(args, lines, {"function": [str(v) for v in f], "flags": flags})
    return EXIT_OK


def _sets(sets) -> list[list[int]]:
    return [s.points() for s in sets]


def cmd_insert(args) -> int:
    t = formats.load_space(args.space)
    lower = formats.load_function(args.lower)
    upper = formats.load_function(args.upper)
    header = {
        "preset": args.preset,
        "relation": args.relation or "(preset default)",
        "cutset": args.cutset,
        "mode": args.mode,
    }
    try:
        rep = insert(t, lower, upper, args.relation, args.cutset, args.mode, args.preset)
    except PremiseError as exc:
        fl = exc.failure
        data = {**header, "status": "premise-failure", "gap_pair": [fl.i, fl.j],
                "upper_set": fl.upper_set.points(), "lower_set": fl.lower_set.points()}
        _emit(args, [f"{k}: {v}" for k, v in header.items()] + ["status: PremiseFailure", str(fl)], data)
        return EXIT_FAIL
    except NoWitness as exc:
        data = {**header, "status": "no-witness", "index": exc.index,
                "level": None if exc.level is None else str(exc.level),
                "lower_constraints": _sets(exc.lower), "upper_constraints": _sets(exc.upper),
                "self_constraint": exc.self_constraint}
        lines = [f"{k}: {v}" for k, v in header.items()]
        where = f"gap {exc.index}" if exc.level is None else f"level {exc.level}"
        lines += [
            f"status: NoWitness at {where}",
            "  must contain (A rho C): " + " ".join(map(repr, exc.lower)),
            "  must sit below (C rho B): " + " ".join(map(repr, exc.upper)),
            f"  self constraint C rho C: {'yes' if exc.self_constraint else 'no'}",
        ]
        _emit(args, lines, data)
        return EXIT_FAIL

    chain = rep.chain
    header["relation"] = rep.relation
    steps = []
    lines = [f"{k}: {v}" for k, v in header.items()]
    lines.append("levels: " + " ".join(str(v) for v in chain.levels))
    lines.append("chain:")
    for w in chain.witnesses:
        tag = f"gap {w.index}" if w.level is None else f"t={w.level}"
        lines.append(f"  H[{w.index}] ({tag}) = {w.chosen!r}")
        steps.append({"index": w.index, "level": None if w.level is None else str(w.level),
                      "chosen": w.chosen.points(), "lower": _sets(w.lower), "upper": _sets(w.upper)})
    lines.append("h: " + " ".join(str(v) for v in rep.h))
    lines.append(f"bounds: {_verdict(rep.bounds_ok)}" + ("" if rep.exact_bounds else " (with slack)"))
    lines.append(f"contra_continuous: {_verdict(rep.contra_ok)}")
    lines.append(
        f"identity: {_verdict(rep.identity_ok)} "
        f"({rep.identity_checked - rep.identity_mismatches}/{rep.identity_checked} pairs)"
    )
    for d in rep.diagnostics:
        lines.append(f"  note: {d}")
    lines.append(f"verdict: {_verdict(rep.passed)}")
    data = {
        **header,
        "status": "ok" if rep.passed else "verification-failure",
        "levels": [str(v) for v in chain.levels],
        "chain": steps,
        "h": [str(v) for v in rep.h],
        "bounds_ok": rep.bounds_ok,
        "exact_bounds": rep.exact_bounds,
        "contra_ok": rep.contra_ok,
        "identity_ok": rep.identity_ok,
        "identity_mismatches": rep.identity_mismatches,
        "slack": [[str(a), str(b)] for a, b in rep.slack],
        "diagnostics": rep.diagnostics,
    }
    _emit(args, lines, data)
    if args.out:
        formats.save_function(rep.h, args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_oracle(args) -> int:
    t = formats.load_space(args.space)
    lower = formats.load_function(args.lower)
    upper = formats.load_function(args.upper)
    grid = _parse_grid(args.grid) or ()
    res = search(OracleQuery(t, lower, upper, tuple(grid), TargetClass(args.target)))
    found = res.witness is not None
    text = "witness: " + (" ".join(str(v) for v in res.witness) if found else "none")
    _emit(
        args,
        [f"class: {args.target}", text, f"examined: {res.examined}"],
        {"class": args.target, "witness": [str(v) for v in res.witness] if found else None,
         "examined": res.examined},
    )
    return EXIT_OK if found else EXIT_FAIL


def cmd_sweep(args) -> int:
    result = run_sweep(args.check, args.n, _parse_grid(args.grid))
    lines = [
        f"check: {result.check}  n: {result.n}  grid: {','.join(str(v) for v in result.grid)}",
        "space\ted\tnormal\tpairs\tok\tfail\tdiscrepancy\tnote",
    ]
    rows = []
    for r in result.rows:
        lines.append(
            f"{r.index}\t{int(r.ed)}\t{int(r.normal)}\t{r.pairs}\t{r.successes}\t"
            f"{r.failures}\t{r.discrepancies}\t{r.note}"
        )
        rows.append({
            "index": r.index, "min_nbrs": [s.points() for s in r.space.min_nbr],
            "ed": r.ed, "normal": r.normal, "pairs": r.pairs, "successes": r.successes,
            "failures": r.failures, "discrepancies": r.discrepancies, "note": r.note,
        })
    totals = result.totals()
    lines.append("totals: " + " ".join(f"{k}={v}" for k, v in totals.items()))
    for msg in result.failures:
        lines.append(f"FAIL {msg}")
    for msg in result.review:
        lines.append(f"REVIEW {msg}")
    lines.append(f"verdict: {_verdict(result.ok)}")
    _emit(args, lines, {
        "check": result.check, "n": result.n, "grid": [str(v) for v in result.grid],
        "rows": rows, "totals": totals, "failures": result.failures,
        "review": result.review, "ok": result.ok,
    })
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    spaces = list(enumerate_topologies(args.n))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(max(len(spaces) - 1, 0)))
        for i, t in enumerate(spaces):
            formats.save_space(t, out / f"space_{args.n}_{i:0{width}d}.json", args.form)
    else:
        for t in spaces:
            print(formats.dumps(formats.space_to_dict(t, args.form)))
    print(f"count: {len(spaces)}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    p = argparse.ArgumentParser(
        prog="finsert",
        description="Contra-continuous insertion on finite topological spaces.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-space", parents=[common], help="report space-level hypotheses")
    s.add_argument("space")
    s.set_defaults(func=cmd_check_space)

    s = sub.add_parser("classify", parents=[common], help="semicontinuity flags of a function")
    s.add_argument("space")
    s.add_argument("function")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("insert", parents=[common], help="run the chain insertion")
    s.add_argument("space")
    s.add_argument("lower")
    s.add_argument("upper")
    s.add_argument("--relation", choices=[k.value for k in RelationKind if k is not RelationKind.EXPLICIT])
    s.add_argument("--cutset", choices=[c.value for c in CutPolicy], default="strict")
    s.add_argument("--mode", choices=[m.value for m in Mode], default="exact")
    s.add_argument("--preset", choices=[x.value for x in Preset], default="raw")
    s.add_argument("--out", help="write the inserted function to this file")
    s.set_defaults(func=cmd_insert)

    s = sub.add_parser("oracle", parents=[common], help="brute-force inserter search")
    s.add_argument("space")
    s.add_argument("lower")
    s.add_argument("upper")
    s.add_argument("--class", dest="target", choices=[c.value for c in TargetClass], default="contra")
    s.add_argument("--grid", help="comma-separated values, e.g. 0,1/2,1")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("sweep", parents=[common], help="exhaustive checks over all n-point spaces")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--check", choices=CHECKS, required=True)
    s.add_argument("--grid", help="comma-separated values, e.g. 0,1/2,1")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("enumerate", help="list every labelled topology on n points")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", help="directory for one space file per topology")
    s.add_argument("--form", choices=("min_nbrs", "opens"), default="min_nbrs")
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FinsertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
