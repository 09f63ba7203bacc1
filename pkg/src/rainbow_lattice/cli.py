"""Command-line surface: construct, detect, solve, decompose, bounds,
congen, verify, run.  JSON by default; --out writes to a file."""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from .coloring import Coloring, PosetFamily, class_stats, validate
from .constructions import chain_overlap_check, random_chain_family
from .experiments import (VERSION, build_construction, congen_trial_rows,
                          _rows_to_csv, run_experiment)
from .lattice import parse_subset
from .posets import build_poset, find_copy
from .solver import az_decompose, solve_min_class
from .verify import DEFAULT_SEED, verify_suite


def _emit(data, args) -> None:
    text = json.dumps(data, indent=2, sort_keys=True, default=str)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _family_arg(value: str, n: int | None = None):
    """A family of subsets: inline JSON list or @file; literals per parse_subset."""
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            raw = json.load(fh)
    else:
        raw = json.loads(value)
    return [parse_subset(v, n) for v in raw]


def _load_coloring(path: str) -> Coloring:
    with open(path, encoding="utf-8") as fh:
        return Coloring.from_json_dict(json.load(fh))


def _cmd_construct(args) -> int:
    report = build_construction(args.type, args.n, l=args.l, k=args.k, seed=args.seed or 0,
                                total=args.total, variant=args.variant,
                                materialize=not args.no_materialize)
    if args.report:
        rows = [{"class": i + 1, "size": s} for i, s in enumerate(report.class_sizes)]
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(_rows_to_csv(rows))
    _emit(report.to_json_dict(), args)
    return 0


def _cmd_detect(args) -> int:
    if args.coloring:
        col = _load_coloring(args.coloring)
        fam = PosetFamily.from_spec(args.forbid, args.mode)
        witness = validate(col, fam)
        out = {"verdict": "ok" if witness is None else "rainbow"}
        if witness is not None:
            out.update(sets=list(witness.sets), colors=list(witness.colors),
                       member=witness.poset.name or witness.member_index)
        _emit(out, args)
        return 0 if witness is None else 1
    family = _family_arg(args.family)
    poset = build_poset(args.poset)
    emb = find_copy(family, poset, args.mode)
    _emit({"found": emb is not None,
           "embedding": {str(k): v for k, v in emb.items()} if emb else None}, args)
    return 0


def _cmd_solve(args) -> int:
    fam = PosetFamily.from_spec(args.forbid, args.mode)
    res = solve_min_class(args.n, args.colors, fam, kind=args.kind, budget=args.budget)
    out = res.to_json_dict()
    if res.witness is not None:
        out["witness_stats"] = list(class_stats(res.witness).sizes)
    _emit(out, args)
    return 0


def _cmd_decompose(args) -> int:
    families = [[parse_subset(v, args.n) for v in fam] for fam in json.loads(args.families)]
    try:
        dec = az_decompose(args.n, families)
    except ValueError as exc:
        _emit({"error": str(exc)}, args)
        return 2
    if dec is None:
        _emit({"found": False}, args)
        return 1
    _emit({"found": True, "chain": list(dec.chain),
           "parts": [sorted(p) for p in dec.parts]}, args)
    return 0


def _cmd_bounds(args) -> int:
    op = args.op
    if op == "m":
        out = {"l": args.l, "m": bounds_mod.m_of_l(args.l)}
    elif op == "formulaA2":
        fv = bounds_mod.formula_A2(args.n, args.l)
        out = {"n": args.n, "l": args.l, "value": fv.value, "applicable": fv.applicable,
               "note": fv.condition_note, "caveat": fv.caveat}
    elif op == "entropy":
        out = {"x": args.x, "h": bounds_mod.binary_entropy(args.x)}
    elif op == "c0":
        out = bounds_mod.solve_c0(tol=args.tol)
    elif op == "eq":
        res = bounds_mod.eq_inequality_check(args.l, args.i)
        out = {"l": args.l, "i": args.i, "lhs": str(res["lhs"]),
               "rhs": str(res["rhs"]), "holds": res["holds"]}
    elif op == "known":
        fv = bounds_mod.known_value(args.n, args.l, args.forbid, args.kind)
        out = {"value": fv.value, "applicable": fv.applicable, "source": fv.source,
               "note": fv.condition_note, "caveat": fv.caveat}
    else:
        raise ValueError(f"unknown bounds op {op!r}")
    _emit(out, args)
    return 0


def _cmd_congen(args) -> int:
    if args.trials:
        rows = congen_trial_rows(args.n, args.k, args.l, args.trials, args.seed or 0)
        if args.report:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(_rows_to_csv(rows))
        rate = sum(r["condition_pass"] for r in rows) / len(rows)
        _emit({"trials": len(rows), "condition_pass_rate": rate,
               "min_class_sizes": [r["min_class_size"] for r in rows]}, args)
        return 0
    cf = random_chain_family(args.n, args.k, args.l, args.seed or 0)
    out = cf.to_json_dict()
    out["overlap_check"] = chain_overlap_check(cf)
    _emit(out, args)
    return 0


def _cmd_verify(args) -> int:
    seed = DEFAULT_SEED if args.seed is None else args.seed
    report = verify_suite(profile=args.profile, seed=seed, budget=args.budget)
    if args.format == "text":
        text = report.render_text()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    else:
        _emit(report.to_json_dict(), args)
    return 0 if report.ok else 1


def _cmd_run(args) -> int:
    manifest = run_experiment(args.spec_file, outdir=args.out)
    print(json.dumps(manifest, indent=2, sort_keys=True))
    return 0


def main(argv=None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--budget", type=int, default=10 ** 9)
    common.add_argument("--out", default=None)
    common.add_argument("--format", choices=("json", "text", "csv"), default="json")

    top = argparse.ArgumentParser(prog="rainbow-lattice",
                                  description="rainbow-subposet-free colorings of B_n")
    top.add_argument("--version", action="version", version=VERSION)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="generate a coloring")
    p.add_argument("--type", required=True,
                   choices=("traces", "chain", "congen", "lift3", "p3", "pk"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--total", action="store_true")
    p.add_argument("--variant", default="three_color",
                   choices=("three_color", "four_color"))
    p.add_argument("--no-materialize", action="store_true")
    p.add_argument("--report", default=None, help="write class sizes CSV here")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("detect", parents=[common],
                       help="find copies / validate a coloring")
    p.add_argument("--coloring", default=None, help="coloring JSON file")
    p.add_argument("--family", default=None, help="JSON list of subsets, or @file")
    p.add_argument("--poset", default=None, help="poset spec for --family mode")
    p.add_argument("--forbid", default=None, help="forbidden family for --coloring mode")
    p.add_argument("--mode", choices=("induced", "weak"), default="induced")
    p.set_defaults(fn=_cmd_detect)

    p = sub.add_parser("solve", parents=[common], help="exact max-min class size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--mode", choices=("induced", "weak"), default="induced")
    p.add_argument("--kind", choices=("partial", "total"), default="partial")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("decompose", parents=[common],
                       help="chain decomposition of cross-comparable families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--families", required=True, help="JSON list of lists of subsets")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("bounds", parents=[common], help="closed forms and checks")
    p.add_argument("--op", required=True,
                   choices=("m", "formulaA2", "entropy", "c0", "eq", "known"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--forbid", default=None)
    p.add_argument("--kind", choices=("partial", "total"), default="partial")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("congen", parents=[common],
                       help="random chain families and trial batches")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--report", default=None, help="write per-trial CSV here")
    p.set_defaults(fn=_cmd_congen)

    p = sub.add_parser("verify", parents=[common], help="run the claim battery")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("run", parents=[common], help="run an experiment spec file")
    p.add_argument("spec_file")
    p.set_defaults(fn=_cmd_run)

    args = top.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
