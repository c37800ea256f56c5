"""Batch command-line front end.

Every subcommand prints a table: TSV with a header line by default, or with
``--json`` an object ``{"params": ..., "rows": [...], "pass": ...}``.  Exit
status is 0 on success, 1 when a verification fails and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import hall, lattice, motivic, sod, strata
from .verify import SUITES, run_suite


class InputError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return lattice.parse_weight(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _side(text: str) -> str:
    if text in ("plus", "+"):
        return "+"
    if text in ("minus", "-"):
        return "-"
    raise argparse.ArgumentTypeError(f"side must be plus or minus, got {text!r}")


def cmd_windows(args):
    ws = lattice.enumerate_window(args.c, args.d)
    rows = [{"weight": lattice.format_weight(w), "stratum": k} for k in sorted(ws.strata) for w in ws.strata[k]]
    rows.sort(key=lambda r: lattice.parse_weight(r["weight"]))
    return {"c": args.c, "d": args.d}, rows, None


def cmd_strata(args):
    if args.dims is None and args.d is None:
        raise InputError("give --d or --dims")
    dims = args.dims if args.dims is not None else (args.d,)
    spec = strata.QuiverSpec(args.a, args.b, dims)
    strata_list = strata.multi_strata(spec, args.side)
    rows = []
    for s in strata_list:
        iv = strata.window_interval(s, args.side)
        rows.append({
            "index": s.index,
            "side": s.side,
            "slope_sq": s.slope_sq,
            "eta": s.eta,
            "window": "empty" if iv.empty else f"{iv.lo}..{iv.hi}",
            "decomps": ";".join(lattice.format_weight(x) for x in s.decomps),
            "cochars": ";".join(lattice.format_weight(x) for x in s.cochars),
        })
    return {"a": args.a, "b": args.b, "dims": lattice.format_weight(dims), "side": args.side}, rows, None


def _full_weight(args) -> tuple[int, ...]:
    head = args.f if args.f is not None else (0,) * args.k
    if len(head) != args.k or len(args.chi) != args.d - args.k:
        raise InputError(f"--f needs {args.k} entries and --chi needs {args.d - args.k}")
    return tuple(head) + tuple(args.chi)


def cmd_hall(args):
    params = {"chi": lattice.format_weight(args.chi), "k": args.k, "b": args.b, "d": args.d}
    if args.c is not None:
        if args.f is not None:
            raise InputError("--c (leading-term check) does not take --f")
        params["c"] = args.c
        rep = hall.verify_leading(args.chi, args.k, args.c, args.b, args.d)
        terms, ok = rep.terms, rep.passed
        for msg in rep.failures:
            print(f"verification failure: {msg}", file=sys.stderr)
    else:
        terms, ok = hall.bwb_terms(_full_weight(args), args.k, args.b, args.d), None
    rows = [{"weight": lattice.format_weight(t.weight), "shift": t.shift, "multiplicity": t.multiplicity}
            for t in terms]
    return params, rows, ok


def cmd_kclass(args):
    chi = _full_weight(args)
    bwb = hall.kclass_bwb(chi, args.k, args.b, args.d)
    shuffle = hall.kclass_shuffle(hall.schur(chi[: args.k]), hall.schur(chi[args.k:]), args.b)
    rows = [{"route": "bwb", "kclass": bwb.to_string()}, {"route": "shuffle", "kclass": shuffle.to_string()}]
    params = {"chi": lattice.format_weight(chi), "k": args.k, "b": args.b, "d": args.d}
    return params, rows, bwb == shuffle


def cmd_sod(args):
    if args.dims is not None:
        table = sod.sod_table_multi(args.a, args.b, args.dims, prune_empty=args.prune_empty)
    else:
        if args.d is None:
            raise InputError("give --d or --dims")
        c = args.a if args.c is None else args.c
        table = sod.sod_table(args.a, args.b, c, args.d, prune_empty=args.prune_empty)
    rows = [{"index": lattice.format_weight(s.index), "residual": s.residual,
             "generators": s.generator_count, "label": s.label} for s in table.summands]
    params = {k: lattice.format_weight(v) if isinstance(v, list) else v for k, v in table.params.items()}
    params["total"] = table.total
    return params, rows, None


def cmd_quot(args):
    rows = []
    for s in sod.quot_curve_table(args.r, args.d, args.genus):
        rows.append({"parts": lattice.format_weight(s.parts), "label": s.label,
                     "exceptional": "-" if s.exceptional_count is None else s.exceptional_count})
    params = {"r": args.r, "d": args.d, "genus": args.genus, "class": str(motivic.bfp_class(args.r, args.d))}
    ok = None
    if args.genus == 0:
        lhs, rhs, ok = sod.exceptional_count_p1(args.r, args.d)
        params["exceptional_total"] = lhs
        params["binomial"] = rhs
    return params, rows, ok


def cmd_count(args):
    res = motivic.stable_count(args.a, args.b, args.d, args.q, args.side, args.max_enum)
    formula, ok = "-", None
    if args.b == 0 and args.side == "+" and args.a >= 1:
        poly = motivic.quot_affine_formula(args.a, args.d)
        formula = motivic.format_qpoly(poly)
        ok = motivic.eval_qpoly(poly, args.q) == res.count
    row = {"count": res.count, "formula": formula, "raw": res.raw, "gl_order": res.gl_order}
    params = {"a": args.a, "b": args.b, "d": args.d, "q": args.q, "side": args.side}
    return params, [row], ok


def cmd_verify(args):
    checks = run_suite(args.suite, args.max_d, max_enum=args.max_enum)
    return {"suite": args.suite, "max_d": args.max_d}, [c.row() for c in checks], all(c.passed for c in checks)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hallwin", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of TSV")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("windows", parents=[common], help="list B_c(d) by stratum")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_windows)

    p = sub.add_parser("strata", parents=[common], help="Kempf-Ness strata and window intervals")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--dims", type=_ints)
    p.add_argument("--side", type=_side, default="+")
    p.set_defaults(func=cmd_strata)

    for name, func, text in (("hall", cmd_hall, "Borel-Weil-Bott terms of a Hall product"),
                             ("kclass", cmd_kclass, "K-class by BWB terms and by shuffle formula")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--chi", type=_ints, required=True, help="weight on the last d-k coordinates")
        p.add_argument("--f", type=_ints, help="weight on the first k coordinates (default zero)")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        if name == "hall":
            p.add_argument("--c", type=int, help="also check the leading-term property for this c")
        p.set_defaults(func=func)

    p = sub.add_parser("sod", parents=[common], help="semiorthogonal summand table")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--dims", type=_ints)
    p.add_argument("--prune-empty", action="store_true")
    p.set_defaults(func=cmd_sod)

    p = sub.add_parser("quot", parents=[common], help="Quot-scheme summands over a curve")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--genus", type=int, default=0)
    p.set_defaults(func=cmd_quot)

    p = sub.add_parser("count", parents=[common], help="brute-force F_q point count of G^{+-}_{a,b}(d)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--side", type=_side, default="+")
    p.add_argument("--max-enum", type=int, default=motivic.DEFAULT_MAX_ENUM)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-enum", type=int, default=motivic.DEFAULT_MAX_ENUM)
    p.set_defaults(func=cmd_verify)
    return parser


def render_tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    lines = ["\t".join(keys)]
    lines += ["\t".join(str(r[k]) for k in keys) for r in rows]
    return "\n".join(lines) + "\n"


def render_json(params: dict, rows: list[dict], ok) -> str:
    return json.dumps({"params": params, "rows": rows, "pass": ok}, sort_keys=False) + "\n"


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params, rows, ok = args.func(args)
    except ValueError as exc:
        # BudgetExceeded and InputError are ValueErrors
        print(f"hallwin {args.command}: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"hallwin {args.command}: verification failure: {exc}", file=sys.stderr)
        return 1
    out.write(render_json(params, rows, ok) if args.json else render_tsv(rows))
    return 1 if ok is False else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
