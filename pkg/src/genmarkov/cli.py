"""Command-line surface.  Deterministic: identical inputs give identical bytes.

Exit codes: 0 success (including reported errata), 1 verification failure or
internal inconsistency, 2 usage errors.  Big integers are always serialized
as decimal strings in JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import contfrac, farey, limits, markov, signseq, snakegraph, verify

TEXT, JSON_FMT, CSV_FMT, TSV_FMT = "text", "json", "csv", "tsv"


def _label(args) -> farey.ReducedFraction:
    return farey.reduce_fraction(args.p, args.q)


def _print_record(rec: markov.MarkovRecord, fmt: str) -> None:
    if fmt == JSON_FMT:
        payload = {
            "label": rec.label,
            "kind": rec.kind,
            "value": str(rec.value),
            "cf": list(rec.cf),
            "provenance": rec.provenance,
            "checks": {name: str(val) for name, val in rec.checks},
        }
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(rec.value)


def cmd_gen(args) -> int:
    _print_record(markov.gen_markov(_label(args)), args.format)
    return 0


def cmd_ord(args) -> int:
    _print_record(markov.ord_markov(_label(args)), args.format)
    return 0


def cmd_band(args) -> int:
    try:
        rec = markov.band_markov(_label(args))
    except markov.ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    _print_record(rec, args.format)
    return 0


def cmd_ext(args) -> int:
    rec = markov.extended_markov(args.q, args.p, args.k)
    if not rec.consistent:
        print(f"internal inconsistency: {'; '.join(rec.discrepancies)}", file=sys.stderr)
        return 1
    _print_record(rec, args.format)
    return 0


def cmd_signs(args) -> int:
    if args.profile:
        payload = signseq.crossing_profile(args.p, args.q).to_json_dict()
        print(json.dumps(payload, separators=(",", ":")))
        return 0
    seq = signseq.sign_sequence(args.p, args.q, args.midpoint)
    if args.even:
        seq = signseq.even_subsequence(seq)
    runs = seq.runs()
    if args.format == JSON_FMT:
        payload = {
            "p": args.p,
            "q": args.q,
            "signs": seq.signs,
            "runs": list(runs),
            "numerator": str(contfrac.continuant(runs)),
        }
        if seq.midpoint_index is not None:
            payload["midpoint_index"] = seq.midpoint_index
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(seq.signs)
        print(f"runs {contfrac.format_entries(runs)}")
        print(f"numerator {contfrac.continuant(runs)}")
    return 0


def cmd_cf(args) -> int:
    entries = contfrac.parse_entries(args.entries)
    if args.op == "numerator":
        num, den = contfrac.evaluate(entries)
        if args.format == JSON_FMT:
            print(json.dumps({"numerator": str(num), "denominator": str(den)}))
        else:
            print(num)
        return 0
    raise AssertionError(args.op)


def cmd_snake(args) -> int:
    entries = contfrac.parse_entries(args.cf)
    graph = snakegraph.SnakeGraph.from_cf(entries)
    if args.op == "render":
        if args.format == JSON_FMT:
            print(json.dumps(graph.to_json_dict(), separators=(",", ":")))
        else:
            print(snakegraph.render_ascii(graph))
            print(f"tiles {graph.num_tiles}  matchings {snakegraph.count_matchings(graph)}")
        return 0
    raise AssertionError(args.op)


def cmd_tree(args) -> int:
    kind = farey.GENERALIZED if args.kind == "gen" else farey.ORDINARY
    nodes = farey.generate_tree(kind, args.depth)
    sys.stdout.write(farey.tree_to_jsonl(nodes))
    return 0


def cmd_table(args) -> int:
    bundle = markov.make_tables(args.max_q)
    if args.format == JSON_FMT:
        sys.stdout.write(bundle.to_json())
    elif args.format == CSV_FMT:
        sys.stdout.write(bundle.to_csv())
    elif args.format == TSV_FMT:
        sys.stdout.write(bundle.to_tsv())
    else:
        sys.stdout.write(bundle.to_text())
    if args.errata:
        sys.stdout.write(bundle.errata_report())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "table.csv").write_text(bundle.to_csv())
        (out / "table.json").write_text(bundle.to_json())
        from .figures import save_table_figure

        save_table_figure(bundle, out / "table.png")
        print(f"wrote {out}/table.csv, table.json, table.png", file=sys.stderr)
    return 0


def cmd_family(args) -> int:
    values = markov.family_recurrence(args.family, args.terms)
    if args.format == JSON_FMT:
        print(json.dumps({"family": args.family, "values": [str(v) for v in values]}))
    else:
        for value in values:
            print(value)
    return 0


def cmd_limits(args) -> int:
    if args.point:
        coords = tuple(float(part) for part in args.point.split(","))
        if len(coords) != 3:
            print("--point needs X1,X2,X3", file=sys.stderr)
            return 2
        pt = limits.LaurentPoint(*coords)
        hat = limits.chi_limit(pt, limits.RATIO_HAT)
        shift = limits.chi_limit(pt, limits.RATIO_SHIFT)
        t_hat = limits.L_truncation(pt, 40, limits.UNPRIMED)
        t_shift = limits.L_truncation(pt, 40, limits.PRIMED)
        if args.format == JSON_FMT:
            print(
                json.dumps(
                    {
                        "point": list(coords),
                        "ratio_hat": hat,
                        "ratio_shift": shift,
                        "truncation_hat_40": t_hat,
                        "truncation_shift_40": t_shift,
                    }
                )
            )
        else:
            print(f"ratio_hat   {hat:.12f}  (truncation depth 40: {t_hat:.12f})")
            print(f"ratio_shift {shift:.12f}  (truncation depth 40: {t_shift:.12f})")
        return 0
    report = limits.family_limit(args.family, args.max_q)
    if args.format == CSV_FMT:
        sys.stdout.write(report.to_csv())
    elif args.format == JSON_FMT:
        print(
            json.dumps(
                {
                    "family": report.family,
                    "limit": str(report.surd),
                    "limit_float": float(report.surd),
                    "rows": [
                        {"q": q, "ratio": ratio, "error": err} for q, ratio, err in report.rows
                    ],
                }
            )
        )
    else:
        sys.stdout.write(report.summary())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"convergence_{report.family}.csv").write_text(report.to_csv())
        from .figures import save_convergence_figure

        save_convergence_figure(report, out / f"convergence_{report.family}.png")
        print(
            f"wrote {out}/convergence_{report.family}.csv and .png",
            file=sys.stderr,
        )
    return 0


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = verify.run_suites(names, seed=args.seed)
    by_suite: dict[str, list[verify.CheckResult]] = {}
    for r in results:
        by_suite.setdefault(r.suite, []).append(r)
    failed = 0
    for suite in names:
        suite_results = by_suite.get(suite, [])
        npass = sum(1 for r in suite_results if r.ok)
        print(f"suite {suite}: {npass}/{len(suite_results)} passed")
        for r in suite_results:
            status = "PASS" if r.ok else "FAIL"
            detail = f"  [{r.detail}]" if r.detail else ""
            print(f"  {status} {r.name}{detail}")
            if not r.ok:
                failed += 1
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genmarkov",
        description="Exact computations around generalized Markov numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fmt(p, choices=(TEXT, JSON_FMT)):
        p.add_argument("--format", choices=choices, default=TEXT)

    p = sub.add_parser("gen", help="generalized number at label P/Q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_fmt(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ord", help="ordinary number at label P/Q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_fmt(p)
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("band", help="closed-curve count 6m-1 at label P/Q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_fmt(p)
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("ext", help="value at lattice target (K*Q, K*P)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    add_fmt(p)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("signs", help="lattice sign word of the arc to (Q, P)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--even", action="store_true", help="even-indexed subword")
    p.add_argument(
        "--profile",
        action="store_true",
        help="dump the crossing profile as JSON with exact num/den rationals",
    )
    p.add_argument(
        "--midpoint",
        choices=(signseq.MIDPOINT_PLUS, signseq.MIDPOINT_MINUS, signseq.MIDPOINT_AUTO),
        default=signseq.MIDPOINT_AUTO,
    )
    add_fmt(p)
    p.set_defaults(func=cmd_signs)

    p = sub.add_parser("cf", help="continued-fraction operations")
    p.add_argument("op", choices=("numerator",))
    p.add_argument("entries", help="e.g. 3,4,5,3 or [3,4,5,3]")
    add_fmt(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("snake", help="snake-graph operations")
    p.add_argument("op", choices=("render",))
    p.add_argument("cf", help="continued fraction, e.g. 3,4,5,3")
    add_fmt(p)
    p.set_defaults(func=cmd_snake)

    p = sub.add_parser("tree", help="exchange tree as JSON lines")
    p.add_argument("--kind", choices=("gen", "ord"), default="gen")
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("table", help="value/word tables with optional errata diff")
    p.add_argument("--max-q", type=int, default=7)
    p.add_argument("--errata", action="store_true")
    p.add_argument("--out", help="directory for csv/json/png report files")
    add_fmt(p, choices=(TEXT, JSON_FMT, CSV_FMT, TSV_FMT))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("family", help="family values by linear recurrence")
    p.add_argument("family", choices=tuple(markov.FAMILY_SEEDS))
    p.add_argument("--terms", type=int, default=10)
    add_fmt(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("limits", help="growth limits and convergence reports")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", choices=("one_over_q", "q_minus_1_over_q"))
    group.add_argument("--point", help="X1,X2,X3 positive reals")
    p.add_argument("--max-q", type=int, default=60)
    p.add_argument("--out", help="directory for csv/png report files")
    add_fmt(p, choices=(TEXT, JSON_FMT, CSV_FMT))
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument(
        "--suite",
        choices=("all",) + tuple(verify.SUITES),
        default="all",
    )
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, markov.ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1


if __name__ == "__main__":
    sys.exit(main())
