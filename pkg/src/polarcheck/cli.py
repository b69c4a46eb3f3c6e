"""Command line interface.

Subcommands:

    analyze        decide polarity/hyperpolarity of one action
    catalog-list   list the built-in verification cases
    catalog-run    run the built-in verification cases (all or a selection)
    verify-table1  check one transitive-pair table row

Exit codes: 0 = success / expectations met, 1 = a verification failed,
2 = invalid input (bad spec, bad span file, non-principal point).
The seed comes from --seed, else the POLARCHECK_SEED environment variable,
else 0; with a fixed seed and configuration the JSON output is byte-stable.
"""

import argparse
import json
import os
import sys

from .actions import ActionSpec, analyze
from .catalog import (TABLE1_ROWS, catalog_entries, run_known_answer_suite,
                      verify_table1)
from .errors import PolarcheckError
from .numerics import ToleranceConfig
from .specs import parse_group, resolve_subgroup


def _default_seed():
    raw = os.environ.get("POLARCHECK_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"POLARCHECK_SEED must be an integer, got {raw!r}")


def _add_common(parser):
    parser.add_argument("--samples", type=int, default=8,
                        help="points sampled to find a principal orbit")
    parser.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: POLARCHECK_SEED or 0)")
    parser.add_argument("--rank-tol", type=float, default=1e-9,
                        help="relative singular-value threshold")
    parser.add_argument("--residual-tol", type=float, default=1e-8,
                        help="residual threshold for all verdicts")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", default=None,
                        help="write the report here instead of stdout")


def _tolerances(args):
    seed = args.seed if args.seed is not None else _default_seed()
    return ToleranceConfig(rel_rank_tol=args.rank_tol,
                           residual_tol=args.residual_tol,
                           num_samples=args.samples, seed=seed)


def _emit(text, args):
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _tol_dict(tol):
    return {"rel_rank_tol": tol.rel_rank_tol, "residual_tol": tol.residual_tol,
            "num_samples": tol.num_samples, "seed": tol.seed}


def _report_dict(report, config):
    return {
        "cohomogeneity": report.cohomogeneity,
        "principal_point": report.principal_point.tolist(),
        "section_basis": report.section_basis.tolist(),
        "polar": report.polar,
        "hyperpolar": report.hyperpolar,
        "residual_triple": report.residual_triple,
        "residual_orth": report.residual_orth,
        "residual_abelian": report.residual_abelian,
        "samples_used": report.samples_used,
        "seed": report.seed,
        "tolerances": _tol_dict(report.tolerances),
        "config": config,
    }


def _report_text(report, config):
    lines = [
        f"action: {config['subgroup']} on {config['group']}",
        f"polar: {report.polar}",
        f"hyperpolar: {report.hyperpolar}",
        f"cohomogeneity: {report.cohomogeneity}",
        f"residual_triple: {report.residual_triple:.3e}",
        f"residual_orth: {report.residual_orth:.3e}",
        f"residual_abelian: {report.residual_abelian:.3e}",
        f"samples_used: {report.samples_used}  seed: {report.seed}",
    ]
    return "\n".join(lines)


def _cmd_analyze(args):
    tol = _tolerances(args)
    algebra = parse_group(args.group)
    h = resolve_subgroup(args.subgroup, algebra, tol)
    report = analyze(ActionSpec(algebra, h), tol)
    config = {"group": args.group, "subgroup": args.subgroup}
    if args.format == "json":
        _emit(json.dumps(_report_dict(report, config), sort_keys=True,
                         indent=2), args)
    else:
        _emit(_report_text(report, config), args)
    return 0


def _cmd_catalog_list(args):
    lines = []
    for entry in catalog_entries():
        lines.append(f"{entry.entry_id:28s} [{entry.kind}] {entry.description}")
    _emit("\n".join(lines), args)
    return 0


def _cmd_catalog_run(args):
    tol = _tolerances(args)
    entry_ids = set(args.entry) if args.entry else None
    if entry_ids:
        known = {e.entry_id for e in catalog_entries()}
        unknown = entry_ids - known
        if unknown:
            raise PolarcheckError(f"unknown catalog entries: {sorted(unknown)}")
    summary = run_known_answer_suite(tol, entry_ids=entry_ids)
    if args.format == "json":
        payload = {
            "passed": summary.passed,
            "failed": summary.failed,
            "tolerances": _tol_dict(tol),
            "results": [{"entry_id": r.entry_id, "passed": r.passed,
                         "details": r.details} for r in summary.results],
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2), args)
    else:
        lines = []
        for r in summary.results:
            status = "PASS" if r.passed else "FAIL"
            detail = ", ".join(f"{k}={v:.3e}" if isinstance(v, float)
                               else f"{k}={v}" for k, v in r.details.items())
            lines.append(f"{status}  {r.entry_id:28s} {detail}")
        lines.append(f"{summary.passed} passed, {summary.failed} failed")
        _emit("\n".join(lines), args)
    return 0 if summary.ok else 1


def _cmd_verify_table1(args):
    tol = _tolerances(args)
    rows = [args.row] if args.row else sorted(TABLE1_ROWS)
    results = [verify_table1(r, n=args.param, tol=tol) for r in rows]
    if args.format == "json":
        payload = [{"row_id": r.row_id, "n": r.n, "description": r.description,
                    "dim_h1": r.dim_h1, "dim_h2": r.dim_h2, "dim_l": r.dim_l,
                    "span_rank": r.span_rank, "transitive": r.transitive,
                    "passed": r.passed} for r in results]
        _emit(json.dumps(payload, sort_keys=True, indent=2), args)
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            n_part = f" n={r.n}" if r.n is not None else ""
            lines.append(
                f"{status}  {r.row_id:18s}{n_part}  span {r.span_rank}/"
                f"{r.dim_l} (h1 {r.dim_h1}, h2 {r.dim_h2})  {r.description}")
        _emit("\n".join(lines), args)
    return 0 if all(r.passed for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polarcheck",
        description="polarity and hyperpolarity of left-right translation "
                    "actions on compact matrix groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one action")
    p.add_argument("--group", required=True, help="e.g. su3, so8, sp2")
    p.add_argument("--subgroup", required=True,
                   help="delta(sigma=...), product(h1=...,h2=...), "
                        "span(file=...)")
    _add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("catalog-list", help="list verification cases")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_catalog_list)

    p = sub.add_parser("catalog-run", help="run verification cases")
    p.add_argument("--entry", action="append", default=None,
                   help="restrict to this entry id (repeatable)")
    _add_common(p)
    p.set_defaults(func=_cmd_catalog_run)

    p = sub.add_parser("verify-table1", help="check transitive-pair rows")
    p.add_argument("--row", default=None,
                   help=f"one of {', '.join(sorted(TABLE1_ROWS))} "
                        "(default: all)")
    p.add_argument("--param", type=int, default=None,
                   help="series parameter n for parameterized rows")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_table1)
    return parser


def _normalize_argv(argv):
    """Accept 'catalog list' / 'catalog run' as spelled-out aliases."""
    if len(argv) >= 2 and argv[0] == "catalog" and argv[1] in ("list", "run"):
        return [f"catalog-{argv[1]}"] + argv[2:]
    return argv


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(argv))
    try:
        return args.func(args)
    except PolarcheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
