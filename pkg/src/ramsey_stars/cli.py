"""Command-line interface.

Exit codes:
  compute   0 ok, 2 invalid parameters
  witness   0 ok, 2 invalid parameters, 3 construction defect, 4 output not writable
  verify    0 coloring avoids every target, 1 some target arrives, 2 bad file or parameters
  search    0 ok, 2 invalid parameters
  table     0 ok, 1 oracle disagreement, 2 empty range or invalid parameters
"""

from __future__ import annotations

import argparse
import itertools
import logging
import random
import sys
from pathlib import Path

from .checker import coloring_arrives
from .constructions import ConstructionError, build_witness
from .core import (
    Coloring,
    Matching,
    ParameterError,
    Star,
    TargetSpec,
    normalize,
    targets_for,
)
from .formulas import ramsey_value
from .io import (
    CertificateError,
    SweepRow,
    emit_table,
    export_dot,
    format_coloring,
    format_trace,
    read_coloring,
)
from .oracle import DEFAULT_BUDGET, oracle_for_targets, oracle_ramsey

log = logging.getLogger("ramsey_stars")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-t", type=int, required=True, help="number of colors")
    p.add_argument("-m", "--stars", type=_int_list, required=True,
                   help="star sizes as a comma list (t of them, or t-1 with -s)")
    p.add_argument("-s", "--matching", type=int, default=None, help="matching size")


def _params(args):
    return normalize(args.t, args.stars, args.matching)


def cmd_compute(args) -> int:
    params = _params(args)
    value, trace = ramsey_value(params)
    print(value)
    if args.trace:
        sys.stdout.write(format_trace(trace))
    return 0


def cmd_witness(args) -> int:
    params = _params(args)
    value, _ = ramsey_value(params)
    try:
        coloring, rule = build_witness(params)
    except ConstructionError as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 3
    coloring = params.denormalize_coloring(coloring)
    text = format_coloring(coloring)
    summary = f"R={value} rule={rule} n={coloring.n}"
    try:
        if args.out:
            Path(args.out).write_text(text)
        if args.dot:
            Path(args.dot).write_text(export_dot(coloring))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 4
    if args.out:
        print(summary)
    else:
        print(summary, file=sys.stderr)
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    params = _params(args)
    try:
        coloring = read_coloring(args.file)
    except (OSError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if coloring.t != params.t:
        print(f"error: certificate has t={coloring.t}, instance has t={params.t}", file=sys.stderr)
        return 2
    verdict = coloring_arrives(coloring, targets_for(params, user_order=True))
    if verdict.avoids:
        print("AVOIDS")
        return 0
    print(f"ARRIVES target={verdict.index + 1} embedding={verdict.embedding}")
    return 1


def _search_targets(args) -> tuple[int, TargetSpec, str]:
    if args.matching is not None and args.t == 2:
        # no closed form here, but the search is still well defined
        if len(args.stars) != 1 or args.stars[0] < 1 or args.matching < 1:
            raise ParameterError("t=2 with a matching takes one positive star and s >= 1")
        spec = TargetSpec(((Star(args.stars[0]), 1), (Matching(args.matching), 2)))
        return 2, spec, f"t=2 m={args.stars[0]} s={args.matching}"
    params = _params(args)
    return params.t, targets_for(params), params.label()


def cmd_search(args) -> int:
    t, targets, label = _search_targets(args)
    res = oracle_for_targets(t, targets, n_cap=args.cap, budget=args.budget,
                             symmetry=args.symmetry, jobs=args.jobs, label=label)
    if res.exact:
        print(f"R = {res.value} (exact)")
    else:
        print(f"R >= {res.value} ({res.status})")
    print(f"nodes={res.nodes}")
    for n, status, nodes in res.per_n:
        print(f"n={n} {status.value} nodes={nodes}")
    return 0


def _grid(args):
    if args.m_min < 1 or args.m_min > args.m_max:
        raise ParameterError(f"empty star range {args.m_min}..{args.m_max}")
    sizes = range(args.m_min, args.m_max + 1)
    if args.s_max is None:
        for stars in itertools.combinations_with_replacement(sizes, args.t):
            yield normalize(args.t, stars)
        return
    if args.s_min < 1 or args.s_min > args.s_max:
        raise ParameterError(f"empty matching range {args.s_min}..{args.s_max}")
    for stars in itertools.combinations_with_replacement(sizes, args.t - 1):
        for s in range(args.s_min, args.s_max + 1):
            yield normalize(args.t, stars, s)


def cmd_table(args) -> int:
    params_list = list(_grid(args))
    rows = []
    for params in params_list:
        value, trace = ramsey_value(params)
        row = SweepRow(params.t, params.stars, params.matching_size, value, trace.rule)
        if args.oracle_check:
            res = oracle_ramsey(params, n_cap=value, budget=args.budget, symmetry=args.symmetry)
            if res.exact:
                agreement = "ok" if res.value == value else "MISMATCH"
            else:
                # inconclusive: only a lower bound above the formula is a disagreement
                agreement = "MISMATCH" if res.value > value else "budget"
            row = SweepRow(row.t, row.stars, row.s, value, row.rule, str(res.value), res.status,
                           agreement)
        rows.append(row)
    text = emit_table(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        from .plotting import sweep_figure

        mode = "stars" if args.s_max is None else "stars + matching"
        sweep_figure(rows, args.figure, title=f"t={args.t}, {mode}")
    return 1 if any(r.agreement == "MISMATCH" for r in rows) else 0


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    edges = args.n * (args.n - 1) // 2
    coloring = Coloring(args.n, args.t, tuple(rng.randint(1, args.t) for _ in range(edges)))
    sys.stdout.write(format_coloring(coloring))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey-stars",
        description="(t-1)-chromatic Ramsey numbers for stars and for stars plus one matching.")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="closed-form value")
    _add_instance_args(p)
    p.add_argument("--trace", action="store_true", help="print the derivation steps")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("witness", help="write an extremal coloring of K_{R-1}")
    _add_instance_args(p)
    p.add_argument("-o", "--out", help="certificate path (default: stdout)")
    p.add_argument("--dot", help="also write a Graphviz file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="check a certificate against an instance's targets")
    p.add_argument("file")
    _add_instance_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for the exact value")
    _add_instance_args(p)
    p.add_argument("--cap", type=int, default=10, help="largest order searched")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search-tree node limit")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--symmetry", type=int, default=2, choices=(0, 1, 2),
                   help="vertex-symmetry reduction level")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="sweep a grid of instances and emit CSV")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--s-min", type=int, default=1)
    p.add_argument("--s-max", type=int, default=None,
                   help="sweep t-1 stars plus matchings of size s-min..s-max")
    p.add_argument("--oracle-check", action="store_true", help="confirm each value by search")
    p.add_argument("--budget", type=int, default=10**7, help="node limit per instance")
    p.add_argument("--symmetry", type=int, default=2, choices=(0, 1, 2))
    p.add_argument("-o", "--out", help="CSV path (default: stdout)")
    p.add_argument("--figure", help="also render a PNG summary")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("random-coloring", help="seeded random certificate (test support)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
