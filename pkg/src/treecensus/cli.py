"""Command-line front end.

Subcommands:
  count    exact count for one tree / scheme / q
  census   counts over every free tree for (n, q, scheme), min/max flagged
  verify   check an extremal statement against the census
  explore  maximizing trees for (n, q, scheme)
  trees    list free trees with canonical codes and degree profiles

Tree specs: path:N | star:N | dstar:S,T | edges:N;a-b,c-d,... | pruefer:a,b,c
Schemes:    proper | cf | odd | sr | nm | kscf:K | star | xhom
-n and -q accept single values or inclusive ranges like 4..9 where noted.

Exit codes: 0 success / all pass, 1 verification failure or brute-closed
mismatch, 2 usage or parse error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .counting import (
    DEFAULT_BUDGET,
    SPOT_CHECK_BUDGET,
    BudgetExceededError,
    brute_count,
    closed_count,
    has_closed_form,
)
from .extremal import (
    THEOREM_IDS,
    census,
    explore_max,
    extremal_report,
    verify_theorem,
)
from .schemes import Scheme
from .trees import (
    TreeError,
    canonical_code,
    degree_profile,
    enumerate_free_trees,
    parse_tree_spec,
)

CACHE_ENV = "TREECENSUS_CACHE_DIR"


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    a = int(lo)
    b = int(hi) if sep else a
    if b < a:
        raise ValueError(f"empty range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="treecensus",
        description="Exact counts of generalized vertex colorings on small trees.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, jobs=True):
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
        sp.add_argument("--cache-dir", default=None,
                        help=f"census cache directory (env {CACHE_ENV} overrides the default)")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1,
                            help="parallel workers for per-tree counting")

    c = sub.add_parser("count", help="count valid colorings of one tree")
    c.add_argument("--tree", required=True,
                   help="path:N | star:N | dstar:S,T | edges:N;a-b,... | pruefer:a,b,...")
    c.add_argument("--scheme", required=True)
    c.add_argument("-q", type=int, required=True)
    c.add_argument("--method", choices=("auto", "brute", "closed"), default="auto",
                   help="auto cross-checks closed forms against brute force at small sizes")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max q^n for brute-force enumeration")

    ce = sub.add_parser("census", help="count over all free trees for (n, q, scheme)")
    ce.add_argument("-n", required=True, help="vertex count or range, e.g. 6 or 4..9")
    ce.add_argument("-q", required=True, help="color count or range")
    ce.add_argument("--scheme", required=True)
    add_common(ce)

    v = sub.add_parser("verify", help="verify an extremal statement by census")
    v.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    v.add_argument("-n", required=True, help="vertex count or range")
    v.add_argument("-q", required=True, help="color count or range")
    add_common(v)

    e = sub.add_parser("explore", help="maximizing trees for (n, q, scheme)")
    e.add_argument("-n", type=int, required=True)
    e.add_argument("-q", type=int, required=True)
    e.add_argument("--scheme", required=True)
    add_common(e)

    t = sub.add_parser("trees", help="list free trees on n vertices")
    t.add_argument("-n", required=True, help="vertex count or range")
    add_common(t, jobs=False)

    return p


def _cache_dir(args) -> str | None:
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    return os.environ.get(CACHE_ENV) or None


def _emit_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in [header] + rows]
    return "\n".join(lines) + "\n"


def _emit_csv(rows: list[list[str]], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _census_rows(records, rep):
    rows = []
    for r in records:
        rows.append([
            r.code.hex(), str(r.n), str(r.q), r.scheme.name, str(r.count),
            "true" if r.code in rep.min_codes else "false",
            "true" if r.code in rep.max_codes else "false",
        ])
    return rows


_CENSUS_HEADER = ["canonical_code", "n", "q", "scheme", "count", "is_min", "is_max"]


def _cmd_count(args) -> int:
    t = parse_tree_spec(args.tree)
    scheme = Scheme.parse(args.scheme)
    q = args.q
    closed_ok = has_closed_form(t, scheme)
    if args.method == "closed":
        if not closed_ok:
            print(f"error: no closed form for scheme {scheme} on this tree", file=sys.stderr)
            return 2
        value = closed_count(t, q, scheme)
    elif args.method == "brute":
        value = brute_count(t, q, scheme, budget=args.budget)
    elif closed_ok:
        value = closed_count(t, q, scheme)
        if q**t.n <= min(SPOT_CHECK_BUDGET, args.budget):
            check = brute_count(t, q, scheme, budget=args.budget)
            if check != value:
                print(f"error: closed form gives {value} but brute force gives {check}",
                      file=sys.stderr)
                return 1
    else:
        value = brute_count(t, q, scheme, budget=args.budget)
    print(value)
    return 0


def _cmd_census(args) -> int:
    scheme = Scheme.parse(args.scheme)
    n_lo, n_hi = _parse_range(args.n)
    q_lo, q_hi = _parse_range(args.q)
    all_rows = []
    for n in range(n_lo, n_hi + 1):
        for q in range(q_lo, q_hi + 1):
            records = census(n, q, scheme, cache_dir=_cache_dir(args), jobs=args.jobs)
            rep = extremal_report(records)
            all_rows.extend(_census_rows(records, rep))
    if args.format == "json":
        objs = [dict(zip(_CENSUS_HEADER, row)) for row in all_rows]
        for o in objs:
            o["n"] = int(o["n"])
            o["q"] = int(o["q"])
            o["is_min"] = o["is_min"] == "true"
            o["is_max"] = o["is_max"] == "true"
        sys.stdout.write(json.dumps(objs, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_emit_csv(all_rows, _CENSUS_HEADER))
    else:
        sys.stdout.write(_emit_table(all_rows, _CENSUS_HEADER))
    return 0


def _report_to_obj(r) -> dict:
    return {
        "theorem": r.theorem_id,
        "n": r.n,
        "q": r.q,
        "status": r.status,
        "claims": [{"label": label, "status": status} for label, status in r.claims],
        "counterexamples": [{"canonical_code": c.hex(), "count": str(v)}
                            for c, v in r.counterexamples],
    }


def _cmd_verify(args) -> int:
    n_lo, n_hi = _parse_range(args.n)
    q_lo, q_hi = _parse_range(args.q)
    reports = []
    for n in range(n_lo, n_hi + 1):
        for q in range(q_lo, q_hi + 1):
            reports.append(verify_theorem(args.theorem, n, q,
                                          cache_dir=_cache_dir(args), jobs=args.jobs))
    if args.format == "json":
        sys.stdout.write(json.dumps([_report_to_obj(r) for r in reports], indent=2) + "\n")
    elif args.format == "csv":
        rows = [[r.theorem_id, str(r.n), str(r.q), r.status,
                 ";".join(f"{label}={status}" for label, status in r.claims)]
                for r in reports]
        sys.stdout.write(_emit_csv(rows, ["theorem", "n", "q", "status", "claims"]))
    else:
        out = []
        for r in reports:
            out.append(f"{r.theorem_id} n={r.n} q={r.q}: {r.status}")
            for label, status in r.claims:
                out.append(f"  {label}: {status}")
            for code, count in r.counterexamples:
                out.append(f"  counterexample {code.hex()} count={count}")
        sys.stdout.write("\n".join(out) + "\n")
    return 1 if any(r.status == "fail" for r in reports) else 0


def _cmd_explore(args) -> int:
    scheme = Scheme.parse(args.scheme)
    result = explore_max(args.n, args.q, scheme, cache_dir=_cache_dir(args), jobs=args.jobs)
    rep = extremal_report(list(result.records))
    if args.format == "json":
        obj = {
            "n": args.n,
            "q": args.q,
            "scheme": scheme.name,
            "max_count": str(result.max_value),
            "maximizers": [{"canonical_code": c.hex(), "count": str(v)}
                           for c, v in result.maximizers],
            "records": [dict(zip(_CENSUS_HEADER, row))
                        for row in _census_rows(result.records, rep)],
        }
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    elif args.format == "csv":
        # the is_max column flags the maximizers, so plain census rows suffice
        sys.stdout.write(_emit_csv(_census_rows(result.records, rep), _CENSUS_HEADER))
    else:
        lines = [f"max count {result.max_value} achieved by {len(result.maximizers)} tree(s):"]
        lines += [f"  {c.hex()}" for c, _ in result.maximizers]
        sys.stdout.write("\n".join(lines) + "\n")
        sys.stdout.write(_emit_table(_census_rows(result.records, rep), _CENSUS_HEADER))
    return 0


_TREES_HEADER = ["canonical_code", "n", "degrees", "leaf_count", "even_degree_count"]


def _cmd_trees(args) -> int:
    n_lo, n_hi = _parse_range(args.n)
    rows = []
    for n in range(n_lo, n_hi + 1):
        for t in enumerate_free_trees(n):
            prof = degree_profile(t)
            rows.append([
                canonical_code(t).hex(), str(n),
                "-".join(str(d) for d in prof.degrees),
                str(prof.leaf_count), str(prof.even_degree_count),
            ])
    if args.format == "json":
        objs = [{
            "canonical_code": row[0],
            "n": int(row[1]),
            "degrees": [int(d) for d in row[2].split("-")],
            "leaf_count": int(row[3]),
            "even_degree_count": int(row[4]),
        } for row in rows]
        sys.stdout.write(json.dumps(objs, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_emit_csv(rows, _TREES_HEADER))
    else:
        sys.stdout.write(_emit_table(rows, _TREES_HEADER))
    return 0


_DISPATCH = {
    "count": _cmd_count,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "explore": _cmd_explore,
    "trees": _cmd_trees,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _DISPATCH[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (TreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
