#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against its pure-Python twin.

Times the two hot loops on representative workloads and prints the
per-workload speedup.  Both backends run inside this process, so the
comparison ignores interpreter startup.

Usage:
    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

from treecensus import _pure
from treecensus.counting import _SCHEME_IDS, _prepare
from treecensus.schemes import Scheme
from treecensus.trees import double_star, path, star

try:
    from treecensus import _kernel
except ImportError:
    _kernel = None


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def brute_workloads():
    for tree_name, t, q in [
        ("path:9", path(9), 4),
        ("star:9", star(9), 4),
        ("dstar:4,3", double_star(4, 3), 4),
    ]:
        for scheme_name in ("cf", "odd", "sr", "nm", "kscf:2", "star", "xhom"):
            scheme = Scheme.parse(scheme_name)
            arrays = _prepare(t, scheme)
            kparam = scheme.k if scheme.kind == "kscf" else 0
            args = (t.n, q, *arrays[:5], _SCHEME_IDS[scheme.kind], kparam, *arrays[5:])
            yield f"brute {tree_name} q={q} {scheme_name}", args


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    if _kernel is None:
        print("compiled kernel not built; nothing to compare against")
        return

    rows = []
    for label, call_args in brute_workloads():
        t_pure, r_pure = time_call(lambda: _pure.brute_count(*call_args), args.repeats)
        t_kern, r_kern = time_call(lambda: _kernel.brute_count(*call_args), args.repeats)
        assert r_pure == r_kern, (label, r_pure, r_kern)
        rows.append((label, r_kern, t_pure, t_kern))

    for n in (7, 8):
        t_pure, r_pure = time_call(lambda: _pure.pruefer_census(n), args.repeats)
        t_kern, r_kern = time_call(lambda: list(_kernel.pruefer_census(n)), args.repeats)
        assert r_pure == r_kern
        rows.append((f"pruefer census n={n}", len(r_kern), t_pure, t_kern))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'result':>10}  {'pure':>10}  {'cython':>10}  {'speedup':>8}")
    for label, result, t_pure, t_kern in rows:
        print(f"{label.ljust(width)}  {result:>10}  {t_pure:>9.4f}s  {t_kern:>9.4f}s  "
              f"{t_pure / t_kern:>7.1f}x")


if __name__ == "__main__":
    main()
