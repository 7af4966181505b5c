"""Acceptance suite: exhaustive desk-scale verification, exact equality throughout.

Every criterion prints one PASS/FAIL line so a verbose run reads as a
checklist.  Run with the compiled kernel for the stated runtimes; the pure
backend computes the same numbers much more slowly.
"""

import itertools
import random
import time

import pytest

from treecensus import (
    CF,
    NM,
    ODD,
    PROPER,
    SR,
    STAR,
    XHOM,
    brute_count,
    canonical_code,
    census,
    degree_profile,
    double_star,
    enumerate_free_trees,
    explore_max,
    extremal_report,
    from_pruefer,
    has_exposed_subtree,
    is_valid,
    kscf,
    path,
    path_count,
    proper_count,
    pruefer_code_census,
    sr_count_product,
    star,
    star_count,
    verify_theorem,
)

ALL_SCHEMES = (PROPER, CF, ODD, SR, NM, kscf(2), STAR, XHOM)


def report(name: str, ok: bool, detail: str = ""):
    suffix = f"  [{detail}]" if detail else ""
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, f"{name}{suffix}"


def test_criterion_1_worked_example():
    t0 = time.perf_counter()
    values = (
        brute_count(path(6), 3, kscf(2)),
        brute_count(star(6), 3, kscf(2)),
        brute_count(double_star(2, 2), 3, kscf(2)),
    )
    elapsed = time.perf_counter() - t0
    report("1 worked-example kscf:2 at q=3",
           values == (6, 30, 66) and elapsed < 1.0,
           f"P6,S6,dstar={values} in {elapsed:.3f}s")


def test_criterion_2_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    for n in range(1, 9):
        for t in enumerate_free_trees(n):
            for q in (2, 3, 4):
                if brute_count(t, q, SR) != sr_count_product(t, q):
                    mismatches.append(("sr", n, q, canonical_code(t).hex()))
                if brute_count(t, q, PROPER) != proper_count(n, q):
                    mismatches.append(("proper", n, q, canonical_code(t).hex()))
    for n in range(1, 11):
        for q in (2, 3, 4, 5):
            for s in ALL_SCHEMES:
                if brute_count(path(n), q, s) != path_count(s, n, q):
                    mismatches.append(("path", s.name, n, q))
                if s.kind == "kscf" and s.k >= 2:
                    continue  # no closed star-count formula to check against
                if brute_count(star(n), q, s) != star_count(s, n, q):
                    mismatches.append(("star", s.name, n, q))
    elapsed = time.perf_counter() - t0
    report("2 oracle-equivalence brute vs closed forms",
           not mismatches and elapsed < 600.0,
           f"{len(mismatches)} mismatches in {elapsed:.1f}s")


@pytest.mark.parametrize("theorem,qs", [
    ("CF", (2, 3, 4)),
    ("ODD", (2, 3, 4)),
    ("NM", (2, 3, 4)),
    ("XHOM", (2, 3, 4)),
    ("SCF2", (3, 4)),
    # The census refutes the star-coloring minimization for n >= 5: a path
    # with one extra leaf on its middle vertex has q(q-1)^2(q-2)(q^2-q-3)
    # star colorings, strictly below the path's q(q-1)^2(q-2)^2(q+1).  The
    # criterion is kept as stated so the suite reports the discrepancy.
    ("STARCOL", (3, 4)),
])
def test_criterion_3_theorem_census(theorem, qs):
    t0 = time.perf_counter()
    failures = []
    for n in range(4, 10):
        for q in qs:
            r = verify_theorem(theorem, n, q)
            if r.status != "pass":
                failures.append((n, q, [c for c, s in r.claims if s == "fail"]))
    elapsed = time.perf_counter() - t0
    report(f"3 census-verification {theorem} n=4..9 q={qs}",
           not failures and elapsed < 1800.0,
           f"failures={failures} in {elapsed:.1f}s" if failures else f"{elapsed:.1f}s")


def test_criterion_3_theorem_census_sr_nondegenerate():
    t0 = time.perf_counter()
    failures = []
    for n in range(4, 9):
        for q in (n, n + 1):
            r = verify_theorem("SR", n, q)
            if r.status != "pass":
                failures.append((n, q))
    elapsed = time.perf_counter() - t0
    report("3 census-verification SR n=4..8 q in {n,n+1}",
           not failures and elapsed < 1800.0,
           f"failures={failures} in {elapsed:.1f}s" if failures else f"{elapsed:.1f}s")


def test_criterion_4_q2_minimizer_characterizations():
    bad = []
    for n in range(4, 10):
        trees = enumerate_free_trees(n)
        odd_min = set(extremal_report(census(n, 2, ODD)).min_codes)
        odd_rule = {canonical_code(t) for t in trees
                    if degree_profile(t).even_degree_count <= 1}
        if odd_min != odd_rule:
            bad.append(("odd", n))
        cf_min = set(extremal_report(census(n, 2, CF)).min_codes)
        cf_rule = {canonical_code(t) for t in trees if not has_exposed_subtree(t)}
        if cf_min != cf_rule:
            bad.append(("cf", n))
    report("4 q=2 minimizer characterizations", not bad, f"bad={bad}")


def test_criterion_5_identities_and_inequalities():
    bad = []
    # identical counting rules for cf and nm path colorings (they differ
    # only on the single vertex, where cf gives q and nm gives 0)
    for n in range(2, 17):
        for q in range(1, 17):
            if path_count(CF, n, q) != path_count(NM, n, q):
                bad.append(("cf=nm", n, q))
    for n in range(2, 17):
        for q in range(1, 17):
            if path_count(kscf(2), n, q) != path_count(SR, n, q):
                bad.append(("kscf2=sr", n, q))
    for q in (2, 3, 4):
        for n in range(5, 13):
            for el in range(2, n - 2):
                cf_rhs = (q - 1) ** el * (path_count(CF, n - el, q)
                                          + path_count(CF, n - el - 1, q))
                if not path_count(CF, n, q) > cf_rhs:
                    bad.append(("cf-strict", n, el, q))
                xh_rhs = (path_count(XHOM, n - el, q)
                          + (q - 1) * path_count(XHOM, n - el - 1, q))
                if not path_count(XHOM, n, q) > xh_rhs:
                    bad.append(("xhom-strict", n, el, q))
    report("5 sequence identities and strict inequalities", not bad, f"bad={bad[:5]}")


def test_criterion_6_hierarchy_property_suite():
    def check_chain(t, colors):
        if is_valid(t, colors, SR):
            assert is_valid(t, colors, kscf(2))
        if is_valid(t, colors, kscf(2)):
            assert is_valid(t, colors, CF)
        if is_valid(t, colors, CF):
            assert is_valid(t, colors, ODD)
        if is_valid(t, colors, STAR):
            assert is_valid(t, colors, PROPER)
        if is_valid(t, colors, PROPER):
            assert is_valid(t, colors, CF)
            assert is_valid(t, colors, NM)

    checked = 0
    for n in range(2, 7):
        for t in enumerate_free_trees(n):
            for q in (1, 2, 3):
                for colors in itertools.product(range(1, q + 1), repeat=n):
                    check_chain(t, colors)
                    checked += 1
    rng = random.Random(20240817)
    for _ in range(100_000):
        n = rng.randint(7, 16)
        t = from_pruefer([rng.randrange(n) for _ in range(n - 2)])
        q = rng.randint(2, 6)
        colors = tuple(rng.randint(1, q) for _ in range(n))
        check_chain(t, colors)
        checked += 1
    report("6 hierarchy implication chain", True, f"{checked} colorings checked")


def test_criterion_7_generator_soundness():
    t0 = time.perf_counter()
    expected = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)
    sizes = tuple(len(enumerate_free_trees(n)) for n in range(1, 11))
    ok = sizes == expected
    for n in range(1, 11):
        trees = enumerate_free_trees(n)
        for t in trees:
            ok = ok and len(t.edges) == n - 1
            ok = ok and sum(len(a) for a in t.adj) == 2 * (n - 1)
            ok = ok and all(v in t.adj[u] for v in range(n) for u in t.adj[v])
        # the exhaustive labeled-tree oracle finds exactly the same classes
        ok = ok and pruefer_code_census(n) == [canonical_code(t) for t in trees]
    elapsed = time.perf_counter() - t0
    report("7 free-tree generator vs Pruefer-dedup oracle", ok,
           f"sizes={sizes} in {elapsed:.1f}s")


def test_criterion_8_open_question_explorer():
    res = explore_max(6, 3, kscf(2))
    counts = {r.code: r.count for r in res.records}
    ok = (res.maximizers == ((canonical_code(double_star(2, 2)), 66),)
          and counts[canonical_code(path(6))] == 6
          and counts[canonical_code(star(6))] == 30
          and res.max_value > 30 and res.max_value > 6)
    report("8 kscf:2 maximizer exploration at n=6 q=3", ok,
           f"max={res.max_value}")
