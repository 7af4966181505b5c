"""Census, extremal reports, structural characterizations, and verification."""

import random

import pytest

from treecensus import (
    CF,
    ODD,
    PROPER,
    SR,
    Tree,
    brute_count,
    canonical_code,
    census,
    degree_profile,
    double_star,
    enumerate_free_trees,
    explore_max,
    extremal_report,
    has_exposed_subtree,
    kscf,
    path,
    proper_count,
    star,
    verify_theorem,
)


class TestCensus:
    def test_cf_n4_q2(self):
        records = census(4, 2, CF)
        counts = {r.code: r.count for r in records}
        assert counts[canonical_code(path(4))] == 4
        assert counts[canonical_code(star(4))] == 2
        assert len(records) == 2

    def test_kscf2_n6_q3_worked_example(self):
        records = census(6, 3, kscf(2))
        counts = {r.code: r.count for r in records}
        assert len(records) == 6
        assert counts[canonical_code(path(6))] == 6
        assert counts[canonical_code(star(6))] == 30
        assert counts[canonical_code(double_star(2, 2))] == 66

    def test_single_vertex(self):
        records = census(1, 5, PROPER)
        assert len(records) == 1 and records[0].count == 5

    def test_sorted_and_deterministic(self):
        records = census(6, 2, ODD)
        codes = [r.code for r in records]
        assert codes == sorted(codes)
        assert records == census(6, 2, ODD)

    def test_parallel_matches_sequential(self):
        assert census(6, 3, kscf(2), jobs=2) == census(6, 3, kscf(2))

    def test_cache_roundtrip(self, tmp_path):
        first = census(6, 3, kscf(2), cache_dir=tmp_path)
        files = list(tmp_path.glob("census-v1-*.json"))
        assert len(files) == 1
        again = census(6, 3, kscf(2), cache_dir=tmp_path)
        assert again == first
        # a different q writes its own file rather than reusing this one
        other = census(6, 2, kscf(2), cache_dir=tmp_path)
        assert len(list(tmp_path.glob("census-v1-*.json"))) == 2
        assert other != first


class TestExtremalReport:
    def test_cf_n4_q2(self):
        rep = extremal_report(census(4, 2, CF))
        assert rep.min_value == 2 and rep.min_codes == (canonical_code(star(4)),)
        assert rep.max_value == 4 and rep.max_codes == (canonical_code(path(4)),)

    def test_kscf2_n6_q3(self):
        rep = extremal_report(census(6, 3, kscf(2)))
        assert rep.min_value == 6 and rep.min_codes == (canonical_code(path(6)),)
        assert rep.max_value == 66
        assert rep.max_codes == (canonical_code(double_star(2, 2)),)

    def test_single_record(self):
        rep = extremal_report(census(2, 5, CF))
        assert rep.min_value == rep.max_value
        assert rep.min_codes == rep.max_codes

    def test_rejects_empty_and_mixed(self):
        with pytest.raises(ValueError):
            extremal_report([])
        with pytest.raises(ValueError):
            extremal_report(census(4, 2, CF) + census(4, 3, CF))


class TestExposedSubtree:
    def test_path4_true(self):
        assert has_exposed_subtree(path(4))

    def test_path3_false(self):
        assert not has_exposed_subtree(path(3))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_stars_false(self, n):
        assert not has_exposed_subtree(star(n))

    def test_double_star_false(self):
        # any candidate set must avoid leaves, and the two centers both
        # have two leaves outside
        assert not has_exposed_subtree(double_star(2, 2))

    def test_label_invariant(self):
        rng = random.Random(4)
        for n in range(3, 8):
            for t in enumerate_free_trees(n):
                val = has_exposed_subtree(t)
                for _ in range(20):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    relab = Tree(n, [(perm[u], perm[v]) for u, v in t.edges])
                    assert has_exposed_subtree(relab) == val

    def test_matches_nonproper_cf_colorings_at_q2(self):
        # a tree has more cf 2-colorings than proper ones iff it has an
        # exposed subtree
        for n in range(2, 9):
            for t in enumerate_free_trees(n):
                extra = brute_count(t, 2, CF) > proper_count(n, 2)
                assert extra == has_exposed_subtree(t)


class TestEvenDegreeRule:
    def test_matches_nonproper_odd_colorings_at_q2(self):
        for n in range(2, 9):
            for t in enumerate_free_trees(n):
                extra = brute_count(t, 2, ODD) > proper_count(n, 2)
                assert extra == (degree_profile(t).even_degree_count >= 2)


class TestVerifyTheorem:
    def test_cf_n7_q3_passes(self):
        r = verify_theorem("CF", 7, 3)
        assert r.status == "pass"
        assert dict(r.claims)["unique-min-star"] == "pass"
        assert dict(r.claims)["unique-max-path"] == "pass"

    def test_odd_n6_q2_characterization(self):
        r = verify_theorem("ODD", 6, 2)
        assert r.status == "pass"
        assert dict(r.claims)["q2-min-set-matches-even-degree-rule"] == "pass"

    def test_cf_q2_characterization(self):
        for n in (4, 5, 6, 7):
            r = verify_theorem("CF", n, 2)
            assert r.status == "pass"
            assert dict(r.claims)["q2-min-set-matches-exposed-subtree-rule"] == "pass"

    def test_sr_n5_q7_values(self):
        records = census(5, 7, SR)
        counts = {r.code: r.count for r in records}
        assert counts[canonical_code(star(5))] == 2520
        assert counts[canonical_code(path(5))] == 5250
        assert verify_theorem("SR", 5, 7).status == "pass"

    def test_sr_degenerate_q2_vacuous_uniqueness(self):
        r = verify_theorem("SR", 6, 2)
        assert r.status == "pass"
        assert dict(r.claims)["unique-min-star"] == "vacuous"
        assert dict(r.claims)["unique-max-path"] == "vacuous"

    def test_xhom_n4_q2(self):
        r = verify_theorem("XHOM", 4, 2)
        assert r.status == "pass"

    def test_scf2_passes(self):
        for n in (4, 5, 6):
            assert verify_theorem("SCF2", n, 3).status == "pass"

    def test_starcol_max_holds_min_fails_at_n6(self):
        # the census refutes the path-minimizes claim for star colorings:
        # the caterpillar (path plus a leaf on the middle vertex) counts
        # q(q-1)^2(q-2)(q^2-q-3), below the path's q(q-1)^2(q-2)^2(q+1)
        r = verify_theorem("STARCOL", 6, 3)
        claims = dict(r.claims)
        assert claims["max-value-at-star"] == "pass"
        assert claims["unique-max-star"] == "pass"
        assert claims["min-value-at-path"] == "fail"
        assert r.status == "fail"
        assert r.counterexamples  # every fail carries at least one

    def test_unknown_theorem(self):
        with pytest.raises(ValueError):
            verify_theorem("NOPE", 5, 3)

    def test_cf_star_strictly_below_path(self):
        for n in range(4, 9):
            for q in (2, 3, 4):
                counts = {r.code: r.count for r in census(n, q, CF)}
                assert counts[canonical_code(star(n))] < counts[canonical_code(path(n))]


class TestExploreMax:
    def test_open_question_instance(self):
        res = explore_max(6, 3, kscf(2))
        assert res.max_value == 66
        assert res.maximizers == ((canonical_code(double_star(2, 2)), 66),)
        counts = {r.code: r.count for r in res.records}
        assert counts[canonical_code(path(6))] == 6
        assert counts[canonical_code(star(6))] == 30

    def test_two_tree_case(self):
        res = explore_max(4, 3, kscf(2))
        assert {c for c, _ in res.maximizers} <= {canonical_code(path(4)),
                                                  canonical_code(star(4))}

    def test_single_tree(self):
        res = explore_max(2, 5, CF)
        assert len(res.records) == 1
        assert res.maximizers == ((canonical_code(path(2)), res.max_value),)
