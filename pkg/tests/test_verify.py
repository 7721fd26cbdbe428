import pytest

from camina.catalog import builtin, builtin_catalog
from camina.structure import subgroups
from camina.verify import (
    LEMMA_CLAIMS,
    PASS,
    SKIPPED,
    VACUOUS,
    is_subnormal,
    summarize,
    sweep,
    verify_cor1,
    verify_cor2,
    verify_covering,
    verify_lemma,
    verify_lemma_suite,
    verify_odd_order,
    verify_pair_claim,
    verify_theorem1,
    verify_theorem2,
)


def by_order(G, n, which=0):
    return [H for H in subgroups(G) if len(H) == n][which]


class TestTheorem1:
    def test_s3_a3_both_hold(self, s3):
        r = verify_theorem1(s3, by_order(s3, 3))
        assert r.status == PASS
        assert r.details["f_holds"] and r.details["ci_holds"]

    def test_s3_transposition_both_fail(self, s3):
        r = verify_theorem1(s3, by_order(s3, 2))
        assert r.status == PASS
        assert not r.details["f_holds"] and not r.details["ci_holds"]

    def test_q8_center(self, q8):
        r = verify_theorem1(q8, by_order(q8, 2))
        assert r.status == PASS
        assert r.details["fired"]

    def test_skipped_on_cap(self, s4):
        from camina.verify import _Ctx

        r = verify_theorem1(s4, by_order(s4, 4), _Ctx(order_cap=10))
        assert r.status == SKIPPED


class TestTheorem2:
    def test_q8_center(self, q8):
        r = verify_theorem2(q8, by_order(q8, 2))
        assert r.status == PASS
        assert r.details["closure_nilpotent"]

    def test_s3_transposition_vacuous(self, s3):
        assert verify_theorem2(s3, by_order(s3, 2)).status == VACUOUS

    def test_s3_a3(self, s3):
        r = verify_theorem2(s3, by_order(s3, 3))
        assert r.status == PASS
        assert r.details["n_order"] == 3

    def test_frob54_normal_carveout(self):
        # normal H = D5 in Frob(5:4): F+- holds, the closure is H itself and is
        # not nilpotent; the harness records the verdict without a violation
        G = builtin("Frob(5:4)").group()
        r = verify_theorem2(G, by_order(G, 10))
        assert r.status == PASS
        assert r.details["h_normal"]
        assert r.details["fpm_on_closure"]
        assert not r.details["closure_nilpotent"]

    def test_a4_non_normal_pair(self, a4):
        H = by_order(a4, 2)
        r = verify_theorem2(a4, H)
        assert r.status == PASS
        assert not r.details["h_normal"]
        assert r.details["n_order"] == 4
        assert r.details["closure_nilpotent"]


class TestOddOrder:
    def test_s3_a3(self, s3):
        r = verify_odd_order(s3, by_order(s3, 3))
        assert r.status == PASS
        assert r.details["h_solvable"]

    def test_a5_a4_scan(self, a5):
        H = by_order(a5, 12)
        r = verify_odd_order(a5, H)
        assert r.status in (PASS, VACUOUS)

    def test_two_group(self, q8):
        for H in subgroups(q8):
            if len(H) < q8.order:
                assert verify_odd_order(q8, H).status == PASS


class TestCor1:
    def test_q8_center(self, q8):
        r = verify_cor1(q8, by_order(q8, 2))
        assert r.status == PASS and r.details["h_solvable"]

    def test_s3_transposition_vacuous(self, s3):
        assert verify_cor1(s3, by_order(s3, 2)).status == VACUOUS

    def test_s3_a3(self, s3):
        assert verify_cor1(s3, by_order(s3, 3)).status == PASS


class TestCor2:
    def test_s3_p3_fires_for_three_cycles(self, s3):
        r = verify_cor2(s3, 3)
        assert r.status == PASS
        assert r.details["fired"] == 3  # identity and both 3-cycles
        assert r.details["o_p_order"] == 3

    def test_p_group(self, q8):
        r = verify_cor2(q8, 2)
        assert r.status == PASS
        assert r.details["fired"] == q8.order
        assert r.details["o_p_order"] == 8

    def test_a4_p2(self, a4):
        r = verify_cor2(a4, 2)
        assert r.status == PASS
        assert r.details["fired"] >= 4  # V4 satisfies the scan
        assert r.details["o_p_order"] == 4

    def test_non_dividing_prime_vacuous(self, s3):
        assert verify_cor2(s3, 5).status == VACUOUS


class TestLemmaSuite:
    def test_s3_a3_lemma_b(self, s3):
        r = verify_lemma(s3, by_order(s3, 3), "lemma_b")
        assert r.status == PASS
        assert r.details["center_in_h"] and r.details["h_in_derived"]

    def test_q8_center_lemma_j(self, q8):
        r = verify_lemma(q8, by_order(q8, 2), "lemma_j")
        assert r.status == PASS
        assert 2 in r.details["primes_with_all_outside_singular"]

    def test_normal_f_failing_pairs_vacuous(self, s4):
        V4 = next(H for H in subgroups(s4) if len(H) == 4 and H.is_normal())
        for claim in ("lemma_c", "lemma_d", "lemma_e", "lemma_f"):
            r = verify_lemma(s4, V4, claim)
            assert r.status == VACUOUS, claim

    def test_a4_non_normal_f_pair_full_suite(self, a4):
        H = by_order(a4, 2)
        for r in verify_lemma_suite(a4, H):
            assert r.status in (PASS, VACUOUS), (r.claim, r.details)
            if r.claim in ("lemma_c", "lemma_e", "lemma_f", "lemma_g", "lemma_h", "lemma_m"):
                assert r.status == PASS, (r.claim, r.details)

    def test_suite_covers_all_lemmas(self, s3):
        rs = verify_lemma_suite(s3, by_order(s3, 3))
        assert [r.claim for r in rs] == list(LEMMA_CLAIMS)


class TestClaim9AndCovering:
    def test_claim9_s3(self, s3):
        r = verify_pair_claim(s3, by_order(s3, 3), "claim9")
        assert r.status == PASS

    def test_covering_a5(self, a5):
        r = verify_covering(a5)
        assert r.status == PASS
        assert r.details["max_power_needed"] <= 10

    def test_covering_non_simple_vacuous(self, s4):
        assert verify_covering(s4).status == VACUOUS


class TestSubnormality:
    def test_normal_is_subnormal(self, s4):
        V4 = next(H for H in subgroups(s4) if len(H) == 4 and H.is_normal())
        assert is_subnormal(s4, V4)

    def test_sylow2_of_s4_subnormal_fails(self, s4):
        # the dihedral Sylow 2-subgroup is self-normalizing but not normal
        H = by_order(s4, 8)
        assert not is_subnormal(s4, H)

    def test_subgroup_of_nilpotent(self, q8):
        for H in subgroups(q8):
            assert is_subnormal(q8, H)


class TestSweep:
    def test_empty_selection(self):
        assert sweep([], 100, ["theorem1"]) == []

    def test_small_sweeps_have_no_violations(self):
        entries = builtin_catalog()
        reports = sweep(entries, 24, ["theorem1"])
        s = summarize(reports)
        assert s["violations"] == 0
        assert s["claims"]["theorem1"]["fired"] > 0
        reports = sweep(entries, 48, ["cor2"])
        assert summarize(reports)["violations"] == 0

    def test_unknown_claim_rejected(self):
        with pytest.raises(ValueError):
            sweep([], 10, ["nope"])

    def test_report_order_canonical(self):
        entries = builtin_catalog()
        reports = sweep(entries, 12, ["theorem1", "theorem2"])
        keys = [(r.group_label, r.subgroup_index, r.claim) for r in reports]
        assert keys == sorted(keys)

    def test_replayable(self, s3):
        entries = [e for e in builtin_catalog() if e.label == "S3"]
        reports = sweep(entries, 6, ["theorem1", "odd_order"])
        G = builtin("S3").group()
        subs = subgroups(G)
        for r in reports:
            H = subs[r.subgroup_index]
            again = verify_pair_claim(G, H, r.claim)
            assert again.status == r.status
            assert again.details == r.details
