from hypothesis import given, strategies as st

from camina.catalog import builtin, builtin_catalog
from camina.grouptable import ElementSet, subgroup_table
from camina.perm import Permutation, compose, element_order
from camina.structure import (
    center,
    centralizer,
    class_product,
    commutator_subgroup,
    conjugacy_classes,
    core,
    derived_series,
    is_frobenius_with_kernel,
    is_nilpotent,
    is_solvable,
    normal_closure,
    o_lower_p,
    o_upper_p,
    p_decomposition,
    p_part,
    prime_factors,
    subgroups,
    sylow_subgroup,
    upper_central_series,
)


def by_order(G, n, which=0):
    return [H for H in subgroups(G) if len(H) == n][which]


class TestConjugacyClasses:
    def test_abelian_all_singletons(self):
        G = builtin("C2xC6").group()
        cl = conjugacy_classes(G)
        assert cl.count == G.order
        assert all(s == 1 for s in cl.sizes)

    def test_s3(self, s3):
        assert conjugacy_classes(s3).sizes == (1, 3, 2)

    def test_q8(self, q8):
        assert conjugacy_classes(q8).sizes == (1, 1, 2, 2, 2)

    def test_identity_class(self, s4):
        cl = conjugacy_classes(s4)
        assert cl.class_of[0] == 0
        assert cl.sizes[0] == 1

    def test_conjugation_invariance(self, s4):
        cl = conjugacy_classes(s4)
        for x in range(s4.order):
            for g in range(s4.order):
                assert cl.class_of[x] == cl.class_of[s4.conj(x, g)]

    def test_inverse_class_involution(self, frob21):
        cl = conjugacy_classes(frob21)
        for c in range(cl.count):
            assert cl.inverse_class[cl.inverse_class[c]] == c

    def test_class_equation_catalog(self):
        for entry in builtin_catalog():
            G = entry.group()
            if G.order > 200:
                continue
            cl = conjugacy_classes(G)
            assert sum(cl.sizes) == G.order
            assert all(G.order % s == 0 for s in cl.sizes)

    def test_orbit_stabilizer_catalog(self):
        for entry in builtin_catalog():
            G = entry.group()
            if G.order > 200:
                continue
            cl = conjugacy_classes(G)
            for x in range(G.order):
                assert cl.sizes[cl.class_of[x]] * len(centralizer(G, x)) == G.order


class TestCentralizerCenter:
    def test_identity_centralizer(self, s3):
        assert len(centralizer(s3, 0)) == s3.order

    def test_central_element(self, q8):
        minus_one = next(i for i in range(q8.order) if i and q8.element_order(i) == 2)
        assert len(centralizer(q8, minus_one)) == q8.order

    def test_s3_three_cycle(self, s3):
        x = s3.index_of[(1, 2, 0)]
        c = centralizer(s3, x)
        assert len(c) == 3 and x in c

    def test_center_abelian(self):
        G = builtin("C3xC3").group()
        assert len(center(G)) == 9

    def test_center_s3_trivial(self, s3):
        assert center(s3).members == (0,)

    def test_center_q8(self, q8):
        assert len(center(q8)) == 2


class TestCommutatorAndSeries:
    def test_abelian_trivial(self):
        G = builtin("C2xC4").group()
        assert commutator_subgroup(G).members == (0,)

    def test_s3_derived_is_a3(self, s3):
        d = commutator_subgroup(s3)
        assert len(d) == 3
        assert all(s3.element_order(i) in (1, 3) for i in d.members)

    def test_q8_derived(self, q8):
        assert len(commutator_subgroup(q8)) == 2

    def test_s4_derived_series(self, s4):
        chain = derived_series(s4)
        assert [len(t) for t in chain.terms] == [24, 12, 4, 1]
        assert is_solvable(s4)

    def test_a5_not_solvable(self, a5):
        chain = derived_series(a5)
        assert len(chain.terms[-1]) == 60
        assert not is_solvable(a5)

    def test_p_group_solvable(self):
        assert is_solvable(builtin("Q16").group())

    def test_q8_nilpotent(self, q8):
        chain = upper_central_series(q8)
        assert [len(t) for t in chain.terms] == [1, 2, 8]
        assert is_nilpotent(q8)

    def test_s3_not_nilpotent(self, s3):
        chain = upper_central_series(s3)
        assert [len(t) for t in chain.terms] == [1]
        assert not is_nilpotent(s3)

    def test_abelian_nilpotent(self):
        assert is_nilpotent(builtin("C12").group())

    def test_solvable_matches_chief_factor_oracle(self):
        # Independent oracle: walk a chief series (minimal-order normal
        # subgroup above each term); solvable iff every factor is a prime power.
        for entry in builtin_catalog():
            G = entry.group()
            if G.order > 100:
                continue
            normals = [S for S in subgroups(G) if S.is_normal()]
            current = normals[0]
            assert len(current) == 1
            oracle = True
            while len(current) < G.order:
                cur = set(current.members)
                candidates = [
                    N for N in normals if len(N) > len(current) and cur <= set(N.members)
                ]
                nxt = min(candidates, key=lambda N: (len(N), N.members))
                if len(prime_factors(len(nxt) // len(current))) != 1:
                    oracle = False
                    break
                current = nxt
            assert is_solvable(G) == oracle, entry.label


class TestNormalClosureAndCore:
    def test_normal_h_is_fixed(self, s3):
        A3 = by_order(s3, 3)
        assert normal_closure(s3, A3) == A3

    def test_s3_transposition_generates(self, s3):
        H = by_order(s3, 2)
        assert len(normal_closure(s3, H)) == 6

    def test_s4_double_transposition_gives_v4(self, s4):
        dt = s4.index_of[(1, 0, 3, 2)]
        H = ElementSet(s4, (0, dt))
        assert len(normal_closure(s4, H)) == 4

    def test_least_normal_oracle(self):
        for label in ["S3", "S4", "Q8", "A4", "D6", "Frob(7:3)", "S3xS3"]:
            G = builtin(label).group()
            if G.order > 100:
                continue
            normals = [S for S in subgroups(G) if S.is_normal()]
            for H in subgroups(G):
                closure = normal_closure(G, H)
                hset = set(H.members)
                least = min(
                    (N for N in normals if hset <= set(N.members)),
                    key=lambda N: (len(N), N.members),
                )
                assert closure == least

    def test_core_of_normal(self, s4):
        V4 = next(H for H in subgroups(s4) if len(H) == 4 and H.is_normal())
        assert core(s4, V4) == V4

    def test_core_s3_transposition_trivial(self, s3):
        assert core(s3, by_order(s3, 2)).members == (0,)

    def test_core_s4_sylow2_is_v4(self, s4):
        sylow = sylow_subgroup(s4, 2)
        assert len(sylow) == 8
        c = core(s4, sylow)
        assert len(c) == 4 and c.is_normal()


class TestSubgroups:
    def test_prime_cyclic(self):
        assert len(subgroups(builtin("C7").group())) == 2

    def test_s3(self, s3):
        assert len(subgroups(s3)) == 6

    def test_q8(self, q8):
        assert len(subgroups(q8)) == 6

    def test_ordering(self, s4):
        subs = subgroups(s4)
        keys = [(len(H), H.members) for H in subs]
        assert keys == sorted(keys)

    def test_known_counts(self):
        for label, expect in [("A4", 10), ("S4", 30), ("A5", 59), ("D6", 16)]:
            assert len(subgroups(builtin(label).group())) == expect, label


class TestSylowAndFittingPieces:
    def test_p_group(self, q8):
        assert len(sylow_subgroup(q8, 2)) == 8
        assert len(o_lower_p(q8, 2)) == 8
        assert o_upper_p(q8, 2).members == (0,)

    def test_s3_p2(self, s3):
        assert len(sylow_subgroup(s3, 2)) == 2
        assert o_lower_p(s3, 2).members == (0,)
        assert len(o_upper_p(s3, 2)) == 3

    def test_s3_p3(self, s3):
        assert len(sylow_subgroup(s3, 3)) == 3
        assert len(o_lower_p(s3, 3)) == 3
        assert len(o_upper_p(s3, 3)) == 6

    def test_p_not_dividing(self, s3):
        assert sylow_subgroup(s3, 5).members == (0,)
        assert o_lower_p(s3, 5).members == (0,)
        assert len(o_upper_p(s3, 5)) == 6

    def test_sylow_order_is_full_p_part(self):
        for label in ["S4", "A5", "SL23", "Frob(5:4)", "C2xA4"]:
            G = builtin(label).group()
            for p in prime_factors(G.order):
                S = sylow_subgroup(G, p)
                assert len(S) == p_part(G.order, p)
                assert S.is_subgroup

    def test_o_upper_invariants(self):
        # quotient is a p-group and O^p is idempotent
        for entry in builtin_catalog():
            G = entry.group()
            if G.order > 100:
                continue
            for p in prime_factors(G.order):
                K = o_upper_p(G, p)
                assert K.is_normal()
                quotient = G.order // len(K)
                assert p_part(quotient, p) == quotient
                table, _unused, _ = subgroup_table(G, K)
                assert len(o_upper_p(table, p)) == len(K)


class TestPDecomposition:
    def test_p_regular(self):
        g = Permutation.from_cycles(3, [(0, 1, 2)])
        gp, gq = p_decomposition(g, 2)
        assert gp == Permutation.identity(3) and gq == g

    def test_p_element(self):
        g = Permutation.from_cycles(4, [(0, 1, 2, 3)])
        gp, gq = p_decomposition(g, 2)
        assert gp == g and gq == Permutation.identity(4)

    def test_order_six(self):
        g = Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
        gp, gq = p_decomposition(g, 2)
        assert gp == g ** 3 and gq == g ** 4
        assert element_order(gp) == 2 and element_order(gq) == 3

    @given(
        st.integers(min_value=1, max_value=7).flatmap(
            lambda n: st.permutations(range(n)).map(Permutation)
        ),
        st.sampled_from([2, 3, 5, 7]),
    )
    def test_properties(self, g, p):
        gp, gq = p_decomposition(g, p)
        n = element_order(g)
        assert compose(gp, gq) == g
        assert compose(gq, gp) == g
        assert element_order(gp) == p_part(n, p)
        assert element_order(gq) == n // p_part(n, p)


class TestFrobeniusDetection:
    def test_s3_a3(self, s3):
        assert is_frobenius_with_kernel(s3, by_order(s3, 3))

    def test_q8_center_not(self, q8):
        assert not is_frobenius_with_kernel(q8, by_order(q8, 2))

    def test_frob21(self, frob21):
        c7 = next(H for H in subgroups(frob21) if len(H) == 7)
        assert is_frobenius_with_kernel(frob21, c7)

    def test_non_normal_rejected(self, s3):
        assert not is_frobenius_with_kernel(s3, by_order(s3, 2))


class TestClassProduct:
    def test_identity_class(self, s3):
        cl = conjugacy_classes(s3)
        for cid in range(cl.count):
            prod = class_product(s3, cid, 0)
            assert prod.members == cl.members(cid)

    def test_inverse_class_contains_identity(self, s4):
        cl = conjugacy_classes(s4)
        for cid in range(cl.count):
            assert 0 in class_product(s4, cid, cl.inverse_class[cid])

    def test_s3_example(self, s3):
        cl = conjugacy_classes(s3)
        three_cycles = next(c for c in range(cl.count) if s3.element_order(cl.reps[c]) == 3)
        transpositions = next(c for c in range(cl.count) if s3.element_order(cl.reps[c]) == 2)
        prod = class_product(s3, three_cycles, transpositions)
        assert prod.members == cl.members(transpositions)
