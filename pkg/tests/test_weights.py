"""Subset/permutation weights and the two sides of the hook identity."""

from itertools import combinations, permutations

import pytest

from hookweight.combinat import (
    ForestPoset,
    enumerate_rl_forests,
    inv,
    subtree_data,
)
from hookweight.parsing import parse_ratfunc
from hookweight.qanalog import binomial, bracket, bracket_factorial
from hookweight.ratfunc import (
    RatFunc,
    frobenius,
    rf_add,
    rf_equal,
    rf_frobenius,
    rf_mul,
    rf_to_canonical_string,
)
from hookweight.weights import (
    H_of_forest,
    L_of_forest,
    NotRecursivelyLabelledError,
    inv_via_tree,
    wt_perm_recursive,
    wt_perm_tree,
    wt_subset,
)

S3_TABLE = {
    (1, 2, 3): "1",
    (1, 3, 2): "x3/x2",
    (2, 1, 3): "x2/x1",
    (2, 3, 1): "x3/x1",
    (3, 1, 2): "((x2+x3)x3)/((x1+x2)x2)",
    (3, 2, 1): "((x2+x3)x3)/((x1+x2)x1)",
}

W9 = (6, 2, 9, 1, 7, 5, 3, 8, 4)
W9_CLOSED_FORM = (
    "(x2 x9^2 (x8+x9)(x6+x7+x8)(x4+x5+x6+x7)(x2+x3+x4+x5+x6))"
    "/(x1 x4 x8 (x3+x4)(x3+x4+x5)(x2+x3+x4+x5)(x1+x2+x3+x4+x5))")

VEE = ForestPoset.from_covers(3, [[1, 2], [3, 2]])
INTRO = ForestPoset.from_covers(
    10, [[1, 2], [3, 2], [4, 3], [5, 3], [6, 7], [8, 7], [9, 10], [10, 7]])


class TestSubsetWeight:
    def test_worked_example(self):
        got = wt_subset([9, 7, 6, 4, 2])
        expected = parse_ratfunc(
            "(x9(x7+x8)(x6+x7+x8)(x4+x5+x6+x7)(x2+x3+x4+x5+x6))"
            "/((x1+x2+x3+x4+x5)(x2+x3+x4+x5)(x3+x4+x5)(x4+x5)x5)")
        assert rf_equal(got, expected)

    def test_staircase_is_one(self):
        for k in range(0, 7):
            s = tuple(range(k, 0, -1))
            assert rf_equal(wt_subset(s), RatFunc.from_const(1))

    def test_singleton(self):
        assert rf_equal(wt_subset([2]), parse_ratfunc("x2/x1"))

    def test_product_equals_recursive(self):
        for n in range(0, 9):
            for k in range(0, n + 1):
                for s in combinations(range(1, n + 1), k):
                    sub = tuple(reversed(s))
                    assert rf_equal(wt_subset(sub),
                                    wt_subset(sub, method="recursive")), sub

    def test_size_check(self):
        with pytest.raises(ValueError):
            wt_subset([3, 1], k=3)


class TestPermWeight:
    def test_s3_table_recursive(self):
        for w, text in S3_TABLE.items():
            assert rf_equal(wt_perm_recursive(w), parse_ratfunc(text)), w

    def test_s3_table_tree(self):
        for w, text in S3_TABLE.items():
            assert rf_equal(wt_perm_tree(w), parse_ratfunc(text)), w

    def test_canonical_321(self):
        assert rf_to_canonical_string(wt_perm_recursive((3, 2, 1))) == \
            "(x2x3+x3^2)/(x1^2+x1x2)"

    def test_identity_weight_is_one(self):
        for n in range(0, 7):
            w = tuple(range(1, n + 1))
            assert rf_equal(wt_perm_recursive(w), RatFunc.from_const(1))

    def test_worked_nine_element(self):
        expected = parse_ratfunc(W9_CLOSED_FORM)
        assert rf_equal(wt_perm_recursive(W9), expected)
        assert rf_equal(wt_perm_tree(W9), expected)

    def test_two_definitions_agree_small(self):
        for n in range(0, 7):
            for w in permutations(range(1, n + 1)):
                assert rf_equal(wt_perm_recursive(w), wt_perm_tree(w)), w

    def test_tree_weight_21(self):
        assert rf_equal(wt_perm_tree((2, 1)), parse_ratfunc("x2/x1"))


class TestInvViaTree:
    def test_identity(self):
        assert inv_via_tree((1, 2, 3)) == 0

    def test_worked_example(self):
        assert inv_via_tree((5, 4, 1, 7, 3, 6, 8, 2, 9)) == 13

    def test_321(self):
        assert inv_via_tree((3, 2, 1)) == 3

    def test_matches_inv_small(self):
        for n in range(0, 8):
            for w in permutations(range(1, n + 1)):
                assert inv_via_tree(w) == inv(w)


class TestHookSides:
    def test_vee_values(self):
        left = L_of_forest(VEE)
        right = H_of_forest(VEE)
        assert rf_to_canonical_string(left) == "(x2+x3)/(x1)"
        assert rf_equal(left, right)
        assert rf_equal(left, rf_add(wt_perm_recursive((2, 1, 3)),
                                     wt_perm_recursive((2, 3, 1))))

    def test_chain_is_one(self):
        chain = ForestPoset.from_covers(4, [[2, 1], [3, 2], [4, 3]])
        assert rf_equal(L_of_forest(chain), RatFunc.from_const(1))
        assert rf_equal(H_of_forest(chain), RatFunc.from_const(1))

    def test_two_antichain(self):
        p = ForestPoset.from_covers(2, [])
        assert rf_to_canonical_string(L_of_forest(p)) == "(x1+x2)/(x1)"

    def test_intro_forest_h_assembly(self):
        # assemble H from the subtree data through the public primitives
        num = RatFunc(bracket_factorial(10))
        den = RatFunc.from_const(1)
        for i in range(1, 11):
            lo, _hi, h = subtree_data(INTRO, i)
            den = rf_mul(den, rf_frobenius(RatFunc(bracket(h)), lo - 1))
        assembled = num / den
        assert rf_equal(assembled, H_of_forest(INTRO))

    def test_intro_forest_identity(self):
        assert rf_equal(L_of_forest(INTRO), H_of_forest(INTRO))

    def test_rejects_bad_labelling(self):
        bad = ForestPoset.from_covers(3, [[3, 1]])
        with pytest.raises(NotRecursivelyLabelledError):
            H_of_forest(bad)
        with pytest.raises(NotRecursivelyLabelledError):
            L_of_forest(bad)

    def test_direct_equals_grouped(self):
        for n in range(0, 6):
            for p in enumerate_rl_forests(n):
                assert rf_equal(L_of_forest(p, method="direct"),
                                L_of_forest(p)), p

    def test_direct_equals_grouped_spot_n6(self):
        spots = [ForestPoset.from_covers(6, []),
                 ForestPoset.from_covers(6, [[1, 2], [3, 2], [6, 5]]),
                 ForestPoset.from_covers(6, [[2, 3], [1, 3], [4, 3], [6, 5]])]
        for p in spots:
            assert rf_equal(L_of_forest(p, method="direct"), L_of_forest(p))

    def test_hook_identity_n_le_5(self):
        for n in range(0, 6):
            for p in enumerate_rl_forests(n):
                assert rf_equal(L_of_forest(p), H_of_forest(p)), p


class TestStructuralLemmas:
    def test_interval_additivity(self):
        # F^r[s+t] = F^r[s] + F^{r+s}[t]
        for r in range(0, 7):
            for s in range(0, 7):
                for t in range(0, 7):
                    lhs = frobenius(bracket(s + t), r)
                    rhs = frobenius(bracket(s), r) + frobenius(bracket(t), r + s)
                    assert lhs == rhs

    def test_disjoint_union_product(self, rng):
        # H(P ⊔ F^k Q) = binomial(k+l, k) * H(P) * F^k(H(Q))
        from hookweight.fqsym import concat_forests
        pool = {n: list(enumerate_rl_forests(n)) for n in range(1, 6)}
        for _ in range(40):
            k = rng.randint(1, 4)
            l = rng.randint(1, min(4, 7 - k))
            p = rng.choice(pool[k])
            q = rng.choice(pool[l])
            lhs = H_of_forest(concat_forests(p, q))
            rhs = rf_mul(rf_mul(binomial(k + l, k), H_of_forest(p)),
                         rf_frobenius(H_of_forest(q), k))
            assert rf_equal(lhs, rhs)

    def test_binomial_as_subset_sum(self):
        for n in range(0, 10):
            for k in range(0, n + 1):
                total = RatFunc.from_const(0)
                for s in combinations(range(1, n + 1), k):
                    total = rf_add(total, wt_subset(tuple(reversed(s))))
                assert rf_equal(total, binomial(n, k)), (n, k)
