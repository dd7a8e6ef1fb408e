"""Tour of permutation weights and the multivariate hook identity.

Run from the repository root after `pip install -e .`:

    python demos/01_weights_and_hook_products.py
"""

from hookweight import (
    ForestPoset,
    H_of_forest,
    L_of_forest,
    count_linear_extensions,
    linear_extensions,
    parabolic_factorization,
    rf_equal,
    rf_to_canonical_string,
    tree_pair_stats,
    wt_perm_recursive,
    wt_perm_tree,
)
from itertools import permutations


def show(title):
    print()
    print(title)
    print("-" * len(title))


show("Weights of the six permutations of {1,2,3}")
for w in permutations((1, 2, 3)):
    print(f"  wt{w} = {rf_to_canonical_string(wt_perm_recursive(w))}")

show("A 9-letter example, computed two independent ways")
w = (6, 2, 9, 1, 7, 5, 3, 8, 4)
u, a, bhat, k = parabolic_factorization(w)
print(f"  w = {''.join(map(str, w))} splits at k={k}: "
      f"a={''.join(map(str, a))}, b-hat={''.join(map(str, bhat))}")
rec = wt_perm_recursive(w)
tree = wt_perm_tree(w)
print(f"  recursive == tree-product: {rf_equal(rec, tree)}")
print(f"  wt(w) = {rf_to_canonical_string(rec)}")

show("Pair statistics on the increasing binary tree of w^-1")
for row in tree_pair_stats((5, 4, 1, 7, 3, 6, 8, 2, 9)):
    print(f"  alpha={row.alpha} beta={row.beta} w(beta)={row.w_beta} "
          f"ell={row.ell} r={row.r}")

show("The hook identity on a small forest")
vee = ForestPoset.from_covers(3, [[1, 2], [3, 2]])
print(f"  extensions: {[''.join(map(str, x)) for x in linear_extensions(vee)]}")
print(f"  L(P) = {rf_to_canonical_string(L_of_forest(vee))}")
print(f"  H(P) = {rf_to_canonical_string(H_of_forest(vee))}")

show("A 10-element forest: 24192 linear extensions, still exact")
intro = ForestPoset.from_covers(
    10, [[1, 2], [3, 2], [4, 3], [5, 3], [6, 7], [8, 7], [9, 10], [10, 7]])
print(f"  |L(P)| = {count_linear_extensions(intro)}")
print(f"  L(P) == H(P): {rf_equal(L_of_forest(intro), H_of_forest(intro))}")
