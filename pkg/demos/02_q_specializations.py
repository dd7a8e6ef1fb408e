"""From multivariate weights to the classical q-hook formulas.

    python demos/02_q_specializations.py
"""

from itertools import permutations

from hookweight import (
    ForestPoset,
    H_of_forest,
    L_of_forest,
    RatFunc,
    bracket,
    enumerate_rl_forests,
    inv,
    inv_poset,
    linear_extensions,
    q_bracket,
    q_factorial,
    spec_q,
    spec_qt,
    verify_bw_inv,
    wt_perm_recursive,
)

print("Substituting x_i -> q^(i-1) - q^i sends wt(w) to q^inv(w):")
for w in permutations((1, 2, 3)):
    print(f"  wt{w} |-> {spec_q(wt_perm_recursive(w))}   (inv = {inv(w)})")

print()
print("The hook product specializes to the inversion q-hook formula:")
vee = ForestPoset.from_covers(3, [[1, 2], [3, 2]])
gen = sorted(inv(w) for w in linear_extensions(vee))
print(f"  inversion numbers over L(P): {gen}")
print(f"  spec_q L(P) = {spec_q(L_of_forest(vee))}")
print(f"  q^inv(P) [3]!_q / prod [h_i]_q with inv(P) = {inv_poset(vee)}")
print(f"  verify_bw_inv: {verify_bw_inv(vee)}")

print()
print("Sweep: the q-hook formula on every recursively labelled forest, n <= 4:")
count = 0
for n in range(0, 5):
    for p in enumerate_rl_forests(n):
        assert verify_bw_inv(p)
        count += 1
print(f"  verified on {count} forests")

print()
print("The (q,t) substitution x_i -> t^(q^(i-1)) - t^(q^i) telescopes:")
for a in (0, 1, 2):
    f = RatFunc(bracket(3).frobenius(a))
    print(f"  shifted bracket (a={a}) |-> {spec_qt(f, 2).to_string('t')}")

print()
print("It also transports the hook identity (q = 2, n = 4 shown):")
for p in list(enumerate_rl_forests(4))[:4]:
    same = spec_qt(L_of_forest(p), 2) == spec_qt(H_of_forest(p), 2)
    print(f"  covers {p.covers() or 'antichain'}: {same}")

print()
print(f"q-analogues: [5]_q = {q_bracket(5)}, [3]!_q = {q_factorial(3)}")
