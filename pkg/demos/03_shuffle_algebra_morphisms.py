"""The shuffle algebra on permutations and its two twisted-algebra maps.

    python demos/03_shuffle_algebra_morphisms.py
"""

from hookweight import (
    DualForestPoset,
    FQSymElem,
    ForestPoset,
    check_pbt_morphism,
    check_phimaj_morphism,
    dual_forest_stats,
    f_of_poset,
    fqsym_mul,
    gamma_dual_forest,
    gamma_extension_sum,
    gamma_perm,
    phi_inv,
    ppartition_series,
    rf_equal,
    skew_equal,
    skew_mul,
    verify_bw_maj,
)
from hookweight.fqsym import dual_forest_prereqs

F = FQSymElem.basis

print("Shuffle product: F[1] * F[2,1,3] =")
print(f"  {fqsym_mul(F([1]), F([2, 1, 3]))}")

print()
print("phi_inv (weight over divided power) is NOT multiplicative there:")
lhs = phi_inv(fqsym_mul(F([1]), F([2, 1, 3])))
rhs = skew_mul(phi_inv(F([1])), phi_inv(F([2, 1, 3])))
print(f"  phi_inv(F[1] * F[2,1,3]) == phi_inv(F[1]) * phi_inv(F[2,1,3])? "
      f"{skew_equal(lhs, rhs)}")

print()
print("...but it is multiplicative on forest elements:")
vee = ForestPoset.from_covers(3, [[1, 2], [3, 2]])
single = ForestPoset.from_covers(1, [])
print(f"  F_P for the 3-element vee: {f_of_poset(vee)}")
print(f"  morphism on (vee, point): {check_pbt_morphism(vee, single)}")
print(f"  morphism on (vee, vee):   {check_pbt_morphism(vee, vee)}")

print()
print("P-partition generating functions (closed forms):")
print(f"  gamma(21)  = {gamma_perm((2, 1))}")
print(f"  gamma(123) = {gamma_perm((1, 2, 3))}")
join = DualForestPoset.from_covered_by(3, [[1, 3], [2, 3]])
print(f"  dual forest 1->3<-2: gamma(P) = {gamma_dual_forest(join)}")

print()
print("Summing gamma over linear extensions recovers the product formula:")
total = gamma_extension_sum(dual_forest_prereqs(join))
print(f"  sum == closed form: {rf_equal(total, gamma_dual_forest(join))}")

print()
print("phi_maj (P-partition series over plain powers) IS a morphism:")
chain = DualForestPoset.from_covered_by(2, [[1, 2]])
print(f"  on (chain, join): {check_phimaj_morphism(chain, join)}")

print()
print("Descents of a dual forest and the maj hook formula:")
desc = DualForestPoset.from_covered_by(2, [[2, 1]])
stats = dual_forest_stats(desc)
print(f"  covers 2->1: descents {set(stats.des)}, maj = {stats.maj}")
print(f"  verify_bw_maj: {verify_bw_maj(desc)}")

print()
print("Truncated P-partition count agrees with the series expansion:")
print(f"  first terms: {ppartition_series(desc, 3)}")
