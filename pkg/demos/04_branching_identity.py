"""The two-sided branching identity for mixed tensor coefficients.

A finite sum over Young diagrams of products of stable coefficients equals
one mixed gl_N coefficient for every large enough N.  The two sides share
no nontrivial code: the left side runs the tableau rule on canonical
partitions, the right side embeds everything at finite rank and shifts by
determinant powers.
"""

from blockrep import (kac_radul_table, negative_weight, positive_weight,
                      reciprocity_check)
from blockrep.reciprocity import random_triples

print("== Fixed test vectors ==")
cases = [
    ((0, 0, 0), (1,), (1,), [3, 4, 5], "multiplicity of the trivial module"),
    ((1, 0, 0, -1), (1,), (1,), [4, 5, 6], "multiplicity of the adjoint"),
]
for nu, lam_body, mu_body, ranks, label in cases:
    rep = reciprocity_check(nu, negative_weight(lam_body),
                            positive_weight(mu_body), ranks)
    print(f"    nu={nu}: lhs={rep.lhs}, rhs={dict(rep.rhs_by_n)} -- {label}")
    print(f"        diagram contributions: "
          f"{[(str(d), c) for d, c in rep.d_terms]}")

print("\n== A seeded random batch ==")
ok = 0
for nu, lam, mu, ranks in random_triples(25, 4, seed=2024):
    rep = reciprocity_check(nu, lam, mu, ranks)
    ok += rep.holds
print(f"    25/25 identities hold: {ok == 25}")

print("\n== Branching tables ==")
print("Trivial weight at rank 3, size bound 2: only dual pairs survive:")
for (lam, mu), mult in sorted(kac_radul_table((0, 0, 0), 3, 2).items()):
    print(f"    ({str(lam):8s}, {str(mu):8s}): {mult}")
print("Mixed weight (1,0,-1) at rank 3, size bound 1:")
for (lam, mu), mult in sorted(kac_radul_table((1, 0, -1), 3, 1).items()):
    print(f"    ({str(lam):8s}, {str(mu):8s}): {mult}")
