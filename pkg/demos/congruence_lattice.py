"""Congruence lattice of B x B, where B is the two-element lattice.

The product is not subdirectly irreducible: its two projection kernels meet
in the identity, so there is no monolith.
"""
from aisemiring import boolean_lattice, monolith
from aisemiring.algebra import product_semiring
from aisemiring.congruences import all_congruences, hasse_covers, principal_congruence
from aisemiring.oracles import brute_force_congruences

B = boolean_lattice()
P = product_semiring(B, B)

cons = all_congruences(P)
for i, c in enumerate(cons):
    print(i, c)
print("covers:", hasse_covers(cons))
print("monolith:", monolith(P))

# Cg((0,0),(0,1)) is the kernel of the first projection
print("Cg(0,1) =", principal_congruence(P, 0, 1))

# the same lattice by scanning every partition of the carrier
assert {c.labels for c in cons} == brute_force_congruences(P.add, P.mul)
print("matches the partition scan")
