"""Flat extensions of small groups and what makes them simple.

Adjoin an absorbing zero to a group and make ``a + b`` collapse to zero unless
``a == b``.  The result is an ai-semiring with exactly two congruences.
"""
from aisemiring import cyclic_group, flat_extension, is_congruence_simple, m_variety, member_of, quaternion_group
from aisemiring.congruences import all_congruences
from aisemiring.structure import idempotents, is_zero_group

for name, G in [("Z_2", cyclic_group(2)), ("Z_3", cyclic_group(3)), ("Q_8", quaternion_group())]:
    S = flat_extension(G)
    n = G.exponent() + 1
    print(f"flat({name}): {S.order} elements, in M_{n}: {member_of(S, m_variety(n))}")

    # only 1_G and the zero are idempotent
    E = idempotents(S, n).elements
    print("  idempotents:", [S.names[e] for e in E])

    zg = is_zero_group(S)
    print("  zero:", S.names[zg.zero], " group part size:", len(zg.group))

    cons = all_congruences(S)
    print(f"  {len(cons)} congruences, simple: {is_congruence_simple(S)}")
