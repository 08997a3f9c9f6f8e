"""Green's relations and the two natural orders on a small member of M_3."""
from aisemiring import cyclic_group, flat_extension
from aisemiring.structure import eggbox, green_relations, is_clifford, partial_orders

S = flat_extension(cyclic_group(2))
g = green_relations(S, 3)
print("H =", g.H, " D =", g.D)

for i, grid in enumerate(eggbox(S)):
    print(f"D-class {i}:", grid)

dec = is_clifford(S)
print("Clifford classes:", dec.classes, " structure semilattice:", dec.semilattice)

rep = partial_orders(S, 3)
names = S.names
for a in S.elements:
    above = [names[b] for b in S.elements if b != a and rep.le_add[a][b]]
    print(f"{names[a]} <=_+ {above}")
print("<=_+ is the converse of <=_.:", rep.dual)
