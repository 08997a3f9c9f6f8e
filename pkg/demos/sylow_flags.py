"""Sylow subgroups of the named groups and the non-abelian flag."""
from aisemiring import cyclic_group, heisenberg_group, quaternion_group
from aisemiring.constructions import center, direct_product, sylow_abelian_report

groups = {
    "Z_6": cyclic_group(6),
    "Z_2 x Z_2": direct_product(cyclic_group(2), cyclic_group(2)),
    "Q_8": quaternion_group(),
    "G_3": heisenberg_group(3),
}
for name, G in groups.items():
    rep = sylow_abelian_report(G)
    parts = ", ".join(f"q={e.prime}: order {len(e.subgroup)} {'abelian' if e.abelian else 'non-abelian'}" for e in rep.entries)
    print(f"{name} (|Z| = {len(center(G))}): {parts}; flagged: {rep.predicted_nonfinitely_based}")
