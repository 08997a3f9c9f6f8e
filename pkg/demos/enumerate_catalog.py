"""Enumerate M_3 up to order 4 and check the SI characterisation on every member.

Counts printed here come from this enumeration, not from the literature.
"""
import tempfile

from aisemiring import build_catalog, m_variety
from aisemiring.enumerator import read_catalog, verify_si_characterisation, write_catalog

V = m_variety(3)
cat = build_catalog(V, 4)
print("counts per order:", cat.counts())

report = verify_si_characterisation(cat.all(), 3)
print(f"checked {report.checked}, SI members {report.si_count} by order {report.si_by_order}, ok: {report.ok}")

with tempfile.TemporaryDirectory() as d:
    paths = write_catalog(cat, d)
    print("wrote", [p.name for p in paths[:4]], "...")
    assert read_catalog(V, d).members == cat.members
