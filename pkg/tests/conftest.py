import pytest

from aisemiring.algebra import product_semiring
from aisemiring.constructions import boolean_lattice, cyclic_group, flat_extension
from aisemiring.enumerator import build_catalog
from aisemiring.terms import m_variety, sr


@pytest.fixture(scope="session")
def B():
    return boolean_lattice()


@pytest.fixture(scope="session")
def flat_z2():
    # indices: 0 = e, 1 = a, 2 = zero
    return flat_extension(cyclic_group(2))


@pytest.fixture(scope="session")
def flat_z3():
    return flat_extension(cyclic_group(3))


@pytest.fixture(scope="session")
def BxB(B):
    return product_semiring(B, B)


@pytest.fixture(scope="session")
def catalogs():
    """Enumerated catalogs up to order 4, keyed by variety preset."""
    out = {}
    for key, V in (("m2", m_variety(2)), ("m3", m_variety(3)), ("sr2", sr(2)), ("sr3", sr(3))):
        out[key] = build_catalog(V, 4)
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
