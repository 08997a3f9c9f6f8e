import pytest
from hypothesis import given
from hypothesis import strategies as st

from aisemiring.constructions import parse_builtin, quaternion_group
from aisemiring.errors import StructureError
from aisemiring.textformat import dump, dumps, load, loads

FLAT_Z2 = """\
# flat extension of Z_2
semiring 3
0 2 2
2 1 2
2 2 2
mul
0 1 2   # e a 0
1 0 2
2 2 2
names e g1 0
"""


def test_reads_commented_file(flat_z2):
    assert loads(FLAT_Z2) == flat_z2


def test_writes_names_only_when_needed(B):
    assert "names" not in dumps(B)
    assert dumps(B, comment="lattice").startswith("# lattice\nsemiring 2\n")


@given(st.sampled_from(["b2", "flat(zn:3)", "flat(q8)", "q8", "prod(zn:2,zn:3)", "flat(gp:3)"]))
def test_round_trip(expr):
    A = parse_builtin(expr)
    assert loads(dumps(A)) == A


def test_file_round_trip(tmp_path):
    Q = quaternion_group()
    dump(Q, tmp_path / "q8.alg")
    assert load(tmp_path / "q8.alg") == Q


@pytest.mark.parametrize(
    "text",
    [
        "",
        "semiring x",
        "monoid 2\n0 0\n0 0",
        "semiring 2\n0 1\n1 1\n0 0\n0 1",
        "semiring 2\n0 1\n1 1\nmul\n0 0",
        "semiring 2\n0 1\n1 a\nmul\n0 0\n0 1",
        "semiring 2\n0 1\n1 1\nmul\n0 0\n0 1\nnames a",
        "semiring 2\n0 1\n1 1\nmul\n0 0\n0 1\nnames a b\nextra",
        "semiring 2\n0 1\n1 2\nmul\n0 0\n0 1",
        "group 2\n0 1\n1 0",
        "group 2 0\n0 0\n0 0",
    ],
)
def test_malformed(text):
    with pytest.raises(StructureError):
        loads(text)
