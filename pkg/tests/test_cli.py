import io
import json
import subprocess
import sys

import pytest

from aisemiring.cli import main
from aisemiring.constructions import flat_extension, cyclic_group
from aisemiring.textformat import dumps


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_build_then_check():
    code, text, _ = run("build", "flat(zn:2)")
    assert code == 0 and text.startswith("# flat(zn:2)\nsemiring 3\n")
    code, out, _ = run("check", "--n", "3", stdin=text)
    assert code == 0
    assert out.strip() == "valid ai-semiring; member of Sr(3,1); member of M_3"


def test_shell_pipeline():
    build = subprocess.run([sys.executable, "-m", "aisemiring", "build", "flat(zn:2)"], capture_output=True, text=True, check=True)
    check = subprocess.run(
        [sys.executable, "-m", "aisemiring", "check", "--n", "3"], input=build.stdout, capture_output=True, text=True
    )
    assert check.returncode == 0
    assert check.stdout.strip() == "valid ai-semiring; member of Sr(3,1); member of M_3"


def test_check_reports_witness():
    code, out, _ = run("check", "b2", "--n", "2")
    assert code == 0
    assert out.splitlines()[0] == "valid ai-semiring; member of Sr(2,1); not a member of M_2"
    assert "fails at x1->0, x2->1" in out


def test_check_invalid_axioms():
    text = "semiring 2\n0 1\n1 1\nmul\n0 0\n1 0\n"
    code, out, _ = run("check", stdin=text)
    assert code == 1 and "axiom mul-associative fails at (1, 0, 1)" in out


def test_identities():
    code, out, _ = run("identities", "flat(q8)", "--n", "5")
    assert code == 0
    assert out.count("PASS") == 7


def test_identities_outside_variety_are_informational():
    code, out, _ = run("identities", "b2", "--n", "2")
    assert code == 0 and "is not a member of M_2" in out and "fails sum-split" in out


def test_congruences():
    code, out, _ = run("congruences", "flat(zn:2)", "--lattice")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2 congruences"
    assert "  cover 0 < 1" in lines
    assert "subdirectly irreducible: True" in lines and "congruence simple: True" in lines


def test_congruences_on_singleton_exits_2():
    code, out, err = run("congruences", stdin="semiring 1\n0\nmul\n0\n")
    assert code == 2 and out == "" and "at least two" in err


def test_green_eggbox():
    code, out, _ = run("green", "flat(zn:3)", "--n", "4")
    assert code == 0
    assert "H: [{0,1,2},{3}]" in out
    assert "  {0*,1,2}" in out and "  {3*}" in out


def test_orders():
    code, out, _ = run("orders", "flat(zn:2)", "--n", "3")
    assert code == 0
    assert "<=_+ strict pairs: [(0, 2), (1, 2)]" in out
    assert "<=_. strict pairs: [(2, 0), (2, 1)]" in out


def test_orders_precondition():
    assert run("orders", "b2", "--n", "2")[0] == 2


def test_extend_congruence():
    code, out, _ = run("extend-congruence", "flat(zn:2)", "[{0,2}]", "--n", "3")
    assert code == 0 and "tau = [{0,1,2}]" in out


def test_extend_congruence_bad_rho():
    assert run("extend-congruence", "flat(zn:2)", "[{0,1}]", "--n", "3")[0] == 2


def test_sylow():
    code, out, _ = run("sylow", "q8")
    assert code == 0
    assert out.splitlines() == [
        "Sylow 2-subgroup of order 8: non-abelian [0, 1, 2, 3, 4, 5, 6, 7]",
        "flag: flat extension predicted nonfinitely based (prediction, not verified)",
    ]


def test_enumerate(tmp_path):
    code, out, _ = run("enumerate", "--order", "3", "--variety", "m3", "--out", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["m3_k1_0.alg", "m3_k2_0.alg", "m3_k3_0.alg", "m3_k3_1.alg", "m3_k3_2.alg"]
    summary = json.loads(out.splitlines()[-1].removeprefix("summary "))
    assert summary == {"counts": {"1": 1, "2": 1, "3": 3}, "source": "enumerated by this tool", "variety": "M_3"}


def test_enumerate_too_large():
    assert run("enumerate", "--order", "5", "--variety", "m3")[0] == 2


def test_verify_all_checks():
    code, out, _ = run("verify-paper", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "built-ins in M_5: flat(zn:1), flat(zn:2), flat(zn:4), flat(prod(zn:2,zn:2)), flat(q8)"
    assert len(lines) == 11 and all(l.startswith("PASS") for l in lines[1:])


def test_json_lines():
    code, out, _ = run("--format", "json-lines", "congruences", "flat(zn:2)")
    records = [json.loads(l) for l in out.splitlines()]
    assert records[0] == {"count": 2, "text": "2 congruences"}
    assert records[-1]["simple"] is True


def test_deterministic():
    first = run("--format", "json-lines", "green", "flat(q8)")
    assert run("--format", "json-lines", "green", "flat(q8)") == first


def test_algebra_file(tmp_path):
    path = tmp_path / "z3.alg"
    path.write_text(dumps(flat_extension(cyclic_group(3))))
    assert run("check", str(path), "--n", "4")[1].startswith("valid ai-semiring; member of Sr(4,1); member of M_4")


@pytest.mark.parametrize(
    "argv",
    [["nonsense"], ["check", "nosuchthing"], ["congruences", "q8"], ["sylow", "b2"], ["build", "flat(b2)"]],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2
