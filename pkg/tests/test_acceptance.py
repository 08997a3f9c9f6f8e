"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line in ``RESULTS``; the conftest
terminal-summary hook prints them after the run.  Running this file directly
(``python tests/test_acceptance.py``) prints the same lines without pytest.
"""
from __future__ import annotations

import time

from aisemiring import congruences as cg
from aisemiring.algebra import product_semiring
from aisemiring.constructions import (
    boolean_lattice,
    cyclic_group,
    flat_extension,
    heisenberg_group,
    quaternion_group,
    sylow_abelian_report,
)
from aisemiring.enumerator import build_catalog
from aisemiring.terms import m_variety, member_of, sr
from aisemiring.verification import (
    CheckResult,
    check_congruence_oracle,
    check_derived_identities,
    check_extension,
    check_flat_laws,
    check_green,
    check_local_finiteness,
    check_order_duality,
    check_si_characterisation,
    flat_builtins,
    random_generator_sets,
)

RESULTS: list[str] = []

EXPONENTS = (2, 3, 4, 5)


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def summarise(results: list[CheckResult]) -> tuple[bool, str]:
    checked = sum(r.checked for r in results)
    bad = [r.line() for r in results if not r.passed]
    return not bad, f"{checked} checked" + ("; " + "; ".join(bad) if bad else "")


def catalog_labelled(n: int, max_order: int = 4):
    cat = build_catalog(m_variety(n), max_order)
    return [(cat.filename(k, i), S) for k, ms in sorted(cat.members.items()) for i, S in enumerate(ms)]


def members_for(n: int):
    """Built-in flat extensions in M_n, plus the M_n catalog when n is 2 or 3."""
    M = m_variety(n)
    out = [(label, S) for label, S in flat_builtins() if member_of(S, M)]
    if n in (2, 3):
        out += catalog_labelled(n)
    return out


def test_derived_identities_hold():
    start = time.perf_counter()
    results = [check_derived_identities(members_for(n), n) for n in EXPONENTS]
    elapsed = time.perf_counter() - start
    ok, detail = summarise(results)
    record(1, "derived identities hold on built-ins and M_2/M_3 catalogs", ok and elapsed < 10, f"{detail}, {elapsed:.2f}s < 10s")


def test_si_simple_zero_group():
    results = [check_si_characterisation(members_for(n), n) for n in EXPONENTS]
    ok, detail = summarise(results)
    record(2, "SI <=> simple <=> 0-group, SI members are flat extensions", ok, detail)


def test_flat_extension_addition_laws():
    results = []
    for n in EXPONENTS:
        M = m_variety(n)
        results.append(check_flat_laws([(l, S) for l, S in flat_builtins() if member_of(S, M)], n))
    ok, detail = summarise(results)
    record(3, "c != d => c+d = 0 and a + a^(n-1) = 0 in flat extensions", ok, detail)


def test_congruence_engine_matches_oracle():
    start = time.perf_counter()
    algebras = []
    for key, V in (("m2", m_variety(2)), ("m3", m_variety(3)), ("sr2", sr(2)), ("sr3", sr(3))):
        cat = build_catalog(V, 4)
        algebras += [(f"{key}:{cat.filename(k, i)}", S) for k, ms in cat.members.items() for i, S in enumerate(ms)]
    B = boolean_lattice()
    algebras += flat_builtins() + [("flat(zn:5)", flat_extension(cyclic_group(5))), ("b2", B), ("b2xb2", product_semiring(B, B))]
    res = check_congruence_oracle(algebras, max_order=6)
    elapsed = time.perf_counter() - start
    record(
        4,
        "all_congruences equals the partition scan on every algebra of order <= 6",
        res.passed and elapsed < 60,
        f"{res.checked} algebras, {len(res.violations)} mismatches, {elapsed:.2f}s < 60s",
    )


def test_idempotent_congruences_extend():
    results = [check_extension(catalog_labelled(n), n) for n in (2, 3)]
    ok, detail = summarise(results)
    record(5, "every congruence on E(S) extends with exact restriction", ok, detail)


def test_order_duality():
    results = [check_order_duality(members_for(n), n) for n in EXPONENTS]
    ok, detail = summarise(results)
    record(6, "<=_+ is the converse of <=_.", ok, detail)


def test_named_groups():
    facts = {}
    G = heisenberg_group(3)
    FG = flat_extension(G)
    facts["G_3 order 27"] = G.order == 27
    facts["G_3 non-abelian"] = not G.is_abelian()
    facts["G_3 exponent 3"] = G.exponent() == 3
    facts["flat(G_3) in M_4"] = member_of(FG, m_variety(4))
    facts["flat(G_3) simple"] = cg.is_congruence_simple(FG)
    Q = quaternion_group()
    FQ = flat_extension(Q)
    facts["Q_8 order 8"] = Q.order == 8
    facts["Q_8 exponent 4"] = Q.exponent() == 4
    sylow = sylow_abelian_report(Q).entries
    facts["Q_8 Sylow-2 non-abelian"] = [(e.prime, len(e.subgroup), e.abelian) for e in sylow] == [(2, 8, False)]
    facts["flat(Q_8) in M_5"] = member_of(FQ, m_variety(5))
    facts["flat(Q_8) simple"] = cg.is_congruence_simple(FQ)
    failed = [k for k, v in facts.items() if not v]
    record(7, "G_3 and Q_8 facts", not failed, f"{len(facts)} facts" + (f"; failed: {failed}" if failed else ""))


def test_generated_subsemirings():
    samples = random_generator_sets(flat_builtins(), 20, seed=2024)
    res = check_local_finiteness(samples)
    record(8, "<A> is the sums of <A>_s and |<A>| <= 2^|<A>_s|", res.passed and res.checked == 20, f"{res.checked} generator sets, {len(res.violations)} violations")


def test_green_power_characterisation():
    results = []
    for n in EXPONENTS:
        cat = build_catalog(sr(n), 4) if n in (2, 3) else None
        algebras = dict(members_for(n))
        algebras.update((l, S) for l, S in flat_builtins() if member_of(S, sr(n)))
        if cat is not None:
            algebras.update((f"sr{n}:{cat.filename(k, i)}", S) for k, ms in cat.members.items() for i, S in enumerate(ms))
        results.append(check_green(list(algebras.items()), n))
    ok, detail = summarise(results)
    record(9, "ideal H equals a^(n-1) = b^(n-1); D = H on M_n", ok, detail)


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
